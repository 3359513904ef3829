"""Seeded toy-scale training loop with the bottleneck objective.

Single-threaded training semantics: the loop pins torch to one thread
and drives all randomness (init, shuffling, dropout) from one seed, so
a fixed seed reproduces the metrics trace exactly.
"""

import json
from dataclasses import dataclass, field

import numpy as np
import torch
import torch.nn.functional as F

from .encoders import MultiViewNet
from .errors import TrainingError
from .ib import IbLossParts, LatentPair, ib_loss

_LR_DECAY_EVERY = 50
_LR_DECAY = 0.5


@dataclass(frozen=True)
class TrainConfig:
    """Run configuration; JSON files carry the same field names."""

    beta1: float = 0.01
    beta2: float = 0.1
    alpha: float = 1.01
    sigma: float = 5.0
    epochs: int = 100
    lr: float = 1e-5
    seed: int = 0
    batch_size: int = 32
    dropout: float = 0.5


def load_config(path):
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    return TrainConfig(**doc)


@dataclass(frozen=True)
class EpochMetrics:
    """Per-epoch loss decomposition (batch-size-weighted means) and
    full-train-set accuracy."""

    epoch: int
    ce: float
    h_z1: float
    h_z2: float
    total: float
    accuracy: float


@dataclass
class ToyRun:
    metrics: list = field(default_factory=list)

    @property
    def final_accuracy(self):
        return self.metrics[-1].accuracy if self.metrics else 0.0


def _stack(pairs):
    x1 = torch.tensor(np.stack([p.x1 for p in pairs]), dtype=torch.float64)
    x2 = torch.tensor(np.stack([p.x2 for p in pairs]), dtype=torch.float64)
    y = torch.tensor([p.label for p in pairs], dtype=torch.long)
    return x1, x2, y


def train_toy(pairs, config, net_kwargs=None, ce_only=False):
    """Train on a list of ViewPairs; returns a ToyRun with per-epoch metrics.

    ``ce_only`` drops the entropy terms entirely (loss = cross-entropy);
    with beta1 = beta2 = 0 the bottleneck path produces the identical
    trace, which is asserted by the acceptance suite. Raises
    TrainingError if the loss goes non-finite.
    """
    torch.manual_seed(config.seed)
    torch.set_num_threads(1)
    x1, x2, y = _stack(pairs)
    n = x1.shape[0]
    channels = x1.shape[1]
    classes = int(y.max().item()) + 1
    kwargs = dict(net_kwargs or {})
    kwargs.setdefault("dropout", config.dropout)
    net = MultiViewNet(channels, classes=classes, **kwargs).double()
    opt = torch.optim.Adam(net.parameters(), lr=config.lr)
    sched = torch.optim.lr_scheduler.StepLR(opt, step_size=_LR_DECAY_EVERY,
                                            gamma=_LR_DECAY)
    run = ToyRun()
    for epoch in range(config.epochs):
        net.train()
        order = torch.randperm(n)
        sums = {"ce": 0.0, "h_z1": 0.0, "h_z2": 0.0, "total": 0.0}
        for start in range(0, n, config.batch_size):
            batch = order[start:start + config.batch_size]
            try:
                z1, z2, z, logits = net(x1[batch], x2[batch])
                if ce_only:
                    ce = F.cross_entropy(logits, y[batch])
                    parts = IbLossParts(ce=ce, h_z1=torch.zeros(()), h_z2=torch.zeros(()),
                                        beta1=0.0, beta2=0.0, total=ce)
                else:
                    parts = ib_loss(logits, y[batch], LatentPair(z1=z1, z2=z2, z=z),
                                    config.beta1, config.beta2,
                                    sigma=config.sigma, alpha=config.alpha)
            except torch.linalg.LinAlgError as exc:
                # overflowed latents make the batch Gram non-finite
                raise TrainingError(f"diverged at epoch {epoch}: {exc}") from exc
            if not torch.isfinite(parts.total):
                raise TrainingError(f"non-finite loss at epoch {epoch}")
            opt.zero_grad()
            parts.total.backward()
            opt.step()
            w = float(batch.shape[0])
            sums["ce"] += parts.ce.detach().item() * w
            sums["h_z1"] += parts.h_z1.detach().item() * w
            sums["h_z2"] += parts.h_z2.detach().item() * w
            sums["total"] += parts.total.detach().item() * w
        sched.step()
        net.eval()
        with torch.no_grad():
            _, _, _, logits = net(x1, x2)
            accuracy = float((logits.argmax(dim=1) == y).double().mean())
        run.metrics.append(EpochMetrics(
            epoch=epoch,
            ce=sums["ce"] / n,
            h_z1=sums["h_z1"] / n,
            h_z2=sums["h_z2"] / n,
            total=sums["total"] / n,
            accuracy=accuracy,
        ))
    return run
