"""Train the multi-view bottleneck classifier on a planted synthetic task.

Generates a cohort whose class-0 recordings plant a synergistic triple
and class-1 a redundant triple, pushes the recordings through the
upstream view engine's CLI to get mi/oinfo view files, then trains on
the serialized views. Prints the per-epoch loss decomposition.
"""

import tempfile
import time

from mvib import TrainConfig, train_toy
from mvib.data import make_planted_cohort

work = tempfile.mkdtemp(prefix="mvib-demo-")
print(f"generating planted cohort under {work} (via the hoiview CLI)...")
t0 = time.time()
pairs = make_planted_cohort(work, n_per_class=24, C=8, T=200, seed=0)
print(f"{len(pairs)} view pairs, C={pairs[0].channels}, {time.time()-t0:.1f} s")

config = TrainConfig(beta1=0.01, beta2=0.1, epochs=40, lr=1e-3, seed=0,
                     batch_size=32, dropout=0.5)
net = dict(e2e_maps=(4, 8), e2n_maps=8, tensor_dim=16,
           gin_widths=(128, 256, 512), fusion_hidden=(256, 128), fused_dim=64)

print(f"\ntraining {config.epochs} epochs "
      f"(beta1={config.beta1}, beta2={config.beta2}, lr={config.lr})")
print(f"{'epoch':>5} {'ce':>9} {'H(z1)':>8} {'H(z2)':>8} {'total':>9} {'acc':>6}")
run = train_toy(pairs, config, net_kwargs=net)
for m in run.metrics:
    if m.epoch % 4 == 0 or m.epoch == config.epochs - 1:
        print(f"{m.epoch:>5} {m.ce:>9.4f} {m.h_z1:>8.4f} {m.h_z2:>8.4f} "
              f"{m.total:>9.4f} {m.accuracy:>6.3f}")
print(f"\nfinal train accuracy: {run.final_accuracy:.3f}")
print("the compression term visibly squeezes H(z1) while CE drops.")
