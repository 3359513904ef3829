"""mvib: toy-scale multi-view information-bottleneck trainer.

Consumes the serialized connectivity views of the upstream engine --
a C x C pairwise mutual-information CSV and a C x C x C O-information
HOI1 tensor -- and trains a two-encoder classifier on them:

* a GIN message-passing encoder over the pairwise view,
* an edge-to-edge / edge-to-node / node-to-graph stack over the tensor,
* a fusion MLP and linear head,

optimized with cross-entropy plus batch-entropy bottleneck terms
(deterministic encoders: the compression term of each view is the
matrix-based Renyi entropy of its latent batch).
"""

from .encoders import (
    FusionClassifier,
    GinEncoder,
    GinLayer,
    MultiViewNet,
    TensorEncoder,
)
from .errors import FormatError, MvibError, TooFewSamples, TrainingError
from .ib import IbLossParts, LatentPair, batch_entropy, ib_loss
from .layers import (
    EdgeToEdge3d,
    EdgeToNode3d,
    NodeToGraph3d,
    e2e3d,
    e2n3d,
    n2g3d,
)
from .train import EpochMetrics, ToyRun, TrainConfig, load_config, train_toy
from .view_io import ViewPair, load_view_pairs, read_view_matrix, read_view_tensor

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # view io
    "ViewPair", "read_view_matrix", "read_view_tensor", "load_view_pairs",
    # layers
    "e2e3d", "e2n3d", "n2g3d", "EdgeToEdge3d", "EdgeToNode3d", "NodeToGraph3d",
    # encoders
    "GinLayer", "GinEncoder", "TensorEncoder", "FusionClassifier", "MultiViewNet",
    # objective
    "LatentPair", "IbLossParts", "batch_entropy", "ib_loss",
    # training
    "TrainConfig", "EpochMetrics", "ToyRun", "load_config", "train_toy",
    # errors
    "MvibError", "FormatError", "TooFewSamples", "TrainingError",
]
