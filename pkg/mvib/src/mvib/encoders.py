"""Deterministic encoders for the two views, fusion, and classifier.

View 1 (C x C matrix) goes through a GIN message-passing encoder over
the dense weighted graph; view 2 (C x C x C tensor) through the
edge-to-edge / edge-to-node / node-to-graph stack. Both encoders are
deterministic maps, which is what lets the bottleneck objective use
plain batch entropies of their outputs.
"""

import torch
from torch import nn

from .layers import EdgeToEdge3d, EdgeToNode3d, NodeToGraph3d

_SYMMETRY_TOL = 1e-6


class GinLayer(nn.Module):
    """h' = MLP((1 + eps) h + A h) with batch norm and ReLU on top."""

    def __init__(self, in_dim, width):
        super().__init__()
        self.eps = nn.Parameter(torch.zeros(()))
        self.mlp = nn.Sequential(
            nn.Linear(in_dim, width),
            nn.ReLU(),
            nn.Linear(width, width),
        )
        # batch statistics at eval time too: running averages lag badly
        # while the compression term keeps moving the latent distribution
        self.norm = nn.BatchNorm1d(width, track_running_stats=False)

    def forward(self, adj, h):
        # adj: (B, C, C), h: (B, C, d)
        mixed = (1.0 + self.eps) * h + torch.bmm(adj, h)
        out = self.mlp(mixed)
        B, C, width = out.shape
        out = self.norm(out.reshape(B * C, width)).reshape(B, C, width)
        return torch.relu(out)


class GinEncoder(nn.Module):
    """Three GIN layers (MLP widths 128/256/512), sum-pooled readout.

    The input matrix is the dense weighted adjacency; node i's starting
    feature is its connectivity profile (row i of x1) sorted descending.
    Sorting makes the feature label-free -- raw row coordinates are tied
    to channel labels, which would break readout invariance under node
    relabeling; the sorted profile travels with its node, so permuting
    the graph leaves the pooled readout unchanged. Asymmetric inputs
    beyond 1e-6 are rejected.
    """

    def __init__(self, channels, widths=(128, 256, 512)):
        super().__init__()
        dims = (channels,) + tuple(widths)
        self.layers = nn.ModuleList(
            GinLayer(dims[i], dims[i + 1]) for i in range(len(widths))
        )
        self.out_dim = dims[-1]

    def forward(self, x1):
        if x1.dim() == 2:
            x1 = x1.unsqueeze(0)
        if torch.max(torch.abs(x1 - x1.transpose(1, 2))).item() > _SYMMETRY_TOL:
            raise ValueError("view-1 matrix must be symmetric (within 1e-6)")
        h = torch.sort(x1, dim=-1, descending=True).values
        for layer in self.layers:
            h = layer(x1, h)
        return h.sum(dim=1)  # permutation-invariant readout


class TensorEncoder(nn.Module):
    """Edge-to-edge stack, then edge-to-node, then node-to-graph."""

    def __init__(self, channels, e2e_maps=(32, 64), e2n_maps=64, out_dim=128):
        super().__init__()
        e2e = []
        in_maps = 1
        for maps in e2e_maps:
            e2e.append(EdgeToEdge3d(in_maps, maps, channels))
            in_maps = maps
        self.e2e = nn.ModuleList(e2e)
        self.e2n = EdgeToNode3d(in_maps, e2n_maps, channels)
        self.n2g = NodeToGraph3d(e2n_maps, out_dim, channels)
        self.out_dim = out_dim

    def forward(self, x2):
        if x2.dim() == 3:
            x2 = x2.unsqueeze(0)
        h = x2.unsqueeze(1)  # (B, 1, C, C, C)
        for layer in self.e2e:
            h = torch.relu(layer(h))
        a = torch.relu(self.e2n(h))
        return self.n2g(a)


class FusionClassifier(nn.Module):
    """3-layer ReLU MLP with dropout fusing (z1, z2) into z, plus a
    linear classification head."""

    def __init__(self, in_dim, hidden=(256, 128), fused_dim=64, classes=2, dropout=0.5):
        super().__init__()
        self.fuse = nn.Sequential(
            nn.Linear(in_dim, hidden[0]),
            nn.ReLU(),
            nn.Dropout(dropout),
            nn.Linear(hidden[0], hidden[1]),
            nn.ReLU(),
            nn.Dropout(dropout),
            nn.Linear(hidden[1], fused_dim),
        )
        self.head = nn.Linear(fused_dim, classes)

    def forward(self, z1, z2):
        z = self.fuse(torch.cat((z1, z2), dim=1))
        return z, self.head(z)


class MultiViewNet(nn.Module):
    """Both encoders, fusion, and classifier in one module.

    forward returns (z1, z2, z, logits); the latents are what the
    bottleneck terms regularize.
    """

    def __init__(self, channels, classes=2, gin_widths=(128, 256, 512),
                 e2e_maps=(32, 64), e2n_maps=64, tensor_dim=128,
                 fusion_hidden=(256, 128), fused_dim=64, dropout=0.5):
        super().__init__()
        self.gin = GinEncoder(channels, widths=gin_widths)
        self.tensor_enc = TensorEncoder(channels, e2e_maps=e2e_maps,
                                        e2n_maps=e2n_maps, out_dim=tensor_dim)
        self.fusion = FusionClassifier(self.gin.out_dim + tensor_dim,
                                       hidden=fusion_hidden, fused_dim=fused_dim,
                                       classes=classes, dropout=dropout)

    def forward(self, x1, x2):
        z1 = self.gin(x1)
        z2 = self.tensor_enc(x2)
        z, logits = self.fusion(z1, z2)
        return z1, z2, z, logits
