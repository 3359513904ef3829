"""Cross-axis aggregation layers for cubic interaction tensors.

A C x C x C interaction tensor indexes triplets of nodes, so ordinary
cubic convolutions are the wrong prior: locality is topological, not
spatial. These layers aggregate along full axis-aligned lines instead.

* edge-to-edge: each output cell pools the three axis lines ("trident")
  through its position, with separate weights per axis;
* edge-to-node: collapses the cube to per-node features by pooling every
  cell incident to the node on each of the three axis roles;
* node-to-graph: learned weighted pooling of node features to a graph
  vector.

Functional forms take explicit weights (used by the gradient-check
oracles); the Module classes own parameters and call them.
"""

import torch
from torch import nn


def e2e3d(x, r, d, e):
    """Edge-to-edge: (B, M_in, C, C, C) -> (B, M_out, C, C, C).

    out[n,i,j,k] = sum_m sum_c ( r[n,m,c] x[m,c,j,k]
                               + d[n,m,c] x[m,i,c,k]
                               + e[n,m,c] x[m,i,j,c] )

    Each term is constant along the axis it sums over, so the three
    einsum results broadcast back to the cube.
    """
    t_r = torch.einsum("nmc,bmcjk->bnjk", r, x)
    t_d = torch.einsum("nmc,bmick->bnik", d, x)
    t_e = torch.einsum("nmc,bmijc->bnij", e, x)
    return t_r.unsqueeze(2) + t_d.unsqueeze(3) + t_e.unsqueeze(4)


def e2n3d(x, r, d, e):
    """Edge-to-node: (B, M_in, C, C, C) -> (B, M_out, C).

    a[n,i] = sum_m sum_{j,k} ( r[n,m,j,k] x[m,i,j,k]
                             + d[n,m,j,k] x[m,j,i,k]
                             + e[n,m,j,k] x[m,j,k,i] )

    i.e. all cells incident to node i, once per axis role.
    """
    t_r = torch.einsum("nmjk,bmijk->bni", r, x)
    t_d = torch.einsum("nmjk,bmjik->bni", d, x)
    t_e = torch.einsum("nmjk,bmjki->bni", e, x)
    return t_r + t_d + t_e


def n2g3d(a, w):
    """Node-to-graph: (B, M, C) -> (B, M_out); g[n] = sum_{m,i} w[n,m,i] a[m,i]."""
    return torch.einsum("nmi,bmi->bn", w, a)


class EdgeToEdge3d(nn.Module):
    def __init__(self, in_maps, out_maps, channels):
        super().__init__()
        scale = (3.0 * in_maps * channels) ** -0.5
        shape = (out_maps, in_maps, channels)
        self.r = nn.Parameter(torch.randn(shape) * scale)
        self.d = nn.Parameter(torch.randn(shape) * scale)
        self.e = nn.Parameter(torch.randn(shape) * scale)

    def forward(self, x):
        return e2e3d(x, self.r, self.d, self.e)


class EdgeToNode3d(nn.Module):
    def __init__(self, in_maps, out_maps, channels):
        super().__init__()
        scale = (3.0 * in_maps * channels * channels) ** -0.5
        shape = (out_maps, in_maps, channels, channels)
        self.r = nn.Parameter(torch.randn(shape) * scale)
        self.d = nn.Parameter(torch.randn(shape) * scale)
        self.e = nn.Parameter(torch.randn(shape) * scale)

    def forward(self, x):
        return e2n3d(x, self.r, self.d, self.e)


class NodeToGraph3d(nn.Module):
    def __init__(self, in_maps, out_dim, channels):
        super().__init__()
        scale = (in_maps * channels) ** -0.5
        self.w = nn.Parameter(torch.randn(out_dim, in_maps, channels) * scale)

    def forward(self, a):
        return n2g3d(a, self.w)
