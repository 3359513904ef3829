"""Pairwise and triple interaction views of a standardized recording.

View 1 is the C x C mutual-information matrix; view 2 is the C x C x C
O-information tensor, where positive entries mark redundancy-dominated
triplets and negative entries synergy-dominated ones.

The cost model is one eigendecomposition per entropy term. Single and
pairwise entropies are computed once into an EntropyCache; each triplet
then needs exactly one further eigendecomposition (its triple joint
Gram), because total correlation and dual total correlation both reduce
to cached terms plus the triple joint entropy:

    tc  = H(i) + H(j) + H(k) - H(ijk)
    dtc = H(ij) + H(ik) + H(jk) - 2 H(ijk)
    o   = tc - dtc

That is 116 + 6670 + 253460 eigendecompositions for C=116 instead of
7 per triplet. ``entropy.eig_counter`` makes the budget assertable.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import fsum

import numpy as np

from .entropy import KernelParams, entropy, gram, joint_entropy, joint_gram
from .errors import DegenerateChannel, TooFewChannels

# triplets per parallel work item; fixed so the arithmetic partition
# never depends on the thread count
_CHUNK = 256

_STANDARDIZED_TOL = 1e-6


def _require_standardized(rec):
    means = rec.data.mean(axis=1)
    sds = rec.data.std(axis=1)
    if np.max(np.abs(means)) > _STANDARDIZED_TOL or np.max(np.abs(sds - 1.0)) > _STANDARDIZED_TOL:
        raise ValueError(
            "recording is not standardized (per-channel mean 0, sd 1); "
            "call ingest.standardize first"
        )


def _resolve_threads(threads):
    if threads is None:
        return os.cpu_count() or 1
    threads = int(threads)
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    return threads


@dataclass(frozen=True)
class EntropyCache:
    """Per-channel Grams plus all single and pairwise entropies (bits).

    ``pairs`` is exactly symmetric with an unused zero diagonal.
    Immutable; share freely across threads.
    """

    singles: np.ndarray        # (C,)
    pairs: np.ndarray          # (C, C)
    channel_grams: np.ndarray  # (C, T, T)
    params: KernelParams

    @property
    def channels(self):
        return self.singles.shape[0]


@dataclass(frozen=True)
class TcDtcBreakdown:
    """Total correlation, dual total correlation, and their difference.

    o = tc - dtc exactly as computed; o > 0 means the triplet is
    redundancy-dominated, o < 0 synergy-dominated. ``triple_joint`` is
    the joint entropy H(i,j,k) in bits.
    """

    tc: float
    dtc: float
    o: float
    triple_joint: float


def build_cache(rec, params, threads=None):
    """Precompute channel Grams, single entropies, and pair entropies.

    Performs exactly C + C(C-1)/2 eigendecompositions. Pair entropies
    are computed in parallel over ``threads`` workers (default: all
    cores); values are identical for any thread count.
    """
    if rec.channels < 2:
        raise TooFewChannels(f"need at least 2 channels, got {rec.channels}")
    _require_standardized(rec)
    threads = _resolve_threads(threads)
    C = rec.channels
    grams = np.stack([gram(rec.data[i], params) for i in range(C)])
    grams.setflags(write=False)
    singles = np.array([entropy(grams[i], params.alpha) for i in range(C)])
    singles.setflags(write=False)

    pairs = np.zeros((C, C))
    index_pairs = list(combinations(range(C), 2))

    def fill_chunk(chunk):
        for i, j in chunk:
            h = joint_entropy((grams[i], grams[j]), params.alpha)
            pairs[i, j] = h
            pairs[j, i] = h

    chunks = [index_pairs[k:k + _CHUNK] for k in range(0, len(index_pairs), _CHUNK)]
    if threads == 1 or len(chunks) <= 1:
        for chunk in chunks:
            fill_chunk(chunk)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(fill_chunk, chunks))
    pairs.setflags(write=False)
    return EntropyCache(singles=singles, pairs=pairs, channel_grams=grams, params=params)


def _check_channel(cache, i):
    if not (0 <= i < cache.channels):
        raise IndexError(f"channel {i} out of range [0, {cache.channels})")


def mutual_information(cache, i, j):
    """I(X_i; X_j) = H(i) + H(j) - H(i,j) in bits, from cached terms."""
    _check_channel(cache, i)
    _check_channel(cache, j)
    if i == j:
        raise IndexError("mutual information needs two distinct channels; "
                         "use cache.singles for self-information")
    return float(cache.singles[i] + cache.singles[j] - cache.pairs[i, j])


def pairwise_view(cache):
    """C x C mutual-information matrix (view 1).

    Off-diagonal entries are I(X_i; X_j); the diagonal carries H(X_i)
    (self-information convention) so consumers can use or mask it.
    """
    C = cache.channels
    out = np.zeros((C, C))
    for i, j in combinations(range(C), 2):
        v = mutual_information(cache, i, j)
        out[i, j] = v
        out[j, i] = v
    np.fill_diagonal(out, cache.singles)
    return out


def triplet_o_information(cache, i, j, k, alpha=None):
    """TC/DTC/O breakdown of one channel triplet.

    One new eigendecomposition (the triple joint Gram); everything else
    comes from the cache. The indices are sorted internally, so the
    result is bit-identical for all six argument orders.
    """
    for idx in (i, j, k):
        _check_channel(cache, idx)
    if len({i, j, k}) != 3:
        raise IndexError(f"indices must be distinct, got ({i},{j},{k})")
    if alpha is None:
        alpha = cache.params.alpha
    elif alpha != cache.params.alpha:
        raise ValueError(
            f"alpha {alpha} does not match the cache's alpha {cache.params.alpha}; "
            "rebuild the cache to change alpha"
        )
    i, j, k = sorted((i, j, k))
    g = cache.channel_grams
    h3 = joint_entropy((g[i], g[j], g[k]), alpha)
    s = cache.singles
    p = cache.pairs
    # fsum: correctly rounded sums are independent of term order, so a
    # channel relabeling cannot perturb the low bits
    tc = fsum((s[i], s[j], s[k], -h3))
    dtc = fsum((p[i, j], p[i, k], p[j, k], -2.0 * h3))
    return TcDtcBreakdown(tc=tc, dtc=dtc, o=tc - dtc, triple_joint=h3)


def oinfo_tensor(cache, alpha=None, threads=None, progress=None):
    """C x C x C O-information tensor (view 2).

    Every unordered triplet i<j<k is evaluated once via
    :func:`triplet_o_information` and mirrored to all six orderings;
    cells with a repeated index stay 0 (O-information is undefined
    there, 0 is the neutral sentinel for convolutional consumers).

    Triplets are enumerated lexicographically and partitioned into
    fixed-size chunks; each cell is written by exactly one task, so the
    output is bit-identical for any thread count. ``progress``, if
    given, is called as progress(i, j, k) per finished triplet, possibly
    concurrently and out of order.
    """
    C = cache.channels
    if C < 3:
        raise TooFewChannels(f"O-information tensor needs C >= 3, got {C}")
    threads = _resolve_threads(threads)
    tensor = np.zeros((C, C, C))
    triplets = list(combinations(range(C), 3))

    def run_chunk(chunk):
        for i, j, k in chunk:
            o = triplet_o_information(cache, i, j, k, alpha).o
            tensor[i, j, k] = o
            tensor[i, k, j] = o
            tensor[j, i, k] = o
            tensor[j, k, i] = o
            tensor[k, i, j] = o
            tensor[k, j, i] = o
            if progress is not None:
                progress(i, j, k)

    chunks = [triplets[k:k + _CHUNK] for k in range(0, len(triplets), _CHUNK)]
    if threads == 1 or len(chunks) <= 1:
        for chunk in chunks:
            run_chunk(chunk)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(run_chunk, chunks))
    return tensor


def pearson_view(rec):
    """C x C Pearson correlation matrix (linear-FC baseline), diagonal 1."""
    data = rec.data
    sds = data.std(axis=1)
    degenerate = np.nonzero(sds == 0.0)[0]
    if degenerate.size:
        raise DegenerateChannel(int(degenerate[0]))
    _require_standardized(rec)
    out = np.corrcoef(data)
    out = np.clip(out, -1.0, 1.0)
    np.fill_diagonal(out, 1.0)
    return out
