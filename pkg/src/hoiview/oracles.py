"""Independent reference implementations for validating the estimator.

Two families live here:

* closed-form Shannon differential entropies / O-information for
  multivariate Gaussian systems, plus a seeded sampler -- used to check
  that the kernel estimator recovers signs and orderings (its magnitudes
  are a proxy, not a consistent Shannon estimate, so only sign/rank
  comparisons are meaningful);
* naive no-cache recomputation paths (fresh Grams per term, the
  alpha=2 Frobenius identity) -- used to cross-check the cached fast
  paths in :mod:`hoiview.interactions`.
"""

from dataclasses import dataclass
from itertools import combinations
from math import fsum

import numpy as np

from .entropy import entropy, gram, joint_entropy
from .errors import ShapeError, SingularCovariance
from .ingest import Recording
from .interactions import TcDtcBreakdown

_LOG2_2PIE = float(np.log2(2.0 * np.pi * np.e))


@dataclass(frozen=True)
class GaussianSystem:
    """A 2- or 3-dimensional Gaussian with symmetric PD covariance."""

    covariance: np.ndarray

    def __post_init__(self):
        cov = np.ascontiguousarray(np.asarray(self.covariance, dtype=np.float64))
        if cov.ndim != 2 or cov.shape[0] != cov.shape[1] or cov.shape[0] not in (2, 3):
            raise ShapeError(f"covariance must be 2x2 or 3x3, got shape {cov.shape}")
        if np.max(np.abs(cov - cov.T)) > 1e-12:
            raise ShapeError("covariance must be symmetric (within 1e-12)")
        if np.min(np.linalg.eigvalsh(cov)) <= 0.0:
            raise SingularCovariance("covariance is not positive definite")
        cov.setflags(write=False)
        object.__setattr__(self, "covariance", cov)

    @property
    def dim(self):
        return self.covariance.shape[0]


def gaussian_entropy(sys, subset):
    """Differential entropy (bits) of a variable subset.

    H(S) = 0.5 * log2((2*pi*e)^|S| * det(Sigma_S)).
    """
    subset = tuple(subset)
    if not subset:
        raise ValueError("subset must be nonempty")
    if any(not (0 <= s < sys.dim) for s in subset):
        raise IndexError(f"subset {subset} out of range for dim {sys.dim}")
    sub = sys.covariance[np.ix_(subset, subset)]
    sign, logdet = np.linalg.slogdet(sub)
    if sign <= 0 or not np.isfinite(logdet):
        raise SingularCovariance(f"subset {subset} covariance is singular")
    return 0.5 * (len(subset) * _LOG2_2PIE + logdet / np.log(2.0))


def gaussian_oinfo(sys):
    """Closed-form O-information (bits) of a 3-D Gaussian system.

    Co-information form: sum_i H(i) - sum_pairs H(ij) + H(012). The
    (2*pi*e) constants cancel; only covariance determinants survive.
    """
    if sys.dim != 3:
        raise ShapeError(f"gaussian_oinfo needs dim 3, got {sys.dim}")
    h1 = sum(gaussian_entropy(sys, (i,)) for i in range(3))
    h2 = sum(gaussian_entropy(sys, p) for p in combinations(range(3), 2))
    h3 = gaussian_entropy(sys, (0, 1, 2))
    return h1 - h2 + h3


def sample_gaussian(sys, T, seed):
    """Draw T i.i.d. samples as a Recording, reproducibly.

    Uses the PCG64 generator seeded with ``seed`` and a fixed fill
    order: a (dim, T) standard-normal block in C order, multiplied by
    the Cholesky factor of the covariance. Same seed, same bits.
    """
    if T < 2:
        raise ValueError(f"need T >= 2 samples, got {T}")
    try:
        L = np.linalg.cholesky(sys.covariance)
    except np.linalg.LinAlgError as exc:
        raise SingularCovariance(f"covariance is not positive definite: {exc}") from exc
    rng = np.random.Generator(np.random.PCG64(seed))
    data = L @ rng.standard_normal((sys.dim, T))
    return Recording(data=data, subject_id=f"gaussian-seed{seed}")


def entropy_alpha2(A):
    """alpha=2 entropy via the Frobenius identity, no eigendecomposition.

    For symmetric trace-1 A: sum_i lambda_i^2 = tr(A^2) = sum_ij A_ij^2,
    so S_2(A) = -log2(sum_ij A_ij^2). Independent route used to check
    the eigenvalue path.
    """
    A = np.asarray(A, dtype=np.float64)
    return float(-np.log2(np.sum(A * A)))


def mutual_information_nocache(rec, i, j, params):
    """I(X_i; X_j) with every term recomputed from the raw channels."""
    gi = gram(rec.data[i], params)
    gj = gram(rec.data[j], params)
    hi = entropy(gi, params.alpha)
    hj = entropy(gj, params.alpha)
    hij = joint_entropy((gi, gj), params.alpha)
    return hi + hj - hij


def pairwise_view_nocache(rec, params):
    """Mutual-information matrix built term by term without a cache."""
    C = rec.channels
    out = np.zeros((C, C))
    for i in range(C):
        out[i, i] = entropy(gram(rec.data[i], params), params.alpha)
    for i, j in combinations(range(C), 2):
        v = mutual_information_nocache(rec, i, j, params)
        out[i, j] = v
        out[j, i] = v
    return out


def oinfo_nocache(rec, i, j, k, params):
    """TC/DTC/O of one triplet with no shared state at all."""
    i, j, k = sorted((i, j, k))
    g = {c: gram(rec.data[c], params) for c in (i, j, k)}
    h = {c: entropy(g[c], params.alpha) for c in (i, j, k)}
    hp = {
        (a, b): joint_entropy((g[a], g[b]), params.alpha)
        for a, b in combinations((i, j, k), 2)
    }
    h3 = joint_entropy((g[i], g[j], g[k]), params.alpha)
    tc = fsum((h[i], h[j], h[k], -h3))
    dtc = fsum((hp[(i, j)], hp[(i, k)], hp[(j, k)], -2.0 * h3))
    return TcDtcBreakdown(tc=tc, dtc=dtc, o=tc - dtc, triple_joint=h3)


def oinfo_coinformation(cache, i, j, k):
    """O-information via the co-information identity.

    o = sum H(singles) - sum H(pairs) + H(ijk); algebraically equal to
    tc - dtc, so the two routes must agree to rounding. The triple joint
    entropy is recomputed here (one extra eigendecomposition).
    """
    i, j, k = sorted((i, j, k))
    g = cache.channel_grams
    h3 = joint_entropy((g[i], g[j], g[k]), cache.params.alpha)
    s = cache.singles
    p = cache.pairs
    return float(
        (s[i] + s[j] + s[k]) - (p[i, j] + p[i, k] + p[j, k]) + h3
    )
