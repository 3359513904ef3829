"""Matrix-based Renyi alpha-order entropy on normalized kernel Gram matrices.

The atomic object is a trace-1 Gram matrix over the T timepoints of one
channel: A_ij = (1/n) k(x_i, x_j) with a Gaussian kernel of width sigma.
Entropy is a function of A's eigenvalue spectrum; joint entropy of
several channels uses the Hadamard product of their Gram matrices,
renormalized to trace 1.

All operations here are pure. Eigendecompositions run on a single BLAS
thread (pinned process-wide on first use) so that results are
bit-reproducible regardless of how callers parallelize above; see
``eig_counter`` for the instrumentation hook.
"""

import threading
from dataclasses import dataclass

import numpy as np
from threadpoolctl import threadpool_limits

from .errors import NumericalError, ShapeError, TooFewSamples

_ALPHA_MIN_GAP = 1e-6


@dataclass(frozen=True)
class KernelParams:
    """Gaussian kernel width and Renyi order.

    sigma is in units of the standardized signal. alpha must stay away
    from 1: the alpha -> 1 (Shannon) limit is deliberately not
    special-cased, values like 1.01 approximate it.
    """

    sigma: float = 5.0
    alpha: float = 1.01

    def __post_init__(self):
        if not (self.sigma > 0.0):
            raise ValueError(f"sigma must be positive, got {self.sigma}")
        _check_alpha(self.alpha)


def _check_alpha(alpha):
    if not (alpha > 0.0):
        raise ValueError(f"alpha must be positive, got {alpha}")
    if abs(alpha - 1.0) <= _ALPHA_MIN_GAP:
        raise ValueError(
            f"alpha must differ from 1 by more than {_ALPHA_MIN_GAP}, got {alpha}"
        )


class EigCounter:
    """Thread-safe count of symmetric eigendecompositions performed."""

    def __init__(self):
        self._lock = threading.Lock()
        self._count = 0

    def add(self, k=1):
        with self._lock:
            self._count += k

    def reset(self):
        with self._lock:
            self._count = 0

    @property
    def value(self):
        with self._lock:
            return self._count


eig_counter = EigCounter()

_blas_guard = None
_blas_lock = threading.Lock()


def _pin_blas_single_threaded():
    # Multi-threaded BLAS changes reduction order and therefore bits;
    # determinism across run configurations requires one BLAS thread.
    global _blas_guard
    if _blas_guard is None:
        with _blas_lock:
            if _blas_guard is None:
                _blas_guard = threadpool_limits(limits=1, user_api="blas")


def _eigvalsh(A):
    _pin_blas_single_threaded()
    eig_counter.add(1)
    try:
        return np.linalg.eigvalsh(A)
    except np.linalg.LinAlgError as exc:
        raise NumericalError(f"symmetric eigensolver failed: {exc}") from exc


def gram(samples, params):
    """Normalized Gaussian-kernel Gram matrix of a 1-D sample vector.

    A_ij = (1/n) exp(-((x_i - x_j)/sigma)^2 / 2). The Gaussian kernel has
    k(x,x) = 1, so this is already the trace-1 normalized form: diagonal
    exactly 1/n, symmetric, PSD, eigenvalues summing to 1.

    The kernel argument is formed as (x_i - x_j)/sigma, so rescaling
    samples by c and sigma by |c| reproduces the output bit-exactly
    whenever the products are exactly representable.
    """
    x = np.ascontiguousarray(np.asarray(samples, dtype=np.float64))
    if x.ndim != 1:
        raise ShapeError(f"samples must be 1-D, got shape {x.shape}")
    n = x.shape[0]
    if n < 2:
        raise TooFewSamples(f"need at least 2 samples, got {n}")
    if not np.all(np.isfinite(x)):
        raise ValueError("samples must be finite")
    z = (x[:, None] - x[None, :]) / params.sigma
    K = np.exp(-0.5 * z * z)
    return K / n


def entropy(A, alpha):
    """Renyi alpha-order entropy (bits) of a normalized Gram matrix.

    S_alpha(A) = log2(sum_i lambda_i^alpha) / (1 - alpha) over the
    eigenvalues of A, clamped to [0, 1] before powering to protect the
    non-integer power from tiny negative eigensolver output, and the
    result clamped to the feasible range [0, log2 n].
    """
    _check_alpha(alpha)
    A = np.asarray(A, dtype=np.float64)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise ShapeError(f"Gram matrix must be square, got shape {A.shape}")
    lam = _eigvalsh(A)
    lam = np.clip(lam, 0.0, 1.0)
    h = np.log2(np.sum(lam**alpha)) / (1.0 - alpha)
    return float(np.clip(h, 0.0, np.log2(A.shape[0])))


def joint_gram(grams):
    """Joint Gram matrix of 2 or 3 channels: Hadamard product, trace 1.

    J = (A o B [o C]) / tr(A o B [o C]). For Gaussian-kernel inputs the
    trace is n*(1/n)^k so renormalization is a pure rescale, but the
    trace is always recomputed and divided out, and the diagonal is then
    written as exactly 1/n to keep the invariant unconditional.
    """
    if len(grams) not in (2, 3):
        raise ShapeError(f"joint_gram takes 2 or 3 matrices, got {len(grams)}")
    mats = [np.asarray(g, dtype=np.float64) for g in grams]
    first = mats[0]
    if first.ndim != 2 or first.shape[0] != first.shape[1]:
        raise ShapeError(f"Gram matrix must be square, got shape {first.shape}")
    for other in mats[1:]:
        if other.shape != first.shape:
            raise ShapeError(f"Gram shape mismatch: {other.shape} vs {first.shape}")
    n = first.shape[0]
    if len(mats) == 2:
        # two-operand product is commutative bitwise as-is
        P = mats[0] * mats[1]
    else:
        # multiply in per-element ascending order: float multiplication is
        # commutative but not associative, and channel relabelings must
        # reproduce joint entropies bit-exactly
        a, b, c = mats
        lo = np.minimum(a, b)
        hi = np.maximum(a, b)
        mid = np.maximum(lo, np.minimum(hi, c))
        lo = np.minimum(lo, c)
        hi = np.maximum(hi, c)
        P = (lo * mid) * hi
    P /= np.trace(P)
    np.fill_diagonal(P, 1.0 / n)
    return P


def joint_entropy(grams, alpha):
    """Entropy of the joint Gram matrix; exactly one eigendecomposition."""
    return entropy(joint_gram(grams), alpha)
