import numpy as np
import pytest

from hoiview import KernelParams, Recording, standardize


@pytest.fixture
def params():
    return KernelParams(sigma=5.0, alpha=1.01)


def random_recording(seed, C, T):
    rng = np.random.default_rng(seed)
    return standardize(Recording(rng.standard_normal((C, T)), subject_id=f"seed{seed}"))


def assert_valid_gram(A, n):
    """Check every normalized-Gram invariant."""
    assert A.shape == (n, n)
    assert np.array_equal(A, A.T), "not symmetric bit-exactly"
    assert np.all(A.diagonal() == 1.0 / n), "diagonal not exactly 1/n"
    assert abs(np.trace(A) - 1.0) < 1e-12
    lam = np.linalg.eigvalsh(A)
    assert lam.min() >= -1e-10
    assert lam.max() <= 1.0 + 1e-10
    assert abs(lam.sum() - 1.0) < 1e-9
