import numpy as np
import pytest

from hoiview import (
    KernelParams,
    ShapeError,
    TooFewSamples,
    eig_counter,
    entropy,
    entropy_alpha2,
    gram,
    joint_entropy,
    joint_gram,
)

from conftest import assert_valid_gram


def test_kernel_params_validation():
    KernelParams(sigma=5.0, alpha=1.01)
    with pytest.raises(ValueError):
        KernelParams(sigma=0.0)
    with pytest.raises(ValueError):
        KernelParams(sigma=-1.0)
    with pytest.raises(ValueError):
        KernelParams(alpha=1.0)
    with pytest.raises(ValueError):
        KernelParams(alpha=1.0 + 5e-7)  # inside the forbidden gap around 1
    with pytest.raises(ValueError):
        KernelParams(alpha=-2.0)
    KernelParams(alpha=2.0)
    KernelParams(alpha=0.5)


def test_gram_identical_samples(params):
    A = gram(np.full(4, 3.7), params)
    assert np.all(A == 0.25)


def test_gram_far_separated(params):
    # pairwise distances >= 2e5 sigma: off-diagonals underflow to ~0
    A = gram(np.array([0.0, 1e6, 2e6, 3e6]), params)
    off = A[~np.eye(4, dtype=bool)]
    assert np.all(off < 1e-300)
    assert np.all(A.diagonal() == 0.25)


def test_gram_two_points_hand_value():
    # samples {0,1}, sigma=1: off-diagonal = 0.5 * exp(-0.5)
    A = gram(np.array([0.0, 1.0]), KernelParams(sigma=1.0, alpha=1.01))
    expect = np.array([[0.5, 0.5 * np.exp(-0.5)], [0.5 * np.exp(-0.5), 0.5]])
    np.testing.assert_allclose(A, expect, atol=1e-15)


def test_gram_invariants_random(params):
    rng = np.random.default_rng(11)
    for n in (2, 5, 37, 128):
        A = gram(rng.standard_normal(n), params)
        assert_valid_gram(A, n)


def test_gram_too_few_samples(params):
    with pytest.raises(TooFewSamples):
        gram(np.array([1.0]), params)


def test_gram_rejects_bad_input(params):
    with pytest.raises(ShapeError):
        gram(np.zeros((3, 3)), params)
    with pytest.raises(ValueError):
        gram(np.array([0.0, np.nan]), params)


def test_gram_scale_invariance_bit_exact(params):
    rng = np.random.default_rng(12)
    x = rng.standard_normal(60)
    base = gram(x, params)
    # exactly-representable rescalings must reproduce the output bitwise
    for c in (2.0, 0.5, 1024.0):
        A = gram(c * x, KernelParams(sigma=c * params.sigma, alpha=params.alpha))
        assert np.array_equal(A, base)
    xi = rng.integers(-40, 40, 50).astype(float)
    a = gram(xi, KernelParams(sigma=5.0))
    b = gram(3.0 * xi, KernelParams(sigma=15.0))
    assert np.array_equal(a, b)


def test_entropy_zero_for_identical_samples(params):
    A = gram(np.full(16, 2.0), params)
    assert entropy(A, params.alpha) == pytest.approx(0.0, abs=1e-9)


def test_entropy_max_for_identity_gram():
    A = np.eye(4) / 4.0
    for alpha in (0.5, 1.01, 2.0, 5.0):
        assert entropy(A, alpha) == pytest.approx(2.0, abs=1e-9)


def test_entropy_alpha2_frobenius_oracle(params):
    rng = np.random.default_rng(13)
    for _ in range(25):
        A = gram(rng.standard_normal(48), params)
        assert entropy(A, 2.0) == pytest.approx(entropy_alpha2(A), abs=1e-10)


def test_entropy_bounds_random(params):
    rng = np.random.default_rng(14)
    for _ in range(20):
        n = int(rng.integers(2, 120))
        A = gram(rng.standard_normal(n) * rng.uniform(0.1, 10.0), params)
        h = entropy(A, params.alpha)
        assert 0.0 <= h <= np.log2(n)


def test_entropy_permutation_invariant(params):
    rng = np.random.default_rng(15)
    A = gram(rng.standard_normal(50), params)
    perm = rng.permutation(50)
    B = A[np.ix_(perm, perm)]
    assert entropy(B, params.alpha) == pytest.approx(entropy(A, params.alpha), abs=1e-12)


def test_entropy_rejects_alpha_one(params):
    A = gram(np.arange(4.0), params)
    with pytest.raises(ValueError):
        entropy(A, 1.0)


def test_joint_gram_identity_element(params):
    rng = np.random.default_rng(16)
    A = gram(rng.standard_normal(32), params)
    ident = gram(np.zeros(32), params)  # all 1/n: Hadamard identity up to renormalization
    J = joint_gram((A, ident))
    np.testing.assert_allclose(J, A, atol=1e-12, rtol=0.0)


def test_joint_gram_identity_like(params):
    A = gram(np.array([0.0, 1e9, 2e9, 3e9]), params)  # ~ (1/4) I
    J = joint_gram((A, A))
    np.testing.assert_allclose(J, np.eye(4) / 4.0, atol=1e-300)


def test_joint_gram_commutative_bit_exact(params):
    rng = np.random.default_rng(17)
    A = gram(rng.standard_normal(40), params)
    B = gram(rng.standard_normal(40), params)
    assert np.array_equal(joint_gram((A, B)), joint_gram((B, A)))


def test_joint_gram_invariants(params):
    rng = np.random.default_rng(18)
    A = gram(rng.standard_normal(33), params)
    B = gram(rng.standard_normal(33), params)
    C = gram(rng.standard_normal(33), params)
    assert_valid_gram(joint_gram((A, B)), 33)
    assert_valid_gram(joint_gram((A, B, C)), 33)


def test_joint_gram_associative_up_to_renormalization(params):
    rng = np.random.default_rng(19)
    A, B, C = (gram(rng.standard_normal(28), params) for _ in range(3))
    direct = joint_gram((A, B, C))
    nested = joint_gram((joint_gram((A, B)), C))
    np.testing.assert_allclose(nested, direct, atol=1e-12, rtol=0.0)
    nested2 = joint_gram((A, joint_gram((B, C))))
    np.testing.assert_allclose(nested2, direct, atol=1e-12, rtol=0.0)


def test_joint_gram_shape_errors(params):
    A = gram(np.arange(4.0), params)
    B = gram(np.arange(5.0), params)
    with pytest.raises(ShapeError):
        joint_gram((A, B))
    with pytest.raises(ShapeError):
        joint_gram((A,))
    with pytest.raises(ShapeError):
        joint_gram((A, A, A, A))


def test_joint_entropy_with_zero_entropy_channel(params):
    rng = np.random.default_rng(20)
    A = gram(rng.standard_normal(64), params)
    ident = gram(np.full(64, 1.5), params)
    assert joint_entropy((A, ident), params.alpha) == pytest.approx(
        entropy(A, params.alpha), abs=1e-10
    )


def test_joint_entropy_monotone_and_subadditive(params):
    # H(X,Y) >= max(H(X), H(Y)) and H(X,Y) <= H(X) + H(Y), checked
    # empirically over 100 random channel pairs
    rng = np.random.default_rng(21)
    for _ in range(100):
        A = gram(rng.standard_normal(30) * rng.uniform(0.5, 3.0), params)
        B = gram(rng.standard_normal(30) * rng.uniform(0.5, 3.0), params)
        ha, hb = entropy(A, params.alpha), entropy(B, params.alpha)
        hab = joint_entropy((A, B), params.alpha)
        assert hab >= max(ha, hb) - 1e-9
        assert hab <= ha + hb + 1e-9


def test_eig_counter_counts(params):
    rng = np.random.default_rng(22)
    A = gram(rng.standard_normal(10), params)
    eig_counter.reset()
    entropy(A, params.alpha)
    joint_entropy((A, A), params.alpha)
    assert eig_counter.value == 2
