import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from bellmix.errors import NotHermitian, NotPSD
from bellmix.matrix_core import (
    hermitian_eigensystem,
    kron,
    matrix_sqrt_psd,
    partial_trace_A,
)
from bellmix.states import SIGMA_0, SIGMA_X, SIGMA_Y, bell_phi_plus, random_density


def random_hermitian(rng, n):
    x = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return x + x.conj().T


def random_psd(rng, n, rank=None):
    g = rng.normal(size=(n, rank or n)) + 1j * rng.normal(size=(n, rank or n))
    return g @ g.conj().T


def charpoly_roots(h):
    """Eigenvalues from the Faddeev-LeVerrier characteristic polynomial."""
    n = h.shape[0]
    coeffs = [1.0 + 0j]
    m = np.zeros_like(h)
    for k in range(1, n + 1):
        m = h @ m + coeffs[-1] * np.eye(n)
        coeffs.append(-np.trace(h @ m) / k)
    return np.sort(np.roots(coeffs).real)


finite = st.floats(-10, 10, allow_nan=False, allow_infinity=False)


@st.composite
def hermitian_matrices(draw):
    n = draw(st.integers(1, 4))
    re = draw(arrays(np.float64, (n, n), elements=finite))
    im = draw(arrays(np.float64, (n, n), elements=finite))
    x = re + 1j * im
    return x + x.conj().T


def test_diagonal_spectrum():
    values, vectors = hermitian_eigensystem(np.diag([1.0, 2.0, 3.0, 4.0]))
    np.testing.assert_array_equal(values, [1, 2, 3, 4])
    np.testing.assert_allclose(np.abs(vectors), np.eye(4))


def test_pauli_x_spectrum():
    values, _ = hermitian_eigensystem(SIGMA_X)
    np.testing.assert_allclose(values, [-1.0, 1.0], atol=1e-15)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_matches_characteristic_polynomial(rng, n):
    for _ in range(50):
        h = random_hermitian(rng, n)
        values, _ = hermitian_eigensystem(h)
        np.testing.assert_allclose(values, charpoly_roots(h), atol=1e-8)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_eigenpairs_orthonormal(rng, n):
    for _ in range(100):
        h = random_hermitian(rng, n)
        values, vectors = hermitian_eigensystem(h)
        assert np.all(np.diff(values) >= 0)
        np.testing.assert_allclose(h @ vectors, vectors * values, atol=1e-10)
        np.testing.assert_allclose(vectors.conj().T @ vectors, np.eye(n), atol=1e-10)


@settings(max_examples=200, deadline=None)
@given(hermitian_matrices())
def test_reconstruction(h):
    values, vectors = hermitian_eigensystem(h)
    np.testing.assert_allclose((vectors * values) @ vectors.conj().T, h, atol=1e-9 * max(1.0, np.abs(h).max()))


def test_degenerate_spectrum_is_deterministic():
    h = np.eye(4)
    h[0, 0] = 2.0
    first = hermitian_eigensystem(h)
    second = hermitian_eigensystem(h.copy())
    np.testing.assert_array_equal(first[0], second[0])
    np.testing.assert_array_equal(first[1], second[1])
    np.testing.assert_array_equal(first[0], [1, 1, 1, 2])


def test_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        hermitian_eigensystem(np.array([[0, 1], [0, 0]]))


def test_sqrt_identity_and_diagonal():
    np.testing.assert_allclose(matrix_sqrt_psd(np.eye(4)), np.eye(4), atol=1e-15)
    np.testing.assert_allclose(matrix_sqrt_psd(np.diag([4.0, 1.0, 0.0, 0.0])), np.diag([2.0, 1.0, 0.0, 0.0]))


def test_sqrt_multiplies_back(rng):
    for k in range(1000):
        m = random_psd(rng, 4, rank=1 + k % 4)
        s = matrix_sqrt_psd(m)
        np.testing.assert_allclose(s, s.conj().T, atol=1e-12)
        assert np.linalg.eigvalsh(s).min() > -1e-9
        np.testing.assert_allclose(s @ s, m, atol=1e-9 * max(1.0, np.abs(m).max()))


def test_sqrt_clamps_rounding_noise_but_rejects_negative():
    np.testing.assert_allclose(matrix_sqrt_psd(np.diag([1.0, -5e-11])), np.diag([1.0, 0.0]))
    with pytest.raises(NotPSD) as info:
        matrix_sqrt_psd(np.diag([1.0, -1e-3]))
    assert info.value.min_eigenvalue == pytest.approx(-1e-3)


def test_kron_examples():
    np.testing.assert_array_equal(kron(SIGMA_0, SIGMA_0), np.eye(4))
    expected = np.fliplr(np.diag([-1, 1, 1, -1])).astype(complex)
    np.testing.assert_array_equal(kron(SIGMA_Y, SIGMA_Y), expected)
    e0 = np.diag([1.0, 0.0])
    np.testing.assert_array_equal(kron(e0, e0), np.diag([1.0, 0, 0, 0]))


def test_kron_index_formula_and_trace(rng):
    for _ in range(100):
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        k = kron(a, b)
        for i, j, p, q in np.ndindex(2, 2, 2, 2):
            assert k[2 * i + p, 2 * j + q] == pytest.approx(a[i, j] * b[p, q], rel=1e-15)
        assert abs(np.trace(k) - np.trace(a) * np.trace(b)) < 1e-12
        c = rng.normal(size=(2, 2))
        np.testing.assert_allclose(kron(a + 2 * c, b), kron(a, b) + 2 * kron(c, b), atol=1e-12)


def test_partial_trace_examples(rng):
    ra = random_density(rng).matrix
    rb = np.array([[0.7, 0.1 - 0.2j], [0.1 + 0.2j, 0.3]])
    ra2 = np.array([[0.4, 0.05j], [-0.05j, 0.6]])
    np.testing.assert_allclose(partial_trace_A(np.kron(ra2, rb)), rb, atol=1e-15)
    np.testing.assert_allclose(partial_trace_A(bell_phi_plus()), np.eye(2) / 2, atol=1e-15)
    assert abs(np.trace(partial_trace_A(ra)) - 1) < 1e-12


def test_partial_trace_linear(rng):
    for _ in range(100):
        r1, r2 = random_density(rng).matrix, random_density(rng).matrix
        alpha, beta = rng.normal(size=2)
        lhs = partial_trace_A(alpha * r1 + beta * r2)
        np.testing.assert_allclose(lhs, alpha * partial_trace_A(r1) + beta * partial_trace_A(r2), atol=1e-14)
