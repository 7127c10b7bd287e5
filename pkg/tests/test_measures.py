import math
from itertools import pairwise

import numpy as np
import pytest

from bellmix.measures import (
    binary_entropy,
    concurrence,
    concurrence_e0,
    entanglement_of_formation,
    eof_from_concurrence,
    linear_entropy,
    linear_entropy_e0,
    measure_report,
    purity,
    spin_flip,
)
from bellmix.states import (
    E0Params,
    bell_phi_plus,
    e0_from_params,
    maximally_mixed,
    pure_state,
    random_density,
    random_e0_params,
    validate_density,
)

# h((1 + sqrt(3)/2) / 2) evaluated with mpmath at 30 digits
EOF_AT_HALF = 0.354578902665269884


def random_local_unitary(rng):
    def haar2():
        z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        q, r = np.linalg.qr(z)
        return q * (np.diag(r) / np.abs(np.diag(r)))

    return np.kron(haar2(), haar2())


def wootters_numpy(rho):
    """Textbook route: square roots of the eigenvalues of rho (sy sy) rho* (sy sy), via LAPACK."""
    yy = np.fliplr(np.diag([-1, 1, 1, -1])).astype(complex)
    lam = np.sqrt(np.clip(np.sort(np.linalg.eigvals(rho @ yy @ rho.conj() @ yy).real), 0, None))
    return max(0.0, lam[3] - lam[2] - lam[1] - lam[0])


def test_spin_flip_examples():
    np.testing.assert_allclose(spin_flip(maximally_mixed()), np.eye(4) / 4, atol=1e-16)
    phi = bell_phi_plus().matrix
    np.testing.assert_allclose(spin_flip(phi), phi, atol=1e-15)
    np.testing.assert_allclose(spin_flip(np.diag([1.0, 0, 0, 0])), np.diag([0, 0, 0, 1.0]))


def test_spin_flip_is_a_state(rng):
    for _ in range(100):
        validate_density(spin_flip(random_density(rng)))


def test_concurrence_examples(rng):
    assert concurrence(bell_phi_plus()) == pytest.approx(1.0, abs=1e-12)
    for _ in range(20):
        diag = rng.dirichlet(np.ones(4))
        assert concurrence(np.diag(diag)) == 0.0
    assert concurrence(e0_from_params(E0Params(1 / 3, 1 / 3, 0.5))) == pytest.approx(0.5, abs=1e-12)


def test_concurrence_e0_closed_form(rng):
    assert concurrence_e0(E0Params(1 / 3, 1 / 3, 0.5, 2.0)) == 0.5
    assert concurrence_e0(E0Params(0.2, 0.3, 0.0)) == 0.0
    for _ in range(200):
        p = random_e0_params(rng)
        assert abs(concurrence(e0_from_params(p)) - concurrence_e0(p)) < 1e-9


def test_concurrence_matches_lapack_route(rng):
    for rank in (1, 2, 3, 4) * 50:
        rho = random_density(rng, rank)
        assert concurrence(rho) == pytest.approx(wootters_numpy(rho.matrix), abs=1e-7)


def test_concurrence_local_unitary_invariance(rng):
    for _ in range(500):
        rho = random_density(rng).matrix
        u = random_local_unitary(rng)
        assert abs(concurrence(rho) - concurrence(u @ rho @ u.conj().T)) < 1e-8


def test_concurrence_local_unitary_invariance_low_rank(rng):
    # square roots of near-zero eigenvalues cost about half the digits here
    for k in range(150):
        rho = random_density(rng, 1 + k % 3).matrix
        u = random_local_unitary(rng)
        assert abs(concurrence(rho) - concurrence(u @ rho @ u.conj().T)) < 1e-6


def test_eof_values():
    assert eof_from_concurrence(1.0) == pytest.approx(1.0, abs=1e-15)
    assert eof_from_concurrence(0.0) == 0.0
    assert eof_from_concurrence(0.5) == pytest.approx(EOF_AT_HALF, abs=1e-14)
    assert entanglement_of_formation(bell_phi_plus()) == pytest.approx(1.0, abs=1e-10)
    assert entanglement_of_formation(maximally_mixed()) == 0.0
    assert binary_entropy(0.0) == binary_entropy(1.0) == 0.0


def test_eof_monotone():
    values = [eof_from_concurrence(c) for c in np.linspace(0, 1, 1000)]
    assert all(b >= a for a, b in pairwise(values))


def test_linear_entropy_examples():
    psi = np.array([0.6, 0.0, 0.8j, 0.0])
    assert linear_entropy(pure_state(psi)) == pytest.approx(0.0, abs=1e-15)
    assert linear_entropy(maximally_mixed()) == pytest.approx(1.0, abs=1e-15)
    p = E0Params(1 / 3, 1 / 3, 0.5)
    assert linear_entropy(e0_from_params(p)) == pytest.approx(13 / 18, abs=1e-15)
    assert linear_entropy_e0(p) == pytest.approx(13 / 18, abs=1e-15)


def test_linear_entropy_e0_closed_form(rng):
    for _ in range(500):
        p = random_e0_params(rng)
        assert abs(linear_entropy(e0_from_params(p)) - linear_entropy_e0(p)) < 1e-12


def test_theta_independence(rng):
    for _ in range(10):
        p = random_e0_params(rng)
        ref = e0_from_params(E0Params(p.a, p.b, p.c, 0.0))
        c_ref, s_ref = concurrence(ref), linear_entropy(ref)
        for theta in np.linspace(0, 2 * math.pi, 32, endpoint=False):
            rho = e0_from_params(E0Params(p.a, p.b, p.c, theta))
            assert abs(concurrence(rho) - c_ref) < 1e-12
            assert abs(linear_entropy(rho) - s_ref) < 1e-12


def test_report_invariants(rng):
    reports = [measure_report(random_density(rng, 1 + k % 4)) for k in range(200)]
    reports.append(measure_report(np.diag([0.4, 0.3, 0.2, 0.1])))
    for rep in reports:
        assert 0.0 <= rep.linear_entropy <= 1.0 + 1e-12
        assert 0.25 - 1e-12 <= rep.purity <= 1.0 + 1e-12
        assert rep.linear_entropy == 4.0 / 3.0 * (1.0 - rep.purity)
        assert (rep.concurrence == 0.0) == (abs(rep.eof) < 1e-12)
    ordered = sorted(reports, key=lambda r: r.purity)
    assert all(a.linear_entropy >= b.linear_entropy for a, b in pairwise(ordered))
    assert purity(maximally_mixed()) == pytest.approx(0.25)
