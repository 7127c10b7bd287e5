"""Horodecki criterion for CHSH violation and a numerical Bell-operator maximizer.

``m(rho)`` is the sum of the two largest eigenvalues of ``T^T T`` where ``T`` is
the correlation matrix; the largest CHSH value reachable with projective
spin measurements is ``2 sqrt(m)`` and the inequality can be violated iff
``m > 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotUnit
from .matrix_core import eigvalsh
from .states import PAULIS, E0Params, as_matrix, correlation_matrix

UNIT_TOL = 1e-9


@dataclass(frozen=True)
class BellOperator:
    """Measurement directions ``a, a'`` (first qubit) and ``b, b'`` (second qubit)."""

    a: np.ndarray
    a_prime: np.ndarray
    b: np.ndarray
    b_prime: np.ndarray

    def __post_init__(self):
        for name in ("a", "a_prime", "b", "b_prime"):
            vec = np.asarray(getattr(self, name), dtype=float)
            if vec.shape != (3,):
                raise ValueError(f"{name} must be a 3-vector")
            if abs(np.linalg.norm(vec) - 1.0) > UNIT_TOL:
                raise NotUnit(f"{name} has norm {np.linalg.norm(vec):.12g}, expected 1")
            object.__setattr__(self, name, vec)


@dataclass(frozen=True)
class ChshReport:
    m: float
    n: float
    max_chsh: float
    violates: bool


def _spin(direction):
    return sum(x * sigma for x, sigma in zip(direction, PAULIS))


def bell_operator_matrix(op: BellOperator) -> np.ndarray:
    """``a.sigma x (b + b').sigma + a'.sigma x (b - b').sigma``."""
    return np.kron(_spin(op.a), _spin(op.b + op.b_prime)) + np.kron(
        _spin(op.a_prime), _spin(op.b - op.b_prime)
    )


def chsh_expectation(rho, op: BellOperator) -> float:
    return float(np.trace(as_matrix(rho) @ bell_operator_matrix(op)).real)


def horodecki_m(rho) -> float:
    """Sum of the two largest eigenvalues of ``U = T^T T``."""
    t = correlation_matrix(rho)
    u = eigvalsh(t.T @ t)
    return float(u[1] + u[2])


def horodecki_m_e0(p: E0Params) -> float:
    """``max(2 c^2, (1 - 2 rho44)^2 + c^2)`` for an E0 state."""
    c2 = p.c * p.c
    return max(2.0 * c2, (1.0 - 2.0 * p.rho44) ** 2 + c2)


def chsh_report(rho=None, *, m=None) -> ChshReport:
    if m is None:
        m = horodecki_m(rho)
    return ChshReport(m=m, n=max(0.0, m - 1.0), max_chsh=2.0 * math.sqrt(max(m, 0.0)), violates=m > 1.0)


def _normalized(vec, fallback):
    norm = np.linalg.norm(vec)
    return vec / norm if norm > 1e-300 else fallback


def _random_unit(rng):
    # uniform on the sphere via cos(polar) ~ U(-1, 1), azimuth ~ U(0, 2 pi)
    z = rng.uniform(-1.0, 1.0)
    phi = rng.uniform(0.0, 2.0 * math.pi)
    rho = math.sqrt(1.0 - z * z)
    return np.array([rho * math.cos(phi), rho * math.sin(phi), z])


def _ascend(t, a, a_prime, max_iter=2000, tol=1e-15):
    # Alternating exact maximization: for fixed a, a' the best b, b' are
    # the normalized T^T(a + a'), T^T(a - a'); symmetrically for a, a'.
    value = -math.inf
    b = b_prime = None
    for _ in range(max_iter):
        b = _normalized(t.T @ (a + a_prime), a if b is None else b)
        b_prime = _normalized(t.T @ (a - a_prime), a_prime if b_prime is None else b_prime)
        a = _normalized(t @ (b + b_prime), a)
        a_prime = _normalized(t @ (b - b_prime), a_prime)
        new = a @ t @ (b + b_prime) + a_prime @ t @ (b - b_prime)
        if new - value <= tol:
            value = max(value, new)
            break
        value = new
    return value, (a, a_prime, b, b_prime)


def optimize_chsh(rho, restarts: int = 50, seed: int = 0):
    """Numerically maximize ``tr(rho B)`` over CHSH settings.

    Block coordinate ascent from ``restarts`` random starting directions. The
    result never exceeds the exact maximum ``2 sqrt(m(rho))`` since every
    candidate is an admissible setting.

    Returns
    -------
    value : float
        ``tr(rho B)`` of the best setting found.
    op : BellOperator
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    m = as_matrix(rho)
    t = correlation_matrix(m)
    rng = np.random.default_rng(seed)
    best_value, best = -math.inf, None
    for _ in range(restarts):
        value, vectors = _ascend(t, _random_unit(rng), _random_unit(rng))
        if value > best_value:
            best_value, best = value, vectors
    op = BellOperator(*best)
    return chsh_expectation(m, op), op
