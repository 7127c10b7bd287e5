"""Concurrence, entanglement of formation and normalized linear entropy."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .matrix_core import eigvalsh, matrix_sqrt_psd
from .states import SIGMA_Y, E0Params, as_matrix

_YY = np.kron(SIGMA_Y, SIGMA_Y)


@dataclass(frozen=True)
class MeasureReport:
    concurrence: float
    eof: float
    linear_entropy: float
    purity: float


def spin_flip(rho) -> np.ndarray:
    """``(sigma_y x sigma_y) conj(rho) (sigma_y x sigma_y)``."""
    m = as_matrix(rho)
    return _YY @ m.conj() @ _YY


def concurrence(rho) -> float:
    """Wootters concurrence ``max(0, 2 p_max - tr R)`` with ``R = (sqrt(rho) rho~ sqrt(rho))^{1/2}``."""
    m = as_matrix(rho)
    root = matrix_sqrt_psd(m)
    inner = root @ spin_flip(m) @ root
    r_hat = matrix_sqrt_psd(0.5 * (inner + inner.conj().T))
    lam = eigvalsh(r_hat)
    return float(min(1.0, max(0.0, 2.0 * lam[-1] - lam.sum())))


def concurrence_e0(p: E0Params) -> float:
    """Closed form ``2 |rho23|``, which is the stored ``c``."""
    return p.c


def binary_entropy(x: float) -> float:
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * math.log2(x) - (1 - x) * math.log2(1 - x)


def eof_from_concurrence(c: float) -> float:
    c = min(1.0, max(0.0, float(c)))
    return binary_entropy(0.5 * (1.0 + math.sqrt(1.0 - c * c)))


def entanglement_of_formation(rho) -> float:
    """Entanglement of formation in ebits, via the two-qubit closed function of the concurrence."""
    return eof_from_concurrence(concurrence(rho))


def purity(rho) -> float:
    """``tr rho^2``, clipped to ``[1/4, 1]`` to absorb rounding."""
    m = as_matrix(rho)
    return min(1.0, max(0.25, float(np.vdot(m, m).real)))


def linear_entropy(rho) -> float:
    """``(4/3)(1 - tr rho^2)``: 0 for pure states, 1 for the maximally mixed state."""
    return 4.0 / 3.0 * (1.0 - purity(rho))


def linear_entropy_e0(p: E0Params) -> float:
    """``(8/3)(rho22 rho33 + rho22 rho44 + rho33 rho44 - |rho23|^2)``."""
    a, b, d = p.a, p.b, p.rho44
    return 8.0 / 3.0 * (a * b + a * d + b * d - p.c * p.c / 4)


def measure_report(rho) -> MeasureReport:
    c = concurrence(rho)
    pur = purity(rho)
    return MeasureReport(
        concurrence=c,
        eof=eof_from_concurrence(c),
        linear_entropy=4.0 / 3.0 * (1.0 - pur),
        purity=pur,
    )
