"""Two-qubit density matrices, the X-shaped class E0 and its (a, b, c, theta) parametrization.

Basis ordering is |00>, |01>, |10>, |11>, so the coherent block of an E0
state sits in rows/columns 1 and 2 (0-based)::

    [[0, 0,                0,               0        ],
     [0, a,                c/2 e^{i theta}, 0        ],
     [0, c/2 e^{-i theta}, b,               0        ],
     [0, 0,                0,               1 - a - b]]
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import matrix_core
from .errors import NotHermitian, NotPSD, OutOfRange, PositivityViolation, TraceNotOne

TRACE_TOL = 1e-12
CONSTRAINT_TOL = 1e-12

SIGMA_0 = np.eye(2, dtype=np.complex128)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
PAULIS = (SIGMA_X, SIGMA_Y, SIGMA_Z)


def _frozen(array):
    out = np.array(array, dtype=np.complex128)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class DensityMatrix:
    """A validated two-qubit state. Build it with :func:`validate_density`."""

    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "matrix", _frozen(self.matrix))

    def __array__(self, dtype=None, copy=None):
        return np.array(self.matrix, dtype=dtype)

    def __repr__(self):
        return f"DensityMatrix(\n{np.array2string(self.matrix, precision=6)})"


@dataclass(frozen=True)
class E0Params:
    """Coordinates (a, b, c, theta) of an E0 state; ``c`` is its concurrence."""

    a: float
    b: float
    c: float
    theta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta) % (2 * math.pi))
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @property
    def rho44(self) -> float:
        return 1.0 - self.a - self.b

    def check(self):
        """Raise :class:`PositivityViolation` unless ``ab >= c^2/4`` and ``a + b <= 1``."""
        a, b, c = self.a, self.b, self.c
        if not 0.0 <= c <= 1.0:
            raise PositivityViolation(f"concurrence c={c} outside [0, 1]")
        if a < -CONSTRAINT_TOL or b < -CONSTRAINT_TOL:
            raise PositivityViolation(f"negative population (a={a}, b={b})")
        if a * b < c * c / 4 - CONSTRAINT_TOL:
            raise PositivityViolation(f"ab = {a * b:.6g} < c^2/4 = {c * c / 4:.6g}")
        if a + b > 1 + CONSTRAINT_TOL:
            raise PositivityViolation(f"a + b = {a + b:.6g} > 1")
        return self


@dataclass(frozen=True)
class BlochDecomposition:
    """Local Bloch vectors ``r``, ``s`` and correlation matrix ``T`` of a two-qubit state."""

    r: np.ndarray
    s: np.ndarray
    T: np.ndarray

    def to_matrix(self):
        """Rebuild ``(I + r.sigma x I + I x s.sigma + sum T_nm sigma_n x sigma_m) / 4``."""
        rho = np.kron(SIGMA_0, SIGMA_0).astype(np.complex128)
        for j, sigma in enumerate(PAULIS):
            rho = rho + self.r[j] * np.kron(sigma, SIGMA_0) + self.s[j] * np.kron(SIGMA_0, sigma)
            for m, tau in enumerate(PAULIS):
                rho = rho + self.T[j, m] * np.kron(sigma, tau)
        return rho / 4


def as_matrix(rho) -> np.ndarray:
    if isinstance(rho, DensityMatrix):
        return rho.matrix
    if isinstance(rho, E0Params):
        return e0_matrix(rho)
    return np.asarray(rho, dtype=np.complex128)


def validate_density(m) -> DensityMatrix:
    """Check that ``m`` is a two-qubit density matrix and wrap it.

    Every failed invariant is collected; the first one is raised and the full
    list is available as its ``failures`` attribute.

    Raises
    ------
    NotHermitian, TraceNotOne, NotPSD
    """
    m = np.asarray(m, dtype=np.complex128)
    if m.shape != (4, 4):
        raise ValueError(f"two-qubit state must be 4x4, got shape {m.shape}")
    failures = []
    deviation = matrix_core.hermiticity_deviation(m)
    if deviation > matrix_core.HERMITIAN_TOL:
        failures.append(NotHermitian(deviation))
    trace_dev = abs(np.trace(m) - 1.0)
    if trace_dev > TRACE_TOL:
        failures.append(TraceNotOne(trace_dev))
    if deviation <= matrix_core.HERMITIAN_TOL:
        smallest = matrix_core.eigvalsh(m)[0]
        if smallest < matrix_core.PSD_FLOOR:
            failures.append(NotPSD(smallest))
    else:
        # spectrum of the Hermitian part still tells us about positivity
        smallest = matrix_core.eigvalsh(0.5 * (m + m.conj().T))[0]
        if smallest < matrix_core.PSD_FLOOR:
            failures.append(NotPSD(smallest))
    if failures:
        err = failures[0]
        err.failures = failures
        raise err
    return DensityMatrix(m)


def e0_matrix(p: E0Params) -> np.ndarray:
    rho = np.zeros((4, 4), dtype=np.complex128)
    coherence = 0.5 * p.c * complex(math.cos(p.theta), math.sin(p.theta))
    rho[1, 1] = p.a
    rho[2, 2] = p.b
    rho[3, 3] = p.rho44
    rho[1, 2] = coherence
    rho[2, 1] = coherence.conjugate()
    return rho


def e0_from_params(p: E0Params) -> DensityMatrix:
    """Density matrix of the E0 state with ``rho22=a, rho33=b, rho23=(c/2)e^{i theta}``.

    Raises
    ------
    PositivityViolation
        If ``ab < c^2/4`` or ``a + b > 1`` beyond rounding tolerance.
    """
    p.check()
    return validate_density(e0_matrix(p))


def e0_params_of(rho) -> E0Params:
    """Read (a, b, c, theta) back from a matrix with E0 block structure."""
    m = as_matrix(rho)
    mask = np.ones((4, 4), dtype=bool)
    mask[1:3, 1:3] = False
    mask[3, 3] = False
    if np.max(np.abs(m[mask])) > 1e-12:
        raise ValueError("matrix is not of the E0 block form")
    r23 = m[1, 2]
    return E0Params(m[1, 1].real, m[2, 2].real, 2 * abs(r23), math.atan2(r23.imag, r23.real))


def mems_state(c: float) -> E0Params:
    """E0 state of maximal linear entropy at concurrence ``c``.

    ``a = b = 1/3`` below ``c = 2/3`` and ``a = b = c/2`` from there on.
    """
    if not 0.0 < c < 1.0:
        raise OutOfRange(f"mems_state needs 0 < c < 1, got {c}")
    if c < 2.0 / 3.0:
        return E0Params(1.0 / 3.0, 1.0 / 3.0, c, 0.0)
    return E0Params(c / 2, c / 2, c, 0.0)


def correlation_matrix(rho) -> np.ndarray:
    """``T[n, m] = tr(rho sigma_n x sigma_m)`` as a real 3x3 array."""
    m = as_matrix(rho)
    t = np.empty((3, 3))
    for n, sigma in enumerate(PAULIS):
        for k, tau in enumerate(PAULIS):
            t[n, k] = np.trace(m @ np.kron(sigma, tau)).real
    return t


def bloch_decompose(rho) -> BlochDecomposition:
    m = as_matrix(rho)
    r = np.array([np.trace(m @ np.kron(sigma, SIGMA_0)).real for sigma in PAULIS])
    s = np.array([np.trace(m @ np.kron(SIGMA_0, sigma)).real for sigma in PAULIS])
    return BlochDecomposition(r, s, correlation_matrix(m))


def pure_state(psi) -> DensityMatrix:
    psi = np.asarray(psi, dtype=np.complex128)
    psi = psi / np.linalg.norm(psi)
    return validate_density(np.outer(psi, psi.conj()))


def bell_phi_plus() -> DensityMatrix:
    return pure_state([1, 0, 0, 1])


def maximally_mixed() -> DensityMatrix:
    return validate_density(np.eye(4) / 4)


def random_density(rng, rank=None) -> DensityMatrix:
    """Random state from a Ginibre ensemble; ``rank`` defaults to full rank."""
    rank = 4 if rank is None else rank
    g = rng.normal(size=(4, rank)) + 1j * rng.normal(size=(4, rank))
    m = g @ g.conj().T
    return validate_density(m / np.trace(m).real)


def random_e0_params(rng, c_range=(0.0, 1.0)) -> E0Params:
    """Random valid E0 parameters with concurrence drawn uniformly from ``c_range``."""
    lo, hi = c_range
    while True:
        c = rng.uniform(lo, hi)
        a, b = rng.uniform(0, 1, size=2)
        if a + b <= 1 and a * b >= c * c / 4:
            return E0Params(a, b, c, rng.uniform(0, 2 * math.pi))


# -- JSON state files --------------------------------------------------------


def state_to_json(rho) -> dict:
    """Serialise a state; E0 states carry both the ``rho`` and ``e0`` forms."""
    if isinstance(rho, E0Params):
        m = e0_matrix(rho)
        e0 = {"a": rho.a, "b": rho.b, "c": rho.c, "theta": rho.theta}
        return {"rho": [[[z.real, z.imag] for z in row] for row in m], "e0": e0}
    m = as_matrix(rho)
    return {"rho": [[[z.real, z.imag] for z in row] for row in m]}


def state_from_json(payload: dict) -> DensityMatrix:
    """Parse ``{"rho": 4x4 [re, im] pairs}`` or ``{"e0": {a, b, c, theta}}``.

    The ``e0`` form wins when both are present. Malformed payloads raise
    ``ValueError``/``KeyError``/``TypeError``; well-formed but invalid states
    raise the validation errors of :func:`validate_density`.
    """
    if not isinstance(payload, dict):
        raise TypeError("state file must contain a JSON object")
    if "e0" in payload:
        e0 = payload["e0"]
        p = E0Params(float(e0["a"]), float(e0["b"]), float(e0["c"]), float(e0.get("theta", 0.0)))
        return e0_from_params(p)
    if "rho" in payload:
        rows = payload["rho"]
        if len(rows) != 4 or any(len(row) != 4 for row in rows):
            raise ValueError("'rho' must be a 4x4 array of [re, im] pairs")
        m = np.array([[complex(float(z[0]), float(z[1])) for z in row] for row in rows])
        return validate_density(m)
    raise KeyError("state file needs an 'rho' or 'e0' entry")


def load_state(path) -> DensityMatrix:
    with open(path, encoding="utf-8") as fh:
        return state_from_json(json.load(fh))


def save_state(path, rho) -> None:
    Path(path).write_text(json.dumps(state_to_json(rho), indent=2) + "\n", encoding="utf-8")
