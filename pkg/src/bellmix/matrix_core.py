"""Small dense complex matrices: Jacobi eigensolver, PSD square root, kron, partial trace.

Everything here works on numpy arrays of dimension at most 4. The eigensolver
is a cyclic complex Jacobi iteration so that the spectral results do not
depend on a LAPACK build.
"""

from __future__ import annotations

import numpy as np

from .errors import NoConvergence, NotHermitian, NotPSD

HERMITIAN_TOL = 1e-12
PSD_FLOOR = -1e-10
OFF_DIAGONAL_TOL = 1e-14
MAX_SWEEPS = 100


def _square(matrix, max_dim=4):
    m = np.asarray(matrix, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not 1 <= m.shape[0] <= max_dim:
        raise ValueError(f"matrix dimension must be between 1 and {max_dim}, got {m.shape[0]}")
    return m


def hermiticity_deviation(matrix) -> float:
    """Largest entrywise ``|H[i, j] - conj(H[j, i])|``."""
    m = np.asarray(matrix, dtype=np.complex128)
    return float(np.max(np.abs(m - m.conj().T))) if m.size else 0.0


def _order_key(value, vector):
    nonzero = np.flatnonzero(np.abs(vector) > 1e-12)
    first = int(nonzero[0]) if nonzero.size else len(vector)
    return (value, first)


def hermitian_eigensystem(h, *, tol=HERMITIAN_TOL, max_sweeps=MAX_SWEEPS):
    """Eigen-decomposition of a Hermitian matrix with cyclic complex Jacobi rotations.

    Parameters
    ----------
    h : array_like
        Hermitian matrix of dimension at most 4.
    tol : float
        Hermiticity tolerance on ``max |H - H^dag|``.
    max_sweeps : int
        Number of full cyclic sweeps allowed before giving up.

    Returns
    -------
    eigenvalues : ndarray of float
        Sorted ascending.
    eigenvectors : ndarray of complex
        Orthonormal columns; ``h @ eigenvectors[:, k] = eigenvalues[k] * eigenvectors[:, k]``.
        Each column is phased so that its first non-negligible entry is real positive.

    Raises
    ------
    NotHermitian
        If ``h`` deviates from Hermitian by more than ``tol``.
    NoConvergence
        If the off-diagonal mass has not vanished after ``max_sweeps`` sweeps.
    """
    a = _square(h)
    deviation = hermiticity_deviation(a)
    if deviation > tol:
        raise NotHermitian(deviation)
    n = a.shape[0]
    # plain Python complex lists: much faster than numpy indexing at this size
    a = (0.5 * (a + a.conj().T)).tolist()
    v = [[1.0 + 0j if i == j else 0j for j in range(n)] for i in range(n)]
    scale = sum(abs(x) ** 2 for row in a for x in row) ** 0.5
    threshold = OFF_DIAGONAL_TOL * max(scale, 1e-300)
    pairs = [(p, q) for p in range(n - 1) for q in range(p + 1, n)]

    for sweep in range(max_sweeps + 1):
        off = 2.0 * sum(abs(a[p][q]) ** 2 for p, q in pairs)
        if off**0.5 <= threshold:
            break
        if sweep == max_sweeps:
            raise NoConvergence(f"Jacobi iteration did not converge in {max_sweeps} sweeps")
        for p, q in pairs:
            apq = a[p][q]
            mag = abs(apq)
            if mag <= 1e-300:
                continue
            phase = apq / mag
            theta = (a[q][q].real - a[p][p].real) / (2.0 * mag)
            if abs(theta) > 1e150:
                t = 0.5 / theta
            else:
                t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + (theta * theta + 1.0) ** 0.5)
            c = 1.0 / (t * t + 1.0) ** 0.5
            s = t * c
            # G = diag(1, conj(phase)) @ [[c, s], [-s, c]]; A <- G^dag A G, V <- V G
            g10 = -s * phase.conjugate()
            g11 = c * phase.conjugate()
            for row in a:
                xp, xq = row[p], row[q]
                row[p] = xp * c + xq * g10
                row[q] = xp * s + xq * g11
            rp, rq = a[p], a[q]
            cg10, cg11 = g10.conjugate(), g11.conjugate()
            for k in range(n):
                xp, xq = rp[k], rq[k]
                rp[k] = c * xp + cg10 * xq
                rq[k] = s * xp + cg11 * xq
            rp[q] = rq[p] = 0j
            rp[p] = complex(rp[p].real)
            rq[q] = complex(rq[q].real)
            for row in v:
                xp, xq = row[p], row[q]
                row[p] = xp * c + xq * g10
                row[q] = xp * s + xq * g11

    values = np.array([a[k][k].real for k in range(n)])
    v = np.array(v, dtype=np.complex128)
    for k in range(n):
        col = v[:, k]
        idx = np.flatnonzero(np.abs(col) > 1e-12)
        if idx.size:
            lead = col[idx[0]]
            v[:, k] = col * (abs(lead) / lead)
    order = sorted(range(n), key=lambda k: _order_key(values[k], v[:, k]))
    return values[order], v[:, order]


def eigvalsh(h):
    """Ascending eigenvalues of a Hermitian matrix."""
    return hermitian_eigensystem(h)[0]


def matrix_sqrt_psd(m):
    """Principal square root of a positive semidefinite Hermitian matrix.

    Eigenvalues in ``[PSD_FLOOR, 0)`` are treated as rounding noise and set to zero.

    Raises
    ------
    NotPSD
        If an eigenvalue is below ``PSD_FLOOR``.
    """
    values, vectors = hermitian_eigensystem(m)
    if values[0] < PSD_FLOOR:
        raise NotPSD(values[0])
    roots = np.sqrt(np.clip(values, 0.0, None))
    s = (vectors * roots) @ vectors.conj().T
    return 0.5 * (s + s.conj().T)


def kron(a, b):
    """Tensor product of two 2x2 matrices, ``out[2i+k, 2j+l] = a[i, j] * b[k, l]``."""
    a = np.asarray(a, dtype=np.complex128)
    b = np.asarray(b, dtype=np.complex128)
    if a.shape != (2, 2) or b.shape != (2, 2):
        raise ValueError("kron expects two 2x2 matrices")
    return np.kron(a, b)


def partial_trace_A(rho):
    """Trace out the first qubit of a 4x4 operator, returning the 2x2 reduced operator of the second."""
    r = np.asarray(rho, dtype=np.complex128)
    if r.shape != (4, 4):
        raise ValueError("partial_trace_A expects a 4x4 matrix")
    return np.einsum("ikil->kl", r.reshape(2, 2, 2, 2))
