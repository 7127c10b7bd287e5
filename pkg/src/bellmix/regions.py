"""The (linear entropy, concurrence) plane of E0 states and its three CHSH regions.

For fixed concurrence ``c`` and linear entropy ``s`` the E0 states form an
ellipse in the coordinates

    x = (a - b) / sqrt(2),   y = (a + b - 2/3) / sqrt(2)

with semi-axes ``A = sqrt(6 D)``, ``B = sqrt(2 D)`` and
``D = 1/9 - c^2/12 - s/8``. Writing ``x = A cos(phi)``, ``y = B sin(phi)``
every constraint that matters is a bound on ``sin(phi)``:

* ``ab >= c^2/4``   <=>  ``sin(phi) >= (sqrt(1 - 3s/2)/4 - 1/12) / sqrt(D)``
  or ``sin(phi) <= (-sqrt(1 - 3s/2)/4 - 1/12) / sqrt(D)`` (a second arc near
  ``3 pi / 2`` that exists only for ``s >= 8 c (1 - c) / 3``)
* ``rho44 >= 0``    <=>  ``sin(phi) <= 1 / (6 sqrt(D))``
* ``m(rho) > 1``    <=>  ``sin(phi) > (sqrt(1 - c^2)/4 - 1/12) / sqrt(D)``  (for c <= 1/sqrt(2))

so admissible angles and the violating/non-violating split are unions of
arcs of the circle, computed by :func:`_sin_band`.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .chsh import horodecki_m_e0
from .errors import DegenerateEllipse, NotLambda2, OutOfRange, PhiOutsideAdmissible
from .states import CONSTRAINT_TOL, E0Params

SNAP = 1e-12
C_CRIT = 1.0 / math.sqrt(2.0)
TWO_PI = 2.0 * math.pi


class Region(str, enum.Enum):
    LAMBDA1 = "Lambda1"
    LAMBDA2 = "Lambda2"
    LAMBDA3 = "Lambda3"
    OUTSIDE = "OutsideLambda"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class RegionPoint:
    s: float
    c: float


@dataclass(frozen=True)
class Interval:
    """Arc ``[lo, hi]`` of angles in ``(0, 2 pi]``; endpoint closedness is explicit."""

    lo: float
    hi: float
    closed_lo: bool = True
    closed_hi: bool = True

    @property
    def length(self) -> float:
        return self.hi - self.lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lo + self.hi)

    def __contains__(self, phi) -> bool:
        lo_ok = phi >= self.lo if self.closed_lo else phi > self.lo
        hi_ok = phi <= self.hi if self.closed_hi else phi < self.hi
        return lo_ok and hi_ok

    def __str__(self):
        left = "[" if self.closed_lo else "("
        right = "]" if self.closed_hi else ")"
        return f"{left}{self.lo:.6f}, {self.hi:.6f}{right}"


@dataclass(frozen=True)
class EllipseGeometry:
    A: float
    B: float
    D: float
    y_plus: float


@dataclass(frozen=True)
class PhiFamily:
    point: RegionPoint
    theta: float
    geometry: EllipseGeometry
    i_plus: list
    phi1: float | None
    phi2: float | None
    phi3: float | None
    violating: list
    non_violating: list


def _point(p) -> RegionPoint:
    if isinstance(p, RegionPoint):
        return p
    s, c = p
    return RegionPoint(float(s), float(c))


def _check_c(c, upper=1.0):
    if not 0.0 < c <= upper + SNAP:
        raise OutOfRange(f"concurrence must lie in (0, {upper:.6g}], got {c}")


# -- boundary curves ---------------------------------------------------------


def s_max(c: float) -> float:
    """Largest linear entropy of an E0 state with concurrence ``c``."""
    _check_c(c)
    if c < 2.0 / 3.0:
        return 8.0 / 9.0 - 2.0 / 3.0 * c * c
    return 8.0 / 3.0 * c * (1.0 - c)


def s1(c: float) -> float:
    """Lower boundary of Lambda2, ``2 c^2 / 3``."""
    _check_c(c, C_CRIT)
    return 2.0 / 3.0 * c * c


def s2(c: float) -> float:
    """Lower boundary of Lambda3, ``(2 - c^2 + 2 sqrt(1 - c^2)) / 6``."""
    _check_c(c, C_CRIT)
    return (2.0 - c * c + 2.0 * math.sqrt(max(0.0, 1.0 - c * c))) / 6.0


def classify(p) -> Region:
    """Region of the point ``(s, c)``.

    Lambda2 is closed at ``S1`` and Lambda3 is closed at ``S2``; points within
    ``SNAP`` of a boundary are treated as lying on it.
    """
    p = _point(p)
    s, c = p.s, p.c
    if not 0.0 < c <= 1.0:
        raise OutOfRange(f"concurrence must lie in (0, 1], got {c}")
    if s < -SNAP:
        raise OutOfRange(f"linear entropy must be non-negative, got {s}")
    if s > s_max(c) + SNAP:
        return Region.OUTSIDE
    if c > C_CRIT + SNAP:
        return Region.LAMBDA1
    c = min(c, C_CRIT)
    if s < s1(c) - SNAP:
        return Region.LAMBDA1
    if s < s2(c) - SNAP:
        return Region.LAMBDA2
    return Region.LAMBDA3


# -- ellipse coordinates -----------------------------------------------------


def to_xy(a, b):
    return (a - b) / math.sqrt(2.0), (a + b - 2.0 / 3.0) / math.sqrt(2.0)


def from_xy(x, y):
    r2 = math.sqrt(2.0)
    total = r2 * y + 2.0 / 3.0
    diff = r2 * x
    return 0.5 * (total + diff), 0.5 * (total - diff)


def linear_entropy_xy(x, y, c):
    """Linear entropy of the E0 state at ``(x, y)`` with concurrence ``c``."""
    return -8.0 / 3.0 * (x * x / 2 + 3 * y * y / 2 + c * c / 4 - 1.0 / 3.0)


def hyperbola_lhs(x, y, c):
    """``y^2/2 + sqrt(2) y/3 - x^2/2 - c^2/4 + 1/9``; non-negative iff ``ab >= c^2/4``."""
    return y * y / 2 + math.sqrt(2.0) * y / 3 - x * x / 2 - c * c / 4 + 1.0 / 9.0


def y_threshold(c):
    """Ordinate above which an E0 state with concurrence ``c <= 1/sqrt(2)`` violates CHSH."""
    return (-1.0 + 3.0 * math.sqrt(max(0.0, 1.0 - c * c))) / (6.0 * math.sqrt(2.0))


def ellipse_geometry(p) -> EllipseGeometry:
    """Semi-axes and scale of the level set ``S_L = s`` at concurrence ``c``.

    Raises
    ------
    DegenerateEllipse
        If ``D < -1e-12`` (the point lies above ``S_max``).
    """
    p = _point(p)
    _check_c(p.c)
    d = 1.0 / 9.0 - p.c * p.c / 12.0 - p.s / 8.0
    if d < -SNAP:
        raise DegenerateEllipse(f"D = {d:.3e} < 0: (s={p.s}, c={p.c}) lies outside the admissible set")
    d = max(d, 0.0)
    return EllipseGeometry(A=math.sqrt(6.0 * d), B=math.sqrt(2.0 * d), D=d, y_plus=y_threshold(p.c))


# -- angle bounds ------------------------------------------------------------


def _sin_tol(d: float) -> float:
    # bounds are (numerator) / sqrt(D): allow SNAP on the numerator
    return SNAP / math.sqrt(d) if d > 0.0 else SNAP


def _sin_bounds(p: RegionPoint, d: float):
    """Bounds on sin(phi).

    Returns ``(lower, lower_alt, upper, thr)``: ``ab >= c^2/4`` holds for
    ``sin(phi) >= lower`` and also for ``sin(phi) <= lower_alt`` (``None``
    when that second arc does not exist); ``rho44 >= 0`` needs
    ``sin(phi) <= upper``; the state violates CHSH iff ``sin(phi) > thr``.
    """
    disc = 1.0 - 1.5 * p.s
    if d == 0.0:
        # point ellipse: every phi gives the same state a = b = 1/3
        lower, lower_alt, upper = -math.inf, None, math.inf
        thr = math.inf if y_threshold(p.c) >= 0.0 else -math.inf
    else:
        root_d = math.sqrt(d)
        if disc < 0:
            lower, lower_alt = -math.inf, None
        else:
            w = math.sqrt(disc)
            lower = (0.25 * w - 1.0 / 12.0) / root_d
            lower_alt = (-0.25 * w - 1.0 / 12.0) / root_d
            if lower_alt < -1.0 - _sin_tol(d):
                lower_alt = None
        upper = 1.0 / (6.0 * root_d)
        thr = (0.25 * math.sqrt(max(0.0, 1.0 - p.c * p.c)) - 1.0 / 12.0) / root_d
    if p.c > C_CRIT + SNAP:
        # 2 c^2 > 1: every state violates
        thr = -math.inf
    return lower, lower_alt, upper, thr


def _feasible_ranges(p: RegionPoint, d: float):
    lower, lower_alt, upper, thr = _sin_bounds(p, d)
    ranges = [(lower, upper)]
    if lower_alt is not None:
        ranges.append((-math.inf, min(lower_alt, upper)))
    return ranges, thr, _sin_tol(d)


def _asin(u, tol=SNAP):
    if u is None or not -1.0 - tol <= u <= 1.0 + tol:
        return None
    return math.asin(min(1.0, max(-1.0, u)))


def phi_angles(p):
    """``(phi1, phi2, phi3)``; an angle is ``None`` when its arcsin argument is outside [-1, 1]."""
    p = _point(p)
    geom = ellipse_geometry(p)
    if geom.D == 0.0:
        return None, None, None
    lower, _, upper, thr = _sin_bounds(p, geom.D)
    tol = _sin_tol(geom.D)
    phi1 = _asin(lower, tol) if math.isfinite(lower) else None
    phi3 = _asin(thr, tol) if math.isfinite(thr) else None
    return phi1, _asin(upper, tol), phi3


def _sin_band(lo, hi, closed_lo=True, closed_hi=True, tol=SNAP):
    """Arcs of ``(0, 2 pi]`` on which ``lo <= sin(phi) <= hi`` (with the given strictness).

    Closed bounds that miss each other, or miss ``[-1, 1]``, by at most ``tol``
    are treated as touching.
    """
    if lo > 1.0 + tol or hi < -1.0 - tol:
        return []
    if closed_lo and closed_hi and hi < lo <= hi + tol:
        # bounds crossed by rounding: the band is the single touching point
        lo = hi = 0.5 * (lo + hi)
    if lo > hi or (lo == hi and not (closed_lo and closed_hi)):
        return []
    a = None if lo <= -1.0 else math.asin(min(1.0, lo))
    b = None if hi >= 1.0 else math.asin(max(-1.0, hi))
    if a is None and b is None:
        return [Interval(0.0, TWO_PI, closed_lo=False)]

    if b is None:
        arcs = [(a, math.pi - a, closed_lo, closed_lo)]
    elif a is None:
        arcs = [(math.pi - b, TWO_PI + b, closed_hi, closed_hi)]
    else:
        arcs = [(a, b, closed_lo, closed_hi), (math.pi - b, math.pi - a, closed_hi, closed_lo)]

    out = []
    for lo_, hi_, clo, chi in arcs:
        if lo_ < 0.0 < hi_:
            out.append(Interval(0.0, hi_, False, chi))
            out.append(Interval(TWO_PI + lo_, TWO_PI, clo, True))
        elif hi_ <= 0.0:
            out.append(Interval(TWO_PI + lo_, TWO_PI + hi_, clo, chi))
        elif lo_ > TWO_PI:
            out.append(Interval(lo_ - TWO_PI, hi_ - TWO_PI, clo, chi))
        elif hi_ > TWO_PI:
            out.append(Interval(lo_, TWO_PI, clo, True))
            out.append(Interval(0.0, hi_ - TWO_PI, False, chi))
        else:
            out.append(Interval(lo_, hi_, clo, chi))
    return _merge(sorted(out, key=_sort_key))


def _sort_key(iv):
    return (iv.lo, iv.hi)


def _merge(intervals):
    merged = []
    for iv in intervals:
        if merged and iv.lo <= merged[-1].hi and (iv.closed_lo or merged[-1].closed_hi or iv.lo < merged[-1].hi):
            last = merged.pop()
            if iv.hi > last.hi or (iv.hi == last.hi and iv.closed_hi):
                last = Interval(last.lo, iv.hi, last.closed_lo, iv.closed_hi)
            merged.append(last)
        else:
            merged.append(iv)
    return merged


def admissible_interval(p) -> list:
    """Angles ``phi`` for which the ellipse point is a valid E0 state.

    Returns a sorted list of :class:`Interval` inside ``(0, 2 pi]``; empty when
    the point lies outside the admissible set.
    """
    p = _point(p)
    if classify(p) is Region.OUTSIDE:
        return []
    ranges, _, tol = _feasible_ranges(p, ellipse_geometry(p).D)
    return _merge(sorted((iv for lo, hi in ranges for iv in _sin_band(lo, hi, tol=tol)), key=_sort_key))


def admissible_case(p) -> str:
    """Shape of the arc of ``I+`` around pi/2.

    ``'a'``: two arcs ``[phi1, phi2]`` and ``[pi - phi2, pi - phi1]``; ``'b'``:
    the single arc ``[phi1, pi - phi1]``; ``'c'``: the whole circle. For small
    ``c`` and ``8c(1-c)/3 <= s <= 2/3`` there is in addition a non-violating
    arc around ``3 pi / 2`` (large ``rho44``), which :func:`admissible_interval`
    includes and which this label does not describe.
    """
    p = _point(p)
    geom = ellipse_geometry(p)
    lower, _, upper, _ = _sin_bounds(p, geom.D)
    if upper >= 1.0 - SNAP:
        return "c" if lower <= -1.0 + SNAP else "b"
    return "a"


def violating_split(p):
    """Split ``I+`` into angles giving CHSH-violating and non-violating states.

    Returns
    -------
    violating, non_violating : list of Interval
        States with ``m > 1`` and ``m <= 1`` respectively.
    """
    p = _point(p)
    if classify(p) is Region.OUTSIDE:
        return [], []
    ranges, thr, tol = _feasible_ranges(p, ellipse_geometry(p).D)
    violating, non_violating = [], []
    for lo, hi in ranges:
        if thr >= lo:
            violating += _sin_band(thr, hi, closed_lo=False, tol=tol)
        else:
            violating += _sin_band(lo, hi, tol=tol)
        non_violating += _sin_band(lo, min(hi, thr), tol=tol)
    return _merge(sorted(violating, key=_sort_key)), _merge(sorted(non_violating, key=_sort_key))


def phi_family(p, theta: float = 0.0) -> PhiFamily:
    p = _point(p)
    phi1, phi2, phi3 = phi_angles(p)
    violating, non_violating = violating_split(p)
    return PhiFamily(
        point=p,
        theta=float(theta) % TWO_PI,
        geometry=ellipse_geometry(p),
        i_plus=admissible_interval(p),
        phi1=phi1,
        phi2=phi2,
        phi3=phi3,
        violating=violating,
        non_violating=non_violating,
    )


def family_state(p, theta: float, phi: float) -> E0Params:
    """E0 state on the ``(s, c)`` ellipse at angle ``phi``.

    ``a = 1/3 + sqrt(D)(sin phi + sqrt(3) cos phi)``,
    ``b = 1/3 + sqrt(D)(sin phi - sqrt(3) cos phi)``,
    ``rho44 = 1/3 - 2 sqrt(D) sin phi``.

    Raises
    ------
    PhiOutsideAdmissible
        If the resulting matrix is not positive semidefinite.
    """
    p = _point(p)
    root_d = math.sqrt(ellipse_geometry(p).D)
    sin_phi, cos_phi = math.sin(phi), math.cos(phi)
    a = 1.0 / 3.0 + root_d * (sin_phi + math.sqrt(3.0) * cos_phi)
    b = 1.0 / 3.0 + root_d * (sin_phi - math.sqrt(3.0) * cos_phi)
    c = p.c
    if a < -CONSTRAINT_TOL or b < -CONSTRAINT_TOL or a * b < c * c / 4 - CONSTRAINT_TOL or a + b > 1 + CONSTRAINT_TOL:
        raise PhiOutsideAdmissible(f"phi = {phi:.6f} is not in I+ for (s={p.s}, c={c})")
    return E0Params(a, b, c, theta)


def sample_intervals(intervals, n: int) -> np.ndarray:
    """``n`` angles spread uniformly over a union of arcs, in ascending order.

    Each arc receives a share of the samples proportional to its length and
    its samples sit at the centres of equal cells, so open endpoints are
    never hit. Zero-length arcs contribute their single point.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not intervals:
        return np.empty(0)
    lengths = np.array([iv.length for iv in intervals])
    total = lengths.sum()
    if total == 0.0:
        pts = [iv.lo for iv in intervals]
        return np.sort(np.resize(pts, n))
    raw = n * lengths / total
    counts = np.floor(raw).astype(int)
    for k in np.argsort(-(raw - counts))[: n - counts.sum()]:
        counts[k] += 1
    out = []
    for iv, k in zip(intervals, counts):
        if k:
            out.append(iv.lo + (np.arange(k) + 0.5) * iv.length / k)
    return np.sort(np.concatenate(out))


def _widest(intervals):
    return max(intervals, key=lambda iv: iv.length)


def witness_pair(p, theta: float = 0.0):
    """Two E0 states sharing ``(s, c)`` such that only the first violates CHSH.

    The violating state sits at the midpoint of the widest violating arc,
    the other at the midpoint of the widest non-violating arc.

    Raises
    ------
    NotLambda2
        If the point is not in Lambda2.
    """
    p = _point(p)
    region = classify(p)
    if region is not Region.LAMBDA2:
        raise NotLambda2(region)
    violating, non_violating = violating_split(p)
    rho_vbi = family_state(p, theta, _widest(violating).midpoint)
    rho_non = family_state(p, theta, _widest(non_violating).midpoint)
    return rho_vbi, rho_non


# -- brute-force oracle ------------------------------------------------------


def brute_force_smax(c: float, grid_step: float = 1e-3) -> float:
    """Largest E0 linear entropy at concurrence ``c`` by scanning an (a, b) grid."""
    grid = np.arange(0.0, 1.0 + grid_step / 2, grid_step)
    a, b = np.meshgrid(grid, grid, indexing="ij")
    feasible = (a * b >= c * c / 4) & (a + b <= 1.0)
    s = 4.0 / 3.0 * (1.0 - a * a - b * b - (1.0 - a - b) ** 2 - c * c / 2)
    return float(s[feasible].max()) if feasible.any() else math.nan


def m_on_family(p, phi) -> np.ndarray:
    """Vectorised ``m(rho(phi))`` along the ellipse of ``(s, c)``."""
    p = _point(p)
    root_d = math.sqrt(ellipse_geometry(p).D)
    rho44 = 1.0 / 3.0 - 2.0 * root_d * np.sin(np.asarray(phi, dtype=float))
    c2 = p.c * p.c
    return np.maximum(2.0 * c2, (1.0 - 2.0 * rho44) ** 2 + c2)


def violates(p: E0Params) -> bool:
    return horodecki_m_e0(p) > 1.0
