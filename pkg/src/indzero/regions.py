"""Explicit zero-free region boundaries for graphs of maximum degree d+1.

Five regions are covered: the Shearer disk, the cardioid-shaped region U_d
bounded by kappa(alpha) = -alpha d^d / (d+alpha)^(d+1), the region near
-lambda* (parameterised as -lambda* exp(r - i theta)), the left half-plane
region near the imaginary axis, and the right half-plane region with its
two-branch bound switching at theta_d.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .complexgeom import as_point
from .errors import PreconditionError, SolverError

KINDS = ("shearer", "cardioid", "critical", "lhp", "rhp")
CMP_EPS = 1e-12
HALF_PI = 0.5 * math.pi


def _check_d(d) -> int:
    if int(d) != d or d < 2:
        raise PreconditionError(f"d must be an integer >= 2, got {d!r}")
    return int(d)


@dataclass(frozen=True)
class ModelParams:
    d: int

    def __post_init__(self):
        _check_d(self.d)

    @property
    def max_degree(self) -> int:
        return self.d + 1


def shearer_radius(d) -> float:
    d = _check_d(d)
    return math.exp(d * math.log(d) - (d + 1) * math.log(d + 1))


def uniqueness_threshold(d) -> float:
    d = _check_d(d)
    return math.exp(d * math.log(d) - (d + 1) * math.log(d - 1))


# --- cardioid ---------------------------------------------------------------

def cardioid_point(d, alpha) -> complex:
    d = _check_d(d)
    alpha = as_point(alpha)
    if abs(abs(alpha) - 1) > 1e-9:
        raise PreconditionError("alpha must lie on the unit circle")
    return -alpha * d**d / (d + alpha) ** (d + 1)


def _cardioid_array(d, phi):
    alpha = np.exp(1j * np.asarray(phi, dtype=float))
    return -alpha * float(d) ** d / (d + alpha) ** (d + 1)


@lru_cache(maxsize=64)
def _cardioid_polygon(d: int, chord_tol: float = 1e-6) -> np.ndarray:
    # adaptive refinement in the angle of alpha until every chord's midpoint
    # deviation is below chord_tol
    phis = list(np.linspace(0.0, 2 * math.pi, 257))
    pts = list(_cardioid_array(d, phis))
    i = 0
    while i < len(phis) - 1:
        mid = 0.5 * (phis[i] + phis[i + 1])
        pm = _cardioid_array(d, mid)
        if abs(pm - 0.5 * (pts[i] + pts[i + 1])) > chord_tol and phis[i + 1] - phis[i] > 1e-12:
            phis.insert(i + 1, mid)
            pts.insert(i + 1, complex(pm))
        else:
            i += 1
    return np.array(pts)


def _even_odd(poly: np.ndarray, z: np.ndarray) -> np.ndarray:
    x = z.real[:, None]
    y = z.imag[:, None]
    ax, ay = poly[:-1].real[None, :], poly[:-1].imag[None, :]
    bx, by = poly[1:].real[None, :], poly[1:].imag[None, :]
    crosses = (ay > y) != (by > y)
    with np.errstate(invalid="ignore", divide="ignore"):
        xint = ax + (y - ay) * (bx - ax) / (by - ay)
    hits = crosses & (x < xint)
    return (hits.sum(axis=1) % 2) == 1


def cardioid_contains(d, lam) -> bool:
    """Even-odd point-in-polygon test against a refined sampling of the boundary."""
    return bool(cardioid_contains_array(d, [as_point(lam)])[0])


def cardioid_contains_array(d, lams) -> np.ndarray:
    d = _check_d(d)
    poly = _cardioid_polygon(d)
    z = np.atleast_1d(np.asarray(lams, dtype=np.complex128))
    out = np.zeros(z.shape, dtype=bool)
    # chunk to keep the (points x edges) temporaries small
    for s in range(0, z.size, 256):
        out[s:s + 256] = _even_odd(poly, z[s:s + 256])
    return out


# --- region near -lambda* ------------------------------------------------------

def critical_theta_max(d) -> float:
    d = _check_d(d)
    return math.acos(1.0 / (d + 0.5))


def _critical_bound_raw(d, theta):
    s2 = math.sin(0.5 * theta) ** 2
    first = d * math.log1p(1.0 / d)
    second = 2 * d * (d + 1) * s2 / (d * d + 4 * (d + 1) * s2)
    return min(first, second)


def critical_region_bound(d, theta) -> float:
    """Largest admissible r at angle theta for lam = -lambda* exp(r - i theta)."""
    d = _check_d(d)
    theta = float(theta)
    if not 0.0 < theta <= critical_theta_max(d):
        raise PreconditionError(f"theta={theta!r} outside (0, arccos(1/(d+0.5))]")
    return _critical_bound_raw(d, theta)


def critical_region_branches(d, theta):
    """Both expressions of the bound, (d log(1+1/d), sine expression)."""
    d = _check_d(d)
    s2 = math.sin(0.5 * theta) ** 2
    return d * math.log1p(1.0 / d), 2 * d * (d + 1) * s2 / (d * d + 4 * (d + 1) * s2)


def _critical_coords(d, lam):
    lam = as_point(lam)
    if lam == 0:
        return None
    theta = math.pi - abs(math.atan2(lam.imag, lam.real))
    r = math.log(abs(lam) / shearer_radius(d))
    return theta, r


def critical_region_contains(d, lam) -> bool:
    d = _check_d(d)
    c = _critical_coords(d, lam)
    if c is None:
        return False
    theta, r = c
    if not 0.0 < theta <= critical_theta_max(d) + CMP_EPS:
        return False
    theta = min(theta, critical_theta_max(d))
    return -CMP_EPS <= r <= _critical_bound_raw(d, theta) + CMP_EPS


# --- left half-plane region near the imaginary axis ------------------------

def lhp_psi_star(d, phi) -> float:
    return max(((2 - 1.0 / d) * phi - math.pi) / (d + 1), 0.0)


def _lhp_bound_raw(d, phi):
    psi = lhp_psi_star(d, phi)
    num = math.sin(phi / d) * math.sin(phi) ** d
    den = math.sin((d - 1) * phi / d - d * psi) * math.sin(phi - psi) ** d
    return num / den


def lhp_bound(d, phi) -> float:
    """Strict modulus bound at argument phi in [pi/2, pi)."""
    d = _check_d(d)
    phi = float(phi)
    if not HALF_PI <= phi < math.pi:
        raise PreconditionError(f"phi={phi!r} outside [pi/2, pi)")
    return _lhp_bound_raw(d, phi)


# --- right half-plane region -----------------------------------------------

def _bisect(fn, lo, hi, xtol=1e-15, max_iter=200):
    flo = fn(lo)
    fhi = fn(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    if (flo > 0) == (fhi > 0):
        raise SolverError(f"no sign change on [{lo!r}, {hi!r}]")
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi or hi - lo < xtol:
            break
        fm = fn(mid)
        if fm == 0:
            return mid
        if (fm > 0) == (flo > 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def theta_d_residual(d, x) -> float:
    """LHS - RHS of the defining equation of theta_d at x."""
    t = math.tan((HALF_PI - x) / d)
    return math.tan(2 * x / d) - t / (1 - t / math.tan(x))


@lru_cache(maxsize=None)
def theta_d(d) -> float:
    """Unique root in (pi/(2(d+1)), pi/2) of tan(2x/d) = T/(1 - T/tan x),
    T = tan((pi/2 - x)/d)."""
    d = _check_d(d)

    def g(x):
        # (LHS - RHS) * (sin x - cos x T): same sign, no pole on the bracket
        t = math.tan((HALF_PI - x) / d)
        return math.tan(2 * x / d) * (math.sin(x) - math.cos(x) * t) - t * math.sin(x)

    lo = HALF_PI / (d + 1)
    hi = HALF_PI
    x = _bisect(g, lo, hi)
    if abs(theta_d_residual(d, x)) > 1e-10:
        raise SolverError(f"theta_d({d}) residual too large")
    return x


def beta_star_residual(d, theta, x) -> float:
    t = math.tan((HALF_PI - theta) / d)
    return math.tan((theta + x) / d) / math.sin(theta) - t / (math.sin(x) - math.cos(x) * t)


def beta_star(d, theta) -> float:
    """Root of gamma1(x) = gamma2(x) on ((pi/2 - theta)/d, theta]; 0 at pi/2."""
    d = _check_d(d)
    theta = float(theta)
    td = theta_d(d)
    if not td - 1e-15 <= theta <= HALF_PI:
        raise PreconditionError(f"theta={theta!r} outside [theta_d, pi/2]")
    if theta == HALF_PI:
        return 0.0
    pole = (HALF_PI - theta) / d

    def diff(x):
        return beta_star_residual(d, theta, x)

    hi = theta
    if diff(hi) <= 0:
        # theta == theta_d up to rounding: the branches meet at x = theta
        return hi
    # gamma2 -> +inf as x decreases to the pole; shrink toward it until the
    # difference is negative
    gap = 0.5 * (hi - pole)
    lo = pole + gap
    while diff(lo) >= 0:
        gap *= 0.5
        lo = pole + gap
        if gap < 1e-300:
            raise SolverError("beta_star: could not bracket near the pole")
    return _bisect(diff, lo, hi)


def rhp_bound(d, theta) -> float:
    """Non-strict modulus bound at argument theta in (0, pi/2]."""
    d = _check_d(d)
    theta = float(theta)
    if not 0.0 < theta <= HALF_PI:
        raise PreconditionError(f"theta={theta!r} outside (0, pi/2]")
    if theta <= theta_d(d):
        return math.tan(2 * theta / d) / math.sin(theta)
    return math.tan((theta + beta_star(d, theta)) / d) / math.sin(theta)


# --- aggregate membership ---------------------------------------------------

@dataclass(frozen=True)
class RegionVerdict:
    shearer: bool
    critical: bool
    lhp: bool
    rhp: bool
    margin: float
    margins: dict = field(default_factory=dict, compare=False)

    @property
    def any(self) -> bool:
        return self.shearer or self.critical or self.lhp or self.rhp


def region_membership(d, lam) -> RegionVerdict:
    """Membership flags for the four zero-free regions with explicit bounds.

    Depends only on (|lam|, |arg lam|).  ``margin`` is the largest of the
    per-region margins (bound minus coordinate in each region's own
    parameterisation); it is positive iff some flag is set, up to the
    comparison epsilon.
    """
    d = _check_d(d)
    lam = as_point(lam)
    rho = abs(lam)
    margins = {"shearer": shearer_radius(d) - rho}
    flags = {"shearer": rho <= shearer_radius(d) * (1 + CMP_EPS)}
    if lam != 0:
        ang = abs(math.atan2(lam.imag, lam.real))
        theta, r = _critical_coords(d, lam)
        if 0.0 < theta <= critical_theta_max(d):
            b = _critical_bound_raw(d, theta)
            margins["critical"] = min(b - r, r)
        if HALF_PI <= ang < math.pi:
            margins["lhp"] = _lhp_bound_raw(d, ang) - rho
        if 0.0 < ang <= HALF_PI:
            margins["rhp"] = rhp_bound(d, ang) - rho
    flags["critical"] = critical_region_contains(d, lam)
    flags["lhp"] = "lhp" in margins and margins["lhp"] > 0
    flags["rhp"] = "rhp" in margins and margins["rhp"] >= -CMP_EPS
    return RegionVerdict(
        shearer=flags["shearer"],
        critical=flags["critical"],
        lhp=flags["lhp"],
        rhp=flags["rhp"],
        margin=max(margins.values()),
        margins=margins,
    )


# --- boundary sampling ------------------------------------------------------

@dataclass(frozen=True)
class RegionBoundary:
    kind: str
    d: int
    params: np.ndarray
    points: np.ndarray

    @property
    def samples(self):
        return list(zip(self.params.tolist(), self.points.tolist()))


def _symmetric_grid(centre, half, n):
    # centre and both ends are hit exactly; p[n-1-i] - centre == centre - p[i]
    u = np.linspace(-1.0, 1.0, n)
    u = 0.5 * (u - u[::-1])
    return centre + half * u


def _mirrored(params, fn):
    # params are symmetric about their midpoint and point(p_{n-1-i}) is the
    # conjugate of point(p_i): evaluate the first half and reflect
    n = params.size
    pts = np.empty(n, dtype=np.complex128)
    for i in range((n + 1) // 2):
        pts[i] = fn(float(params[i]))
    for i in range((n + 1) // 2, n):
        pts[i] = np.conj(pts[n - 1 - i])
    return pts


def boundary_polyline(d, kind: str, n_samples: int) -> RegionBoundary:
    """Sample a region boundary on a uniform, symmetric parameter grid.

    Parameters (``params``) are polar angles of the sampled point, except for
    the cardioid where the parameter is -arg(alpha) in [0, pi] and only the
    upper half, from -lambda* to lambda_c, is returned.  For the other kinds
    the upper half is evaluated and the lower half is its exact conjugate
    reflection.
    ``critical``, ``lhp`` and ``rhp`` give the outer curve only; the
    remaining sides are arcs of the Shearer circle or the origin.
    """
    d = _check_d(d)
    if kind not in KINDS:
        raise PreconditionError(f"unknown boundary kind {kind!r}")
    if n_samples < 16:
        raise PreconditionError("n_samples must be >= 16")
    ls = shearer_radius(d)
    cusp = 1j * math.tan(math.pi / (2 * d))
    if kind == "shearer":
        params = _symmetric_grid(0.0, math.pi, n_samples)

        def fn(ang):
            return ls * complex(math.cos(ang), math.sin(ang))

    elif kind == "cardioid":
        # upper half from -lambda* (alpha = 1) to lambda_c (alpha = -1); the
        # lower half is its conjugate and is left to the caller
        params = np.linspace(0.0, math.pi, n_samples)
        pts = np.empty(n_samples, dtype=np.complex128)
        pts[0] = -ls
        pts[-1] = uniqueness_threshold(d)
        pts[1:-1] = _cardioid_array(d, -params[1:-1])
        return RegionBoundary(kind=kind, d=d, params=params, points=pts)
    elif kind == "critical":
        tm = critical_theta_max(d)
        params = _symmetric_grid(math.pi, tm, n_samples)

        def fn(ang):
            theta = math.pi - ang
            b = _critical_bound_raw(d, theta) if theta > 0 else 0.0
            return ls * math.exp(b) * complex(math.cos(ang), math.sin(ang))

    elif kind == "lhp":
        params = _symmetric_grid(math.pi, HALF_PI, n_samples)

        def fn(ang):
            if ang == HALF_PI:
                return cusp
            if ang >= math.pi:
                return 0j
            return _lhp_bound_raw(d, ang) * complex(math.cos(ang), math.sin(ang))

    else:  # rhp
        params = _symmetric_grid(0.0, HALF_PI, n_samples)

        def fn(ang):
            if ang == -HALF_PI:
                return cusp.conjugate()
            if ang >= 0.0:
                return complex(2.0 / d)  # limit of tan(2t/d)/sin t as t -> 0
            return (rhp_bound(d, -ang) * complex(math.cos(-ang), math.sin(-ang))).conjugate()

    pts = _mirrored(params, fn)
    return RegionBoundary(kind=kind, d=d, params=params, points=pts)
