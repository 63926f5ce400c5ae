"""Branch-cut-consistent complex primitives and the -1-covering calculus.

Convention: for z = r e^{i theta} with theta in (-pi, pi],
``log z = log r + i theta`` and ``z**delta = r**delta e^{i delta theta}``.
Points are plain Python ``complex`` values (or numpy complex arrays for the
``*_array`` variants); a signed zero in the imaginary part is normalised to
+0 so that the negative real axis always gets argument +pi.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PreconditionError

GEOM_TOL = 1e-9
ALG_TOL = 1e-12


def as_point(z) -> complex:
    """Coerce to complex, rejecting NaN/inf and normalising -0.0 imaginary parts."""
    if isinstance(z, (tuple, list)):
        re, im = z
        z = complex(float(re), float(im))
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite point {z!r}")
    # -0.0 + 0.0 == +0.0; keeps arg(-x - 0j) == +pi
    return complex(z.real + 0.0, z.imag + 0.0)


def _normalise_array(z):
    z = np.asarray(z, dtype=np.complex128)
    out = z.real + 0.0 + 1j * (z.imag + 0.0)
    return out


def arg(z) -> float:
    z = as_point(z)
    if z == 0:
        raise DomainError("arg undefined at 0")
    return math.atan2(z.imag, z.real)


def principal_log(z) -> complex:
    """log r + i theta with theta in (-pi, pi]."""
    z = as_point(z)
    if z == 0:
        raise DomainError("log undefined at 0")
    return complex(math.log(abs(z)), math.atan2(z.imag, z.real))


def cpow(z, delta: float) -> complex:
    """Principal power z**delta for real delta >= 0, with 0**0 = 1."""
    z = as_point(z)
    delta = float(delta)
    if delta < 0 or not math.isfinite(delta):
        raise DomainError("cpow needs a finite exponent delta >= 0")
    if z == 0:
        if delta == 0:
            return 1 + 0j
        raise DomainError("0**delta undefined for delta > 0")
    return cmath.exp(delta * principal_log(z))


def principal_log_array(z):
    z = _normalise_array(z)
    if np.any(z == 0):
        raise DomainError("log undefined at 0")
    return np.log(np.abs(z)) + 1j * np.arctan2(z.imag, z.real)


def cpow_array(z, delta):
    z = _normalise_array(z)
    delta = np.asarray(delta, dtype=float)
    if np.any(delta < 0):
        raise DomainError("cpow needs delta >= 0")
    zero = z == 0
    if np.any(zero & (delta > 0)):
        raise DomainError("0**delta undefined for delta > 0")
    safe = np.where(zero, 1.0 + 0j, z)
    out = np.exp(delta * principal_log_array(safe))
    return np.where(zero, 1.0 + 0j, out)


def arg1p(z) -> float:
    """arg(1 + z) on the principal branch."""
    w = as_point(z) + 1
    if w == 0:
        raise DomainError("arg(1+z) undefined at z = -1")
    return math.atan2(w.imag, w.real)


def arg1p_array(z):
    w = _normalise_array(z) + 1
    return np.arctan2(w.imag, w.real)


def angle_between(u, v) -> float:
    """Signed angle from ray u to ray v, in (-pi, pi].

    Computed as arg(v / u) so that rays straddling the branch cut compare
    correctly.
    """
    u = as_point(u)
    v = as_point(v)
    if u == 0 or v == 0:
        raise DomainError("angle undefined at 0")
    w = v * u.conjugate()
    return math.atan2(w.imag + 0.0, w.real)


def covers(cover, z, tol: float = GEOM_TOL) -> bool:
    """True when z is -1-covered by ``cover``.

    Same argument as seen from -1 (within ``tol``) and ``|1+z| >= |1+cover|``.
    """
    cover = as_point(cover)
    z = as_point(z)
    if cover == -1 or z == -1:
        raise DomainError("-1-covering undefined at -1")
    if abs(angle_between(1 + cover, 1 + z)) > tol:
        return False
    return abs(1 + z) >= abs(1 + cover) - tol


@dataclass(frozen=True)
class CoverWitness:
    t: float
    beta: float


def _gmd_core(z1, z2, alpha):
    # shared vectorised core; returns (t, beta, gap)
    a1 = np.arctan2(z1.imag, z1.real)
    a2 = np.arctan2(z2.imag, z2.real)
    gap = a1 - a2
    m1 = np.abs(z1)
    m2 = np.abs(z2)
    s2 = m2 * np.sin(alpha * gap)
    s1 = m1 * np.sin((1 - alpha) * gap)
    denom = s1 + s2
    log_g = alpha * np.log(m1) + (1 - alpha) * np.log(m2)
    g_mod = np.exp(log_g)

    same_ray = gap == 0
    with np.errstate(invalid="ignore", divide="ignore"):
        beta = np.where(denom != 0, s2 / np.where(denom != 0, denom, 1.0), alpha)
    # on a common ray the geometric mean itself lies on the segment
    dm = m1 - m2
    with np.errstate(invalid="ignore", divide="ignore"):
        beta_ray = np.where(dm != 0, (g_mod - m2) / np.where(dm != 0, dm, 1.0), alpha)
    beta = np.where(same_ray, beta_ray, beta)
    beta = np.clip(beta, 0.0, 1.0)

    # projection of beta*z1 + (1-beta)*z2 on the ray of the geometric mean
    y_par = beta * m1 * np.cos((1 - alpha) * gap) + (1 - beta) * m2 * np.cos(alpha * gap)
    t = np.where(same_ray, 1.0, y_par / g_mod)
    t = np.clip(t, 0.0, None)
    return t, beta, gap


def geo_mean_dominates(z1, z2, alpha: float) -> CoverWitness:
    """Witness (t, beta) with t * z1**alpha * z2**(1-alpha) = beta*z1 + (1-beta)*z2.

    The point is found by intersecting the segment [z2, z1] with the ray of
    the weighted geometric mean.
    """
    z1 = as_point(z1)
    z2 = as_point(z2)
    alpha = float(alpha)
    if z1 == 0 or z2 == 0:
        raise PreconditionError("geo_mean_dominates needs nonzero points")
    if not 0.0 <= alpha <= 1.0:
        raise PreconditionError("alpha must lie in [0, 1]")
    t, beta, gap = _gmd_core(np.array([z1]), np.array([z2]), np.array([alpha]))
    if abs(gap[0]) > math.pi + 1e-12:
        raise PreconditionError(f"angular gap {gap[0]!r} exceeds pi")
    return CoverWitness(t=float(t[0]), beta=float(beta[0]))


def geo_mean_dominates_array(z1, z2, alpha):
    """Vectorised ``geo_mean_dominates``; returns arrays (t, beta)."""
    z1 = _normalise_array(z1)
    z2 = _normalise_array(z2)
    alpha = np.broadcast_to(np.asarray(alpha, dtype=float), np.broadcast(z1, z2).shape)
    if np.any(z1 == 0) or np.any(z2 == 0):
        raise PreconditionError("geo_mean_dominates needs nonzero points")
    if np.any((alpha < 0) | (alpha > 1)):
        raise PreconditionError("alpha must lie in [0, 1]")
    t, beta, gap = _gmd_core(z1, z2, alpha)
    if np.any(np.abs(gap) > math.pi + 1e-12):
        raise PreconditionError("angular gap exceeds pi")
    return t, beta


def covered_by_polyline(points, vertices, tol: float = GEOM_TOL):
    """For each point, whether it is -1-covered by some point of the polyline.

    A point p is covered when the ray from -1 through p meets the polyline at
    some q with ``|1+q| <= |1+p|`` (up to ``tol``).  Returns a boolean array.
    """
    p = _normalise_array(np.atleast_1d(points)) + 1
    v = _normalise_array(vertices) + 1
    if np.any(p == 0):
        raise DomainError("-1-covering undefined at -1")
    a = v[:-1][None, :]
    b = v[1:][None, :]
    u = (p / np.abs(p))[:, None]
    # rotate so the ray is the positive real axis
    ar = a * np.conj(u)
    br = b * np.conj(u)
    da = ar.imag
    db = br.imag
    denom = da - db
    with np.errstate(invalid="ignore", divide="ignore"):
        s = np.where(denom != 0, da / np.where(denom != 0, denom, 1.0), np.nan)
    hit = ar.real + s * (br.real - ar.real)
    ok = (s >= -tol) & (s <= 1 + tol) & (hit >= -tol)
    reach = np.where(ok, hit, np.inf)
    # segments lying on the ray itself
    on_ray = (np.abs(da) <= tol) & (np.abs(db) <= tol)
    ray_min = np.where(on_ray, np.minimum(np.where(ar.real >= -tol, ar.real, np.inf),
                                          np.where(br.real >= -tol, br.real, np.inf)), np.inf)
    reach = np.minimum(reach, ray_min)
    nearest = reach.min(axis=1)
    return nearest <= np.abs(p) + tol
