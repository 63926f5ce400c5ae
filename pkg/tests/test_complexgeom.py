import cmath
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from indzero.complexgeom import (angle_between, arg1p, as_point, covered_by_polyline, covers,
                                 cpow, cpow_array, geo_mean_dominates,
                                 geo_mean_dominates_array, principal_log, principal_log_array)
from indzero.errors import DomainError, PreconditionError

finite = st.floats(-1e3, 1e3, allow_nan=False, allow_infinity=False)
nonzero = st.builds(complex, finite, finite).filter(lambda z: abs(z) > 1e-6)


# --- examples ----------------------------------------------------------------

def test_principal_log_examples():
    assert principal_log(1) == 0
    assert principal_log(-1) == pytest.approx(1j * math.pi)
    assert principal_log(1j) == pytest.approx(1j * math.pi / 2)


def test_negative_zero_imaginary_part_stays_on_branch():
    # -1 - 0j must still have argument +pi
    assert principal_log(complex(-1.0, -0.0)).imag == math.pi
    assert arg1p(complex(-2.0, -0.0)) == math.pi
    assert principal_log_array(np.array([complex(-1.0, -0.0)]))[0].imag == math.pi


def test_principal_log_rejects_zero():
    with pytest.raises(DomainError):
        principal_log(0)


def test_cpow_examples():
    assert cpow(0, 0) == 1
    assert cpow(-1, 0.5) == pytest.approx(1j)
    assert cpow(4, 0.5) == pytest.approx(2)
    with pytest.raises(DomainError):
        cpow(0, 0.5)
    with pytest.raises(DomainError):
        cpow(1, -1)


def test_non_finite_rejected():
    with pytest.raises(DomainError):
        as_point(complex(float("nan"), 0))
    with pytest.raises(DomainError):
        arg1p(complex(float("inf"), 0))


def test_arg1p_examples():
    assert arg1p(0) == 0
    assert arg1p(1j) == pytest.approx(math.pi / 4)
    assert arg1p(-2) == pytest.approx(math.pi)
    with pytest.raises(DomainError):
        arg1p(-1)


def test_covers_examples():
    assert covers(1, 2, 1e-9)
    assert covers(0.3 + 0.2j, 0.3 + 0.2j, 0.0)
    assert not covers(1j, -1j, 1e-9)
    with pytest.raises(DomainError):
        covers(-1, 0)


def test_geo_mean_examples():
    w = geo_mean_dominates(0.3 + 0.4j, 0.3 + 0.4j, 0.7)
    assert w.t == pytest.approx(1) and w.beta == pytest.approx(0.7)
    w = geo_mean_dominates(1, 1j, 0.5)
    assert w.t == pytest.approx(math.sqrt(2) / 2, abs=1e-12)
    assert w.beta == pytest.approx(0.5, abs=1e-12)
    w = geo_mean_dominates(2, 0.5, 0.5)
    assert w.t == pytest.approx(1, abs=1e-12)
    assert w.beta == pytest.approx(1 / 3, abs=1e-12)


def test_geo_mean_precondition():
    with pytest.raises(PreconditionError):
        geo_mean_dominates(0, 1, 0.5)
    with pytest.raises(PreconditionError):
        geo_mean_dominates(1, 1j, 1.5)


def test_angle_between_across_cut():
    u = cmath.rect(1, math.pi - 0.01)
    v = cmath.rect(1, -math.pi + 0.01)
    assert angle_between(u, v) == pytest.approx(0.02)


# --- properties --------------------------------------------------------------

@settings(max_examples=300, deadline=None)
@given(nonzero, st.floats(0, 5))
def test_cpow_matches_exp_log(z, delta):
    lhs = cpow(z, delta)
    rhs = cmath.exp(delta * principal_log(z))
    assert abs(lhs - rhs) <= 1e-11 * max(1.0, abs(rhs))


def test_cpow_branch_consistency_bulk():
    rng = np.random.default_rng(1)
    z = rng.normal(size=10**5) * 10 + 1j * rng.normal(size=10**5) * 10
    delta = rng.uniform(0, 5, size=10**5)
    lhs = cpow_array(z, delta)
    rhs = np.exp(delta * principal_log_array(z))
    rel = np.abs(lhs - rhs) / np.maximum(np.abs(rhs), 1e-300)
    assert rel.max() < 1e-11
    # the log lands on the principal branch and inverts exp
    lg = principal_log_array(z)
    assert np.all((lg.imag > -math.pi) & (lg.imag <= math.pi))
    assert np.max(np.abs(np.exp(lg) - z) / np.abs(z)) < 1e-12


def _admissible(r1, a1, r2, a2, alpha):
    z1 = cmath.rect(r1, a1)
    z2 = cmath.rect(r2, a2)
    gap = math.atan2(z1.imag, z1.real) - math.atan2(z2.imag, z2.real)
    return z1, z2, gap


@settings(max_examples=500, deadline=None)
@given(st.floats(1e-3, 1e3), st.floats(-math.pi, math.pi), st.floats(1e-3, 1e3),
       st.floats(-math.pi, math.pi), st.floats(0, 1))
def test_am_gm_witness(r1, a1, r2, a2, alpha):
    z1, z2, gap = _admissible(r1, a1, r2, a2, alpha)
    assume(z1 != 0 and z2 != 0 and abs(gap) <= math.pi)
    w = geo_mean_dominates(z1, z2, alpha)
    g = cpow(z1, alpha) * cpow(z2, 1 - alpha)
    recon = abs(w.t * g - (w.beta * z1 + (1 - w.beta) * z2))
    assert recon < 1e-9 * max(1.0, abs(z1), abs(z2))
    assert 0 <= w.beta <= 1
    assert 0 <= w.t <= 1 + 1e-12


@settings(max_examples=200, deadline=None)
@given(st.floats(-math.pi + 1e-3, math.pi), st.floats(0.01, 5), st.floats(0, 5),
       st.floats(0, 5))
def test_covering_transitive_on_common_ray(ang, s1, s2, s3):
    # three points on one ray from -1 at increasing distances
    ray = cmath.rect(1, ang)
    rs = sorted([s1, s1 + s2, s1 + s2 + s3])
    a, b, c = (-1 + r * ray for r in rs)
    if covers(a, b, 1e-12) and covers(b, c, 1e-12):
        assert covers(a, c, 1e-12)


def test_covering_transitive_exact_arguments():
    # exactly representable ray: the positive real axis seen from -1
    a, b, c = 0.5, 1.5, 4.0
    assert covers(a, b, 0.0) and covers(b, c, 0.0) and covers(a, c, 0.0)
    a, b, c = -1 + 1j, -1 + 2j, -1 + 3.5j
    assert covers(a, b, 0.0) and covers(b, c, 0.0) and covers(a, c, 0.0)


@settings(max_examples=300, deadline=None)
@given(st.builds(complex, st.floats(-0.9, 2), st.floats(-2, 2)), st.floats(1, 4),
       st.builds(complex, st.floats(-0.5, 0.5), st.floats(-0.5, 0.5)), st.integers(2, 12))
def test_observation_f_of_covered_point(w, s, lam, d):
    # z -1-covered by w means 1+z = s (1+w) with s >= 1; then f(z) = alpha f(w), alpha in [0,1]
    assume(abs(1 + w) > 1e-3 and abs(lam) > 1e-6)
    z = -1 + s * (1 + w)
    assert covers(w, z, 1e-9)
    fz = lam / (1 + z) ** d
    fw = lam / (1 + w) ** d
    assert abs(angle_between(fw, fz)) < 1e-9
    assert abs(fz) <= abs(fw) * (1 + 1e-12)


def test_am_gm_bulk_array():
    rng = np.random.default_rng(7)
    n = 10**5
    a1 = rng.uniform(-math.pi, math.pi, n)
    gap = rng.uniform(-math.pi, math.pi, n)
    a2 = np.angle(np.exp(1j * (a1 - gap)))
    z1 = rng.uniform(0.01, 10, n) * np.exp(1j * a1)
    z2 = rng.uniform(0.01, 10, n) * np.exp(1j * a2)
    keep = np.abs(np.angle(z1) - np.angle(z2)) <= math.pi
    z1, z2 = z1[keep], z2[keep]
    alpha = rng.uniform(0, 1, z1.size)
    t, beta = geo_mean_dominates_array(z1, z2, alpha)
    g = cpow_array(z1, alpha) * cpow_array(z2, 1 - alpha)
    recon = np.abs(t * g - (beta * z1 + (1 - beta) * z2))
    assert recon.max() < 1e-9 * 10
    assert t.min() >= 0 and t.max() <= 1 + 1e-12


def test_covered_by_polyline_basic():
    verts = [0.5 - 0.5j, 0j, 0.5 + 0.5j]
    pts = np.array([1.0 + 1.0j, 0.25 + 0.3j, 0.1 + 0j, -0.5 + 0j, 2.0 + 0j])
    got = covered_by_polyline(pts, verts, tol=1e-12)
    # compare against a dense brute-force sampling of the polyline
    for p, g in zip(pts, got):
        ts = np.linspace(0, 1, 20001)
        poly = np.concatenate([verts[0] + ts * (verts[1] - verts[0]),
                               verts[1] + ts * (verts[2] - verts[1])])
        ok = any(abs(angle_between(1 + q, 1 + p)) < 1e-4 and abs(1 + q) <= abs(1 + p) + 1e-9
                 for q in poly)
        assert g == ok, p
