import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indzero import regions as R
from indzero.errors import PreconditionError

from oracles import lhp_formula, shearer, uniqueness


# --- constants ---------------------------------------------------------------

def test_shearer_examples():
    assert R.shearer_radius(2) == pytest.approx(4 / 27, rel=1e-14)
    assert R.shearer_radius(9) == pytest.approx(0.0387420489, rel=1e-12)
    vals = [R.shearer_radius(d) for d in range(2, 51)]
    assert all(a > b for a, b in zip(vals, vals[1:]))
    for d in range(2, 30):
        assert R.shearer_radius(d) == pytest.approx(shearer(d), rel=1e-13)


def test_uniqueness_examples():
    assert R.uniqueness_threshold(2) == pytest.approx(4, rel=1e-14)
    assert R.uniqueness_threshold(3) == pytest.approx(27 / 16, rel=1e-14)
    for d in range(2, 51):
        assert R.uniqueness_threshold(d) > R.shearer_radius(d)
    for d in range(2, 30):
        assert R.uniqueness_threshold(d) == pytest.approx(uniqueness(d), rel=1e-13)


def test_d_validation():
    for bad in (1, 0, 2.5):
        with pytest.raises(PreconditionError):
            R.shearer_radius(bad)
    with pytest.raises(PreconditionError):
        R.ModelParams(1)


# --- cardioid ------------------------------------------------------------------

def test_cardioid_landmarks():
    for d in range(2, 21):
        assert abs(R.cardioid_point(d, 1) + R.shearer_radius(d)) < 1e-12
        assert abs(R.cardioid_point(d, -1) - R.uniqueness_threshold(d)) < 1e-12 * max(1, R.uniqueness_threshold(d))


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 30), st.floats(-math.pi, math.pi))
def test_cardioid_conjugate(d, phi):
    a = cmath.exp(1j * phi)
    assert abs(R.cardioid_point(d, a.conjugate()) - R.cardioid_point(d, a).conjugate()) < 1e-15


def test_cardioid_precondition():
    with pytest.raises(PreconditionError):
        R.cardioid_point(3, 1.1)


@pytest.mark.parametrize("d", [2, 3, 9, 20])
def test_cardioid_contains_examples(d):
    assert R.cardioid_contains(d, 0)
    assert not R.cardioid_contains(d, 1.01 * R.uniqueness_threshold(d))
    assert R.cardioid_contains(d, -0.5 * R.shearer_radius(d))
    assert R.cardioid_contains(d, 0.99 * R.uniqueness_threshold(d))
    assert not R.cardioid_contains(d, -1.01 * R.shearer_radius(d))


def test_cardioid_contains_matches_radial_oracle():
    # the cardioid is star-shaped about 0: compare against the boundary radius
    # found by bisecting |kappa| along each ray
    d = 5
    rng = np.random.default_rng(0)
    for _ in range(200):
        ang = rng.uniform(-math.pi, math.pi)
        # find alpha with arg kappa(alpha) = ang by dense sampling
        phis = np.linspace(0, 2 * math.pi, 200001)
        pts = -np.exp(1j * phis) * d**d / (d + np.exp(1j * phis)) ** (d + 1)
        k = np.argmin(np.abs(np.angle(pts * np.exp(-1j * ang))))
        rad = abs(pts[k])
        for s in (0.98, 1.02):
            z = s * rad * cmath.exp(1j * ang)
            assert R.cardioid_contains(d, z) == (s < 1)


# --- critical region -----------------------------------------------------------

def test_critical_bound_examples():
    d = 9
    tm = math.acos(1 / 9.5)
    assert R.critical_theta_max(d) == pytest.approx(tm)
    assert R.critical_region_bound(d, 1e-8) < 1e-14
    b1, b2 = R.critical_region_branches(d, tm)
    s2 = math.sin(tm / 2) ** 2
    assert b1 == pytest.approx(9 * math.log(10 / 9))
    assert b2 == pytest.approx(2 * 9 * 10 * s2 / (81 + 40 * s2))
    assert R.critical_region_bound(d, tm) == min(b1, b2)
    # the sine branch is the active one at the end of the range for d = 9
    assert b2 < b1
    for d in range(2, 30):
        for th in np.linspace(1e-3, R.critical_theta_max(d), 20):
            assert R.critical_region_bound(d, th) <= d * math.log1p(1 / d)
    with pytest.raises(PreconditionError):
        R.critical_region_bound(9, 0)
    with pytest.raises(PreconditionError):
        R.critical_region_bound(9, tm + 1e-6)


def test_critical_contains_examples():
    d = 9
    ls = R.shearer_radius(d)
    assert not R.critical_region_contains(d, -ls)
    assert R.critical_region_contains(d, -ls * cmath.exp(-0.2j))
    r = 0.5 * R.critical_region_bound(d, 0.3)
    assert R.critical_region_contains(d, -ls * cmath.exp(r - 0.3j))
    assert R.critical_region_contains(d, -ls * cmath.exp(r + 0.3j))
    assert not R.critical_region_contains(d, -2 * R.uniqueness_threshold(d))
    r = 1.01 * R.critical_region_bound(d, 0.3)
    assert not R.critical_region_contains(d, -ls * cmath.exp(r - 0.3j))


def test_quadratic_law():
    d = 9
    ls = R.shearer_radius(d)
    for phi in (0.005, 0.01, 0.02):
        # boundary point at polar angle pi + phi, i.e. theta = phi
        x = -ls * math.exp(R.critical_region_bound(d, phi)) * math.cos(phi)
        ratio = (x + ls) / phi**2 / (-ls / (2 * d))
        assert 0.9 <= ratio <= 1.1


# --- left half-plane ------------------------------------------------------------

def test_lhp_examples():
    assert R.lhp_bound(9, math.pi / 2) == pytest.approx(math.tan(math.pi / 18), abs=1e-15)
    assert R.lhp_bound(9, math.pi / 2) == pytest.approx(0.17633, abs=1e-5)
    for d in range(2, 21):
        assert abs(R.lhp_bound(d, math.pi / 2) - math.tan(math.pi / (2 * d))) < 1e-10
    # psi* switches on exactly at (2 - 1/d) phi = pi
    d = 9
    edge = math.pi / (2 - 1 / d)
    assert edge == pytest.approx(18 * math.pi / 34)
    assert R.lhp_psi_star(d, edge - 1e-9) == 0
    assert R.lhp_psi_star(d, edge + 1e-6) > 0
    with pytest.raises(PreconditionError):
        R.lhp_bound(9, math.pi)
    with pytest.raises(PreconditionError):
        R.lhp_bound(9, 1.0)


@settings(max_examples=200, deadline=None)
@given(st.integers(2, 40), st.floats(math.pi / 2, math.pi - 1e-6))
def test_lhp_matches_oracle(d, phi):
    assert R.lhp_bound(d, phi) == pytest.approx(lhp_formula(d, phi), rel=1e-12)


# --- right half-plane ------------------------------------------------------------

def test_theta_d_bracket_and_residual():
    for d in range(2, 51):
        t = R.theta_d(d)
        assert math.pi / 6 < t < math.pi / 2
        assert abs(R.theta_d_residual(d, t)) < 1e-10
        lo = math.pi / (2 * (d + 1)) + 1e-6
        hi = math.pi / 2 - 1e-6
        assert R.theta_d_residual(d, lo) < 0
        assert R.theta_d_residual(d, hi) > 0


def test_beta_star_examples():
    for d in (2, 3, 9, 30):
        assert R.beta_star(d, math.pi / 2) == 0
        td = R.theta_d(d)
        for th in np.linspace(td, math.pi / 2, 40)[1:-1]:
            b = R.beta_star(d, th)
            assert (math.pi / 2 - th) / d < b <= th
            assert abs(R.beta_star_residual(d, th, b)) < 1e-10
    with pytest.raises(PreconditionError):
        R.beta_star(9, 0.2)


def test_rhp_axis_value():
    for d in range(2, 21):
        assert abs(R.rhp_bound(d, math.pi / 2) - math.tan(math.pi / (2 * d))) < 1e-12
        assert abs(R.lhp_bound(d, math.pi / 2) - R.rhp_bound(d, math.pi / 2)) < 1e-10


def test_rhp_continuity_at_theta_d():
    for d in range(2, 40):
        td = R.theta_d(d)
        left = math.tan(2 * td / d) / math.sin(td)
        right = math.tan((td + R.beta_star(d, td)) / d) / math.sin(td)
        assert abs(left - right) < 1e-8
        assert abs(R.rhp_bound(d, td * (1 + 1e-12)) - R.rhp_bound(d, td)) < 1e-8


def test_rhp_first_branch_exceeds_axis_disk():
    # tan(2 theta/d)/sin(theta) > tan(pi/(2d)) on all of (0, pi/2), and the
    # bound itself beats it wherever that branch is used (theta <= theta_d)
    for d in range(2, 31):
        ref = math.tan(math.pi / (2 * d))
        td = R.theta_d(d)
        for th in np.linspace(1e-4, math.pi / 2 - 1e-4, 400):
            assert math.tan(2 * th / d) / math.sin(th) > ref
            if th <= td:
                assert R.rhp_bound(d, th) > ref


@pytest.mark.xfail(strict=True, reason="fails on part of (theta_d, pi/2) for d >= 3; see notes")
def test_rhp_exceeds_axis_disk_everywhere_claim():
    d = 9
    ref = math.tan(math.pi / (2 * d))
    for th in np.linspace(1e-4, math.pi / 2 - 1e-4, 2000):
        assert R.rhp_bound(d, th) > ref


def test_rhp_range():
    with pytest.raises(PreconditionError):
        R.rhp_bound(9, 0)
    with pytest.raises(PreconditionError):
        R.rhp_bound(9, 1.6)


# --- membership ----------------------------------------------------------------

def test_membership_examples():
    v = R.region_membership(9, 0)
    assert v.shearer and not v.critical and not v.lhp and not v.rhp
    for d in (2, 3, 9):
        v = R.region_membership(d, 0.99j * math.tan(math.pi / (2 * d)))
        assert v.rhp and v.lhp
        v = R.region_membership(d, -1.02 * R.shearer_radius(d))
        assert not v.any


def test_membership_strictness():
    d = 9
    phi = 2.0
    edge = R.lhp_bound(d, phi) * cmath.exp(1j * phi)
    assert not R.region_membership(d, edge * (1 + 1e-15)).lhp
    assert R.region_membership(d, edge * (1 - 1e-9)).lhp
    th = 0.7
    edge = R.rhp_bound(d, th) * cmath.exp(1j * th)
    assert R.region_membership(d, edge).rhp
    assert not R.region_membership(d, edge * (1 + 1e-9)).rhp


def test_membership_conjugate_symmetry():
    rng = np.random.default_rng(3)
    for _ in range(10**4):
        d = int(rng.integers(2, 12))
        z = complex(rng.normal() * 0.1, rng.normal() * 0.1)
        assert R.region_membership(d, z) == R.region_membership(d, z.conjugate())


# --- boundaries ----------------------------------------------------------------

@pytest.mark.parametrize("kind", R.KINDS)
def test_boundary_monotone_and_finite(kind):
    b = R.boundary_polyline(9, kind, 257)
    assert np.all(np.diff(b.params) > 0)
    assert np.all(np.isfinite(b.points))
    assert len(b.samples) == 257


def test_boundary_examples():
    d = 9
    b = R.boundary_polyline(d, "shearer", 100)
    assert np.allclose(np.abs(b.points), R.shearer_radius(d), rtol=1e-14)
    assert abs(b.points[0] - b.points[-1]) < 1e-9
    b = R.boundary_polyline(d, "cardioid", 101)
    assert b.params[0] == 0 and b.params[-1] == math.pi
    assert abs(b.points[0] + R.shearer_radius(d)) < 1e-15
    assert abs(b.points[-1] - R.uniqueness_threshold(d)) < 1e-15
    assert np.all(b.points[1:-1].imag > 0)
    for p, z in zip(b.params, b.points):
        assert abs(z - R.cardioid_point(d, cmath.exp(-1j * p))) < 1e-15
    b = R.boundary_polyline(d, "rhp", 101)
    assert b.params[0] == -math.pi / 2
    assert abs(b.points[0] + 1j * math.tan(math.pi / 18)) < 1e-15
    assert abs(b.points[-1] - 1j * math.tan(math.pi / 18)) < 1e-15
    b = R.boundary_polyline(d, "lhp", 101)
    assert abs(b.points[0] - 1j * math.tan(math.pi / 18)) < 1e-15
    with pytest.raises(PreconditionError):
        R.boundary_polyline(d, "rhp", 15)
    with pytest.raises(PreconditionError):
        R.boundary_polyline(d, "square", 100)


@pytest.mark.parametrize("d", [2, 3, 9, 20])
def test_theorem_regions_inside_cardioid(d):
    pts = np.concatenate([R.boundary_polyline(d, k, 334).points for k in ("critical", "lhp", "rhp")])
    pts = pts[np.abs(pts) > 0]
    assert pts.size >= 1000
    assert R.cardioid_contains_array(d, 0.999 * pts).all()


def test_boundary_conjugate_reflection():
    for kind in ("shearer", "critical", "lhp", "rhp"):
        b = R.boundary_polyline(7, kind, 64)
        assert np.array_equal(b.points[::-1], np.conj(b.points))
