"""Curve-based certification of zero-freeness, orbit refutation, and numeric
checks of the explicit curve constructions (Sokal curve, right half-plane
curve).

The certifier follows the iterated curve h(t) = t*lam on [0, 1] and
h(t) = lam / (1 + h(t-1))**d for t > 1.  If Im h stays nonnegative the
parameter is zero-free for every graph of maximum degree d+1; in practice it
suffices to follow h up to tau* + 1, where tau* is the end of the first
stretch on which arg(1 + h) is non-decreasing.

Everything runs in double precision on a discretised curve.  "Certified"
therefore means the sampled curve passed the test with the tolerances
recorded in the certificate, and "Refuted" means only that the criterion's
hypothesis failed (some sampled Im h < -tol_im), not that a zero exists.
"""

from __future__ import annotations

import cmath
import enum
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .complexgeom import arg1p_array, as_point, covered_by_polyline
from .errors import DegenerateCurveError, PreconditionError

DT = 1e-3
T_MAX = 200.0
TOL_IM = 1e-9
TOL_ARG = 1e-9
MAX_ARG_STEP = 0.05
MAX_HALVINGS = 30
NEAR_MINUS_ONE = 1e-12
SCAN_RES_CAP = 4096


class Status(str, enum.Enum):
    CERTIFIED = "Certified"
    REFUTED = "Refuted"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


@dataclass
class CurveSamples:
    """Sampled curve h on [0, t_last] with unwrapped arg(1 + h)."""

    dt: float
    t_values: np.ndarray
    points: np.ndarray
    args: np.ndarray
    stop_reason: str  # "window", "refuted" or "t_max"
    tau_star: float = math.inf


@dataclass(frozen=True)
class CertifyOptions:
    dt: float = DT
    t_max: float = T_MAX
    tol_im: float = TOL_IM
    tol_arg: float = TOL_ARG
    max_arg_step: float = MAX_ARG_STEP
    extend: float = 0.0  # keep following h this long past tau*+1 as a cross-check


@dataclass
class Certificate:
    lam: complex
    d: int
    status: Status
    tau_star: Optional[float]
    ceil_tau_star: Optional[int]
    min_im: float
    tol_im: float
    tol_arg: float
    dt: float
    t_max: float
    diagnostic: str = ""
    samples: Optional[CurveSamples] = field(default=None, repr=False, compare=False)

    def to_json_dict(self) -> dict:
        return {
            "d": self.d,
            "lambda": [self.lam.real, self.lam.imag],
            "status": self.status.value,
            "tau_star": self.tau_star,
            "ceil_tau_star": self.ceil_tau_star,
            "min_im": self.min_im,
            "tolerances": {"im": self.tol_im, "arg": self.tol_arg},
            "dt": self.dt,
            "t_max": self.t_max,
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "Certificate":
        return cls(
            lam=complex(*obj["lambda"]),
            d=int(obj["d"]),
            status=Status(obj["status"]),
            tau_star=obj["tau_star"],
            ceil_tau_star=obj["ceil_tau_star"],
            min_im=obj["min_im"],
            tol_im=obj["tolerances"]["im"],
            tol_arg=obj["tolerances"]["arg"],
            dt=obj["dt"],
            t_max=obj["t_max"],
        )


# --- the iterated curve -------------------------------------------------------

def _f(lam, d, z):
    return lam / (1 + z) ** d


def _h_at(lam, d, s, k):
    """h(k + s) for s in (0, 1] (or s = 0 when k = 0), vectorised over s."""
    z = s * lam
    for _ in range(k):
        z = _f(lam, d, z)
    return z


def _check_finite(z):
    if not np.all(np.isfinite(z)):
        raise DegenerateCurveError("curve left the finite range")
    if np.any(np.abs(1 + z) < NEAR_MINUS_ONE):
        raise DegenerateCurveError("curve sample within 1e-12 of -1")


def _step_angles(z):
    # unwrapped increments of arg(1 + z) along consecutive samples
    w = 1 + z
    return np.angle(w[1:] * np.conj(w[:-1]))


def h_curve(d, lam, dt: float = DT, t_max: float = T_MAX, *, tol_im: float = TOL_IM,
            tol_arg: float = TOL_ARG, max_arg_step: float = MAX_ARG_STEP,
            stop_at_window: bool = True, extend: float = 0.0,
            trap=None) -> CurveSamples:
    """Sample the iterated curve for Im(lam) > 0.

    A shared s-grid on (0, 1] is used for every unit period, so that
    h(k + s) = f(h(k - 1 + s)) holds sample by sample.  The grid starts
    uniform with step dt and is halved locally wherever arg(1 + h) jumps by
    more than ``max_arg_step`` between neighbours.  Stops when some
    Im h < -tol_im ("refuted"), once [0, tau* + 1 + extend] is covered
    ("window", only if ``stop_at_window``), once the curve is provably trapped
    in a contracting disk inside Im > 0 ("trapped", if ``trap``; defaults
    to ``stop_at_window``), or at t_max.
    """
    lam = as_point(lam)
    if not lam.imag > 0:
        raise PreconditionError("h_curve needs Im(lam) > 0")
    if not 0 < dt <= 0.1:
        raise PreconditionError("dt must lie in (0, 0.1]")
    if t_max > 1e4:
        raise PreconditionError("t_max must be <= 1e4")
    if trap is None:
        trap = stop_at_window
    n0 = int(math.ceil(1.0 / dt))
    grid = np.linspace(0.0, 1.0, n0 + 1)
    min_ds = (1.0 / n0) / 2**MAX_HALVINGS
    periods = []  # values of h on the grid, one array per unit period

    t_chunks = []
    h_chunks = []
    a_chunks = []
    last_arg = 0.0
    last_h = 0j
    run_max = -math.inf
    tau = math.inf
    k = 0
    reason = "t_max"
    while k < t_max:
        cur = grid * lam if k == 0 else _f(lam, d, periods[-1])
        _check_finite(cur)
        # local refinement of the shared grid
        for _ in range(MAX_HALVINGS):
            seq = cur if k == 0 else np.concatenate(([last_h], cur[1:]))
            steps = np.abs(_step_angles(seq))
            gaps = np.diff(grid)
            bad = np.nonzero((steps > max_arg_step) & (gaps > min_ds))[0]
            if bad.size == 0:
                break
            mids = 0.5 * (grid[bad] + grid[bad + 1])
            new_vals = [_h_at(lam, d, mids, j) for j in range(k + 1)]
            pos = bad + 1
            grid = np.insert(grid, pos, mids)
            for j in range(k):
                periods[j] = np.insert(periods[j], pos, new_vals[j])
            cur = np.insert(cur, pos, new_vals[k])
            _check_finite(cur)
        periods.append(cur)

        s_part = grid if k == 0 else grid[1:]
        h_part = cur if k == 0 else cur[1:]
        seq = h_part if k == 0 else np.concatenate(([last_h], h_part))
        inc = _step_angles(seq)
        if k == 0:
            a_part = np.concatenate(([math.atan2(h_part[0].imag, 1 + h_part[0].real)],
                                     np.angle(1 + h_part[0]) + np.cumsum(inc)))
        else:
            a_part = last_arg + np.cumsum(inc)
        t_part = k + s_part
        t_chunks.append(t_part)
        h_chunks.append(h_part)
        a_chunks.append(a_part)
        last_arg = float(a_part[-1])
        last_h = complex(h_part[-1])

        if math.isinf(tau):
            prev_max = np.maximum.accumulate(np.concatenate(([run_max], a_part)))[:-1]
            drop = np.nonzero(a_part < prev_max - tol_arg)[0]
            if drop.size:
                j = int(drop[0])
                if j > 0:
                    tau = float(t_part[j - 1])
                else:
                    tau = float(t_chunks[-2][-1]) if len(t_chunks) > 1 else 0.0
            else:
                run_max = max(run_max, float(a_part.max()))

        neg = np.nonzero(h_part.imag < -tol_im)[0]
        if neg.size:
            # keep samples up to and including the first violation
            cut = int(neg[0]) + 1
            t_chunks[-1] = t_part[:cut]
            h_chunks[-1] = h_part[:cut]
            a_chunks[-1] = a_part[:cut]
            reason = "refuted"
            break
        k += 1
        if stop_at_window and not math.isinf(tau) and k >= tau + 1 + extend:
            reason = "window"
            break
        if trap and k >= 2 and _trapped(lam, d, h_part, tol_im):
            reason = "trapped"
            break

    return CurveSamples(
        dt=dt,
        t_values=np.concatenate(t_chunks),
        points=np.concatenate(h_chunks),
        args=np.concatenate(a_chunks),
        stop_reason=reason,
        tau_star=tau,
    )


def _trapped(lam, d, h_part, tol_im):
    """True when a disk around the last sample provably holds all later h.

    B = D(c, rho) with c the last sample and rho covering the whole last
    period.  If |f(c) - c| + L rho <= rho, with L a bound for |f'| on B, then
    f(B) is inside B, so every later value of h stays in B.  Requiring B in
    Im > 0 then settles Im h >= 0 for all t.
    """
    c = complex(h_part[-1])
    fc = lam / (1 + c) ** d
    delta = abs(fc - c)
    spread = float(np.abs(h_part - c).max())
    rho = max(spread, 1e-15 * max(1.0, abs(c)))
    for _ in range(4):
        gap = abs(1 + c) - rho
        if gap <= 0:
            return False
        lip = d * abs(lam) / gap ** (d + 1)
        if lip >= 1:
            return False
        if delta + lip * rho <= rho * (1 - 1e-9):
            break
        rho = max(rho, 2 * delta / (1 - lip))
    else:
        return False
    return c.imag - rho > tol_im


def tau_star(samples: CurveSamples, tol_arg: float = TOL_ARG) -> float:
    """Largest sampled t' with arg(1+h) non-decreasing (within tol_arg) on [0, t'].

    Returns inf when no decrease was sampled.
    """
    a = samples.args
    prev_max = np.maximum.accumulate(a)
    drop = np.nonzero(a[1:] < prev_max[:-1] - tol_arg)[0]
    if drop.size == 0:
        return math.inf
    return float(samples.t_values[int(drop[0])])


def _window_checks(samples: CurveSamples, lam: complex, d: int, tau: float, tol_arg: float):
    t = samples.t_values
    a = samples.args
    i_tau = int(np.searchsorted(t, tau, side="left"))
    i_end = int(np.searchsorted(t, tau + 1, side="right"))
    a_tau = float(a[i_tau])
    if a_tau > cmath.phase(lam) / d + tol_arg:
        return False, f"arg(1+h(tau*)) = {a_tau!r} exceeds arg(lam)/d"
    seg = a[i_tau:i_end]
    run_min = np.minimum.accumulate(seg)
    if seg.size > 1 and np.any(seg[1:] > run_min[:-1] + tol_arg):
        j = int(np.nonzero(seg[1:] > run_min[:-1] + tol_arg)[0][0]) + 1
        return False, f"arg(1+h) increases again at t = {float(t[i_tau + j])!r} inside [tau*, tau*+1]"
    return True, ""


def certify_simons(d, lam, opts: Optional[CertifyOptions] = None,
                   keep_samples: bool = False) -> Certificate:
    """Run the iterated-curve test for one parameter value.

    Parameters below the real axis are conjugated first (zeros of real
    polynomials come in conjugate pairs); real parameters are reported as
    Inconclusive because the test needs Im(lam) > 0.
    """
    opts = opts or CertifyOptions()
    lam_in = as_point(lam)
    if lam_in == 0:
        raise PreconditionError("lam must be nonzero")
    d = int(d)
    base = dict(lam=lam_in, d=d, tol_im=opts.tol_im, tol_arg=opts.tol_arg,
                dt=opts.dt, t_max=opts.t_max)
    if lam_in.imag == 0:
        return Certificate(status=Status.INCONCLUSIVE, tau_star=None, ceil_tau_star=None,
                           min_im=0.0, diagnostic="real lambda: the curve test needs Im(lam) > 0",
                           **base)
    z = lam_in if lam_in.imag > 0 else lam_in.conjugate()
    kw = dict(tol_im=opts.tol_im, tol_arg=opts.tol_arg, max_arg_step=opts.max_arg_step)
    try:
        s = h_curve(d, z, opts.dt, opts.t_max, extend=opts.extend, **kw)
    except DegenerateCurveError as exc:
        return Certificate(status=Status.INCONCLUSIVE, tau_star=None, ceil_tau_star=None,
                           min_im=math.nan, diagnostic=f"degenerate curve: {exc}", **base)
    tau = s.tau_star
    tau_out = None if math.isinf(tau) else tau
    ceil_out = None if math.isinf(tau) else int(math.ceil(tau))
    min_im = float(s.points.imag.min())
    sample_ref = s if keep_samples else None
    if s.stop_reason == "refuted":
        return Certificate(status=Status.REFUTED, tau_star=tau_out, ceil_tau_star=ceil_out,
                           min_im=min_im, samples=sample_ref,
                           diagnostic="Im h(t) < -tol_im: criterion hypothesis failed", **base)
    if s.stop_reason == "trapped":
        return Certificate(status=Status.CERTIFIED, tau_star=tau_out, ceil_tau_star=ceil_out,
                           min_im=min_im, samples=sample_ref,
                           diagnostic="curve trapped in a contracting disk inside Im > 0", **base)
    if math.isinf(tau):
        return Certificate(status=Status.INCONCLUSIVE, tau_star=None, ceil_tau_star=None,
                           min_im=min_im, samples=sample_ref,
                           diagnostic="arg(1+h) never decreased before t_max", **base)
    ok, why = _window_checks(s, z, d, tau, opts.tol_arg)
    if ok:
        return Certificate(status=Status.CERTIFIED, tau_star=tau_out, ceil_tau_star=ceil_out,
                           min_im=min_im, samples=sample_ref, **base)
    # stopping rule not met: keep following h to t_max looking for Im h < 0
    try:
        s2 = h_curve(d, z, opts.dt, opts.t_max, stop_at_window=False, trap=True, **kw)
    except DegenerateCurveError as exc:
        return Certificate(status=Status.INCONCLUSIVE, tau_star=tau_out, ceil_tau_star=ceil_out,
                           min_im=min_im, diagnostic=f"{why}; degenerate curve: {exc}", **base)
    min_im = float(s2.points.imag.min())
    if s2.stop_reason == "trapped":
        return Certificate(status=Status.CERTIFIED, tau_star=tau_out, ceil_tau_star=ceil_out,
                           min_im=min_im, samples=s2 if keep_samples else None,
                           diagnostic=f"{why}; curve trapped in a contracting disk inside Im > 0",
                           **base)
    status = Status.REFUTED if s2.stop_reason == "refuted" else Status.INCONCLUSIVE
    return Certificate(status=status, tau_star=tau_out, ceil_tau_star=ceil_out, min_im=min_im,
                       samples=s2 if keep_samples else None, diagnostic=why, **base)


# --- grid scans -------------------------------------------------------------

@dataclass
class ScanResult:
    d: int
    window: tuple
    res: int
    re: np.ndarray
    im: np.ndarray
    status: np.ndarray  # object array of Status, indexed [i_im, i_re]
    ceil_tau_star: np.ndarray  # int array, -1 where absent

    def rows(self):
        """(re, im, status, ceil_tau_star) per cell, row-major in (im, re)."""
        for i, y in enumerate(self.im):
            for j, x in enumerate(self.re):
                c = int(self.ceil_tau_star[i, j])
                yield float(x), float(y), self.status[i, j], (None if c < 0 else c)


def _scan_row(args):
    d, xs, y, opts = args
    out = []
    for x in xs:
        c = certify_simons(d, complex(x, y), opts)
        out.append((c.status, -1 if c.ceil_tau_star is None else c.ceil_tau_star))
    return out


def cell_centres(window, res):
    re_min, re_max, im_min, im_max = window
    step_re = (re_max - re_min) / res
    step_im = (im_max - im_min) / res
    re = re_min + (np.arange(res) + 0.5) * step_re
    im = im_min + (np.arange(res) + 0.5) * step_im
    return re, im


def scan_grid(d, window, res: int, opts: Optional[CertifyOptions] = None,
              threads: int = 1) -> ScanResult:
    """Certify the centre of every cell of a res x res grid over
    window = (re_min, re_max, im_min, im_max)."""
    if not 1 <= res <= SCAN_RES_CAP:
        raise PreconditionError(f"res must lie in [1, {SCAN_RES_CAP}]")
    re_min, re_max, im_min, im_max = map(float, window)
    if not (re_max > re_min and im_max > im_min):
        raise PreconditionError("window must have positive extent")
    opts = opts or CertifyOptions()
    re, im = cell_centres((re_min, re_max, im_min, im_max), res)
    jobs = [(d, re, y, opts) for y in im]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(_scan_row, jobs))
    else:
        rows = [_scan_row(j) for j in jobs]
    status = np.empty((res, res), dtype=object)
    ceil = np.full((res, res), -1, dtype=int)
    for i, row in enumerate(rows):
        for j, (st, c) in enumerate(row):
            status[i, j] = st
            ceil[i, j] = c
    return ScanResult(d=int(d), window=(re_min, re_max, im_min, im_max), res=res,
                      re=re, im=im, status=status, ceil_tau_star=ceil)


# --- orbits of the univariate tree recurrence --------------------------------

@dataclass
class OrbitResult:
    points: list
    min_dist_to_minus1: float
    crossed: bool
    reason: str  # "n_max", "diverged" or "near_minus_one"
    coords: str = "z"  # "z" for x_n, "w" for w_n = log(1 + x_n)

    @property
    def one_plus(self) -> np.ndarray:
        """1 + x_n for every iterate, whatever the coordinates."""
        p = np.asarray(self.points, dtype=np.complex128)
        return np.exp(p) if self.coords == "w" else 1 + p

    def to_json_dict(self) -> dict:
        return {
            "coords": self.coords,
            "points": [[p.real, p.imag] for p in self.points],
            "min_dist_to_minus1": self.min_dist_to_minus1,
            "crossed": self.crossed,
            "reason": self.reason,
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "OrbitResult":
        return cls(points=[complex(a, b) for a, b in obj["points"]],
                   min_dist_to_minus1=obj["min_dist_to_minus1"], crossed=obj["crossed"],
                   reason=obj["reason"], coords=obj["coords"])


ORBIT_CAP = 10**6


def orbit(d, lam, n_max: int) -> OrbitResult:
    """Iterate x -> lam / (1 + x)**d from 0.

    Every iterate lies in the set generated by the tree recurrence, so an
    iterate at -1 would exhibit a zero.  Stops after n_max steps, when
    |x| > 1e9, or when |1 + x| < 1e-12.
    """
    if not 0 <= n_max <= ORBIT_CAP:
        raise PreconditionError(f"n_max must lie in [0, {ORBIT_CAP}]")
    lam = as_point(lam)
    d = int(d)
    x = 0j
    pts = [x]
    min_dist = 1.0
    crossed = False
    reason = "n_max"
    for _ in range(n_max):
        x = lam / (1 + x) ** d
        pts.append(x)
        dist = abs(1 + x)
        min_dist = min(min_dist, dist)
        if 1 + x.real < 0:
            crossed = True
        if dist < NEAR_MINUS_ONE:
            reason = "near_minus_one"
            break
        if abs(x) > 1e9:
            reason = "diverged"
            break
    return OrbitResult(points=pts, min_dist_to_minus1=min_dist, crossed=crossed, reason=reason)


def orbit_w(d, lam, n_max: int) -> OrbitResult:
    """Iterate g(w) = log(1 + lam e^{-d w}) from w = 0 (principal log).

    Mirrors ``orbit`` through w = log(1 + x); stops with reason
    "near_minus_one" when 1 + lam e^{-d w} is within 1e-12 of 0.
    """
    if not 0 <= n_max <= ORBIT_CAP:
        raise PreconditionError(f"n_max must lie in [0, {ORBIT_CAP}]")
    lam = as_point(lam)
    d = int(d)
    w = 0j
    pts = [w]
    min_dist = 1.0
    crossed = False
    reason = "n_max"
    for _ in range(n_max):
        u = 1 + lam * cmath.exp(-d * w)
        if abs(u) < NEAR_MINUS_ONE:
            reason = "near_minus_one"
            min_dist = min(min_dist, abs(u))
            break
        w = complex(math.log(abs(u)), math.atan2(u.imag + 0.0, u.real))
        pts.append(w)
        min_dist = min(min_dist, abs(u))
        if u.real < 0:
            crossed = True
        if abs(w) > 1e9:
            reason = "diverged"
            break
    return OrbitResult(points=pts, min_dist_to_minus1=min_dist, crossed=crossed,
                       reason=reason, coords="w")


# --- explicit curve constructions ------------------------------------------

@dataclass
class CheckResult:
    ok: bool
    failed: Optional[str]
    checks: dict

    def __bool__(self):
        return self.ok


def _run_checks(items):
    checks = {}
    failed = None
    for name, passed, detail in items:
        checks[name] = {"passed": bool(passed), **detail}
        if not passed and failed is None:
            failed = name
    return CheckResult(ok=failed is None, failed=failed, checks=checks)


@dataclass(frozen=True)
class SokalParams:
    d: int
    epsilon: float
    delta: float
    theta: float = 0.0

    def __post_init__(self):
        if int(self.d) != self.d or self.d < 2:
            raise PreconditionError("d must be an integer >= 2")
        if not 0 < self.epsilon < 1:
            raise PreconditionError("epsilon must lie in (0, 1)")
        if not self.delta > 0:
            raise PreconditionError("delta must be > 0")
        if not self.theta >= 0:
            raise PreconditionError("theta must be >= 0")

    @property
    def lambda0(self) -> float:
        d, e = self.d, self.epsilon
        return (1 - e) * (d - e) ** d / (d - 1) ** (d + 1)

    @property
    def lam(self) -> complex:
        return self.lambda0 * cmath.exp(1j * self.theta)

    @property
    def z0(self) -> float:
        return (1 - self.epsilon) / (self.d - 1)

    @property
    def z_plus(self) -> complex:
        return complex(1 - self.epsilon, self.delta) / (self.d - 1)

    @property
    def z_minus(self) -> complex:
        return complex(1 - self.epsilon, -self.delta) / (self.d - 1)


def sokal_fixed_point_residual(params: SokalParams) -> float:
    p = params
    return abs(p.lambda0 / (1 + p.z0) ** p.d - p.z0)


def _phase(z):
    return math.atan2(z.imag, z.real)


def sokal_curve_check(params: SokalParams, n_grid: int = 1000,
                      tol: float = 1e-12) -> CheckResult:
    """Numerically verify the conditions behind the Sokal-region curve.

    The curve is the polyline z_- -> 0 -> z_+; each condition is evaluated
    in floating point and the first failing one is named in ``failed``.
    """
    p = params
    d, lam = p.d, p.lam
    zp, zm = p.z_plus, p.z_minus

    def f(z):
        return lam / (1 + z) ** d

    fzp, fzm = f(zp), f(zm)
    res = sokal_fixed_point_residual(p)
    ts = np.linspace(0.0, 1.0, n_grid)
    a_plus = arg1p_array(lam / (1 + ts * zp) ** d)
    a_minus = arg1p_array(lam / (1 + ts * zm) ** d)
    h = np.concatenate((-np.linspace(-1.0, 0.0, n_grid)[:-1] * zm, ts * zp))
    fh = lam / (1 + h) ** d
    covered = covered_by_polyline(fh, [zm, 0j, zp], tol=1e-12)
    eq27 = _phase(fzp / (1 + fzp)) + _phase(zp / (1 + zp))
    items = [
        ("fixed_point", res < 1e-12, {"residual": res}),
        ("small_parameters",
         p.delta < 1 and p.theta < math.pi / 10 and abs(_phase(zp)) <= math.pi / 10,
         {"delta": p.delta, "theta": p.theta, "arg_z_plus": _phase(zp)}),
        ("arg_f_z_minus_between", _phase(zp) > _phase(fzm) > 0,
         {"arg_z_plus": _phase(zp), "arg_f_z_minus": _phase(fzm)}),
        ("arg_f_z_plus_between", _phase(zm) < _phase(fzp) < 0,
         {"arg_z_minus": _phase(zm), "arg_f_z_plus": _phase(fzp)}),
        ("moduli", abs(fzm) < abs(zp) and abs(fzp) < abs(zm),
         {"abs_f_z_minus": abs(fzm), "abs_f_z_plus": abs(fzp), "abs_z": abs(zp)}),
        ("arg_sum_nonnegative", eq27 >= -tol, {"value": eq27}),
        ("arg1p_f_plus_nonincreasing", bool(np.all(np.diff(a_plus) <= tol)),
         {"max_increase": float(np.diff(a_plus).max())}),
        ("arg1p_f_minus_nondecreasing", bool(np.all(np.diff(a_minus) >= -tol)),
         {"max_decrease": float(-np.diff(a_minus).min())}),
        ("image_covered", bool(covered.all()), {"uncovered": int((~covered).sum())}),
    ]
    return _run_checks(items)


@dataclass(frozen=True)
class RhpCurveParams:
    d: int
    lam: complex
    beta: float
    psi: float
    r2: float

    def __post_init__(self):
        lam = as_point(self.lam)
        object.__setattr__(self, "lam", lam)
        theta = math.atan2(lam.imag, lam.real)
        if not (abs(lam) > 0 and 0 < theta <= math.pi / 2 + 1e-15):
            raise PreconditionError("lam must be r e^{i theta} with r > 0, theta in (0, pi/2]")
        if not (0 <= self.beta < math.pi / 2 and 0 <= self.psi < math.pi / 2 and self.r2 >= 0):
            raise PreconditionError("need beta, psi in [0, pi/2) and r2 >= 0")

    @property
    def r(self) -> float:
        return abs(self.lam)

    @property
    def theta(self) -> float:
        return math.atan2(self.lam.imag, self.lam.real)

    @property
    def A(self) -> complex:
        return self.r2 * cmath.exp(-1j * self.beta)

    @property
    def B(self) -> complex:
        return 1j * math.tan(self.psi)


def _max_radius_at_angle(angle: float, target: float) -> float:
    # largest t >= 0 with arg(1 + t e^{i angle}) <= target (inf if unbounded)
    denom = math.sin(angle) - math.cos(angle) * math.tan(target)
    if denom <= 0:
        return math.inf
    return math.tan(target) / denom


def rhp_proof_params(d, lam) -> RhpCurveParams:
    """Curve parameters chosen as in the proof of the right half-plane bound."""
    from .regions import beta_star, theta_d

    lam = as_point(lam)
    d = int(d)
    theta = math.atan2(lam.imag, lam.real)
    r = abs(lam)
    target = (math.pi / 2 - theta) / d
    if theta <= theta_d(d):
        beta, psi = theta, 2 * theta / d
        r2 = _max_radius_at_angle(theta, target)
        if math.isinf(r2):
            r2 = r
    else:
        beta = beta_star(d, theta)
        psi = (theta + beta) / d
        r2 = math.tan(math.pi / (2 * d)) if theta == math.pi / 2 else _max_radius_at_angle(beta, target)
    return RhpCurveParams(d=d, lam=lam, beta=beta, psi=psi, r2=r2)


def rhp_curve_check(params: RhpCurveParams, n_grid: int = 1000,
                    tol: float = 1e-12) -> CheckResult:
    """Check the five closed-form conditions on (beta, psi, r2), then verify
    on a t-grid that f(h(t)) lands in L1 u L2 for the polyline A -> 0 -> B.
    Condition names are "1".."5" in the order they are usually stated."""
    p = params
    d, r, theta = p.d, p.r, p.theta
    beta, psi, r2 = p.beta, p.psi, p.r2
    c4 = theta + d * math.atan2(r2 * math.sin(beta), 1 + r2 * math.cos(beta))
    items = [
        ("1", theta - d * psi >= -beta - tol, {"value": theta - d * psi + beta}),
        ("2", r2 >= r - tol, {"r2": r2, "r": r}),
        ("3", r * math.sin(theta) <= math.tan(psi) + tol,
         {"r_sin_theta": r * math.sin(theta), "tan_psi": math.tan(psi)}),
        ("4", c4 <= math.pi / 2 + tol, {"value": c4}),
        ("5", theta >= beta - tol, {"theta": theta, "beta": beta}),
    ]
    ts = np.linspace(-1.0, 1.0, n_grid)
    h = np.where(ts <= 0, -ts * p.A, ts * p.B)
    g = p.lam / (1 + h) ** d
    in_l1 = (g.real >= -tol) & (g.imag >= -tol) & (g.imag <= math.tan(psi) + tol)
    ang = np.arctan2(g.imag, g.real)
    in_l2 = (ang >= -beta - tol) & (ang <= tol) & (g.imag >= -r2 * math.sin(beta) - tol)
    member = in_l1 | in_l2
    items.append(("image_in_L1_or_L2", bool(member.all()), {"outside": int((~member).sum())}))
    return _run_checks(items)
