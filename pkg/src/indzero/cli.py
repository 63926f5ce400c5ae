"""Command-line front end.

Exit codes: 0 success / Certified, 2 bad arguments, 3 Refuted,
4 Inconclusive, 5 size cap exceeded, 6 output path not writable.
Negative numbers after a flag need the ``--flag=value`` form, e.g.
``--lambda=-0.17,0``.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from . import certify as C
from . import indpoly as P
from . import regions as R
from ._svg import Figure
from .errors import CapExceeded, GraphParseError, IndZeroError
from .graphs import TREE_ENUM_LIMIT, max_degree, parse_edge_list, to_edge_list

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_REFUTED = 3
EXIT_INCONCLUSIVE = 4
EXIT_CAP = 5
EXIT_UNWRITABLE = 6

STATUS_EXIT = {
    C.Status.CERTIFIED: EXIT_OK,
    C.Status.REFUTED: EXIT_REFUTED,
    C.Status.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}

CURVE_STYLE = {
    "shearer": ("#555555", "4 3", "Shearer disk"),
    "cardioid": ("black", None, "cardioid U_d"),
    "critical": ("#d62728", None, "critical vicinity of -lambda*"),
    "lhp": ("#1f77b4", None, "left half-plane region"),
    "rhp": ("#2ca02c", None, "right half-plane region"),
}


class UsageError(Exception):
    pass


class Unwritable(Exception):
    pass


# --- number formatting --------------------------------------------------------

def fmt(x) -> str:
    """17 significant digits: lossless for doubles."""
    return f"{float(x):.17g}"


def dumps(obj, indent=0, step=2) -> str:
    """JSON with every float printed to 17 significant digits.

    Non-finite floats become null.
    """
    pad = " " * (indent + step)
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt(obj) if math.isfinite(obj) else "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        parts = [f"{pad}{json.dumps(str(k))}: {dumps(v, indent + step, step)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(parts) + "\n" + " " * indent + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        if all(isinstance(v, (int, float, np.number)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(dumps(v) for v in obj) + "]"
        parts = [pad + dumps(v, indent + step, step) for v in obj]
        return "[\n" + ",\n".join(parts) + "\n" + " " * indent + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def cjson(z):
    return [float(z.real), float(z.imag)]


# --- argument types -----------------------------------------------------------

def parse_complex(text: str) -> complex:
    """'re,im' or a single real."""
    parts = text.split(",")
    if len(parts) not in (1, 2):
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 're,im', got {text!r}") from None
    if not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError("lambda must be finite")
    return complex(vals[0], vals[1] if len(vals) == 2 else 0.0)


def parse_window(text: str):
    try:
        vals = [float(p) for p in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad window {text!r}") from None
    if len(vals) != 4 or not all(math.isfinite(v) for v in vals):
        raise argparse.ArgumentTypeError("window is re_min,re_max,im_min,im_max")
    if not (vals[1] > vals[0] and vals[3] > vals[2]):
        raise argparse.ArgumentTypeError("window must have positive extent")
    return tuple(vals)


def d_type(text: str) -> int:
    try:
        d = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"d must be an integer, got {text!r}") from None
    if d < 2:
        raise argparse.ArgumentTypeError("d must be >= 2")
    return d


def pos_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


def nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("expected a nonnegative integer")
    return v


def resolve_threads(value):
    if value is None:
        env = os.environ.get("INDZERO_THREADS")
        if env is None or env.strip() == "":
            return 1
        try:
            value = int(env)
        except ValueError:
            raise UsageError(f"INDZERO_THREADS must be an integer, got {env!r}") from None
    if value < 1:
        raise UsageError("thread count must be >= 1")
    return value


# --- output -------------------------------------------------------------------

def write_output(text: str, out):
    if out is None or out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise Unwritable(f"cannot write {out}: {exc.strerror or exc}") from None


def config_of(ns) -> dict:
    cfg = {}
    for k, v in sorted(vars(ns).items()):
        if k in ("func", "out"):
            continue
        if isinstance(v, complex):
            v = cjson(v)
        elif isinstance(v, tuple):
            v = list(v)
        cfg[k] = v
    return cfg


def csv_text(header, rows, config) -> str:
    # first line carries the resolved config as a comment, then the header row
    lines = ["# config: " + json.dumps(config, sort_keys=True), ",".join(header)]
    for row in rows:
        lines.append(",".join(fmt(v) if isinstance(v, (float, np.floating)) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def read_graph(path):
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read graph file {path}: {exc.strerror or exc}") from None
    return parse_edge_list(data)


# --- figures ------------------------------------------------------------------

def _region_figure(d, kinds, samples, title, legend):
    curves = {k: R.boundary_polyline(d, k, samples) for k in kinds}
    cusp = 1j * math.tan(math.pi / (2 * d))
    pts = np.concatenate([c.points for c in curves.values()] + [np.array([cusp, -cusp])])
    fig = Figure.fit(pts, title=title)
    fig.axes()
    for k, c in curves.items():
        color, dash, label = CURVE_STYLE[k]
        pts = c.points
        if k in ("critical", "lhp", "rhp"):
            pts = _close_region(d, k, pts)
        elif k == "cardioid":
            pts = np.concatenate((pts, np.conj(pts[-2::-1])))
        fig.polyline(pts, color, 1.6, dash, label=k)
    fig.marker(cusp, "#9467bd", label="+i tan(pi/(2d))")
    fig.marker(-cusp, "#9467bd", label="-i tan(pi/(2d))")
    if legend:
        fig.legend([(CURVE_STYLE[k][2], CURVE_STYLE[k][0], CURVE_STYLE[k][1]) for k in kinds])
    return fig


def _close_region(d, kind, pts):
    # outer curve plus the remaining sides so the region reads as a closed shape
    if kind == "critical":
        ls = R.shearer_radius(d)
        tm = R.critical_theta_max(d)
        arc = ls * np.exp(1j * np.linspace(math.pi + tm, math.pi - tm, 64))
        return np.concatenate((pts, arc))
    return np.concatenate((pts, [0j, pts[0]]))


# --- subcommands ----------------------------------------------------------------

def cmd_regions(ns):
    kinds = list(R.KINDS) if ns.curve == "all" else [ns.curve]
    cfg = config_of(ns)
    if ns.format == "svg":
        fig = _region_figure(ns.d, kinds, ns.samples, f"zero-free regions, d={ns.d}", legend=True)
        fig.metadata = cfg
        write_output(fig.render(), ns.out)
        return EXIT_OK
    curves = [R.boundary_polyline(ns.d, k, ns.samples) for k in kinds]
    if ns.format == "json":
        obj = {"config": cfg, "curves": [
            {"kind": c.kind, "d": c.d, "params": [float(p) for p in c.params],
             "points": [cjson(z) for z in c.points]} for c in curves]}
        write_output(dumps(obj) + "\n", ns.out)
        return EXIT_OK
    if len(curves) == 1:
        c = curves[0]
        rows = [(float(p), float(z.real), float(z.imag)) for p, z in zip(c.params, c.points)]
        write_output(csv_text(["param", "re", "im"], rows, cfg), ns.out)
    else:
        rows = [(c.kind, float(p), float(z.real), float(z.imag))
                for c in curves for p, z in zip(c.params, c.points)]
        write_output(csv_text(["curve", "param", "re", "im"], rows, cfg), ns.out)
    return EXIT_OK


def _opts(ns):
    return C.CertifyOptions(dt=ns.dt, t_max=ns.t_max, tol_im=ns.tol_im, tol_arg=ns.tol_arg)


def cmd_certify(ns):
    if ns.lam == 0:
        raise UsageError("lambda must be nonzero")
    cert = C.certify_simons(ns.d, ns.lam, _opts(ns))
    obj = cert.to_json_dict()
    obj["diagnostic"] = cert.diagnostic
    obj["config"] = config_of(ns)
    write_output(dumps(obj) + "\n", ns.out)
    return STATUS_EXIT[cert.status]


SCAN_COLORS = ["#08306b", "#2171b5", "#4292c6", "#6baed6", "#9ecae1", "#c6dbef", "#deebf7"]


def cmd_scan(ns):
    threads = resolve_threads(ns.threads)
    ns.threads = threads
    res = C.scan_grid(ns.d, ns.window, ns.res, _opts(ns), threads=threads)
    cfg = config_of(ns)
    if ns.format == "svg":
        re_min, re_max, im_min, im_max = res.window
        fig = Figure(re_min, re_max, im_min, im_max, title=f"ceil(tau*) scan, d={ns.d}")
        fig.metadata = cfg
        sx = (re_max - re_min) / ns.res
        sy = (im_max - im_min) / ns.res
        for x, y, st, c in res.rows():
            if st is C.Status.CERTIFIED:
                # no tau* (trapped curve) gets the darkest shade
                k = len(SCAN_COLORS) if c is None else min(c, len(SCAN_COLORS))
                color = SCAN_COLORS[k - 1]
            elif st is C.Status.REFUTED:
                color = "#bdbdbd"
            else:
                color = "#fdd0a2"
            fig.rect(x - sx / 2, y - sy / 2, x + sx / 2, y + sy / 2, color)
        fig.axes()
        write_output(fig.render(), ns.out)
        return EXIT_OK
    rows = [(x, y, st.value, "" if c is None else c) for x, y, st, c in res.rows()]
    write_output(csv_text(["re", "im", "status", "ceil_tau_star"], rows, cfg), ns.out)
    return EXIT_OK


def cmd_zpoly(ns):
    G = read_graph(ns.graph)
    poly = P.ind_poly(G)
    obj = {"config": config_of(ns), "n": G.n, "num_edges": G.num_edges,
           "coeffs": list(poly.coeffs)}
    if ns.lam is not None:
        obj["lambda"] = cjson(ns.lam)
        obj["value"] = cjson(P.evaluate(poly, ns.lam))
    write_output(dumps(obj) + "\n", ns.out)
    return EXIT_OK


def cmd_zscan(ns):
    threads = resolve_threads(ns.threads)
    ns.threads = threads
    if ns.n_max > TREE_ENUM_LIMIT:
        raise CapExceeded(f"n_max={ns.n_max} exceeds enumeration guardrail {TREE_ENUM_LIMIT}")
    trees, _, mat = P.tree_catalog(ns.n_max, ns.d + 1)
    chunks = np.array_split(np.arange(len(trees)), threads)
    chunks = [c for c in chunks if c.size]

    def part(idx):
        vals = np.abs(P.evaluate_matrix(mat[idx], [ns.lam])[:, 0])
        j = int(np.argmin(vals))
        return float(vals[j]), int(idx[j])

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(part, chunks))
    else:
        parts = [part(c) for c in chunks]
    # ties broken by catalog order
    best, idx = min(parts, key=lambda t: (t[0], t[1]))
    witness = trees[idx]
    obj = {"config": config_of(ns), "catalog_size": len(trees), "min_abs": best,
           "witness_index": idx, "witness_n": witness.n,
           "witness_edges": [list(e) for e in witness.edges()],
           "witness_edge_list": to_edge_list(witness)}
    write_output(dumps(obj) + "\n", ns.out)
    return EXIT_OK


def cmd_approx(ns):
    G = read_graph(ns.graph)
    poly = P.ind_poly(G)
    bound = ns.root_bound
    bound_source = "user" if bound is not None else None
    if bound is None:
        dg = max_degree(G)
        if dg >= 3:
            bound = R.shearer_radius(dg - 1)
            bound_source = f"shearer_radius({dg - 1})"
        elif poly.degree > 0:
            bound = P.min_root_modulus(poly) * (1 - 1e-9)
            bound_source = "numerical root modulus"
    approx = P.taylor_log_z(poly, ns.lam, ns.m, root_lower_bound=bound)
    z = P.evaluate(poly, ns.lam)
    obj = {"config": config_of(ns), "order": approx.order,
           "approx_logZ": cjson(approx.value),
           "tail_bound": approx.tail_bound, "root_lower_bound": bound,
           "root_bound_source": bound_source}
    if z != 0:
        exact = complex(math.log(abs(z)), math.atan2(z.imag, z.real))
        obj["exact_logZ"] = cjson(exact)
        obj["exact_Z"] = cjson(z)
        approx_z = np.exp(approx.value)
        obj["rel_error"] = float(abs(approx_z - z) / abs(z))
    else:
        obj["exact_logZ"] = None
        obj["rel_error"] = None
    write_output(dumps(obj) + "\n", ns.out)
    return EXIT_OK


def cmd_orbit(ns):
    run = C.orbit_w if ns.coords == "w" else C.orbit
    res = run(ns.d, ns.lam, ns.n)
    obj = res.to_json_dict()
    obj["config"] = config_of(ns)
    write_output(dumps(obj) + "\n", ns.out)
    return EXIT_OK


def cmd_atlas(ns):
    fig = _region_figure(ns.d, list(R.KINDS), ns.samples, f"zero-free regions atlas, d={ns.d}",
                         legend=True)
    ls = R.shearer_radius(ns.d)
    fig.marker(complex(-ls), "black", 2.5, label="-lambda*")
    fig.marker(complex(R.uniqueness_threshold(ns.d)), "black", 2.5, label="lambda_c")
    fig.metadata = config_of(ns)
    write_output(fig.render(), ns.out)
    return EXIT_OK


# --- parser ---------------------------------------------------------------------

def _add_certify_opts(p):
    p.add_argument("--dt", type=float, default=C.DT, help="base curve step (default %(default)s)")
    p.add_argument("--t-max", dest="t_max", type=float, default=C.T_MAX)
    p.add_argument("--tol-im", dest="tol_im", type=float, default=C.TOL_IM)
    p.add_argument("--tol-arg", dest="tol_arg", type=float, default=C.TOL_ARG)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="indzero", description=(
        "Zero-free regions of the independence polynomial on graphs of maximum degree d+1."))
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("regions", help="export region boundaries")
    p.add_argument("--d", type=d_type, required=True)
    p.add_argument("--curve", choices=list(R.KINDS) + ["all"], default="all")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--format", choices=["csv", "json", "svg"], default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_regions)

    p = sub.add_parser("certify", help="run the iterated-curve certification for one lambda")
    p.add_argument("--d", type=d_type, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_complex, required=True, metavar="RE,IM")
    _add_certify_opts(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("scan", help="certify every cell centre of a grid")
    p.add_argument("--d", type=d_type, required=True)
    p.add_argument("--window", type=parse_window, required=True, metavar="RE0,RE1,IM0,IM1")
    p.add_argument("--res", type=pos_int, default=50)
    p.add_argument("--format", choices=["csv", "svg"], default="csv")
    p.add_argument("--threads", type=int, default=None)
    _add_certify_opts(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("zpoly", help="exact independence polynomial of an edge-list graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--lambda", dest="lam", type=parse_complex, default=None, metavar="RE,IM")
    p.add_argument("--out")
    p.set_defaults(func=cmd_zpoly)

    p = sub.add_parser("zscan", help="minimum |Z_T(lambda)| over the bounded-degree tree catalog")
    p.add_argument("--d", type=d_type, required=True)
    p.add_argument("--n-max", dest="n_max", type=pos_int, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_complex, required=True, metavar="RE,IM")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_zscan)

    p = sub.add_parser("approx", help="truncated Taylor approximation of log Z")
    p.add_argument("--graph", required=True)
    p.add_argument("--lambda", dest="lam", type=parse_complex, required=True, metavar="RE,IM")
    p.add_argument("--m", type=pos_int, default=40)
    p.add_argument("--root-bound", dest="root_bound", type=float, default=None,
                   help="lower bound on root moduli (default: Shearer radius for the graph's degree)")
    p.add_argument("--out")
    p.set_defaults(func=cmd_approx)

    p = sub.add_parser("orbit", help="iterate the univariate tree recurrence from 0")
    p.add_argument("--d", type=d_type, required=True)
    p.add_argument("--lambda", dest="lam", type=parse_complex, required=True, metavar="RE,IM")
    p.add_argument("--n", type=nonneg_int, default=100)
    p.add_argument("--coords", choices=["z", "w"], default="z")
    p.add_argument("--out")
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("atlas", help="composite SVG of all regions")
    p.add_argument("--d", type=d_type, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--samples", type=int, default=800)
    p.set_defaults(func=cmd_atlas)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if getattr(ns, "samples", 16) < 16:
        print("indzero: error: --samples must be >= 16", file=sys.stderr)
        return EXIT_USAGE
    try:
        return ns.func(ns)
    except CapExceeded as exc:
        print(f"indzero: size cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except Unwritable as exc:
        print(f"indzero: {exc}", file=sys.stderr)
        return EXIT_UNWRITABLE
    except (UsageError, GraphParseError) as exc:
        print(f"indzero: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except IndZeroError as exc:
        print(f"indzero: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
