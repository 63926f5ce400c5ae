"""Exact independence polynomials and the truncated Taylor expansion of log Z.

Coefficients are Python ints (e_k = number of independent sets of size k).
The vertex recursion Z_G = Z_{G-v} + lam * Z_{G-N[v]} works on bitmask
vertex subsets, splitting into connected components and memoising per
subset.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

import numpy as np

from .errors import CapExceeded, PreconditionError
from .graphs import Graph, TREE_ENUM_LIMIT, gen_all_trees

IND_POLY_CAP = 40
SERIES_CAP = 512
ENUM_M_CAP = 8


@dataclass(frozen=True)
class IndPoly:
    coeffs: tuple

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        object.__setattr__(self, "coeffs", c)
        if not c or c[0] != 1:
            raise ValueError("independence polynomial must have e_0 = 1")
        if any(x < 0 for x in c):
            raise ValueError("coefficients must be nonnegative")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, lam):
        return evaluate(self, lam)


@dataclass(frozen=True)
class LogZApprox:
    value: complex
    order: int
    tail_bound: Optional[float]  # None means unavailable


# -- polynomial helpers on int tuples --

def _padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + (b[i] if i < len(b) else 0) for i, x in enumerate(a))


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def ind_poly(G: Graph, cap: int = IND_POLY_CAP) -> IndPoly:
    """Exact independence polynomial of G."""
    if G.n > cap:
        raise CapExceeded(f"graph has {G.n} vertices, cap is {cap}")
    nbr = [0] * G.n
    for v, adj in enumerate(G.adjacency):
        for u in adj:
            nbr[v] |= 1 << u
    memo = {}

    def component(mask):
        low = mask & -mask
        comp = low
        frontier = low
        while frontier:
            v = frontier.bit_length() - 1
            frontier &= ~(1 << v)
            new = nbr[v] & mask & ~comp
            comp |= new
            frontier |= new
        return comp

    def z(mask):
        if mask == 0:
            return (1,)
        hit = memo.get(mask)
        if hit is not None:
            return hit
        comp = component(mask)
        if comp != mask:
            res = _pmul(z(comp), z(mask & ~comp))
        elif mask & (mask - 1) == 0:
            res = (1, 1)
        else:
            # pivot on a maximum-degree vertex (lowest index on ties)
            best_v, best_deg = -1, -1
            m = mask
            while m:
                low = m & -m
                v = low.bit_length() - 1
                m ^= low
                deg = _popcount(nbr[v] & mask)
                if deg > best_deg:
                    best_v, best_deg = v, deg
            bit = 1 << best_v
            out_v = z(mask & ~bit)
            in_v = z(mask & ~bit & ~nbr[best_v])
            res = _padd(out_v, (0,) + in_v)
        memo[mask] = res
        return res

    return IndPoly(z((1 << G.n) - 1))


def evaluate(P: IndPoly, lam):
    """Horner evaluation of Z at lam (scalar or numpy array)."""
    coeffs = P.coeffs
    if isinstance(lam, np.ndarray):
        acc = np.zeros(lam.shape, dtype=np.complex128)
        for c in reversed(coeffs):
            acc = acc * lam + float(c)
        return acc
    lam = complex(lam)
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * lam + float(c)
    return acc


def coeff_matrix(polys) -> np.ndarray:
    """Stack coefficient vectors (zero padded) as float rows."""
    width = max(len(p.coeffs) for p in polys)
    mat = np.zeros((len(polys), width))
    for i, p in enumerate(polys):
        mat[i, : len(p.coeffs)] = p.coeffs
    return mat


def evaluate_matrix(mat: np.ndarray, lams) -> np.ndarray:
    """Z values for every row of ``mat`` at every lam; shape (rows, len(lams))."""
    lams = np.atleast_1d(np.asarray(lams, dtype=np.complex128))
    acc = np.zeros((mat.shape[0], lams.size), dtype=np.complex128)
    for k in range(mat.shape[1] - 1, -1, -1):
        acc = acc * lams[None, :] + mat[:, k][:, None]
    return acc


@lru_cache(maxsize=32)
def tree_catalog(n_max: int, max_deg: int):
    """(trees, polys, coefficient matrix) for the bounded-degree tree catalog."""
    trees = tuple(gen_all_trees(n_max, max_deg))
    polys = tuple(ind_poly(t) for t in trees)
    return trees, polys, coeff_matrix(polys)


def min_abs_over_catalog(d: int, lam, n_max: int):
    """Minimum of |Z_T(lam)| over all trees T with <= n_max vertices and
    maximum degree <= d+1, with the first minimising tree in catalog order.

    The raw minimum is reported; callers decide what counts as a zero.
    """
    if n_max > TREE_ENUM_LIMIT:
        raise CapExceeded(f"n_max={n_max} exceeds enumeration guardrail {TREE_ENUM_LIMIT}")
    trees, _, mat = tree_catalog(n_max, d + 1)
    vals = np.abs(evaluate_matrix(mat, [complex(lam)])[:, 0])
    i = int(np.argmin(vals))
    return float(vals[i]), trees[i]


def catalog_min_abs_many(d: int, lams, n_max: int) -> np.ndarray:
    """Vectorised minimum modulus over the catalog for many lam values."""
    if n_max > TREE_ENUM_LIMIT:
        raise CapExceeded(f"n_max={n_max} exceeds enumeration guardrail {TREE_ENUM_LIMIT}")
    _, _, mat = tree_catalog(n_max, d + 1)
    return np.abs(evaluate_matrix(mat, lams)).min(axis=0)


def power_sums(P: IndPoly, m: int) -> list:
    """Inverse-root power sums p_1..p_m of Z (exact ints).

    With Z = prod(1 - lam/zeta_i), p_j = sum zeta_i^{-j}; Newton's identities
    read k e_k = -sum_{j=1..k} p_j e_{k-j}.
    """
    e = P.coeffs
    p = [0] * (m + 1)
    for k in range(1, m + 1):
        acc = -k * (e[k] if k < len(e) else 0)
        for j in range(1, k):
            ekj = e[k - j] if k - j < len(e) else 0
            if ekj:
                acc -= p[j] * ekj
        p[k] = acc
    return p[1:]


def _scaled_term(pj: int, lam: complex, j: int) -> complex:
    # p_j * lam**j without overflowing p_j or lam**j separately
    if pj == 0 or lam == 0:
        return 0j
    if abs(pj) < 2**1000:
        return pj * lam**j
    log_mag = math.log(abs(pj)) + j * math.log(abs(lam))
    phase = j * cmath.phase(lam)
    sign = 1 if pj > 0 else -1
    return sign * cmath.rect(math.exp(log_mag), phase)


def series_tail(n: int, ratio: float, m: int) -> float:
    """sum_{j>m} n * ratio**j / j for 0 <= ratio < 1."""
    if ratio == 0:
        return 0.0
    total = 0.0
    term_pow = ratio ** (m + 1)
    j = m + 1
    while j < m + 100_000:
        term = term_pow / j
        total += term
        if term < 1e-18 * total:
            break
        term_pow *= ratio
        j += 1
    else:
        # geometric remainder bound for whatever was left
        total += term_pow / (j * (1 - ratio))
    return n * total


def taylor_log_z(P: IndPoly, lam, m: int, root_lower_bound: Optional[float] = None,
                 series_cap: int = SERIES_CAP) -> LogZApprox:
    """Order-m Taylor approximation of log Z at lam around 0.

    ``root_lower_bound`` is a lower bound on the modulus of every root of Z
    (e.g. the Shearer radius for the graph's degree class).  When it exceeds
    |lam| the returned ``tail_bound`` bounds |log Z - value|.
    """
    if m < 1:
        raise PreconditionError("order m must be >= 1")
    if m > series_cap:
        raise CapExceeded(f"order {m} exceeds series cap {series_cap}")
    lam = complex(lam)
    p = power_sums(P, m)
    value = 0j
    for j in range(1, m + 1):
        value -= _scaled_term(p[j - 1], lam, j) / j
    tail = None
    if root_lower_bound is not None and abs(lam) < root_lower_bound:
        n_roots = P.degree
        tail = series_tail(n_roots, abs(lam) / root_lower_bound, m)
    return LogZApprox(value=value, order=m, tail_bound=tail)


def min_root_modulus(P: IndPoly) -> float:
    """Smallest root modulus of Z (numerical, via companion eigenvalues)."""
    if P.degree == 0:
        return math.inf
    roots = np.roots([float(c) for c in reversed(P.coeffs)])
    return float(np.min(np.abs(roots)))


def coeffs_by_size_enumeration(G: Graph, m: int) -> list:
    """e_0..e_m by enumerating independent sets of size <= m."""
    if m > ENUM_M_CAP:
        raise CapExceeded(f"m={m} exceeds enumeration guardrail {ENUM_M_CAP}")
    if m < 0:
        raise PreconditionError("m must be >= 0")
    counts = [0] * (m + 1)
    counts[0] = 1
    adj = [set(a) for a in G.adjacency]

    def extend(start, size, blocked):
        for v in range(start, G.n):
            if v in blocked:
                continue
            counts[size + 1] += 1
            if size + 1 < m:
                extend(v + 1, size + 1, blocked | adj[v])

    if m >= 1:
        extend(0, 0, frozenset())
    return counts
