"""Independent reference implementations used only by the tests.

None of these share code with the package: they are deliberately naive.
"""

import itertools
import math

import numpy as np


def brute_force_coeffs(n, edges):
    """Count independent sets by size over all 2^n subsets."""
    adj = [0] * n
    for u, v in edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    counts = [0] * (n + 1)
    for mask in range(1 << n):
        ok = True
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if adj[v] & mask:
                ok = False
                break
            m ^= low
        if ok:
            counts[bin(mask).count("1")] += 1
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return counts


def prufer_to_edges(seq, n):
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [i for i in range(n) if degree[i] == 1]
    edges.append((u, v))
    return edges


def ahu(adj, root, parent=-1):
    return "(" + "".join(sorted(ahu(adj, c, root) for c in adj[root] if c != parent)) + ")"


def tree_canonical(n, edges):
    """Canonical string of a free tree: the minimum AHU code over all roots."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return min(ahu(adj, r) for r in range(n))


def unlabeled_tree_classes(n, max_deg=None):
    """Isomorphism classes of trees on n labeled vertices via Prufer sequences."""
    if n == 1:
        return {"()"}
    if n == 2:
        return {tree_canonical(2, [(0, 1)])}
    classes = set()
    for seq in itertools.product(range(n), repeat=n - 2):
        if max_deg is not None:
            deg = [1] * n
            for x in seq:
                deg[x] += 1
            if max(deg) > max_deg:
                continue
        classes.add(tree_canonical(n, prufer_to_edges(seq, n)))
    return classes


def power_sums_from_roots(coeffs, m):
    """p_j = sum over roots zeta of zeta^{-j}, numerically."""
    roots = np.roots([float(c) for c in reversed(coeffs)])
    return [complex(np.sum(roots ** (-j))) for j in range(1, m + 1)]


def complete_binary_tree_z(depth):
    """Z of the complete binary tree of the given depth as an int list.

    Z_k = (Z_{k-1})^2 + lam * (Z_{k-2})^4 with Z_{-1} = 1, Z_0 = 1 + lam.
    """
    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def add(a, b):
        out = [0] * max(len(a), len(b))
        for i, x in enumerate(a):
            out[i] += x
        for i, x in enumerate(b):
            out[i] += x
        return out

    prev, cur = [1], [1, 1]
    for _ in range(depth):
        sq = mul(prev, prev)
        nxt = add(mul(cur, cur), [0] + mul(sq, sq))
        prev, cur = cur, nxt
    return cur


def horner(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def real_orbit(d, lam, n):
    x = 0.0
    out = [x]
    for _ in range(n):
        x = lam / (1 + x) ** d
        out.append(x)
    return out


def shearer(d):
    return d**d / (d + 1) ** (d + 1)


def uniqueness(d):
    return d**d / (d - 1) ** (d + 1)


def lhp_formula(d, phi):
    psi = max(((2 - 1 / d) * phi - math.pi) / (d + 1), 0.0)
    num = math.sin(phi / d) * math.sin(phi) ** d
    den = math.sin((d - 1) * phi / d - d * psi) * math.sin(phi - psi) ** d
    return num / den
