"""Simple undirected graphs, edge-list ingestion and tree catalogs.

Trees are the relevant witnesses for zero-freeness over bounded-degree
graphs, so besides the spherically symmetric generators this module
enumerates every unlabeled tree of bounded size and degree exactly once.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import CapExceeded, GraphParseError, PreconditionError

VERTEX_CAP = 10**6
TREE_ENUM_LIMIT = 16

_INT = re.compile(r"[0-9]+")


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``adjacency[v]`` is the sorted tuple of neighbours of v.
    """

    n: int
    adjacency: tuple

    def __post_init__(self):
        if len(self.adjacency) != self.n:
            raise ValueError("adjacency length must equal n")
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise ValueError(f"neighbours of {v} not sorted/unique")
            for u in nbrs:
                if u == v:
                    raise ValueError(f"self-loop at {v}")
                if not 0 <= u < self.n or v not in self.adjacency[u]:
                    raise ValueError(f"asymmetric edge {v}-{u}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n

    def relabel(self, perm) -> "Graph":
        """Graph with vertex v renamed to perm[v]."""
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])


def parse_edge_list(text) -> Graph:
    """Parse the whitespace-separated edge-list format.

    Blank lines and lines starting with '#' are ignored; every other line is
    two distinct nonnegative integers.  Vertices are implicit (n = 1 + max id)
    and duplicate edges collapse.
    """
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphParseError(f"not UTF-8: {exc}") from None
    edges = []
    n = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        parts = s.split()
        if len(parts) != 2 or not all(_INT.fullmatch(p) for p in parts):
            raise GraphParseError(f"expected two nonnegative integers, got {s!r}", lineno)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise GraphParseError(f"self-loop {u} {v}", lineno)
        edges.append((u, v))
        n = max(n, u + 1, v + 1)
    if n > VERTEX_CAP:
        raise CapExceeded(f"{n} vertices exceeds cap {VERTEX_CAP}")
    return Graph.from_edges(n, edges)


def to_edge_list(G: Graph) -> str:
    lines = [f"# n={G.n}"]
    lines += [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def max_degree(G: Graph) -> int:
    return max((len(a) for a in G.adjacency), default=0)


def gen_layered_tree(arities, cap: int = VERTEX_CAP) -> Graph:
    """Spherically symmetric tree: each level-i vertex gets arities[i] children."""
    arities = [int(a) for a in arities]
    if any(a < 0 for a in arities):
        raise PreconditionError("arities must be nonnegative")
    total, width = 1, 1
    for a in arities:
        width *= a
        total += width
        if total > cap:
            raise CapExceeded(f"tree would exceed vertex cap {cap}")
    edges = []
    level = [0]
    nxt = 1
    for a in arities:
        new_level = []
        for v in level:
            for _ in range(a):
                edges.append((v, nxt))
                new_level.append(nxt)
                nxt += 1
        level = new_level
    return Graph.from_edges(total, edges)


def gen_complete_dary_tree(d: int, depth: int, cap: int = VERTEX_CAP) -> Graph:
    if d < 1 or depth < 0:
        raise PreconditionError("need d >= 1 and depth >= 0")
    return gen_layered_tree([d] * depth, cap=cap)


# --- free tree enumeration -------------------------------------------------
#
# A rooted tree is a nested tuple of its (canonically ordered) child trees.
# Free trees are emitted rooted at their centroid: a unique centroid gives a
# root whose branches all have < n/2 vertices, otherwise (n even) two rooted
# halves of n/2 vertices joined by the central edge.


@lru_cache(maxsize=None)
def _rooted_trees(size: int, child_cap: int) -> tuple:
    """All rooted trees with ``size`` vertices where every vertex has at most
    ``child_cap`` children, in a fixed deterministic order."""
    if size == 1:
        return ((),)
    pool = [t for s in range(1, size) for t in _rooted_trees(s, child_cap)]
    sizes = [_tree_size(t) for t in pool]
    out = [tuple(ch) for ch in _multisets(pool, sizes, size - 1, child_cap)]
    return tuple(out)


@lru_cache(maxsize=None)
def _tree_size(t) -> int:
    return 1 + sum(_tree_size(c) for c in t)


def _multisets(pool, sizes, target, max_count, start=0):
    # nondecreasing index sequences over pool with sizes summing to target
    if target == 0:
        yield []
        return
    if max_count == 0:
        return
    for i in range(start, len(pool)):
        s = sizes[i]
        if s > target:
            break
        for rest in _multisets(pool, sizes, target - s, max_count - 1, i):
            yield [pool[i]] + rest


def _rooted_to_edges(root, n_offset=0):
    edges = []
    queue = [(root, n_offset)]
    nxt = n_offset + 1
    head = 0
    while head < len(queue):
        t, label = queue[head]
        head += 1
        for c in t:
            edges.append((label, nxt))
            queue.append((c, nxt))
            nxt += 1
    return edges, nxt - n_offset


def gen_free_trees(n: int, max_deg: int) -> Iterator[Graph]:
    """Unlabeled trees on exactly n vertices with maximum degree <= max_deg."""
    if n <= 0:
        return
    if n == 1:
        yield Graph(1, ((),))
        return
    if max_deg < 1 or (n > 2 and max_deg < 2):
        return
    child_cap = max_deg - 1
    half = (n - 1) // 2
    pool = [t for s in range(1, half + 1) for t in _rooted_trees(s, child_cap)]
    sizes = [_tree_size(t) for t in pool]
    for branches in _multisets(pool, sizes, n - 1, max_deg):
        edges, count = _rooted_to_edges(tuple(branches))
        yield Graph.from_edges(count, edges)
    if n % 2 == 0:
        halves = _rooted_trees(n // 2, child_cap)
        for i, a in enumerate(halves):
            if len(a) > max_deg - 1:
                continue
            for b in halves[i:]:
                if len(b) > max_deg - 1:
                    continue
                ea, na = _rooted_to_edges(a, 0)
                eb, nb = _rooted_to_edges(b, na)
                yield Graph.from_edges(na + nb, ea + eb + [(0, na)])


def gen_all_trees(n_max: int, max_deg: int) -> Iterator[Graph]:
    """One representative per isomorphism class of trees with <= n_max
    vertices and maximum degree <= max_deg, ordered by size."""
    if n_max > TREE_ENUM_LIMIT:
        raise CapExceeded(f"n_max={n_max} exceeds enumeration guardrail {TREE_ENUM_LIMIT}")
    for n in range(1, n_max + 1):
        yield from gen_free_trees(n, max_deg)
