"""Immutable simple undirected graphs on vertices 0..n-1.

The representation is one integer bitmask of neighbors per vertex, which is
what every algorithm in this package wants: adjacency tests, BFS frontiers and
induced-subgraph connectivity all become word operations. Lengths that may be
infinite (distances across components) are plain ``int`` or ``math.inf``.

Edge-mask conventions: several modules (the enumeration harness, the sweep
kernels, the graph6 codec) index the C(n,2) possible edges in upper-triangle
column order, i.e. (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ... Bit i of an
"edge mask" refers to the i-th pair in that order. Keeping a single order
everywhere makes enumeration order reproducible and lets the codec pack bits
directly.
"""

from __future__ import annotations

import math
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DomainError

ExtLength = int | float  # finite int >= 0, or math.inf
INFINITE: float = math.inf


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """A simple undirected graph, immutable after construction."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Iterable[int]):
        rows = tuple(rows)
        if n < 1:
            raise DomainError(f"graph needs at least one vertex, got n={n}")
        if len(rows) != n:
            raise DomainError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise DomainError(f"row {v} references vertices >= n={n}")
            if row >> v & 1:
                raise DomainError(f"loop at vertex {v} (graphs here are simple)")
        for v, row in enumerate(rows):
            for u in _iter_bits(row):
                if not rows[u] >> v & 1:
                    raise DomainError(f"adjacency not symmetric at ({u},{v})")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise DomainError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise DomainError(f"loop edge ({u},{v}) not allowed")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    # -- queries ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return tuple(_iter_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            for off in _iter_bits(row):
                out.append((u, u + 1 + off))
        return out

    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def vertices(self) -> range:
        return range(self.n)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise DomainError(f"vertex {v} out of range for n={self.n}")

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph)
                and self.n == other.n and self.rows == other.rows)

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- basic operations -----------------------------------------------------


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)])


def min_degree(g: Graph) -> int:
    return min(g.degrees())


def max_degree(g: Graph) -> int:
    return max(g.degrees())


def components(g: Graph) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = _component_mask(g.rows, 1 << v)
        seen |= comp
        out.append(list(_iter_bits(comp)))
    return out


def _component_mask(rows: tuple[int, ...], start: int) -> int:
    comp = start
    frontier = start
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~comp
        comp |= frontier
    return comp


def is_connected(g: Graph) -> bool:
    return _component_mask(g.rows, 1) == (1 << g.n) - 1


def induced_connected(g: Graph, vertex_mask: int) -> bool:
    """Is the induced subgraph on the vertices of ``vertex_mask`` connected?

    An empty set counts as connected (the convention the superset-scan oracle
    relies on never actually consults it).
    """
    if vertex_mask == 0:
        return True
    start = vertex_mask & -vertex_mask
    comp = start
    frontier = start
    rows = g.rows
    while frontier:
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & vertex_mask & ~comp
        comp |= frontier
    return comp == vertex_mask


def induced_subgraph(g: Graph, vertices) -> Graph:
    """The induced subgraph on the given vertices, relabeled to 0..m-1 in
    ascending original order."""
    kept = sorted(set(vertices))
    for v in kept:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(kept)}
    rows = [0] * len(kept)
    for v in kept:
        for u in _iter_bits(g.rows[v]):
            if u in index:
                rows[index[v]] |= 1 << index[u]
    return Graph(len(kept), rows)


def delete_vertex(g: Graph, v: int) -> Graph:
    g._check_vertex(v)
    return induced_subgraph(g, (u for u in range(g.n) if u != v))


def bfs_distances(g: Graph, source: int) -> list[ExtLength]:
    """Distances from ``source`` by breadth-first layers; inf across components."""
    g._check_vertex(source)
    dist: list[ExtLength] = [INFINITE] * g.n
    seen = 1 << source
    frontier = seen
    d = 0
    rows = g.rows
    while frontier:
        for v in _iter_bits(frontier):
            dist[v] = d
        nxt = 0
        for v in _iter_bits(frontier):
            nxt |= rows[v]
        frontier = nxt & ~seen
        seen |= frontier
        d += 1
    return dist


def pairwise_distances(g: Graph) -> list[list[ExtLength]]:
    """All-pairs shortest path lengths (symmetric, 0 diagonal, inf across components)."""
    return [bfs_distances(g, v) for v in range(g.n)]


# -- edge-mask plumbing ----------------------------------------------------


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """The C(n,2) vertex pairs in upper-triangle column order (see module doc)."""
    return [(u, v) for v in range(1, n) for u in range(v)]


def graph_from_edge_mask(n: int, mask: int) -> Graph:
    pairs = edge_pairs(n)
    if mask < 0 or mask >> len(pairs):
        raise DomainError(f"edge mask {mask:#x} out of range for n={n}")
    rows = [0] * n
    for i in _iter_bits(mask):
        u, v = pairs[i]
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def edge_mask_of(g: Graph) -> int:
    mask = 0
    for i, (u, v) in enumerate(edge_pairs(g.n)):
        if g.rows[u] >> v & 1:
            mask |= 1 << i
    return mask


def all_vertex_subsets(n: int, size: int) -> Iterator[int]:
    """Bitmasks of all ``size``-subsets of 0..n-1, in lexicographic tuple order."""
    for combo in combinations(range(n), size):
        mask = 0
        for v in combo:
            mask |= 1 << v
        yield mask
