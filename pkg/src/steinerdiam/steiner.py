"""Exact Steiner distances, eccentricities, radii, and diameters.

The Steiner distance of a vertex set S is the minimum number of edges of a
connected subgraph containing S; the minimizer is always a tree. Pairs
recover the ordinary path metric. Sets meeting more than one component have
infinite distance, reported as math.inf.

The file starts with the oracle: a direct superset scan that is obviously
correct and exponentially slow. Every faster route below it (subset dynamic
programming, the k=3 median form, the full-table kernel) is checked against
the oracle by the test suite; none of them share code with it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from . import _kernel
from .errors import DomainError
from .graphs import (
    INFINITE,
    ExtLength,
    Graph,
    _iter_bits,
    bfs_distances,
    induced_connected,
)

_KINF = _kernel.INF
_TABLE_MAX_N = 16


def _terminals(g: Graph, terminals) -> list[int]:
    ts = sorted(set(terminals))
    for t in ts:
        g._check_vertex(t)
    return ts


def steiner_distance_oracle(g: Graph, terminals) -> ExtLength:
    """Steiner distance straight from the definition.

    Scans vertex supersets of the terminal set in increasing size; the first
    one that induces a connected subgraph has exactly the right size, since
    a minimal connected subgraph on w vertices is a tree with w - 1 edges.
    Exponential, and kept as the reference for the real implementations.
    """
    ts = _terminals(g, terminals)
    if len(ts) <= 1:
        return 0
    smask = 0
    for t in ts:
        smask |= 1 << t
    rest = [v for v in range(g.n) if not smask >> v & 1]
    for extra in range(len(rest) + 1):
        for combo in itertools.combinations(rest, extra):
            w = smask
            for v in combo:
                w |= 1 << v
            if induced_connected(g, w):
                return len(ts) + extra - 1
    return INFINITE


def _int_distances(g: Graph) -> list[list[int]]:
    out = []
    for v in range(g.n):
        row = bfs_distances(g, v)
        out.append([_KINF if math.isinf(d) else int(d) for d in row])
    return out


def _subset_dp(g: Graph, ts: list[int]):
    """Dynamic program over terminal subsets; returns (dp, dist).

    dp[T][v] is the minimum edge count of a tree spanning {ts[i] : i in T}
    plus v. Anchored splits enumerate every unordered partition of T once.
    """
    n = g.n
    dist = _int_distances(g)
    k = len(ts)
    size = 1 << k
    dp = [None] * size
    for i, t in enumerate(ts):
        dp[1 << i] = list(dist[t])
    for mask in range(3, size):
        if mask & (mask - 1) == 0:
            continue
        a = mask & -mask
        rest = mask ^ a
        best = [_KINF * 4] * n
        sub = (rest - 1) & rest
        while True:
            left = dp[a | sub]
            right = dp[mask ^ a ^ sub]
            for v in range(n):
                c = left[v] + right[v]
                if c < best[v]:
                    best[v] = c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        cur = [0] * n
        for v in range(n):
            dv = dist[v]
            b = best[v]
            for u in range(n):
                c = best[u] + dv[u]
                if c < b:
                    b = c
            cur[v] = min(b, _KINF)
        dp[mask] = cur
    return dp, dist


def steiner_distance(g: Graph, terminals) -> ExtLength:
    """Steiner distance of a terminal set, exact for any simple graph."""
    ts = _terminals(g, terminals)
    if len(ts) <= 1:
        return 0
    dp, _ = _subset_dp(g, ts)
    val = dp[(1 << len(ts)) - 1][ts[0]]
    return INFINITE if val >= _KINF else val


def steiner_distance_3(g: Graph, u: int, v: int, w: int) -> ExtLength:
    """Steiner distance of {u, v, w} via vertex medians.

    For three terminals the optimal tree is three shortest paths meeting at
    a median vertex, so minimizing d(m,u) + d(m,v) + d(m,w) over m is exact.
    This is an independent route from the subset dynamic program.
    """
    for x in (u, v, w):
        g._check_vertex(x)
    du = bfs_distances(g, u)
    dv = bfs_distances(g, v)
    dw = bfs_distances(g, w)
    # Repeated terminals need no special case: with w == v the sum collapses
    # to d(m,u) + 2 d(m,v), minimized at m = v by the triangle inequality.
    best = min(du[m] + dv[m] + dw[m] for m in range(g.n))
    return INFINITE if math.isinf(best) else int(best)


def distance_to_set(g: Graph, v: int, vertices) -> ExtLength:
    """Shortest-path distance from v to the nearest vertex of a set."""
    vs = _terminals(g, vertices)
    if not vs:
        raise DomainError("distance_to_set needs a nonempty vertex set")
    g._check_vertex(v)
    dist = bfs_distances(g, v)
    return min(dist[u] for u in vs)


def _full_table(g: Graph):
    return _kernel.steiner_table(g.n, list(g.rows))


def _lift(val: int) -> ExtLength:
    return INFINITE if val >= _KINF else int(val)


def _ecc_from_table(g: Graph, kmin: int, kmax: int) -> dict[int, list[ExtLength]]:
    n = g.n
    table = _full_table(g)
    ecc = {k: [0] * n for k in range(kmin, kmax + 1)}
    for mask in range(1, 1 << n):
        k = mask.bit_count()
        if k < kmin or k > kmax:
            continue
        val = int(table[mask])
        row = ecc[k]
        for v in _iter_bits(mask):
            if val > row[v]:
                row[v] = val
    return {k: [_lift(x) for x in row] for k, row in ecc.items()}


def _ecc_pairs(g: Graph) -> list[ExtLength]:
    return [max(bfs_distances(g, v)) for v in range(g.n)]


def _ecc_triples(g: Graph) -> list[ExtLength]:
    n = g.n
    dist = _int_distances(g)
    ecc = [0] * n
    for a in range(n):
        da = dist[a]
        for b in range(a + 1, n):
            db = dist[b]
            for c in range(b + 1, n):
                dc = dist[c]
                med = min(da[m] + db[m] + dc[m] for m in range(n))
                for x in (a, b, c):
                    if med > ecc[x]:
                        ecc[x] = med
    return [_lift(min(x, _KINF)) for x in ecc]


def _ecc_combinations(g: Graph, k: int) -> list[ExtLength]:
    """Fallback for k >= 4 past the table capacity. Slow and honest."""
    n = g.n
    out: list[ExtLength] = []
    for v in range(n):
        best: ExtLength = 0
        others = [u for u in range(n) if u != v]
        for combo in itertools.combinations(others, k - 1):
            d = steiner_distance(g, (v,) + combo)
            if d > best:
                best = d
            if best >= n - 1:
                # n - 1 is the ceiling for any Steiner distance, so this
                # vertex's eccentricity cannot grow further.
                break
        out.append(best)
    return out


def _ecc_all(g: Graph, k: int) -> list[ExtLength]:
    if not 1 <= k <= g.n:
        raise DomainError(f"k must be between 1 and n = {g.n}, got {k}")
    if k == 1:
        return [0] * g.n
    if k == 2:
        return _ecc_pairs(g)
    if k == 3:
        return _ecc_triples(g)
    if g.n <= _TABLE_MAX_N:
        return _ecc_from_table(g, k, k)[k]
    return _ecc_combinations(g, k)


def steiner_ecc(g: Graph, v: int, k: int) -> ExtLength:
    """Steiner k-eccentricity: the largest d(S) over k-sets containing v."""
    g._check_vertex(v)
    return _ecc_all(g, k)[v]


def steiner_eccentricities(g: Graph, k: int) -> tuple[ExtLength, ...]:
    """All n Steiner k-eccentricities, in vertex order."""
    return tuple(_ecc_all(g, k))


def steiner_radius(g: Graph, k: int) -> ExtLength:
    """Steiner k-radius: smallest Steiner k-eccentricity over the vertices."""
    return min(_ecc_all(g, k))


def steiner_diameter(g: Graph, k: int) -> ExtLength:
    """Steiner k-diameter: the largest d(S) over all k-sets of vertices."""
    return max(_ecc_all(g, k))


@dataclass(frozen=True)
class SteinerReport:
    """Per-k eccentricities, radii, and diameters for k in ks."""

    n: int
    ks: tuple[int, ...]
    ecc: dict[int, tuple[ExtLength, ...]]
    radius: dict[int, ExtLength]
    diameter: dict[int, ExtLength]


def steiner_report(g: Graph, kmax: int | None = None) -> SteinerReport:
    """Compute eccentricities, radius, and diameter for every k up to kmax.

    Uses a single full Steiner table when n allows it, so the cost does not
    scale with the number of k values requested.
    """
    n = g.n
    if kmax is None:
        kmax = n
    if not 1 <= kmax <= n:
        raise DomainError(f"kmax must be between 1 and n = {n}, got {kmax}")
    ks = tuple(range(2, kmax + 1))
    if not ks:
        return SteinerReport(n=n, ks=(), ecc={}, radius={}, diameter={})
    if n <= _TABLE_MAX_N:
        rows = _ecc_from_table(g, 2, kmax)
    else:
        rows = {k: _ecc_all(g, k) for k in ks}
    ecc = {k: tuple(rows[k]) for k in ks}
    return SteinerReport(
        n=n,
        ks=ks,
        ecc=ecc,
        radius={k: min(ecc[k]) for k in ks},
        diameter={k: max(ecc[k]) for k in ks},
    )


def _lex_spanning_edges(g: Graph, wmask: int) -> list[tuple[int, int]]:
    """Lexicographically smallest spanning tree of a connected induced
    subgraph, as a sorted edge list (greedy over lex-ordered edges)."""
    root = {v: v for v in _iter_bits(wmask)}

    def find(x: int) -> int:
        while root[x] != x:
            root[x] = root[root[x]]
            x = root[x]
        return x

    out = []
    for u, v in g.edges():
        if not (wmask >> u & 1 and wmask >> v & 1):
            continue
        ru, rv = find(u), find(v)
        if ru != rv:
            root[ru] = rv
            out.append((u, v))
    return out


def _witness_by_scan(g: Graph, ts: list[int], d: int):
    smask = 0
    for t in ts:
        smask |= 1 << t
    rest = [v for v in range(g.n) if not smask >> v & 1]
    need = d + 1 - len(ts)
    best = None
    for combo in itertools.combinations(rest, need):
        w = smask
        for v in combo:
            w |= 1 << v
        if not induced_connected(g, w):
            continue
        edges = _lex_spanning_edges(g, w)
        if best is None or edges < best:
            best = edges
    return best


def _witness_by_backtrack(g: Graph, ts: list[int], d: int):
    """Deterministic optimal tree for graphs past the scan capacity.

    Reconstructs one optimal tree from the subset dynamic program by taking
    the first (vertex, split) certificate in a fixed order. Optimal, but not
    the lexicographic minimum the scan route guarantees.
    """
    n = g.n
    dp, dist = _subset_dp(g, ts)
    edges: set[tuple[int, int]] = set()

    def path(u: int, v: int) -> None:
        du = dist[u]
        cur = v
        while cur != u:
            nxt = min(w for w in _iter_bits(g.rows[cur])
                      if du[w] == du[cur] - 1)
            edges.add((min(cur, nxt), max(cur, nxt)))
            cur = nxt

    def rec(mask: int, v: int) -> None:
        if mask & (mask - 1) == 0:
            path(ts[mask.bit_length() - 1], v)
            return
        a = mask & -mask
        rest = mask ^ a
        target = dp[mask][v]
        for u in range(n):
            if dist[u][v] > target:
                continue
            sub = (rest - 1) & rest
            while True:
                if dp[a | sub][u] + dp[mask ^ a ^ sub][u] + dist[u][v] == target:
                    path(u, v)
                    rec(a | sub, u)
                    rec(mask ^ a ^ sub, u)
                    return
                if sub == 0:
                    break
                sub = (sub - 1) & rest
        raise AssertionError("no certificate found for an optimal value")

    rec((1 << len(ts)) - 1, ts[0])
    assert len(edges) == d
    return sorted(edges)


def steiner_tree(g: Graph, terminals) -> list[tuple[int, int]] | None:
    """An optimal Steiner tree as a sorted edge list; None if unreachable.

    Up to the table capacity the result is the lexicographically smallest
    optimal tree, so equal inputs give byte-equal witnesses everywhere.
    """
    ts = _terminals(g, terminals)
    if len(ts) <= 1:
        return []
    d = steiner_distance(g, ts)
    if math.isinf(d):
        return None
    if g.n <= _TABLE_MAX_N:
        return _witness_by_scan(g, ts, int(d))
    return _witness_by_backtrack(g, ts, int(d))


def diameter_witness(g: Graph, k: int,
                     ) -> tuple[tuple[int, ...], list[tuple[int, int]] | None]:
    """A k-set attaining the Steiner k-diameter, with an optimal tree for it.

    The first attaining set in lexicographic order is returned; the tree is
    None when the set is not connectable (disconnected graphs).
    """
    if not 2 <= k <= g.n:
        raise DomainError(f"k must be between 2 and n = {g.n}, got {k}")
    target = steiner_diameter(g, k)
    for ts in itertools.combinations(range(g.n), k):
        if steiner_distance(g, ts) == target:
            return ts, steiner_tree(g, ts)
    raise AssertionError("no terminal set attains the diameter")
