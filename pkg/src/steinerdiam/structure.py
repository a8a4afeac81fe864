"""Classical structural primitives: cut vertices, bridges, kappa/lambda,
circumference, 2-connectivity, spanning complete-bipartite containment, and
desk-scale isomorphism testing.

Everything here is exact. Connectivity numbers follow Menger semantics and
are computed by unit-capacity max-flow; kappa(K_n) is pinned to n-1 by
convention. Circumference is an exact longest-cycle subset DP and therefore
capacity-capped; 0 means acyclic.
"""

from __future__ import annotations

from collections import Counter, deque

from .errors import CapacityError, DomainError
from .graphs import Graph, _component_mask, _iter_bits, is_connected

_CIRCUMFERENCE_MAX_N = 20
_ISO_MAX_N = 12
_BIPARTITION_MAX_N = 16


def cut_vertices(g: Graph) -> list[int]:
    """Vertices whose removal disconnects g (g must be connected)."""
    if not is_connected(g):
        raise DomainError("cut_vertices requires a connected graph")
    if g.n <= 2:
        return []
    full = (1 << g.n) - 1
    out = []
    for v in range(g.n):
        rest = full & ~(1 << v)
        rows = tuple(row & rest for row in g.rows)
        start = rest & -rest
        if _component_mask(rows, start) != rest:
            out.append(v)
    return out


def bridges(g: Graph) -> list[tuple[int, int]]:
    """Edges whose removal disconnects the component containing them."""
    out = []
    for u, v in g.edges():
        rows = list(g.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        # The edge is a bridge iff u no longer reaches v.
        if not _component_mask(tuple(rows), 1 << u) >> v & 1:
            out.append((u, v))
    return out


def is_2_connected(g: Graph) -> bool:
    """kappa >= 2: connected, n >= 3, and no cut vertex."""
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


def _max_flow(num: int, cap: list[list[int]], s: int, t: int) -> int:
    """Edmonds-Karp on a dense capacity matrix (small graphs only)."""
    flow = 0
    while True:
        parent = [-1] * num
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] < 0:
            x = queue.popleft()
            row = cap[x]
            for y in range(num):
                if parent[y] < 0 and row[y] > 0:
                    parent[y] = x
                    queue.append(y)
        if parent[t] < 0:
            return flow
        # Unit capacities throughout: each augmenting path carries 1.
        y = t
        while y != s:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1


def _vertex_flow(g: Graph, s: int, t: int) -> int:
    """Max number of internally vertex-disjoint s-t paths (s,t non-adjacent)."""
    n = g.n
    big = n + 1
    num = 2 * n  # v_in = v, v_out = v + n
    cap = [[0] * num for _ in range(num)]
    for v in range(n):
        cap[v][v + n] = big if v in (s, t) else 1
    for u, v in g.edges():
        cap[u + n][v] = 1
        cap[v + n][u] = 1
    return _max_flow(num, cap, s + n, t)


def vertex_connectivity(g: Graph) -> int:
    """kappa(g); kappa(K_n) = n-1, disconnected graphs give 0."""
    n = g.n
    if n == 1:
        return 0
    if not is_connected(g):
        return 0
    best = n - 1  # complete-graph convention; also an upper bound
    for s in range(n):
        for t in range(s + 1, n):
            if g.has_edge(s, t):
                continue
            best = min(best, _vertex_flow(g, s, t))
            if best == 0:
                return 0
    return best


def edge_connectivity(g: Graph) -> int:
    """lambda(g) via edge max-flow from a fixed root to every other vertex."""
    n = g.n
    if n == 1 or not is_connected(g):
        return 0
    best = n - 1
    for t in range(1, n):
        cap = [[0] * n for _ in range(n)]
        for u, v in g.edges():
            cap[u][v] = 1
            cap[v][u] = 1
        best = min(best, _max_flow(n, cap, 0, t))
        if best == 1:
            break
    return best


def circumference(g: Graph) -> int:
    """Length of a longest cycle; 0 when acyclic.

    Exact subset DP: for each vertex subset containing its anchor (= lowest
    vertex), track which endpoints admit a simple path from the anchor through
    exactly that subset, and close cycles back to the anchor.
    """
    n = g.n
    if n > _CIRCUMFERENCE_MAX_N:
        raise CapacityError(
            f"exact circumference supported for n <= {_CIRCUMFERENCE_MAX_N}, got {n}")
    rows = g.rows
    reach = [0] * (1 << n)
    for v in range(n):
        reach[1 << v] = 1 << v
    best = 0
    for mask in range(1, 1 << n):
        ends = reach[mask]
        if not ends:
            continue
        anchor = mask & -mask
        size = mask.bit_count()
        for v in _iter_bits(ends):
            row = rows[v]
            if size >= 3 and row & anchor and (1 << v) != anchor:
                best = max(best, size)
            ext = row & ~mask & ~(anchor - 1)
            for w in _iter_bits(ext):
                reach[mask | 1 << w] |= 1 << w
    return best


def has_spanning_complete_bipartite(g: Graph) -> bool:
    """Does some bipartition (A,B) of V(g) have every A-B pair adjacent?

    Exhaustive over the 2^(n-1) bipartitions with vertex 0 pinned to A.
    """
    n = g.n
    if n > _BIPARTITION_MAX_N:
        raise CapacityError(
            f"bipartition scan supported for n <= {_BIPARTITION_MAX_N}, got {n}")
    if n < 2:
        return False
    rows = g.rows
    full = (1 << n) - 1
    for b in range(1, 1 << (n - 1)):
        bmask = b << 1  # vertex 0 always on the A side
        amask = full & ~bmask
        if all(rows[a] & bmask == bmask for a in _iter_bits(amask)):
            return True
    return False


def _profiles(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
    deg = g.degrees()
    return [(deg[v], tuple(sorted(deg[u] for u in _iter_bits(g.rows[v]))))
            for v in range(g.n)]


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exhaustive isomorphism test with degree/neighbor-degree pruning (n <= 12)."""
    if g.n != h.n:
        return False
    if g.n > _ISO_MAX_N:
        raise CapacityError(
            f"isomorphism testing supported for n <= {_ISO_MAX_N}, got {g.n}")
    if g.num_edges() != h.num_edges():
        return False
    pg, ph = _profiles(g), _profiles(h)
    if Counter(pg) != Counter(ph):
        return False

    n = g.n
    freq = Counter(pg)
    order = sorted(range(n), key=lambda v: (freq[pg[v]], pg[v], v))
    candidates = [[u for u in range(n) if ph[u] == pg[v]] for v in range(n)]

    mapping = [-1] * n
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == n:
            return True
        v = order[i]
        for u in candidates[v]:
            if used >> u & 1:
                continue
            ok = True
            for w in range(n):
                mw = mapping[w]
                if mw >= 0 and (g.rows[v] >> w & 1) != (h.rows[u] >> mw & 1):
                    ok = False
                    break
            if not ok:
                continue
            mapping[v] = u
            used |= 1 << u
            if extend(i + 1):
                return True
            mapping[v] = -1
            used &= ~(1 << u)
        return False

    return extend(0)
