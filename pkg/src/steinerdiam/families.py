"""Named graph family generators with fixed, documented vertex layouts.

Layouts are part of the contract (tests and reports reference vertices by
index), so every generator states its numbering. All parameter validation
raises ParameterError.
"""

from __future__ import annotations

from .errors import ParameterError
from .graphs import Graph

H2_PATTERNS = ("UVW", "UV", "VW", "UW", "V")


def path_graph(n: int) -> Graph:
    """P_n: vertices 0..n-1 chained in order."""
    if n < 1:
        raise ParameterError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    """C_n: vertices 0..n-1 in cyclic order."""
    if n < 3:
        raise ParameterError(f"cycle needs n >= 3, got {n}")
    edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    return Graph.from_edges(n, edges)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ParameterError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, [(u, v) for v in range(n) for u in range(v)])


def complete_bipartite(s: int, t: int) -> Graph:
    """K_{s,t}: left side 0..s-1, right side s..s+t-1."""
    if s < 1 or t < 1:
        raise ParameterError(f"complete bipartite needs s,t >= 1, got ({s},{t})")
    return Graph.from_edges(s + t, [(u, s + v) for u in range(s) for v in range(t)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: center 0, leaves 1..leaves."""
    if leaves < 0:
        raise ParameterError(f"star needs leaves >= 0, got {leaves}")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def double_star(s: int, t: int) -> Graph:
    """Adjacent centers 0,1; 0 carries leaves 2..s+1, 1 carries s+2..s+t+1."""
    if s < 0 or t < 0:
        raise ParameterError(f"double star needs s,t >= 0, got ({s},{t})")
    edges = [(0, 1)]
    edges += [(0, 2 + i) for i in range(s)]
    edges += [(1, 2 + s + i) for i in range(t)]
    return Graph.from_edges(s + t + 2, edges)


def _pendant_path(edges: list[tuple[int, int]], anchor: int, start: int,
                  length: int) -> int:
    """Append a path of ``length`` edges hanging from ``anchor``; return next id."""
    prev = anchor
    for i in range(length):
        edges.append((prev, start + i))
        prev = start + i
    return start + length


def spider(a: int, b: int, c: int) -> Graph:
    """Tree with center 0 and pendant paths of lengths a <= b <= c.

    Legs occupy consecutive indices: first leg 1..a, second a+1..a+b, third
    a+b+1..a+b+c. With a = 0 the result is a path; a >= 1 gives the unique
    degree-3 center.
    """
    if not (0 <= a <= b <= c) or b < 1:
        raise ParameterError(
            f"spider needs 0 <= a <= b <= c with b >= 1, got ({a},{b},{c})")
    edges: list[tuple[int, int]] = []
    nxt = 1
    for leg in (a, b, c):
        nxt = _pendant_path(edges, 0, nxt, leg)
    return Graph.from_edges(a + b + c + 1, edges)


def triangle_spider(p: int, q: int, r: int) -> Graph:
    """Triangle 0,1,2 with pendant paths of lengths p <= q <= r at its vertices."""
    if not (0 <= p <= q <= r):
        raise ParameterError(
            f"triangle spider needs 0 <= p <= q <= r, got ({p},{q},{r})")
    edges = [(0, 1), (0, 2), (1, 2)]
    nxt = 3
    for anchor, leg in zip((0, 1, 2), (p, q, r)):
        nxt = _pendant_path(edges, anchor, nxt, leg)
    return Graph.from_edges(p + q + r + 3, edges)


def triple_star(a: int, b: int, c: int) -> Graph:
    """Triangle 0,1,2 whose vertices carry a, b, c pendant leaves (a <= b <= c, c >= 1)."""
    if not (0 <= a <= b <= c) or c < 1:
        raise ParameterError(
            f"triple star needs 0 <= a <= b <= c with c >= 1, got ({a},{b},{c})")
    edges = [(0, 1), (0, 2), (1, 2)]
    nxt = 3
    for anchor, cnt in zip((0, 1, 2), (a, b, c)):
        for _ in range(cnt):
            edges.append((anchor, nxt))
            nxt += 1
    return Graph.from_edges(a + b + c + 3, edges)


def h2_graph(patterns: tuple[str, ...] | list[str]) -> Graph:
    """Base path u=0, v=1, w=2 plus one vertex per pattern tag.

    Tags (case-insensitive): UVW, UV, VW, UW, V; each names the base
    vertices the extra vertex is joined to.
    """
    attach = {"UVW": (0, 1, 2), "UV": (0, 1), "VW": (1, 2),
              "UW": (0, 2), "V": (1,)}
    edges = [(0, 1), (1, 2)]
    for j, tag in enumerate(patterns):
        key = tag.upper()
        if key not in attach:
            raise ParameterError(
                f"unknown pattern {tag!r}; expected one of {H2_PATTERNS}")
        for base in attach[key]:
            edges.append((base, 3 + j))
    return Graph.from_edges(3 + len(patterns), edges)


def star_path(n: int) -> Graph:
    """Star of order n-2 (center 0, leaves 1..n-3) with the 2-edge path 0-(n-2)-(n-1)."""
    if n < 4:
        raise ParameterError(f"star-path needs n >= 4, got {n}")
    edges = [(0, i) for i in range(1, n - 2)]
    edges += [(0, n - 2), (n - 2, n - 1)]
    return Graph.from_edges(n, edges)


def example2(inner: Graph) -> Graph:
    """``inner`` (vertices 0..m-1) plus the path a-b-c-d = m,m+1,m+2,m+3,
    with a and d each joined to every inner vertex."""
    m = inner.n
    a, b, c, d = m, m + 1, m + 2, m + 3
    edges = list(inner.edges())
    edges += [(a, b), (b, c), (c, d)]
    edges += [(v, a) for v in range(m)]
    edges += [(v, d) for v in range(m)]
    return Graph.from_edges(m + 4, edges)


def named_families(n: int) -> list[tuple[str, Graph]]:
    """Canonical member of each named family at order n (those that admit it).

    Multi-parameter families get a balanced canonical split so that corpus
    sweeps exercise one deterministic representative per family per order.
    """
    out: list[tuple[str, Graph]] = [(f"path:{n}", path_graph(n))]
    if n >= 3:
        out.append((f"cycle:{n}", cycle_graph(n)))
    out.append((f"complete:{n}", complete_graph(n)))
    if n >= 2:
        out.append((f"star:{n - 1}", star_graph(n - 1)))
        s = n // 2
        out.append((f"complete-bipartite:{s},{n - s}", complete_bipartite(s, n - s)))
    if n >= 4:
        s = (n - 2) // 2
        out.append((f"double-star:{s},{n - 2 - s}", double_star(s, n - 2 - s)))
        legs = sorted(((n - 1) // 3 + (1 if i < (n - 1) % 3 else 0)) for i in range(3))
        a, b, c = legs
        if b >= 1:
            out.append((f"spider:{a},{b},{c}", spider(a, b, c)))
        out.append((f"star-path:{n}", star_path(n)))
    if n >= 3:
        legs = sorted(((n - 3) // 3 + (1 if i < (n - 3) % 3 else 0)) for i in range(3))
        p, q, r = legs
        out.append((f"triangle-spider:{p},{q},{r}", triangle_spider(p, q, r)))
        if r >= 1:
            out.append((f"triple-star:{p},{q},{r}", triple_star(p, q, r)))
    if n >= 4:
        out.append((f"h2:{','.join(['V'] * (n - 3))}", h2_graph(["V"] * (n - 3))))
    if n >= 5:
        out.append((f"example2-inner-complete:{n - 4}",
                    example2(complete_graph(n - 4))))
    return out
