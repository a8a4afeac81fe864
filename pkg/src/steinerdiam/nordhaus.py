"""Bounds and case analyses for Steiner diameters of a graph and its
complement, checked as a pair.

The bound arithmetic lives in small pure builders returning BoundSpec, so
the exhaustive verification harness and the per-graph checks here share one
statement of each inequality while computing the metric values through
independent routes. The builders evaluate for any n; each check function
gates on the range the statement is made for, and the harness may still
scan smaller n informationally.

Check functions return a Verdict; inapplicable inputs (wrong n, wrong k, a
disconnected side where connectivity is required) give applicable=False and
count as vacuous, never as violations. All arithmetic is infinity-aware: a
disconnected side has infinite Steiner diameters, and sums, products, and
comparisons propagate that honestly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError
from .graphs import ExtLength, Graph, complement, delete_vertex, is_connected, max_degree
from .steiner import steiner_diameter
from .structure import (
    cut_vertices,
    edge_connectivity,
    has_spanning_complete_bipartite,
    is_2_connected,
    vertex_connectivity,
)


@dataclass(frozen=True)
class BoundSpec:
    """Closed ranges for sdiam_k(G) + sdiam_k(co-G) and the product.

    x is the slack parameter of the general bounds; builders for the
    special-k bounds set it to 0.
    """

    k: int
    n: int
    x: int
    lower_sum: int
    upper_sum: int
    lower_prod: int
    upper_prod: int

    def contains(self, s: ExtLength, p: ExtLength) -> bool:
        return (self.lower_sum <= s <= self.upper_sum
                and self.lower_prod <= p <= self.upper_prod)


@dataclass(frozen=True)
class PairMetrics:
    n: int
    k: int
    d_g: ExtLength
    d_gc: ExtLength
    conn_g: bool
    conn_c: bool

    @property
    def sum(self) -> ExtLength:
        return self.d_g + self.d_gc

    @property
    def product(self) -> ExtLength:
        return self.d_g * self.d_gc


@dataclass(frozen=True)
class Verdict:
    applicable: bool
    holds: bool
    note: str = ""


_VACUOUS = Verdict(applicable=False, holds=True)


def pair_metrics(g: Graph, k: int) -> PairMetrics:
    if not 2 <= k <= g.n:
        raise DomainError(f"k must be between 2 and n = {g.n}, got {k}")
    cg = complement(g)
    return PairMetrics(
        n=g.n,
        k=k,
        d_g=steiner_diameter(g, k),
        d_gc=steiner_diameter(cg, k),
        conn_g=is_connected(g),
        conn_c=is_connected(cg),
    )


def sum_product_bounds(n: int, k: int) -> BoundSpec:
    """General pair bounds for 3 <= k <= n, both sides connected.

    The slack x is 1 exactly when n <= 2k-3, where the lower bounds loosen
    by one (sum) and by k-1 (product).
    """
    if not 3 <= k <= n:
        raise DomainError(f"bounds need 3 <= k <= n, got k={k}, n={n}")
    x = 0 if n >= 2 * k - 2 else 1
    return BoundSpec(
        k=k, n=n, x=x,
        lower_sum=2 * k - 1 - x,
        upper_sum=max(n + k - 1, 4 * k - 2),
        lower_prod=(k - 1) * (k - x),
        upper_prod=max(k * (n - 1), (2 * k - 1) ** 2),
    )


def small_k_bounds(n: int) -> BoundSpec:
    """Sharper pair bounds for k = 3, stated for n >= 10."""
    return BoundSpec(k=3, n=n, x=0, lower_sum=6, upper_sum=n + 2,
                     lower_prod=9, upper_prod=3 * (n - 1))


def penultimate_pair_bounds(n: int, both_cut_rich: bool) -> BoundSpec:
    """Pair bounds for k = n-2, stated for n >= 5.

    The upper bounds loosen when both sides have at least two cut vertices;
    the lower bounds are the k-1 floor on each side either way.
    """
    if both_cut_rich:
        return BoundSpec(k=n - 2, n=n, x=0,
                         lower_sum=2 * n - 6, upper_sum=2 * n - 2,
                         lower_prod=(n - 3) ** 2, upper_prod=(n - 1) ** 2)
    return BoundSpec(k=n - 2, n=n, x=0,
                     lower_sum=2 * n - 6, upper_sum=2 * n - 3,
                     lower_prod=(n - 3) ** 2, upper_prod=(n - 1) * (n - 2))


def near_full_case_values(n: int, sides_with_cut_vertex: int) -> tuple[int, int]:
    """Exact (sum, product) for k = n-1, split by how many of the two sides
    have connectivity exactly 1. Stated for n >= 5."""
    if sides_with_cut_vertex == 0:
        return 2 * n - 4, (n - 2) ** 2
    if sides_with_cut_vertex == 1:
        return 2 * n - 3, (n - 1) * (n - 2)
    if sides_with_cut_vertex == 2:
        return 2 * n - 2, (n - 1) ** 2
    raise DomainError("sides_with_cut_vertex must be 0, 1, or 2")


def check_sum_product_bounds(pm: PairMetrics) -> Verdict:
    """General bounds plus the tightness condition on the sum's floor: a
    sum of 2k-2 forces both sides to k-1, which needs n <= 2k-3."""
    if not (pm.conn_g and pm.conn_c and 3 <= pm.k <= pm.n):
        return _VACUOUS
    spec = sum_product_bounds(pm.n, pm.k)
    holds = spec.contains(pm.sum, pm.product)
    if pm.sum == 2 * pm.k - 2 and pm.n > 2 * pm.k - 3:
        holds = False
    return Verdict(applicable=True, holds=holds)


def check_large_forces_small(pm: PairMetrics) -> Verdict:
    """A Steiner k-diameter of 2k or more forces the complement's to k or
    less. Checked on every graph; infinities count as large."""
    if not 3 <= pm.k <= pm.n:
        return _VACUOUS
    if pm.d_g < 2 * pm.k:
        return Verdict(applicable=True, holds=True, note="antecedent false")
    return Verdict(applicable=True, holds=pm.d_gc <= pm.k)


def check_full_set_diameter(pm: PairMetrics) -> Verdict:
    """With k = n the Steiner diameter of every connected graph is the
    spanning-tree edge count n-1, on both sides at once, so the pair sum is
    2n-2 and the product (n-1)^2."""
    if pm.k != pm.n or not (pm.conn_g and pm.conn_c):
        return _VACUOUS
    return Verdict(applicable=True,
                   holds=pm.d_g == pm.n - 1 and pm.d_gc == pm.n - 1)


def check_two_connected_penultimate(g: Graph) -> Verdict:
    """For k = n-1 the value is n-2 exactly for 2-connected graphs and n-1
    for connected graphs with a cut vertex."""
    if g.n < 3 or not is_connected(g):
        return _VACUOUS
    val = steiner_diameter(g, g.n - 1)
    if is_2_connected(g):
        return Verdict(applicable=True, holds=val == g.n - 2)
    return Verdict(applicable=True, holds=val == g.n - 1)


def degree_pendant_bracket(g: Graph) -> bool:
    """Either a vertex of degree n-2, or maximum degree at most n-3 and a
    pendant vertex whose removal leaves a spanning complete bipartite
    subgraph. (For n >= 3 a pendant vertex's neighbor is automatically a
    cut vertex, so the pendant clause needs no separate cut check.)"""
    top = max_degree(g)
    if top == g.n - 2:
        return True
    if top > g.n - 2:
        return False
    deg = g.degrees()
    return any(
        deg[u] == 1 and has_spanning_complete_bipartite(delete_vertex(g, u))
        for u in range(g.n))


def mutual_cut_structural(g: Graph) -> bool:
    """Structural side of the mutual cut-vertex characterization:
    connectivity exactly 1 together with the degree/pendant bracket."""
    return vertex_connectivity(g) == 1 and degree_pendant_bracket(g)


def check_mutual_cut_characterization(g: Graph) -> Verdict:
    """Both the graph and its complement have connectivity exactly 1 iff
    the structural description holds. Checked on both-connected pairs."""
    if g.n < 4:
        return _VACUOUS
    cg = complement(g)
    if not (is_connected(g) and is_connected(cg)):
        return _VACUOUS
    lhs = vertex_connectivity(g) == 1 and vertex_connectivity(cg) == 1
    return Verdict(applicable=True, holds=lhs == mutual_cut_structural(g))


def check_near_full_pair(g: Graph) -> Verdict:
    """Exact k = n-1 pair values by connectivity case, n >= 5.

    The three cases (no side, one side, both sides with connectivity 1)
    partition the both-connected pairs and carry distinct sums, so checking
    case -> values on every graph is the full case equivalence. The note
    flags graphs where connectivity 1 coexists with edge connectivity 2 or
    more; a bridge-based reading of the one-sided case would misclassify
    those.
    """
    n = g.n
    if n < 5:
        return _VACUOUS
    cg = complement(g)
    if not (is_connected(g) and is_connected(cg)):
        return _VACUOUS
    kg = vertex_connectivity(g)
    kc = vertex_connectivity(cg)
    ones = (kg == 1) + (kc == 1)
    want_sum, want_prod = near_full_case_values(n, ones)
    sg = steiner_diameter(g, n - 1)
    sc = steiner_diameter(cg, n - 1)
    notes = []
    if kg == 1 and edge_connectivity(g) >= 2:
        notes.append("graph has connectivity 1 but no bridge")
    if kc == 1 and edge_connectivity(cg) >= 2:
        notes.append("complement has connectivity 1 but no bridge")
    return Verdict(applicable=True,
                   holds=sg + sc == want_sum and sg * sc == want_prod,
                   note="; ".join(notes))


def check_penultimate_pair(g: Graph) -> Verdict:
    """k = n-2 pair bounds, n >= 5, split by cut-vertex richness."""
    n = g.n
    if n < 5:
        return _VACUOUS
    cg = complement(g)
    if not (is_connected(g) and is_connected(cg)):
        return _VACUOUS
    rich = len(cut_vertices(g)) >= 2 and len(cut_vertices(cg)) >= 2
    spec = penultimate_pair_bounds(n, rich)
    sg = steiner_diameter(g, n - 2)
    sc = steiner_diameter(cg, n - 2)
    return Verdict(applicable=True, holds=spec.contains(sg + sc, sg * sc))


def check_small_k_pair(g: Graph) -> Verdict:
    """k = 3 pair bounds for n >= 10."""
    n = g.n
    if n < 10:
        return _VACUOUS
    cg = complement(g)
    if not (is_connected(g) and is_connected(cg)):
        return _VACUOUS
    spec = small_k_bounds(n)
    sg = steiner_diameter(g, 3)
    sc = steiner_diameter(cg, 3)
    return Verdict(applicable=True, holds=spec.contains(sg + sc, sg * sc))


def check_pair_bounds_for_k(g: Graph, k: int) -> Verdict:
    """General bounds for one graph and one k, from freshly computed values."""
    if not 3 <= k <= g.n:
        return _VACUOUS
    return check_sum_product_bounds(pair_metrics(g, k))
