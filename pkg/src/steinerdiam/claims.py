"""Registry of verifiable claims over graph corpora.

Each claim couples a vectorized check over a ProfileBlock with the metadata
the runner needs: which block columns it reads (wants), the smallest n the
statement is made for (min_n), and whether smaller n should still be
scanned with mismatches reported informationally (scan_below) rather than
as violations. A block check returns two boolean masks, (applicable,
holds); rows outside applicable count as vacuous.

The bound arithmetic for the complement-pair claims is not restated here;
it comes from the builders in the nordhaus module so there is a single
source for each inequality. The per-graph helpers at the bottom mirror a
few checks for callers holding one graph rather than a block.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable

import numpy as np

from . import _pykern
from .errors import CapacityError, DomainError, ParameterError
from .graphs import ExtLength, Graph, is_connected, min_degree, pairwise_distances
from .nordhaus import (
    Verdict,
    near_full_case_values,
    penultimate_pair_bounds,
    small_k_bounds,
    sum_product_bounds,
)
from .profiles import (
    ProfileBlock,
    W_CIRC,
    W_CUTS,
    W_LEM0,
    W_MEDIAN,
    W_ORACLE,
    W_RECOG,
    W_SD3,
    W_TABLE_C,
    W_TABLE_G,
)
from .steiner import steiner_distance, steiner_distance_3, steiner_distance_oracle, steiner_diameter
from .structure import circumference

BlockCheck = Callable[[ProfileBlock], tuple[np.ndarray, np.ndarray]]
Detail = Callable[[ProfileBlock, int], str]

_TREE_CHECK_MAX_N = 12


@dataclass(frozen=True)
class Claim:
    claim_id: str
    description: str
    wants: int
    min_n: int
    check: BlockCheck | None
    detail: Detail | None = None
    per_graph: Callable[[Graph], Verdict] | None = None
    per_graph_max_n: int = 62
    block_filter: Callable[[ProfileBlock], np.ndarray] | None = None
    scan_below: bool = False
    tree_scan: bool = False
    aux_count: Callable[[ProfileBlock, np.ndarray], int] | None = None
    aux_label: str = ""


def _ks(n: int) -> np.ndarray:
    return np.arange(2, n + 1, dtype=np.int64)


def _pair_cols(b: ProfileBlock, k: int) -> tuple[np.ndarray, np.ndarray]:
    sg = b.sdiam_g[:, k].astype(np.int64)
    sc = b.sdiam_c[:, k].astype(np.int64)
    return sg, sc


def _check_obs1(b: ProfileBlock):
    n = b.n
    comp, path, cyc = b.complete(), b.path(), b.cycle()
    app = b.conn_g & (comp | path | cyc)
    ks = _ks(n)
    sub = b.sdiam_g[:, 2:].astype(np.int64)
    holds = np.ones(b.count, dtype=bool)
    if n >= 2:
        holds &= ~comp | (sub == ks - 1).all(axis=1)
        holds &= ~path | (sub == n - 1).all(axis=1)
        holds &= ~cyc | (sub == (n * (ks - 1)) // ks).all(axis=1)
    return app, holds


def _check_obs2(b: ProfileBlock):
    n = b.n
    app = b.conn_g
    d2 = b.sdiam_g[:, 2]
    holds = ((d2 == 1) == b.complete()) & ((d2 == n - 1) == b.path())
    return app, holds


def _check_th1(b: ProfileBlock):
    app = b.conn_g
    rhs = ~b.complete() & ~b.domedge_c
    holds = (b.sdiam_g[:, 2] == 2) == rhs
    return app, holds


def _check_th2(b: ProfileBlock):
    n = b.n
    app = b.conn_g & (n >= 3)
    holds = (b.sd3_g == 2) == (b.mindeg >= n - 2)
    return app, holds


def _check_th3(b: ProfileBlock):
    n = b.n
    app = b.conn_g & (n >= 3)
    maxdeg_c = (n - 1) - b.mindeg
    rhs = (maxdeg_c >= 2) & ~b.h1_c & ~b.h2_c
    holds = (b.sd3_g == 3) == rhs
    return app, holds


def _check_th4(b: ProfileBlock):
    n = b.n
    app = b.conn_g & (n >= 3)
    holds = (b.sd3_g == n - 1) == (b.spider_g | b.trispider_g)
    return app, holds


def _check_pro1(b: ProfileBlock):
    n = b.n
    app = b.conn_g
    ks = _ks(n)
    sub = b.sdiam_g[:, 2:].astype(np.int64)
    holds = ((sub >= ks - 1) & (sub <= n - 1)).all(axis=1)
    return app, holds


def _check_pro2(b: ProfileBlock):
    n = b.n
    app = b.tree()
    ks = _ks(n)
    sub = b.sdiam_g[:, 2:].astype(np.int64)
    lhs = sub == n - 1
    rhs = b.leafcnt.astype(np.int64)[:, None] <= ks[None, :]
    holds = (lhs == rhs).all(axis=1)
    return app, holds


def _check_lem1(b: ProfileBlock):
    n = b.n
    app = b.conn_g
    ks = _ks(n)
    sub = b.sdiam_g[:, 2:].astype(np.int64)
    deg = b.mindeg.astype(np.int64)[:, None]
    holds = ((sub != ks - 1) | (deg >= n - ks + 1)).all(axis=1)
    return app, holds


def _check_lem2(b: ProfileBlock):
    n = b.n
    app = b.conn_g & (n >= 3)
    holds = (b.circ_g < 4) | (b.sd3_g <= n - 2)
    return app, holds


def _check_pro6(b: ProfileBlock):
    n = b.n
    app = np.ones(b.count, dtype=bool)
    ks = np.arange(3, n + 1, dtype=np.int64)
    sg = b.sdiam_g[:, 3:].astype(np.int64)
    sc = b.sdiam_c[:, 3:].astype(np.int64)
    holds = ((sg < 2 * ks) | (sc <= ks)).all(axis=1)
    return app, holds


def _check_th5(b: ProfileBlock):
    n = b.n
    app = b.conn_g & b.conn_c
    holds = np.ones(b.count, dtype=bool)
    for k in range(3, n + 1):
        spec = sum_product_bounds(n, k)
        sg, sc = _pair_cols(b, k)
        s = sg + sc
        p = sg * sc
        holds &= (s >= spec.lower_sum) & (s <= spec.upper_sum)
        holds &= (p >= spec.lower_prod) & (p <= spec.upper_prod)
        if n > 2 * k - 3:
            holds &= s != 2 * k - 2
    return app, holds


def _check_obs3n(b: ProfileBlock):
    n = b.n
    app = b.conn_g & b.conn_c
    holds = (b.sdiam_g[:, n] == n - 1) & (b.sdiam_c[:, n] == n - 1)
    return app, holds


def _proA_parts(b: ProfileBlock):
    ones = (b.cutcnt_g >= 1).astype(np.int64) + (b.cutcnt_c >= 1).astype(np.int64)
    vals = [near_full_case_values(b.n, o) for o in (0, 1, 2)]
    want_sum = np.array([v[0] for v in vals], dtype=np.int64)[ones]
    want_prod = np.array([v[1] for v in vals], dtype=np.int64)[ones]
    return ones, want_sum, want_prod


def _check_proA(b: ProfileBlock):
    n = b.n
    app = b.conn_g & b.conn_c & (n >= 3)
    if n < 3:
        return app, np.ones(b.count, dtype=bool)
    _ones, want_sum, want_prod = _proA_parts(b)
    sg, sc = _pair_cols(b, n - 1)
    holds = (sg + sc == want_sum) & (sg * sc == want_prod)
    return app, holds


def _aux_proA(b: ProfileBlock, app: np.ndarray) -> int:
    no_bridge = (((b.cutcnt_g >= 1) & (b.bridge_g == 0))
                 | ((b.cutcnt_c >= 1) & (b.bridge_c == 0)))
    return int((app & no_bridge).sum())


def _check_proB(b: ProfileBlock):
    n = b.n
    app = b.conn_g & b.conn_c & (n >= 4)
    if n < 4:
        return app, np.ones(b.count, dtype=bool)
    rich = (b.cutcnt_g >= 2) & (b.cutcnt_c >= 2)
    sg, sc = _pair_cols(b, n - 2)
    s = sg + sc
    p = sg * sc
    loose = penultimate_pair_bounds(n, True)
    tight = penultimate_pair_bounds(n, False)
    ok_loose = ((s >= loose.lower_sum) & (s <= loose.upper_sum)
                & (p >= loose.lower_prod) & (p <= loose.upper_prod))
    ok_tight = ((s >= tight.lower_sum) & (s <= tight.upper_sum)
                & (p >= tight.lower_prod) & (p <= tight.upper_prod))
    holds = np.where(rich, ok_loose, ok_tight)
    return app, holds


def _check_proC(b: ProfileBlock):
    n = b.n
    app = b.conn_g & b.conn_c & (n >= 3)
    if n < 3:
        return app, np.ones(b.count, dtype=bool)
    spec = small_k_bounds(n)
    s = b.sd3_g.astype(np.int64) + b.sd3_c.astype(np.int64)
    p = b.sd3_g.astype(np.int64) * b.sd3_c.astype(np.int64)
    holds = ((s >= spec.lower_sum) & (s <= spec.upper_sum)
             & (p >= spec.lower_prod) & (p <= spec.upper_prod))
    return app, holds


def _check_lemM(b: ProfileBlock):
    n = b.n
    app = b.conn_g & (n >= 3)
    sg = b.sdiam_g[:, n - 1] if n >= 3 else b.sdiam_g[:, 0]
    two = b.conn_g & (b.cutcnt_g == 0)
    holds = np.where(two, sg == n - 2, sg == n - 1)
    return app, holds


def _check_lem0(b: ProfileBlock):
    app = b.conn_g & b.conn_c
    lhs = (b.cutcnt_g >= 1) & (b.cutcnt_c >= 1)
    rhs = (b.cutcnt_g >= 1) & b.lem0_g
    holds = lhs == rhs
    return app, holds


def _check_oracle_dp(b: ProfileBlock):
    return np.ones(b.count, dtype=bool), b.oracle_ok.copy()


def _check_oracle_median(b: ProfileBlock):
    app = b.conn_g & (b.n >= 3)
    return app, b.med_ok.copy()


def _detail_vector(b: ProfileBlock, i: int) -> str:
    return (f"n={b.n}, m={int(b.m[i])}, "
            f"sdiam(k=2..n)={b.sdiam_g[i, 2:].tolist()}")


def _detail_vector_pair(b: ProfileBlock, i: int) -> str:
    return (f"n={b.n}, sdiam_g(k=2..n)={b.sdiam_g[i, 2:].tolist()}, "
            f"sdiam_gc(k=2..n)={b.sdiam_c[i, 2:].tolist()}")


def _detail_sd3(b: ProfileBlock, i: int) -> str:
    return (f"n={b.n}, sdiam3={int(b.sd3_g[i])}, mindeg={int(b.mindeg[i])}, "
            f"complement flags: dominating_edge={bool(b.domedge_c[i])}, "
            f"triple_star={bool(b.h1_c[i])}, path_pattern={bool(b.h2_c[i])}; "
            f"spider={bool(b.spider_g[i])}, "
            f"triangle_spider={bool(b.trispider_g[i])}")


def _detail_sd3_pair(b: ProfileBlock, i: int) -> str:
    return (f"n={b.n}, sdiam3_g={int(b.sd3_g[i])}, "
            f"sdiam3_gc={int(b.sd3_c[i])}")


def _detail_lem2(b: ProfileBlock, i: int) -> str:
    return (f"n={b.n}, circumference={int(b.circ_g[i])}, "
            f"sdiam3={int(b.sd3_g[i])}")


def _detail_proA(b: ProfileBlock, i: int) -> str:
    n = b.n
    ones = int(b.cutcnt_g[i] >= 1) + int(b.cutcnt_c[i] >= 1)
    want_sum, want_prod = near_full_case_values(n, ones)
    sg = int(b.sdiam_g[i, n - 1])
    sc = int(b.sdiam_c[i, n - 1])
    return (f"k=n-1: values ({sg}, {sc}), sides with cut vertex={ones}, "
            f"expected sum {want_sum} and product {want_prod}")


def _detail_proB(b: ProfileBlock, i: int) -> str:
    n = b.n
    rich = bool((b.cutcnt_g[i] >= 2) and (b.cutcnt_c[i] >= 2))
    spec = penultimate_pair_bounds(n, rich)
    sg = int(b.sdiam_g[i, n - 2])
    sc = int(b.sdiam_c[i, n - 2])
    return (f"k=n-2: values ({sg}, {sc}), both cut-rich={rich}, "
            f"sum window [{spec.lower_sum}, {spec.upper_sum}], "
            f"product window [{spec.lower_prod}, {spec.upper_prod}]")


def _detail_lemM(b: ProfileBlock, i: int) -> str:
    n = b.n
    sg = int(b.sdiam_g[i, n - 1])
    return (f"k=n-1: value {sg}, cut vertices={int(b.cutcnt_g[i])}")


def _detail_lem0(b: ProfileBlock, i: int) -> str:
    return (f"cut counts ({int(b.cutcnt_g[i])}, {int(b.cutcnt_c[i])}), "
            f"degree/pendant bracket={bool(b.lem0_g[i])}")


def _detail_oracle(b: ProfileBlock, i: int) -> str:
    return "table routes disagree; rerun `steinerdiam oracle-diff` on this graph"


def _lemf_per_graph(g: Graph) -> Verdict:
    if not (is_connected(g) and g.num_edges() == g.n - 1):
        return Verdict(applicable=False, holds=True)
    return Verdict(applicable=True, holds=tree_extension_identity_ok(g))


REGISTRY: dict[str, Claim] = {}


def _register(claim: Claim) -> None:
    REGISTRY[claim.claim_id] = claim


_register(Claim(
    "obs1", "Closed-form Steiner diameters of complete graphs, paths, and cycles.",
    W_TABLE_G, 1, _check_obs1, _detail_vector))
_register(Claim(
    "obs2", "Diameter 1 exactly for complete graphs; n-1 exactly for paths.",
    W_TABLE_G, 2, _check_obs2, _detail_vector))
_register(Claim(
    "th1", "Diameter 2 exactly when the complement is nonempty with no dominating edge.",
    W_TABLE_G | W_RECOG, 2, _check_th1, _detail_vector))
_register(Claim(
    "th2", "3-set diameter 2 exactly when minimum degree is at least n-2.",
    W_SD3, 3, _check_th2, _detail_sd3))
_register(Claim(
    "th3", "3-set diameter 3 exactly when the complement has maximum degree 2 "
           "or more but no spanning triple star and no covering 3-path pattern.",
    W_SD3 | W_RECOG, 4, _check_th3, _detail_sd3, scan_below=True))
_register(Claim(
    "th4", "3-set diameter n-1 exactly for spiders and triangle spiders.",
    W_SD3 | W_RECOG, 3, _check_th4, _detail_sd3))
_register(Claim(
    "pro1", "Steiner k-diameter sits between k-1 and n-1 on connected graphs.",
    W_TABLE_G, 1, _check_pro1, _detail_vector))
_register(Claim(
    "pro2", "A tree's Steiner k-diameter is n-1 exactly when it has at most k leaves.",
    W_TABLE_G, 2, _check_pro2, _detail_vector, tree_scan=True))
_register(Claim(
    "lem1", "Steiner k-diameter k-1 forces minimum degree at least n-k+1.",
    W_TABLE_G, 1, _check_lem1, _detail_vector))
_register(Claim(
    "lem2", "Circumference at least 4 forces 3-set diameter at most n-2.",
    W_SD3 | W_CIRC, 5, _check_lem2, _detail_lem2, scan_below=True))
_register(Claim(
    "lemF", "Adding a vertex to a terminal set in a tree grows the Steiner "
            "distance by the vertex's distance to the current optimal subtree.",
    0, 2, None, None, per_graph=_lemf_per_graph,
    per_graph_max_n=_TREE_CHECK_MAX_N,
    block_filter=lambda b: b.tree(), tree_scan=True))
_register(Claim(
    "pro6", "Steiner k-diameter at least 2k forces the complement's to at most k.",
    W_TABLE_G | W_TABLE_C, 3, _check_pro6, _detail_vector_pair))
_register(Claim(
    "th5", "Window for the sum and product of a both-connected pair's Steiner "
           "k-diameters, with the floor-tightness implication.",
    W_TABLE_G | W_TABLE_C, 3, _check_th5, _detail_vector_pair))
_register(Claim(
    "obs3n", "With k = n both sides of a both-connected pair equal n-1.",
    W_TABLE_G | W_TABLE_C, 2, _check_obs3n, _detail_vector_pair))
_register(Claim(
    "proA", "Exact k = n-1 pair values split by which sides have connectivity 1.",
    W_TABLE_G | W_TABLE_C | W_CUTS, 5, _check_proA, _detail_proA,
    scan_below=True, aux_count=_aux_proA,
    aux_label="connectivity-1 sides without a bridge (edge-connectivity "
              "reading would differ)"))
_register(Claim(
    "proB", "k = n-2 pair windows split by cut-vertex richness.",
    W_TABLE_G | W_TABLE_C | W_CUTS, 5, _check_proB, _detail_proB,
    scan_below=True))
_register(Claim(
    "proC", "k = 3 pair bounds for n at least 10.",
    W_SD3, 10, _check_proC, _detail_sd3_pair, scan_below=True))
_register(Claim(
    "lemM", "k = n-1 value is n-2 exactly for 2-connected graphs, else n-1.",
    W_TABLE_G | W_CUTS, 3, _check_lemM, _detail_lemM))
_register(Claim(
    "lem0", "Both sides have connectivity 1 exactly when the degree/pendant "
            "structure holds.",
    W_CUTS | W_LEM0, 4, _check_lem0, _detail_lem0))
_register(Claim(
    "oracle_dp", "Subset dynamic program agrees with the superset-scan oracle "
                 "on every terminal set.",
    W_ORACLE, 1, _check_oracle_dp, _detail_oracle))
_register(Claim(
    "oracle_median", "Vertex-median route agrees with the table route for the "
                     "3-set diameter.",
    W_MEDIAN, 3, _check_oracle_median, _detail_oracle))


def claim_ids() -> list[str]:
    return list(REGISTRY)


def get_claims(ids: list[str]) -> list[Claim]:
    out = []
    for cid in ids:
        claim = REGISTRY.get(cid)
        if claim is None:
            known = ", ".join(REGISTRY)
            raise ParameterError(f"unknown claim id {cid!r}; known: {known}")
        out.append(claim)
    return out


def tree_leaf_criterion(t: Graph, k: int) -> bool:
    """Leaf-count side of the tree criterion: at most k leaves.

    Equality with (Steiner k-diameter = n-1) is what the pro2 claim checks;
    this helper only reports the structural side.
    """
    if not (is_connected(t) and t.num_edges() == t.n - 1):
        raise DomainError("tree_leaf_criterion expects a tree")
    if not 2 <= k <= t.n:
        raise DomainError(f"k must be between 2 and n = {t.n}, got {k}")
    return t.degrees().count(1) <= k


def min_degree_implication_ok(g: Graph, k: int) -> bool:
    """If sdiam_k equals its floor k-1, minimum degree is at least n-k+1."""
    val = steiner_diameter(g, k)
    return val != k - 1 or min_degree(g) >= g.n - k + 1


def circumference_bound_ok(g: Graph) -> bool:
    """A cycle of length at least 4 forces 3-set diameter at most n-2."""
    if circumference(g) < 4:
        return True
    return steiner_diameter(g, 3) <= g.n - 2


def tree_extension_identity_ok(g: Graph, max_set: int | None = None) -> bool:
    """Check the incremental-distance identity on one tree.

    For every terminal set S (up to max_set terminals) and vertex v outside
    S, the Steiner distance of S plus v equals the Steiner distance of S
    plus the distance from v to the optimal subtree for S. Terminal sets
    are capped at 4 above n = 8, matching the exhaustive sweep.
    """
    n = g.n
    if n > _TREE_CHECK_MAX_N:
        raise CapacityError(
            f"the tree identity check covers n <= {_TREE_CHECK_MAX_N}, got {n}")
    if not (is_connected(g) and g.num_edges() == n - 1):
        raise DomainError("tree_extension_identity_ok expects a tree")
    if max_set is None:
        max_set = n if n <= 8 else 4
    rows = list(g.rows)
    order, parent = _pykern._tree_order(n, rows)
    return bool(_pykern._tree_lemf_ok(n, rows, order, parent, max_set,
                                      (1 << n) - 1))


def _minimal_subtree(g: Graph, terms: set[int]) -> set[int]:
    """Vertices of the unique minimal subtree of a tree containing terms."""
    keep = set(range(g.n))
    deg = {v: g.degree(v) for v in keep}
    stack = [v for v in keep if deg[v] <= 1 and v not in terms]
    while stack:
        v = stack.pop()
        keep.discard(v)
        for u in g.neighbors(v):
            if u in keep:
                deg[u] -= 1
                if deg[u] == 1 and u not in terms:
                    stack.append(u)
    return keep


def tree_identity_witness(g: Graph, max_set: int | None = None,
                          ) -> tuple[tuple[int, ...], int, int, int] | None:
    """First violation of the incremental-distance identity on a tree.

    Returns (terminals, added vertex, actual distance, predicted distance)
    or None. Computed by leaf-pruning the unique minimal subtree, a route
    independent of both kernels, so it doubles as the witness builder for
    violations the compiled scan reports.
    """
    n = g.n
    if not (is_connected(g) and g.num_edges() == n - 1):
        raise DomainError("tree_identity_witness expects a tree")
    if max_set is None:
        max_set = n if n <= 8 else 4
    dist = pairwise_distances(g)
    for size in range(2, min(max_set, n) + 1):
        for terms in combinations(range(n), size):
            sub = _minimal_subtree(g, set(terms))
            base = len(sub) - 1
            for v in range(n):
                if v in terms:
                    continue
                predicted = base + min(dist[v][u] for u in sub)
                actual = len(_minimal_subtree(g, set(terms) | {v})) - 1
                if actual != predicted:
                    return terms, v, actual, predicted
    return None


def oracle_differences(g: Graph, kmax: int = 4, limit: int = 5,
                       ) -> list[tuple[tuple[int, ...], ExtLength, ExtLength]]:
    """Terminal sets where the subset DP and the superset oracle disagree.

    Returns up to `limit` entries of (terminals, dp value, oracle value)
    over all sets of size 2..kmax. The median route for 3-sets is folded in:
    a 3-set also reports a mismatch if the median value differs from the DP.
    """
    out: list[tuple[tuple[int, ...], ExtLength, ExtLength]] = []
    for k in range(2, min(kmax, g.n) + 1):
        for ts in combinations(range(g.n), k):
            dp = steiner_distance(g, ts)
            orc = steiner_distance_oracle(g, ts)
            bad = dp != orc
            if k == 3 and not bad:
                bad = steiner_distance_3(g, *ts) != dp
            if bad:
                out.append((ts, dp, orc))
                if len(out) >= limit:
                    return out
    return out
