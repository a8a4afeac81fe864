"""Per-graph metric blocks for the verification harness.

A ProfileBlock is a column table: one row per graph, one numpy array per
metric. Two builders produce the same layout through different routes.
kernel_block drives the compiled (or pure fallback) kernel over a range of
edge masks, which is how exhaustive labeled sweeps stay fast; build_block
walks explicit Graph objects through the high-level library calls, which is
the route for files, samples, and families, and the cross-check for the
kernel in tests.

The `wants` bitmask picks which column groups get computed; unselected
columns stay at their zero (or all-true, for the consistency flags) fill.
Values that would be infinite are stored as INF16 so every column stays a
compact integer array.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernel
from .errors import CapacityError, DomainError
from .graphs import (
    Graph,
    complement,
    edge_mask_of,
    induced_connected,
    is_connected,
)
from .nordhaus import degree_pendant_bracket
from .recognizers import (
    has_spanning_double_star,
    has_spanning_h2,
    has_spanning_triple_star,
    recognize_spider,
    recognize_triangle_spider,
)
from .steiner import steiner_report
from . import structure
from .structure import bridges, circumference, cut_vertices

INF16 = _kernel.INF16
W_TABLE_G = _kernel.W_TABLE_G
W_TABLE_C = _kernel.W_TABLE_C
W_SD3 = _kernel.W_SD3
W_CUTS = _kernel.W_CUTS
W_CIRC = _kernel.W_CIRC
W_LEM0 = _kernel.W_LEM0
W_RECOG = _kernel.W_RECOG
W_ORACLE = _kernel.W_ORACLE
W_MEDIAN = _kernel.W_MEDIAN
W_ALL = (W_TABLE_G | W_TABLE_C | W_SD3 | W_CUTS | W_CIRC | W_LEM0
         | W_RECOG | W_ORACLE | W_MEDIAN)

_TABLE_MAX_N = 16
_SD3_MAX_N = 32


@dataclass
class ProfileBlock:
    n: int
    emask: np.ndarray
    m: np.ndarray
    mindeg: np.ndarray
    maxdeg: np.ndarray
    leafcnt: np.ndarray
    conn_g: np.ndarray
    conn_c: np.ndarray
    sdiam_g: np.ndarray
    sdiam_c: np.ndarray
    sd3_g: np.ndarray
    sd3_c: np.ndarray
    cutcnt_g: np.ndarray
    cutcnt_c: np.ndarray
    bridge_g: np.ndarray
    bridge_c: np.ndarray
    circ_g: np.ndarray
    lem0_g: np.ndarray
    domedge_c: np.ndarray
    h1_c: np.ndarray
    h2_c: np.ndarray
    spider_g: np.ndarray
    trispider_g: np.ndarray
    oracle_ok: np.ndarray
    med_ok: np.ndarray

    @property
    def count(self) -> int:
        return len(self.emask)

    def complete(self) -> np.ndarray:
        return self.m == self.n * (self.n - 1) // 2

    def path(self) -> np.ndarray:
        return self.conn_g & (self.m == self.n - 1) & (self.maxdeg <= 2)

    def cycle(self) -> np.ndarray:
        return (self.conn_g & (self.m == self.n)
                & (self.mindeg == 2) & (self.maxdeg == 2))

    def tree(self) -> np.ndarray:
        return self.conn_g & (self.m == self.n - 1)


def kernel_block(n: int, start: int, count: int, wants: int) -> ProfileBlock:
    return ProfileBlock(n=n, **_kernel.profile_block(n, start, count, wants))


def _sdiam_row(g: Graph, connected: bool) -> list[int]:
    n = g.n
    if not connected:
        return [0, 0] + [INF16] * (n - 1)
    rep = steiner_report(g)
    row = [0] * (n + 1)
    for k in range(2, n + 1):
        row[k] = min(int(rep.diameter[k]), INF16)
    return row


def _oracle_agrees(g: Graph) -> bool:
    """Compare the subset dynamic program against the superset-scan oracle
    over every terminal set at once."""
    n = g.n
    size = 1 << n
    inf = _kernel.INF
    f = np.zeros(size, dtype=np.int32)
    for mask in range(1, size):
        f[mask] = mask.bit_count() - 1 if induced_connected(g, mask) else inf
    for i in range(n):
        view = f.reshape(-1, 2, 1 << i)
        np.minimum(view[:, 0, :], view[:, 1, :], out=view[:, 0, :])
    dw = np.asarray(_kernel.steiner_table(n, list(g.rows)), dtype=np.int32)
    return bool(np.array_equal(np.minimum(f, inf), np.minimum(dw, inf)))


def _check_wants_capacity(n: int, wants: int) -> None:
    if wants & (W_TABLE_G | W_TABLE_C | W_ORACLE | W_MEDIAN) and n > _TABLE_MAX_N:
        raise CapacityError(
            f"full Steiner tables cover n <= {_TABLE_MAX_N}, got {n}")
    if wants & W_SD3 and n > _SD3_MAX_N:
        raise CapacityError(
            f"the 3-set median scan covers n <= {_SD3_MAX_N}, got {n}")
    if wants & W_CIRC and n > structure._CIRCUMFERENCE_MAX_N:
        raise CapacityError(
            f"exact circumference covers n <= "
            f"{structure._CIRCUMFERENCE_MAX_N}, got {n}")
    if wants & W_LEM0 and n > structure._BIPARTITION_MAX_N:
        raise CapacityError(
            f"the degree/pendant bracket covers n <= "
            f"{structure._BIPARTITION_MAX_N}, got {n}")


def build_block(n: int, graphs: list[Graph], wants: int) -> ProfileBlock:
    """Profile explicit graphs through the high-level library routes.

    All graphs must share the vertex count n. The emask column is only
    filled while the full edge mask fits 64 bits (n <= 11); rows past that
    carry zero there and are identified by position instead.
    """
    _check_wants_capacity(n, wants)
    count = len(graphs)
    emask = np.zeros(count, dtype=np.uint64)
    m_edges = np.zeros(count, dtype=np.int16)
    mindeg = np.zeros(count, dtype=np.int16)
    maxdeg = np.zeros(count, dtype=np.int16)
    leafcnt = np.zeros(count, dtype=np.int16)
    conn_g = np.zeros(count, dtype=np.bool_)
    conn_c = np.zeros(count, dtype=np.bool_)
    sdiam_g = np.zeros((count, n + 1), dtype=np.int16)
    sdiam_c = np.zeros((count, n + 1), dtype=np.int16)
    sd3_g = np.zeros(count, dtype=np.int16)
    sd3_c = np.zeros(count, dtype=np.int16)
    cutcnt_g = np.zeros(count, dtype=np.int16)
    cutcnt_c = np.zeros(count, dtype=np.int16)
    bridge_g = np.zeros(count, dtype=np.int16)
    bridge_c = np.zeros(count, dtype=np.int16)
    circ_g = np.zeros(count, dtype=np.int16)
    lem0_g = np.zeros(count, dtype=np.bool_)
    domedge_c = np.zeros(count, dtype=np.bool_)
    h1_c = np.zeros(count, dtype=np.bool_)
    h2_c = np.zeros(count, dtype=np.bool_)
    spider_g = np.zeros(count, dtype=np.bool_)
    trispider_g = np.zeros(count, dtype=np.bool_)
    oracle_ok = np.ones(count, dtype=np.bool_)
    med_ok = np.ones(count, dtype=np.bool_)

    for i, g in enumerate(graphs):
        if g.n != n:
            raise DomainError(
                f"block expects graphs on {n} vertices, got one on {g.n}")
        if n <= 11:
            emask[i] = edge_mask_of(g)
        deg = g.degrees()
        m_edges[i] = g.num_edges()
        mindeg[i] = min(deg)
        maxdeg[i] = max(deg)
        leafcnt[i] = deg.count(1)
        cg = is_connected(g)
        co = complement(g)
        cc = is_connected(co)
        conn_g[i] = cg
        conn_c[i] = cc

        row_g = None
        if wants & (W_TABLE_G | W_MEDIAN):
            row_g = _sdiam_row(g, cg)
        if wants & W_TABLE_G:
            sdiam_g[i] = row_g
        if wants & W_TABLE_C:
            sdiam_c[i] = _sdiam_row(co, cc)
        if wants & W_SD3 and n >= 3:
            sd3_g[i] = min(_kernel.sdiam3_value(n, list(g.rows)), INF16) \
                if cg else INF16
            sd3_c[i] = min(_kernel.sdiam3_value(n, list(co.rows)), INF16) \
                if cc else INF16

        if wants & W_CUTS:
            cutcnt_g[i] = len(cut_vertices(g)) if cg else -1
            cutcnt_c[i] = len(cut_vertices(co)) if cc else -1
            bridge_g[i] = len(bridges(g)) if cg else -1
            bridge_c[i] = len(bridges(co)) if cc else -1

        if wants & W_CIRC:
            circ_g[i] = circumference(g)

        if wants & W_LEM0:
            lem0_g[i] = degree_pendant_bracket(g)

        if wants & W_RECOG:
            domedge_c[i] = has_spanning_double_star(co)
            h1_c[i] = has_spanning_triple_star(co)
            h2_c[i] = has_spanning_h2(co)
            spider_g[i] = recognize_spider(g) is not None
            trispider_g[i] = recognize_triangle_spider(g) is not None

        if wants & W_ORACLE:
            oracle_ok[i] = _oracle_agrees(g)
        if wants & W_MEDIAN and cg and n >= 3:
            med = min(_kernel.sdiam3_value(n, list(g.rows)), INF16)
            med_ok[i] = med == row_g[3]

    return ProfileBlock(
        n=n, emask=emask, m=m_edges, mindeg=mindeg, maxdeg=maxdeg,
        leafcnt=leafcnt, conn_g=conn_g, conn_c=conn_c, sdiam_g=sdiam_g,
        sdiam_c=sdiam_c, sd3_g=sd3_g, sd3_c=sd3_c, cutcnt_g=cutcnt_g,
        cutcnt_c=cutcnt_c, bridge_g=bridge_g, bridge_c=bridge_c,
        circ_g=circ_g, lem0_g=lem0_g, domedge_c=domedge_c, h1_c=h1_c,
        h2_c=h2_c, spider_g=spider_g, trispider_g=trispider_g,
        oracle_ok=oracle_ok, med_ok=med_ok,
    )
