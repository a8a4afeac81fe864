# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled computation kernel.

Mirrors steinerdiam._pykern function for function; see that module for the
shared conventions (edge-mask bit order, Pruefer tree indexing, INF
sentinels). Any behavioral difference between the two kernels is a bug, and
the test suite compares them directly.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

import numpy as np

cdef extern from *:
    """
    #define POPCNT(x) __builtin_popcount((unsigned)(x))
    #define CTZ(x) __builtin_ctz((unsigned)(x))
    #define HIBIT(x) (31 - __builtin_clz((unsigned)(x)))
    """
    int POPCNT(unsigned int x) nogil
    int CTZ(unsigned int x) nogil
    int HIBIT(unsigned int x) nogil

BACKEND = "c"

INF = 1 << 20
INF16 = 9999

W_TABLE_G = 1
W_TABLE_C = 2
W_SD3 = 4
W_CUTS = 8
W_CIRC = 16
W_LEM0 = 32
W_RECOG = 64
W_ORACLE = 128
W_MEDIAN = 256

cdef int C_INF = 1 << 20
cdef short C_INF16 = 9999
cdef int C_BIG = 0x3FFFFFFF

cdef enum:
    MAXN = 16


cdef unsigned int _reach_c(unsigned int* rows, unsigned int seed,
                           unsigned int within) nogil:
    cdef unsigned int seen = seed & within
    cdef unsigned int frontier = seen
    cdef unsigned int nxt, f
    cdef int v
    while frontier:
        nxt = 0
        f = frontier
        while f:
            v = CTZ(f)
            f &= f - 1
            nxt |= rows[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


cdef bint _connected_c(unsigned int* rows, unsigned int within) nogil:
    if within == 0:
        return True
    return _reach_c(rows, within & (0 - within), within) == within


cdef void _distances_c(int n, unsigned int* rows, int* dist) nogil:
    cdef int s, v, step
    cdef unsigned int seen, frontier, nxt, f
    for s in range(n):
        for v in range(n):
            dist[s * n + v] = C_INF
        dist[s * n + s] = 0
        seen = 1u << s
        frontier = seen
        step = 0
        while frontier:
            step += 1
            nxt = 0
            f = frontier
            while f:
                v = CTZ(f)
                f &= f - 1
                nxt |= rows[v]
            nxt &= ~seen
            f = nxt
            while f:
                v = CTZ(f)
                f &= f - 1
                dist[s * n + v] = step
            seen |= nxt
            frontier = nxt


cdef void _steiner_dp_c(int n, unsigned int* rows, int* dist, int* dp,
                        int* table) nogil:
    """Full Dreyfus-Wagner table; dp is (1<<n)*n scratch, table is 1<<n out."""
    cdef int size = 1 << n
    cdef int mask, a, ai, rest, sub, v, u, b, c, base, b1, b2
    cdef int best[MAXN]
    _distances_c(n, rows, dist)
    for v in range(size):
        table[v] = 0
    for a in range(n):
        base = (1 << a) * n
        for v in range(n):
            dp[base + v] = dist[a * n + v]
    for mask in range(3, size):
        if mask & (mask - 1) == 0:
            continue
        a = mask & (-mask)
        ai = CTZ(<unsigned int> mask)
        rest = mask ^ a
        for v in range(n):
            best[v] = C_BIG
        sub = (rest - 1) & rest
        while True:
            b1 = (a | sub) * n
            b2 = (mask ^ a ^ sub) * n
            for v in range(n):
                c = dp[b1 + v] + dp[b2 + v]
                if c < best[v]:
                    best[v] = c
            if sub == 0:
                break
            sub = (sub - 1) & rest
        base = mask * n
        for v in range(n):
            b = best[v]
            for u in range(n):
                c = best[u] + dist[u * n + v]
                if c < b:
                    b = c
            if b > C_INF:
                b = C_INF
            dp[base + v] = b
        table[mask] = dp[base + ai]


cdef void _oracle_table_c(int n, unsigned int* rows, int* f) nogil:
    cdef int size = 1 << n
    cdef int mask, i, bit
    f[0] = 0
    for mask in range(1, size):
        if _connected_c(rows, <unsigned int> mask):
            f[mask] = POPCNT(<unsigned int> mask) - 1
        else:
            f[mask] = C_INF
    for i in range(n):
        bit = 1 << i
        for mask in range(size):
            if not mask & bit and f[mask | bit] < f[mask]:
                f[mask] = f[mask | bit]


cdef void _sdiam_vec_c(int n, int* table, short* out) nogil:
    cdef int mask, k, t
    for k in range(n + 1):
        out[k] = 0
    for mask in range(1, 1 << n):
        k = POPCNT(<unsigned int> mask)
        t = table[mask]
        if t > out[k]:
            out[k] = <short> (C_INF16 if t >= C_INF else t)


cdef int _sdiam3_med_c(int n, int* dist) nogil:
    cdef int a, b, c, m, s, low, best
    best = 0
    for a in range(n):
        for m in range(n):
            if dist[a * n + m] >= C_INF:
                return C_INF
        for b in range(a + 1, n):
            for c in range(b + 1, n):
                low = C_BIG
                for m in range(n):
                    s = dist[a * n + m] + dist[b * n + m] + dist[c * n + m]
                    if s < low:
                        low = s
                if low > best:
                    best = low
    return best


cdef int _count_cuts_c(int n, unsigned int* rows, unsigned int full) nogil:
    cdef int v, u, cnt = 0
    cdef unsigned int rest
    cdef unsigned int sub[MAXN]
    for v in range(n):
        rest = full ^ (1u << v)
        for u in range(n):
            sub[u] = rows[u] & rest
        if _reach_c(sub, rest & (0 - rest), rest) != rest:
            cnt += 1
    return cnt


cdef int _count_bridges_c(int n, unsigned int* rows, unsigned int full) nogil:
    cdef int v, u, cnt = 0
    cdef unsigned int f
    cdef unsigned int sub[MAXN]
    for v in range(1, n):
        f = rows[v] & ((1u << v) - 1)
        while f:
            u = CTZ(f)
            f &= f - 1
            for c in range(n):
                sub[c] = rows[c]
            sub[u] &= ~(1u << v)
            sub[v] &= ~(1u << u)
            if not _reach_c(sub, 1u << u, full) >> v & 1:
                cnt += 1
    return cnt


cdef int _circumference_c(int n, unsigned int* rows, unsigned int* reach) nogil:
    cdef int size = 1 << n
    cdef int mask, v, w, best = 0, sz
    cdef unsigned int ends, anchor, row, ext, f
    memset(reach, 0, size * sizeof(unsigned int))
    for v in range(n):
        reach[1u << v] = 1u << v
    for mask in range(1, size):
        ends = reach[mask]
        if ends == 0:
            continue
        anchor = mask & (-mask)
        sz = POPCNT(<unsigned int> mask)
        f = ends
        while f:
            v = CTZ(f)
            f &= f - 1
            row = rows[v]
            if sz >= 3 and row & anchor and (1u << v) != anchor:
                if sz > best:
                    best = sz
            ext = row & ~(<unsigned int> mask) & ~(anchor - 1)
            while ext:
                w = CTZ(ext)
                ext &= ext - 1
                reach[mask | (1u << w)] |= 1u << w
    return best


cdef bint _span_bip_c(int n, unsigned int* rows) nogil:
    cdef unsigned int full = (1u << n) - 1
    cdef unsigned int bmask, amask, f
    cdef int b, a
    cdef bint ok
    if n < 2:
        return False
    for b in range(1, 1 << (n - 1)):
        bmask = (<unsigned int> b) << 1
        amask = full ^ bmask
        ok = True
        f = amask
        while f:
            a = CTZ(f)
            f &= f - 1
            if rows[a] & bmask != bmask:
                ok = False
                break
        if ok:
            return True
    return False


cdef bint _lem0_structural_c(int n, unsigned int* rows, int* deg) nogil:
    cdef int top = 0, v, u, w
    cdef unsigned int low, r
    cdef unsigned int drop[MAXN]
    for v in range(n):
        if deg[v] > top:
            top = deg[v]
    if top == n - 2:
        return True
    if top > n - 2:
        return False
    for u in range(n):
        if deg[u] != 1:
            continue
        low = (1u << u) - 1
        w = 0
        for v in range(n):
            if v == u:
                continue
            r = rows[v]
            drop[w] = (r & low) | ((r >> (u + 1)) << u)
            w += 1
        if _span_bip_c(n - 1, drop):
            return True
    return False


cdef bint _dom_edge_c(int n, unsigned int* rows, unsigned int full) nogil:
    cdef int v, u
    cdef unsigned int f
    for v in range(1, n):
        f = rows[v] & ((1u << v) - 1)
        while f:
            u = CTZ(f)
            f &= f - 1
            if (rows[u] | rows[v] | (1u << u) | (1u << v)) == full:
                return True
    return False


cdef bint _span_h1_c(int n, unsigned int* rows, unsigned int full) nogil:
    cdef int w, v, u
    cdef unsigned int fv, fu, rw
    for w in range(2, n):
        rw = rows[w]
        fv = rw & ((1u << w) - 1)
        while fv:
            v = CTZ(fv)
            fv &= fv - 1
            fu = rw & rows[v] & ((1u << v) - 1)
            while fu:
                u = CTZ(fu)
                fu &= fu - 1
                if (rows[u] | rw | rows[v]) == full:
                    return True
    return False


cdef bint _span_h2_c(int n, unsigned int* rows, unsigned int full) nogil:
    cdef int v, w, u
    cdef unsigned int rv, fw, fu, others
    for v in range(n):
        rv = rows[v]
        fw = rv
        while fw:
            w = CTZ(fw)
            fw &= fw - 1
            fu = rv & ((1u << w) - 1)
            while fu:
                u = CTZ(fu)
                fu &= fu - 1
                others = full ^ (1u << u) ^ (1u << v) ^ (1u << w)
                if others & ~(rv | (rows[u] & rows[w])) == 0:
                    return True
    return False


cdef bint _tri_spider_c(int n, unsigned int* rows, int* deg, bint connected,
                        int m) nogil:
    cdef int w, v, u, x, cap
    cdef unsigned int tri = 0, fv, common, rw
    cdef bint found = False
    if not connected or m != n or n < 3:
        return False
    for w in range(2, n):
        rw = rows[w]
        fv = rw & ((1u << w) - 1)
        while fv:
            v = CTZ(fv)
            fv &= fv - 1
            common = rw & rows[v] & ((1u << v) - 1)
            if common:
                u = HIBIT(common)
                tri = (1u << u) | (1u << v) | (1u << w)
                found = True
                break
        if found:
            break
    if not found:
        return False
    for x in range(n):
        cap = 3 if tri >> x & 1 else 2
        if deg[x] > cap:
            return False
    return True


cdef int _deg3_count(int n, int* deg) nogil:
    cdef int v, c = 0
    for v in range(n):
        if deg[v] == 3:
            c += 1
    return c


def steiner_table(int n, rows):
    """Steiner distance of every vertex subset, as an int32 array of 2**n."""
    if n < 1 or n > MAXN:
        raise ValueError(f"steiner_table kernel supports 1 <= n <= {MAXN}")
    cdef unsigned int crows[MAXN]
    cdef int v
    for v in range(n):
        crows[v] = rows[v]
    out = np.zeros(1 << n, dtype=np.int32)
    cdef int[:] mv = out
    cdef int* dist = <int*> malloc(n * n * sizeof(int))
    cdef int* dp = <int*> malloc(((<size_t> 1) << n) * n * sizeof(int))
    if dist == NULL or dp == NULL:
        free(dist)
        free(dp)
        raise MemoryError()
    try:
        _steiner_dp_c(n, crows, dist, dp, &mv[0])
    finally:
        free(dist)
        free(dp)
    return out


def sdiam3_value(int n, rows):
    """Steiner 3-diameter of a connected graph; INF when disconnected."""
    if n < 3 or n > 32:
        raise ValueError("sdiam3_value kernel requires 3 <= n <= 32")
    cdef unsigned int crows[32]
    cdef int v
    for v in range(n):
        crows[v] = rows[v]
    cdef int* dist = <int*> malloc(n * n * sizeof(int))
    if dist == NULL:
        raise MemoryError()
    try:
        _distances_c(n, crows, dist)
        return _sdiam3_med_c(n, dist)
    finally:
        free(dist)


def profile_block(int n, unsigned long long start, Py_ssize_t count,
                  int wants):
    """Profile labeled graphs with edge masks start..start+count-1.

    Same output contract as the pure-Python kernel: a dict of per-graph numpy
    arrays, with unrequested field groups zero-filled.
    """
    if n < 1 or n > 12:
        raise ValueError("profile_block kernel supports 1 <= n <= 12")
    cdef int npairs = n * (n - 1) // 2
    cdef int size = 1 << n
    cdef unsigned int full = (1u << n) - 1

    cdef int pu[66]
    cdef int pv[66]
    cdef int b = 0, u, v
    for v in range(1, n):
        for u in range(v):
            pu[b] = u
            pv[b] = v
            b += 1

    emask = np.zeros(count, dtype=np.uint64)
    m_edges = np.zeros(count, dtype=np.int16)
    mindeg = np.zeros(count, dtype=np.int16)
    maxdeg = np.zeros(count, dtype=np.int16)
    leafcnt = np.zeros(count, dtype=np.int16)
    conn_g = np.zeros(count, dtype=np.uint8)
    conn_c = np.zeros(count, dtype=np.uint8)
    sdiam_g = np.zeros((count, n + 1), dtype=np.int16)
    sdiam_c = np.zeros((count, n + 1), dtype=np.int16)
    sd3_g = np.zeros(count, dtype=np.int16)
    sd3_c = np.zeros(count, dtype=np.int16)
    cutcnt_g = np.zeros(count, dtype=np.int16)
    cutcnt_c = np.zeros(count, dtype=np.int16)
    bridge_g = np.zeros(count, dtype=np.int16)
    bridge_c = np.zeros(count, dtype=np.int16)
    circ_g = np.zeros(count, dtype=np.int16)
    lem0_g = np.zeros(count, dtype=np.uint8)
    domedge_c = np.zeros(count, dtype=np.uint8)
    h1_c = np.zeros(count, dtype=np.uint8)
    h2_c = np.zeros(count, dtype=np.uint8)
    spider_g = np.zeros(count, dtype=np.uint8)
    trispider_g = np.zeros(count, dtype=np.uint8)
    oracle_ok = np.ones(count, dtype=np.uint8)
    med_ok = np.ones(count, dtype=np.uint8)

    cdef unsigned long long[:] emask_v = emask
    cdef short[:] m_v = m_edges
    cdef short[:] mind_v = mindeg
    cdef short[:] maxd_v = maxdeg
    cdef short[:] leaf_v = leafcnt
    cdef unsigned char[:] cg_v = conn_g
    cdef unsigned char[:] cc_v = conn_c
    cdef short[:, :] sg_v = sdiam_g
    cdef short[:, :] sc_v = sdiam_c
    cdef short[:] sd3g_v = sd3_g
    cdef short[:] sd3c_v = sd3_c
    cdef short[:] cutg_v = cutcnt_g
    cdef short[:] cutc_v = cutcnt_c
    cdef short[:] brg_v = bridge_g
    cdef short[:] brc_v = bridge_c
    cdef short[:] circ_v = circ_g
    cdef unsigned char[:] lem0_v = lem0_g
    cdef unsigned char[:] dome_v = domedge_c
    cdef unsigned char[:] h1_v = h1_c
    cdef unsigned char[:] h2_v = h2_c
    cdef unsigned char[:] spid_v = spider_g
    cdef unsigned char[:] trisp_v = trispider_g
    cdef unsigned char[:] ora_v = oracle_ok
    cdef unsigned char[:] med_v = med_ok

    cdef int* dist = <int*> malloc(n * n * sizeof(int))
    cdef int* dp = <int*> malloc((<size_t> size) * n * sizeof(int))
    cdef int* table_g = <int*> malloc(size * sizeof(int))
    cdef int* table_c = <int*> malloc(size * sizeof(int))
    cdef int* oracle = <int*> malloc(size * sizeof(int))
    cdef unsigned int* reach = <unsigned int*> malloc(
        size * sizeof(unsigned int))
    if (dist == NULL or dp == NULL or table_g == NULL or table_c == NULL
            or oracle == NULL or reach == NULL):
        free(dist); free(dp); free(table_g); free(table_c)
        free(oracle); free(reach)
        raise MemoryError()

    cdef unsigned int rows[MAXN]
    cdef unsigned int crows[MAXN]
    cdef int deg[MAXN]
    cdef short vec[MAXN + 1]
    cdef Py_ssize_t i
    cdef unsigned long long mask
    cdef int j, k, mn, mx, lc, med
    cdef bint cg, cc, want_tg, ok
    cdef int m

    want_tg_any = wants & (W_TABLE_G | W_SD3 | W_ORACLE | W_MEDIAN)
    want_tc_any = wants & (W_TABLE_C | W_SD3)

    try:
        for i in range(count):
            mask = start + <unsigned long long> i
            emask_v[i] = mask
            for v in range(n):
                rows[v] = 0
            for b in range(npairs):
                if mask >> b & 1:
                    rows[pu[b]] |= 1u << pv[b]
                    rows[pv[b]] |= 1u << pu[b]
            m = 0
            mn = n
            mx = 0
            lc = 0
            for v in range(n):
                crows[v] = full & ~rows[v] & ~(1u << v)
                deg[v] = POPCNT(rows[v])
                m += deg[v]
                if deg[v] < mn:
                    mn = deg[v]
                if deg[v] > mx:
                    mx = deg[v]
                if deg[v] == 1:
                    lc += 1
            m //= 2
            m_v[i] = <short> m
            mind_v[i] = <short> mn
            maxd_v[i] = <short> mx
            leaf_v[i] = <short> lc
            cg = _connected_c(rows, full)
            cc = _connected_c(crows, full)
            cg_v[i] = cg
            cc_v[i] = cc

            if want_tg_any and cg:
                _steiner_dp_c(n, rows, dist, dp, table_g)
            if want_tc_any and cc:
                _steiner_dp_c(n, crows, dist, dp, table_c)

            if wants & W_TABLE_G:
                if cg:
                    _sdiam_vec_c(n, table_g, vec)
                    for k in range(n + 1):
                        sg_v[i, k] = vec[k]
                else:
                    for k in range(2, n + 1):
                        sg_v[i, k] = C_INF16
            if wants & W_TABLE_C:
                if cc:
                    _sdiam_vec_c(n, table_c, vec)
                    for k in range(n + 1):
                        sc_v[i, k] = vec[k]
                else:
                    for k in range(2, n + 1):
                        sc_v[i, k] = C_INF16
            if wants & W_SD3 and n >= 3:
                if cg:
                    _sdiam_vec_c(n, table_g, vec)
                    sd3g_v[i] = vec[3]
                else:
                    sd3g_v[i] = C_INF16
                if cc:
                    _sdiam_vec_c(n, table_c, vec)
                    sd3c_v[i] = vec[3]
                else:
                    sd3c_v[i] = C_INF16

            if wants & W_CUTS:
                cutg_v[i] = <short> _count_cuts_c(n, rows, full) if cg else -1
                cutc_v[i] = <short> _count_cuts_c(n, crows, full) if cc else -1
                brg_v[i] = <short> _count_bridges_c(n, rows, full) if cg else -1
                brc_v[i] = <short> _count_bridges_c(n, crows, full) if cc else -1

            if wants & W_CIRC:
                circ_v[i] = <short> _circumference_c(n, rows, reach)

            if wants & W_LEM0:
                lem0_v[i] = _lem0_structural_c(n, rows, deg)

            if wants & W_RECOG:
                dome_v[i] = _dom_edge_c(n, crows, full)
                h1_v[i] = _span_h1_c(n, crows, full)
                h2_v[i] = _span_h2_c(n, crows, full)
                spid_v[i] = (cg and m == n - 1 and mx <= 3
                             and _deg3_count(n, deg) <= 1)
                trisp_v[i] = _tri_spider_c(n, rows, deg, cg, m)

            if wants & W_ORACLE:
                _oracle_table_c(n, rows, oracle)
                if not (want_tg_any and cg):
                    _steiner_dp_c(n, rows, dist, dp, table_g)
                ok = True
                for k in range(size):
                    if table_g[k] != oracle[k]:
                        ok = False
                        break
                ora_v[i] = ok
            if wants & W_MEDIAN and cg and n >= 3:
                _distances_c(n, rows, dist)
                med = _sdiam3_med_c(n, dist)
                _sdiam_vec_c(n, table_g, vec)
                med_v[i] = med == <int> vec[3]
    finally:
        free(dist); free(dp); free(table_g); free(table_c)
        free(oracle); free(reach)

    return {
        "emask": emask, "m": m_edges, "mindeg": mindeg, "maxdeg": maxdeg,
        "leafcnt": leafcnt, "conn_g": conn_g.view(np.bool_),
        "conn_c": conn_c.view(np.bool_), "sdiam_g": sdiam_g,
        "sdiam_c": sdiam_c, "sd3_g": sd3_g, "sd3_c": sd3_c,
        "cutcnt_g": cutcnt_g, "cutcnt_c": cutcnt_c, "bridge_g": bridge_g,
        "bridge_c": bridge_c, "circ_g": circ_g,
        "lem0_g": lem0_g.view(np.bool_), "domedge_c": domedge_c.view(np.bool_),
        "h1_c": h1_c.view(np.bool_), "h2_c": h2_c.view(np.bool_),
        "spider_g": spider_g.view(np.bool_),
        "trispider_g": trispider_g.view(np.bool_),
        "oracle_ok": oracle_ok.view(np.bool_),
        "med_ok": med_ok.view(np.bool_),
    }


cdef void _tree_decode_c(int n, unsigned long long index, int* seq,
                         int* deg, unsigned int* rows) nogil:
    cdef int i, a, ptr, leaf, l0, l1
    cdef unsigned long long x = index
    if n == 1:
        rows[0] = 0
        return
    if n == 2:
        rows[0] = 2
        rows[1] = 1
        return
    for i in range(n - 3, -1, -1):
        seq[i] = <int> (x % n)
        x //= n
    for i in range(n):
        deg[i] = 1
        rows[i] = 0
    for i in range(n - 2):
        deg[seq[i]] += 1
    ptr = 0
    leaf = -1
    for i in range(n - 2):
        a = seq[i]
        if leaf < 0:
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
        rows[leaf] |= 1u << a
        rows[a] |= 1u << leaf
        deg[leaf] = 0
        deg[a] -= 1
        if deg[a] == 1 and a < ptr:
            leaf = a
        else:
            leaf = -1
    l0 = -1
    l1 = -1
    for i in range(n):
        if deg[i] == 1:
            if l0 < 0:
                l0 = i
            else:
                l1 = i
    rows[l0] |= 1u << l1
    rows[l1] |= 1u << l0
    return


def tree_rows(int n, index):
    """Adjacency rows of the tree with the given Pruefer index."""
    if n < 1 or n > 12:
        raise ValueError("tree_rows kernel supports 1 <= n <= 12")
    cdef int seq[12]
    cdef int deg[12]
    cdef unsigned int rows[12]
    _tree_decode_c(n, index, seq, deg, rows)
    return [int(rows[v]) for v in range(n)]


cdef void _tree_order_c(int n, unsigned int* rows, int* order,
                        int* parent) nogil:
    cdef unsigned int seen = 1
    cdef int head = 0, tail = 1, v, u
    cdef unsigned int f
    order[0] = 0
    parent[0] = -1
    while head < tail:
        v = order[head]
        head += 1
        f = rows[v] & ~seen
        while f:
            u = CTZ(f)
            f &= f - 1
            parent[u] = v
            seen |= 1u << u
            order[tail] = u
            tail += 1


cdef void _tree_sdiam_c(int n, unsigned int* rows, int* order, int* parent,
                        int* e1, int* e2, int* dvec, int* sizes,
                        int* ans) nogil:
    """Leaf-budget knapsack identical to the pure kernel, with j/t loops
    bounded by processed-subtree sizes (the pure kernel loops the full range;
    the bounds are provably value-preserving because all rows are monotone)."""
    cdef int oi, v, p, j, t, d, best, run, tlim, jmax, gt
    cdef int g[13]
    cdef int W = n + 1
    for v in range(n):
        sizes[v] = 1
        for j in range(W):
            e1[v * W + j] = -1
            e2[v * W + j] = -1
            dvec[v * W + j] = -1
    for oi in range(n - 1, -1, -1):
        v = order[oi]
        for j in range(1, W):
            d = 0
            if e1[v * W + j] > d:
                d = e1[v * W + j]
            if e2[v * W + j] > d:
                d = e2[v * W + j]
            dvec[v * W + j] = d
        p = parent[v]
        if p >= 0:
            tlim = sizes[v]
            for t in range(1, tlim + 1):
                g[t] = dvec[v * W + t] + 1
            jmax = sizes[p] + tlim
            if jmax > n:
                jmax = n
            for j in range(jmax, 1, -1):
                best = e2[p * W + j]
                for t in range(1, (tlim if tlim < j else j - 1) + 1):
                    gt = g[t]
                    if e2[p * W + j - t] >= 0 and e2[p * W + j - t] + gt > best:
                        best = e2[p * W + j - t] + gt
                    if e1[p * W + j - t] >= 0 and e1[p * W + j - t] + gt > best:
                        best = e1[p * W + j - t] + gt
                e2[p * W + j] = best
            run = -1
            for j in range(1, n + 1):
                if j <= tlim and g[j] > run:
                    run = g[j]
                if run > e1[p * W + j]:
                    e1[p * W + j] = run
            sizes[p] += tlim
    for j in range(n + 1):
        ans[j] = 0
    for j in range(2, n + 1):
        best = 0
        for v in range(n):
            if e2[v * W + j] > best:
                best = e2[v * W + j]
            if dvec[v * W + j - 1] > best:
                best = dvec[v * W + j - 1]
        ans[j] = best


cdef bint _tree_lemf_c(int n, unsigned int* rows, int* order, int* parent,
                       int max_s, int* dist, unsigned int* below,
                       int* dtab, unsigned int* tmask, int* probe) nogil:
    cdef int size = 1 << n
    cdef int oi, v, p, w, k, d, u, j, tmp, ds, dv
    cdef unsigned int full = (1u << n) - 1, t, bel, sbit
    for v in range(n):
        below[v] = 1u << v
    for oi in range(n - 1, 0, -1):
        v = order[oi]
        below[parent[v]] |= below[v]
    for w in range(1, size):
        d = 0
        t = <unsigned int> w
        for oi in range(1, n):
            v = order[oi]
            bel = below[v]
            if w & bel and w & ~bel & full:
                d += 1
                t |= (1u << v) | (1u << parent[v])
        dtab[w] = d
        tmask[w] = t
    _distances_c(n, rows, dist)
    for v in range(n):
        for u in range(n):
            probe[v * n + u] = u
        for u in range(1, n):
            j = u
            while j > 0 and dist[v * n + probe[v * n + j - 1]] > \
                    dist[v * n + probe[v * n + j]]:
                tmp = probe[v * n + j]
                probe[v * n + j] = probe[v * n + j - 1]
                probe[v * n + j - 1] = tmp
                j -= 1
    for w in range(1, size):
        k = POPCNT(<unsigned int> w)
        if k < 2 or k > max_s:
            continue
        t = tmask[w]
        ds = dtab[w]
        for v in range(n):
            sbit = 1u << v
            if w & sbit:
                continue
            dv = 0
            for u in range(n):
                if t >> probe[v * n + u] & 1:
                    dv = dist[v * n + probe[v * n + u]]
                    break
            if dtab[w | sbit] != ds + dv:
                return False
    return True


def tree_scan(int n, unsigned long long start, unsigned long long count,
              bint check_pro2, bint check_lemf, int lemf_max_s):
    """Scan trees start..start+count-1 by Pruefer index; see the pure kernel."""
    if n < 2 or n > 12:
        raise ValueError("tree_scan kernel supports 2 <= n <= 12")
    cdef int cap = 1024
    cdef unsigned long long pro2_total = 0, lemf_total = 0
    cdef int pro2_n = 0, lemf_n = 0
    cdef unsigned long long* pro2_buf = <unsigned long long*> malloc(
        cap * sizeof(unsigned long long))
    cdef unsigned long long* lemf_buf = <unsigned long long*> malloc(
        cap * sizeof(unsigned long long))
    cdef int size = 1 << n
    cdef int* dist = <int*> malloc(n * n * sizeof(int))
    cdef int* dtab = <int*> malloc(size * sizeof(int))
    cdef unsigned int* tmask = <unsigned int*> malloc(
        size * sizeof(unsigned int))
    cdef int* probe = <int*> malloc(n * n * sizeof(int))
    if (pro2_buf == NULL or lemf_buf == NULL or dist == NULL or dtab == NULL
            or tmask == NULL or probe == NULL):
        free(pro2_buf); free(lemf_buf); free(dist)
        free(dtab); free(tmask); free(probe)
        raise MemoryError()

    cdef int seq[12]
    cdef int deg[12]
    cdef unsigned int rows[12]
    cdef int order[12]
    cdef int parent[12]
    cdef int sizes[12]
    cdef int ans[13]
    cdef int e1[12 * 13]
    cdef int e2[12 * 13]
    cdef int dvec[12 * 13]
    cdef unsigned int below[12]
    cdef unsigned long long idx, stop = start + count
    cdef int v, k, leaves
    cdef bint ok

    try:
        with nogil:
            idx = start
            while idx < stop:
                _tree_decode_c(n, idx, seq, deg, rows)
                _tree_order_c(n, rows, order, parent)
                if check_pro2:
                    _tree_sdiam_c(n, rows, order, parent, e1, e2, dvec,
                                  sizes, ans)
                    leaves = 0
                    for v in range(n):
                        if POPCNT(rows[v]) == 1:
                            leaves += 1
                    ok = True
                    for k in range(2, n + 1):
                        if (ans[k] == n - 1) != (leaves <= k):
                            ok = False
                            break
                    if not ok:
                        pro2_total += 1
                        if pro2_n < cap:
                            pro2_buf[pro2_n] = idx
                            pro2_n += 1
                if check_lemf:
                    if not _tree_lemf_c(n, rows, order, parent, lemf_max_s,
                                        dist, below, dtab, tmask, probe):
                        lemf_total += 1
                        if lemf_n < cap:
                            lemf_buf[lemf_n] = idx
                            lemf_n += 1
                idx += 1
        pro2_viol = np.array([pro2_buf[v] for v in range(pro2_n)],
                             dtype=np.int64)
        lemf_viol = np.array([lemf_buf[v] for v in range(lemf_n)],
                             dtype=np.int64)
    finally:
        free(pro2_buf); free(lemf_buf); free(dist)
        free(dtab); free(tmask); free(probe)

    return {
        "count": int(count),
        "pro2_checked": int(count) if check_pro2 else 0,
        "lemf_checked": int(count) if check_lemf else 0,
        "pro2_viol": pro2_viol,
        "lemf_viol": lemf_viol,
        "pro2_viol_total": int(pro2_total),
        "lemf_viol_total": int(lemf_total),
    }
