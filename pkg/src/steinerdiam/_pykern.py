"""Pure-Python computation kernel.

Reference implementation of the low-level block API shared with the compiled
kernel (``steinerdiam._ckern``). Both kernels expose the same names with
identical semantics; ``steinerdiam._kernel`` picks one at import time. This
module is deliberately self-contained (numpy only) so the two kernels can be
compared line by line and output by output.

Shared conventions:

- A graph is a list of adjacency bitmask rows; bit u of rows[v] means uv is
  an edge.
- Labeled graphs on n vertices are indexed by edge mask. Bit i of the mask is
  the i-th vertex pair in column order (0,1),(0,2),(1,2),(0,3),... which is
  also the graph6 bit order.
- Trees on n vertices are indexed 0..n**(n-2)-1, read as a base-n Pruefer
  string with the most significant digit first.
- Steiner tables use INF = 1 << 20 for unreachable sets; block arrays are
  int16 and use INF16 = 9999.
"""

from __future__ import annotations

import numpy as np

BACKEND = "python"

INF = 1 << 20
INF16 = 9999

# Want flags for profile_block: callers OR together the field groups they
# intend to read. Unrequested fields are returned zero-filled.
W_TABLE_G = 1
W_TABLE_C = 2
W_SD3 = 4
W_CUTS = 8
W_CIRC = 16
W_LEM0 = 32
W_RECOG = 64
W_ORACLE = 128
W_MEDIAN = 256


def _bits(mask):
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


def _reach(rows, seed, within):
    """Vertices reachable from the seed mask without leaving `within`."""
    seen = seed & within
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= rows[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def _connected(rows, within):
    if within == 0:
        return True
    return _reach(rows, within & -within, within) == within


def _distances(n, rows):
    dist = [[INF] * n for _ in range(n)]
    for s in range(n):
        d = dist[s]
        d[s] = 0
        seen = 1 << s
        frontier = seen
        step = 0
        while frontier:
            step += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= rows[v]
            nxt &= ~seen
            for v in _bits(nxt):
                d[v] = step
            seen |= nxt
            frontier = nxt
    return dist


def _steiner_dp(n, rows):
    """Full Dreyfus-Wagner table: d(T) for every vertex subset T.

    dp[T][v] is the minimum edge count of a tree spanning T plus v. Subsets
    merge at an anchor (lowest bit of T): every unordered split of T into two
    nonempty parts appears exactly once with the anchor forced into the first
    part, then a relaxation over connecting vertices finishes the level.
    """
    dist = _distances(n, rows)
    size = 1 << n
    dp = [None] * size
    for t in range(n):
        dp[1 << t] = list(dist[t])
    table = [0] * size
    for mask in range(3, size):
        if mask & (mask - 1) == 0:
            continue
        a = mask & -mask
        rest = mask ^ a
        best = [INF] * n
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
        cur = [INF] * n
        for v in range(n):
            dv = dist[v]
            b = best[v]
            for u in range(n):
                c = best[u] + dv[u]
                if c < b:
                    b = c
            cur[v] = b if b < INF else INF
        dp[mask] = cur
        table[mask] = min(cur[a.bit_length() - 1], INF)
    return table


def steiner_table(n, rows):
    """Steiner distance of every vertex subset, as an int32 array of 2**n."""
    return np.array(_steiner_dp(n, list(rows)), dtype=np.int32)


def _oracle_table(n, rows):
    """Independent route to the same table: superset scan.

    A subset W contributes |W|-1 when it induces a connected subgraph; the
    Steiner distance of S is the minimum contribution over supersets of S,
    computed by a superset-min zeta transform.
    """
    size = 1 << n
    f = [0] * size
    for mask in range(1, size):
        f[mask] = mask.bit_count() - 1 if _connected(rows, mask) else INF
    for i in range(n):
        bit = 1 << i
        for mask in range(size):
            if not mask & bit and f[mask | bit] < f[mask]:
                f[mask] = f[mask | bit]
    return f


def sdiam3_value(n, rows):
    """Steiner 3-diameter of a connected graph via vertex medians.

    Returns INF when the graph is disconnected. Requires n >= 3.
    """
    dist = _distances(n, rows)
    best = 0
    for a in range(n):
        da = dist[a]
        if any(x >= INF for x in da):
            return INF
        for b in range(a + 1, n):
            db = dist[b]
            for c in range(b + 1, n):
                dc = dist[c]
                low = INF
                for m in range(n):
                    s = da[m] + db[m] + dc[m]
                    if s < low:
                        low = s
                if low > best:
                    best = low
    return best


def _sdiam_vector(n, table):
    """Per-size maxima of a Steiner table: out[k] = sdiam_k, k in 2..n."""
    out = [0] * (n + 1)
    for mask in range(1, 1 << n):
        k = mask.bit_count()
        if table[mask] > out[k]:
            out[k] = table[mask]
    for k in range(2, n + 1):
        if out[k] >= INF:
            out[k] = INF16
    out[0] = 0
    if n >= 1:
        out[1] = 0
    return out


def _drop_vertex(n, rows, u):
    out = []
    low = (1 << u) - 1
    for v in range(n):
        if v == u:
            continue
        r = rows[v]
        out.append((r & low) | ((r >> (u + 1)) << u))
    return out


def _has_spanning_complete_bipartite(n, rows):
    if n < 2:
        return False
    full = (1 << n) - 1
    for b in range(1, 1 << (n - 1)):
        bmask = b << 1
        amask = full ^ bmask
        if all(rows[a] & bmask == bmask for a in _bits(amask)):
            return True
    return False


def _circumference(n, rows):
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
        for v in _bits(ends):
            row = rows[v]
            if size >= 3 and row & anchor and (1 << v) != anchor:
                if size > best:
                    best = size
            ext = row & ~mask & ~(anchor - 1)
            for w in _bits(ext):
                reach[mask | (1 << w)] |= 1 << w
    return best


def profile_block(n, start, count, wants):
    """Profile `count` labeled graphs with edge masks start..start+count-1.

    Returns a dict of numpy arrays, one entry per graph in mask order. Field
    groups not selected in `wants` are left zero-filled. Complement fields
    describe the complement graph; the _c Steiner table is only meaningful
    when the complement is connected (INF16 rows otherwise).
    """
    npairs = n * (n - 1) // 2
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    full = (1 << n) - 1

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

    for i in range(count):
        mask = start + i
        emask[i] = mask
        rows = [0] * n
        for b in range(npairs):
            if mask >> b & 1:
                u, v = pairs[b]
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        crows = [full & ~rows[v] & ~(1 << v) for v in range(n)]
        deg = [r.bit_count() for r in rows]
        m_edges[i] = mask.bit_count()
        mindeg[i] = min(deg)
        maxdeg[i] = max(deg)
        leafcnt[i] = sum(1 for d in deg if d == 1)
        cg = _connected(rows, full)
        cc = _connected(crows, full)
        conn_g[i] = cg
        conn_c[i] = cc

        table_g = None
        table_c = None
        if wants & (W_TABLE_G | W_SD3 | W_ORACLE | W_MEDIAN) and cg:
            table_g = _steiner_dp(n, rows)
        if wants & (W_TABLE_C | W_SD3) and cc:
            table_c = _steiner_dp(n, crows)

        if wants & W_TABLE_G:
            sdiam_g[i] = _sdiam_vector(n, table_g) if cg else \
                [0, 0] + [INF16] * (n - 1)
        if wants & W_TABLE_C:
            sdiam_c[i] = _sdiam_vector(n, table_c) if cc else \
                [0, 0] + [INF16] * (n - 1)
        if wants & W_SD3 and n >= 3:
            sd3_g[i] = _sdiam_vector(n, table_g)[3] if cg else INF16
            sd3_c[i] = _sdiam_vector(n, table_c)[3] if cc else INF16

        if wants & W_CUTS:
            cutcnt_g[i] = _count_cuts(n, rows, full) if cg else -1
            cutcnt_c[i] = _count_cuts(n, crows, full) if cc else -1
            bridge_g[i] = _count_bridges(n, rows) if cg else -1
            bridge_c[i] = _count_bridges(n, crows) if cc else -1

        if wants & W_CIRC:
            circ_g[i] = _circumference(n, rows)

        if wants & W_LEM0:
            lem0_g[i] = _lem0_structural(n, rows, deg)

        if wants & W_RECOG:
            domedge_c[i] = _has_dominating_edge(n, crows, full)
            h1_c[i] = _has_spanning_triple_star(n, crows, full)
            h2_c[i] = _has_spanning_h2(n, crows, full)
            spider_g[i] = (cg and mask.bit_count() == n - 1
                           and max(deg) <= 3
                           and sum(1 for d in deg if d == 3) <= 1)
            trispider_g[i] = _is_triangle_spider(n, rows, deg, cg, mask.bit_count())

        if wants & W_ORACLE:
            oracle = _oracle_table(n, rows)
            dw = table_g if table_g is not None else _steiner_dp(n, rows)
            oracle_ok[i] = all(min(a, INF) == min(b, INF)
                               for a, b in zip(dw, oracle))
        if wants & W_MEDIAN and cg and n >= 3:
            med = sdiam3_value(n, rows)
            med_ok[i] = med == _sdiam_vector(n, table_g)[3]

    return {
        "emask": emask, "m": m_edges, "mindeg": mindeg, "maxdeg": maxdeg,
        "leafcnt": leafcnt, "conn_g": conn_g, "conn_c": conn_c,
        "sdiam_g": sdiam_g, "sdiam_c": sdiam_c, "sd3_g": sd3_g,
        "sd3_c": sd3_c, "cutcnt_g": cutcnt_g, "cutcnt_c": cutcnt_c,
        "bridge_g": bridge_g, "bridge_c": bridge_c, "circ_g": circ_g,
        "lem0_g": lem0_g, "domedge_c": domedge_c, "h1_c": h1_c,
        "h2_c": h2_c, "spider_g": spider_g, "trispider_g": trispider_g,
        "oracle_ok": oracle_ok, "med_ok": med_ok,
    }


def _count_cuts(n, rows, full):
    cnt = 0
    for v in range(n):
        rest = full ^ (1 << v)
        sub = [rows[u] & rest for u in range(n)]
        if _reach(sub, rest & -rest, rest) != rest:
            cnt += 1
    return cnt


def _count_bridges(n, rows):
    cnt = 0
    for v in range(1, n):
        rv = rows[v]
        for u in _bits(rv & ((1 << v) - 1)):
            sub = list(rows)
            sub[u] &= ~(1 << v)
            sub[v] &= ~(1 << u)
            if not _reach(sub, 1 << u, (1 << n) - 1) >> v & 1:
                cnt += 1
    return cnt


def _lem0_structural(n, rows, deg):
    """Degree/pendant form of the mutual cut-vertex characterization.

    True when Delta = n-2, or Delta <= n-3 and some pendant vertex u leaves
    a graph with a spanning complete bipartite subgraph after removal.
    """
    top = max(deg)
    if top == n - 2:
        return True
    if top > n - 2:
        return False
    for u in range(n):
        if deg[u] == 1 and _has_spanning_complete_bipartite(
                n - 1, _drop_vertex(n, rows, u)):
            return True
    return False


def _has_dominating_edge(n, rows, full):
    for v in range(1, n):
        for u in _bits(rows[v] & ((1 << v) - 1)):
            if rows[u] | rows[v] | (1 << u) | (1 << v) == full:
                return True
    return False


def _has_spanning_triple_star(n, rows, full):
    """A triangle whose closed neighborhoods cover every vertex."""
    for w in range(2, n):
        rw = rows[w]
        for v in _bits(rw & ((1 << w) - 1)):
            common = rw & rows[v]
            for u in _bits(common & ((1 << v) - 1)):
                if rows[u] | rw | rows[v] == full:
                    return True
    return False


def _has_spanning_h2(n, rows, full):
    """A path u-v-w such that every other vertex sees v, or both u and w."""
    for v in range(n):
        rv = rows[v]
        for w in _bits(rv):
            for u in _bits(rv & ((1 << w) - 1)):
                others = full ^ (1 << u) ^ (1 << v) ^ (1 << w)
                if others & ~(rv | (rows[u] & rows[w])) == 0:
                    return True
    return False


def _is_triangle_spider(n, rows, deg, connected, m):
    if not connected or m != n or n < 3:
        return False
    tri = -1
    for w in range(2, n):
        rw = rows[w]
        for v in _bits(rw & ((1 << w) - 1)):
            if rw & rows[v] & ((1 << v) - 1):
                u = (rw & rows[v] & ((1 << v) - 1)).bit_length() - 1
                tri = (1 << u) | (1 << v) | (1 << w)
                break
        if tri != -1:
            break
    if tri == -1:
        return False
    for v in range(n):
        cap = 3 if tri >> v & 1 else 2
        if deg[v] > cap:
            return False
    return True


def tree_rows(n, index):
    """Adjacency rows of the tree with the given Pruefer index."""
    if n == 1:
        return [0]
    if n == 2:
        return [2, 1]
    seq = [0] * (n - 2)
    x = index
    for i in range(n - 3, -1, -1):
        x, d = divmod(x, n)
        seq[i] = d
    deg = [1] * n
    for a in seq:
        deg[a] += 1
    rows = [0] * n
    ptr = 0
    leaf = -1
    for a in seq:
        if leaf < 0:
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
        rows[leaf] |= 1 << a
        rows[a] |= 1 << leaf
        deg[leaf] = 0
        deg[a] -= 1
        if deg[a] == 1 and a < ptr:
            leaf = a
        else:
            leaf = -1
    last = [v for v in range(n) if deg[v] == 1]
    rows[last[0]] |= 1 << last[1]
    rows[last[1]] |= 1 << last[0]
    return rows


def _tree_order(n, rows):
    """BFS order from vertex 0 and the parent of each vertex."""
    parent = [-1] * n
    order = [0]
    seen = 1
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        for u in _bits(rows[v] & ~seen):
            parent[u] = v
            seen |= 1 << u
            order.append(u)
    return order, parent


def _tree_sdiam_all_k(n, rows, order, parent):
    """Exact sdiam_k for every k on a tree, via a leaf-budget knapsack.

    For each vertex the DP tracks the largest subtree hanging at it that uses
    exactly one child branch (e1) or at least two (e2), indexed by how many
    terminals the subtree consumes; a branch consuming t terminals below a
    child c contributes D[c][t] + 1 edges. -1 marks infeasible cells.
    """
    e1 = [[-1] * (n + 1) for _ in range(n)]
    e2 = [[-1] * (n + 1) for _ in range(n)]
    dvec = [[-1] * (n + 1) for _ in range(n)]
    ans = [0] * (n + 1)
    for v in reversed(order):
        ev1 = e1[v]
        ev2 = e2[v]
        dv = dvec[v]
        for j in range(1, n + 1):
            d = 0
            if ev1[j] > d:
                d = ev1[j]
            if ev2[j] > d:
                d = ev2[j]
            dv[j] = d
        p = parent[v]
        if p >= 0:
            g = [-1] * (n + 1)
            for t in range(1, n + 1):
                g[t] = dv[t] + 1
            ep1 = e1[p]
            ep2 = e2[p]
            for j in range(n, 1, -1):
                best = ep2[j]
                for t in range(1, j):
                    gt = g[t]
                    if ep2[j - t] >= 0 and ep2[j - t] + gt > best:
                        best = ep2[j - t] + gt
                    if ep1[j - t] >= 0 and ep1[j - t] + gt > best:
                        best = ep1[j - t] + gt
                ep2[j] = best
            run = -1
            for j in range(1, n + 1):
                if g[j] > run:
                    run = g[j]
                if run > ep1[j]:
                    ep1[j] = run
    for k in range(2, n + 1):
        best = 0
        for v in range(n):
            if e2[v][k] > best:
                best = e2[v][k]
            if dvec[v][k - 1] > best:
                best = dvec[v][k - 1]
        ans[k] = best
    return ans


def tree_scan(n, start, count, check_pro2, check_lemf, lemf_max_s):
    """Scan trees start..start+count-1 by Pruefer index.

    check_pro2 verifies that sdiam_k reaches n-1 exactly when the tree has at
    most k leaves, for every k in 2..n. check_lemf verifies the subtree
    growth identity d(S + v) = d(S) + dist(v, tree(S)) for every terminal set
    S with 2 <= |S| <= lemf_max_s and every vertex v outside S. Violating
    tree indices are collected (capped at 1024 each; totals are exact).
    """
    cap = 1024
    pro2_viol = []
    lemf_viol = []
    pro2_total = 0
    lemf_total = 0
    full = (1 << n) - 1
    for idx in range(start, start + count):
        rows = tree_rows(n, idx)
        order, parent = _tree_order(n, rows)
        if check_pro2:
            ans = _tree_sdiam_all_k(n, rows, order, parent)
            leaves = sum(1 for r in rows if r.bit_count() == 1)
            ok = True
            for k in range(2, n + 1):
                if (ans[k] == n - 1) != (leaves <= k):
                    ok = False
                    break
            if not ok:
                pro2_total += 1
                if len(pro2_viol) < cap:
                    pro2_viol.append(idx)
        if check_lemf:
            if not _tree_lemf_ok(n, rows, order, parent, lemf_max_s, full):
                lemf_total += 1
                if len(lemf_viol) < cap:
                    lemf_viol.append(idx)
    return {
        "count": count,
        "pro2_checked": count if check_pro2 else 0,
        "lemf_checked": count if check_lemf else 0,
        "pro2_viol": np.array(pro2_viol, dtype=np.int64),
        "lemf_viol": np.array(lemf_viol, dtype=np.int64),
        "pro2_viol_total": pro2_total,
        "lemf_viol_total": lemf_total,
    }


def _tree_lemf_ok(n, rows, order, parent, max_s, full):
    below = [0] * n
    for v in reversed(order):
        below[v] |= 1 << v
        p = parent[v]
        if p >= 0:
            below[p] |= below[v]
    edges = [(v, parent[v], below[v]) for v in order if parent[v] >= 0]
    size = 1 << n
    dtab = [0] * size
    tmask = [0] * size
    for w in range(1, size):
        d = 0
        t = w
        for v, p, bel in edges:
            if w & bel and w & ~bel & full:
                d += 1
                t |= (1 << v) | (1 << p)
        dtab[w] = d
        tmask[w] = t
    dist = _distances(n, rows)
    probe = [sorted(range(n), key=dist[v].__getitem__) for v in range(n)]
    for s in range(1, size):
        k = s.bit_count()
        if k < 2 or k > max_s:
            continue
        ts = tmask[s]
        ds = dtab[s]
        for v in range(n):
            if s >> v & 1:
                continue
            dv = INF
            for u in probe[v]:
                if ts >> u & 1:
                    dv = dist[v][u]
                    break
            if dtab[s | (1 << v)] != ds + dv:
                return False
    return True
