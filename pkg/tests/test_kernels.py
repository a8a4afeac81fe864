"""Parity tests between the compiled kernel and the pure-Python reference.

When the compiled extension is not importable these skip; the rest of the
suite already exercises whichever backend is active.
"""

import itertools
import random

import numpy as np
import pytest

from steinerdiam import _pykern
from steinerdiam.graphs import graph_from_edge_mask
from steinerdiam.steiner import steiner_distance

_ckern = pytest.importorskip(
    "steinerdiam._ckern", reason="compiled kernel not built")

ALL_WANTS = (_pykern.W_TABLE_G | _pykern.W_TABLE_C | _pykern.W_SD3
             | _pykern.W_CUTS | _pykern.W_CIRC | _pykern.W_LEM0
             | _pykern.W_RECOG | _pykern.W_ORACLE | _pykern.W_MEDIAN)


def _rows(n, mask):
    return list(graph_from_edge_mask(n, mask).rows)


def test_backend_tags():
    assert _pykern.BACKEND == "python"
    assert _ckern.BACKEND == "c"
    assert _pykern.INF16 == _ckern.INF16


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_steiner_table_parity_exhaustive(n):
    for mask in range(1 << (n * (n - 1) // 2)):
        rows = _rows(n, mask)
        tc = np.asarray(_ckern.steiner_table(n, rows))
        tp = np.asarray(_pykern.steiner_table(n, rows))
        assert tc.shape == tp.shape
        assert (tc == tp).all(), (n, mask)


def test_steiner_table_parity_sampled_n7():
    rng = random.Random(20240817)
    top = (1 << 21) - 1
    for _ in range(40):
        mask = rng.randint(0, top)
        rows = _rows(7, mask)
        tc = np.asarray(_ckern.steiner_table(7, rows))
        tp = np.asarray(_pykern.steiner_table(7, rows))
        assert (tc == tp).all(), mask


def test_steiner_table_matches_library():
    rng = random.Random(7)
    for _ in range(10):
        mask = rng.randint(0, (1 << 15) - 1)
        g = graph_from_edge_mask(6, mask)
        table = np.asarray(_ckern.steiner_table(6, list(g.rows)))
        for size in (2, 3, 4):
            for ts in itertools.combinations(range(6), size):
                smask = 0
                for t in ts:
                    smask |= 1 << t
                want = steiner_distance(g, ts)
                got = int(table[smask])
                if got >= _ckern.INF16:
                    assert want == float("inf")
                else:
                    assert got == want


def test_sdiam3_parity():
    rng = random.Random(99)
    for _ in range(200):
        mask = rng.randint(0, (1 << 15) - 1)
        rows = _rows(6, mask)
        assert _ckern.sdiam3_value(6, rows) == _pykern.sdiam3_value(6, rows)


def test_profile_block_parity_exhaustive_n4():
    bc = _ckern.profile_block(4, 0, 64, ALL_WANTS)
    bp = _pykern.profile_block(4, 0, 64, ALL_WANTS)
    assert sorted(bc) == sorted(bp)
    for key in bc:
        a, b = np.asarray(bc[key]), np.asarray(bp[key])
        assert a.shape == b.shape, key
        assert (a == b).all(), key


def test_profile_block_parity_sampled_n6():
    # Random windows over the 2^15 edge masks.
    rng = random.Random(5)
    for _ in range(6):
        start = rng.randint(0, (1 << 15) - 256)
        bc = _ckern.profile_block(6, start, 256, ALL_WANTS)
        bp = _pykern.profile_block(6, start, 256, ALL_WANTS)
        for key in bc:
            assert (np.asarray(bc[key]) == np.asarray(bp[key])).all(), \
                (key, start)


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_tree_rows_parity_and_shape(n):
    total = n ** (n - 2) if n >= 2 else 1
    seen = set()
    for i in range(total):
        rc = list(_ckern.tree_rows(n, i))
        rp = list(_pykern.tree_rows(n, i))
        assert rc == rp, (n, i)
        assert len(rc) == n
        assert sum(r.bit_count() for r in rc) == 2 * (n - 1)
        seen.add(tuple(rc))
    assert len(seen) == total  # Pruefer decoding hits every labeled tree once


def test_tree_scan_parity():
    for n in (5, 6):
        total = n ** (n - 2)
        sc = _ckern.tree_scan(n, 0, total, True, True, n)
        sp = _pykern.tree_scan(n, 0, total, True, True, n)
        assert sorted(sc) == sorted(sp)
        for key in sc:
            a, b = np.asarray(sc[key]), np.asarray(sp[key])
            assert (a == b).all(), key
        assert sc["count"] == total
        assert sc["pro2_viol_total"] == 0
        assert sc["lemf_viol_total"] == 0
