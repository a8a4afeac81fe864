"""Core Steiner-distance tests.

Expected values below were produced by ``steiner_distance_oracle`` (the
subset-expansion route, written before the DP) and are frozen as literals;
the DP and the three-terminal median formula are then checked against them
and against each other.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from steinerdiam.errors import DomainError
from steinerdiam.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    example2,
    path_graph,
    star_graph,
)
from steinerdiam.graphs import INFINITE, Graph, graph_from_edge_mask, is_connected
from steinerdiam.steiner import (
    diameter_witness,
    distance_to_set,
    steiner_diameter,
    steiner_distance,
    steiner_distance_3,
    steiner_distance_oracle,
    steiner_ecc,
    steiner_eccentricities,
    steiner_radius,
    steiner_report,
    steiner_tree,
)

PETERSEN = Graph.from_edges(10, [
    (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
])


def test_frozen_oracle_values():
    # Literals computed with steiner_distance_oracle.
    assert steiner_distance(PETERSEN, [0, 1, 2]) == 2
    assert steiner_distance(PETERSEN, [0, 2, 6, 8]) == 4
    assert steiner_distance(PETERSEN, [5, 6, 7, 8, 9]) == 4
    assert [steiner_diameter(PETERSEN, k) for k in (2, 3, 4, 5)] == [2, 4, 5, 5]
    assert [steiner_radius(PETERSEN, k) for k in (2, 3, 4, 5)] == [2, 4, 5, 5]
    kb = complete_bipartite(3, 3)
    assert [steiner_diameter(kb, k) for k in range(2, 7)] == [2, 3, 3, 4, 5]
    assert steiner_diameter(example2(complete_graph(6)), 3) == 3


def test_closed_forms():
    for n in range(3, 9):
        rep_p = steiner_report(path_graph(n))
        rep_c = steiner_report(cycle_graph(n))
        rep_k = steiner_report(complete_graph(n))
        for k in range(2, n + 1):
            assert rep_p.diameter[k] == n - 1
            assert rep_c.diameter[k] == (n * (k - 1)) // k
            assert rep_k.diameter[k] == k - 1


def test_disconnected_values():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])
    assert steiner_distance(g, [0, 3]) == INFINITE
    assert steiner_distance(g, [0, 1, 2]) == 2
    assert steiner_diameter(g, 2) == INFINITE
    assert steiner_tree(g, [0, 3]) is None


def test_singleton_and_validation():
    g = path_graph(4)
    assert steiner_distance(g, [2]) == 0
    assert steiner_distance(g, []) == 0
    with pytest.raises(DomainError):
        steiner_distance(g, [0, 4])
    assert steiner_diameter(g, 1) == 0
    with pytest.raises(DomainError):
        steiner_diameter(g, 0)
    with pytest.raises(DomainError):
        steiner_diameter(g, 5)


def test_three_routes_agree_exhaustively():
    # DP, subset-expansion oracle, and (for k=3) the median formula must
    # agree on every triple of every graph on 5 vertices.
    for mask in range(1 << 10):
        g = graph_from_edge_mask(5, mask)
        for ts in itertools.combinations(range(5), 3):
            dp = steiner_distance(g, ts)
            assert dp == steiner_distance_oracle(g, ts)
            assert dp == steiner_distance_3(g, *ts)


def test_median_formula_larger_graph():
    for ts in itertools.combinations(range(10), 3):
        assert steiner_distance(PETERSEN, ts) == steiner_distance_3(
            PETERSEN, *ts)


def test_steiner_tree_witness_sound():
    for g in (PETERSEN, complete_bipartite(2, 4), cycle_graph(7)):
        for ts in itertools.combinations(range(min(g.n, 6)), 3):
            d = steiner_distance(g, ts)
            edges = steiner_tree(g, ts)
            assert edges is not None and len(edges) == d
            for u, v in edges:
                assert g.has_edge(u, v)
            # The edge set must connect the terminals.
            comp = {ts[0]}
            grew = True
            while grew:
                grew = False
                for u, v in edges:
                    if (u in comp) != (v in comp):
                        comp.update((u, v))
                        grew = True
            assert set(ts) <= comp


def test_diameter_witness():
    ts, edges = diameter_witness(cycle_graph(6), 3)
    assert len(ts) == 3 and len(edges) == 4
    ts2, edges2 = diameter_witness(Graph.from_edges(3, [(0, 1)]), 2)
    assert ts2 == (0, 2) and edges2 is None


def test_distance_to_set():
    g = path_graph(6)
    assert distance_to_set(g, 5, [0, 1, 2]) == 3
    assert distance_to_set(g, 1, [0, 1, 2]) == 0
    h = Graph.from_edges(4, [(0, 1), (2, 3)])
    assert distance_to_set(h, 0, [2, 3]) == INFINITE


def test_eccentricities_and_k2():
    g = star_graph(4)
    assert steiner_eccentricities(g, 2) == (1, 2, 2, 2, 2)
    assert steiner_ecc(g, 0, 2) == 1
    # k = 2 recovers ordinary diameter and radius.
    assert steiner_diameter(PETERSEN, 2) == 2
    assert steiner_radius(PETERSEN, 2) == 2


def test_report_k_range():
    rep = steiner_report(cycle_graph(5), kmax=3)
    assert rep.ks == (2, 3)
    assert rep.diameter[3] == 3 and rep.radius[3] == 3


@st.composite
def graph6_masks(draw, n=6):
    return draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))


@settings(max_examples=60, deadline=None)
@given(mask=graph6_masks(), extra=st.integers(min_value=0, max_value=14))
def test_extra_edge_never_increases(mask, extra):
    g = graph_from_edge_mask(6, mask)
    h = graph_from_edge_mask(6, mask | (1 << extra))
    for k in (2, 3, 4):
        assert steiner_diameter(h, k) <= steiner_diameter(g, k)


@settings(max_examples=60, deadline=None)
@given(mask=graph6_masks())
def test_k_monotone_and_bounds(mask):
    g = graph_from_edge_mask(6, mask)
    vals = [steiner_diameter(g, k) for k in range(2, 7)]
    for a, b in zip(vals, vals[1:]):
        assert a <= b
    if is_connected(g):
        for k, v in zip(range(2, 7), vals):
            assert k - 1 <= v <= g.n - 1


@settings(max_examples=40, deadline=None)
@given(mask=graph6_masks(), ts=st.sets(st.integers(0, 5), min_size=2, max_size=4))
def test_superset_monotone(mask, ts):
    g = graph_from_edge_mask(6, mask)
    base = steiner_distance(g, ts)
    for v in range(6):
        assert steiner_distance(g, set(ts) | {v}) >= base
