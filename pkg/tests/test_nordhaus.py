import pytest

from steinerdiam.errors import DomainError
from steinerdiam.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    example2,
    path_graph,
    star_graph,
    star_path,
)
from steinerdiam.graph6 import from_graph6
from steinerdiam.graphs import Graph
from steinerdiam.nordhaus import (
    PairMetrics,
    check_full_set_diameter,
    check_large_forces_small,
    check_mutual_cut_characterization,
    check_near_full_pair,
    check_pair_bounds_for_k,
    check_penultimate_pair,
    check_small_k_pair,
    check_sum_product_bounds,
    check_two_connected_penultimate,
    degree_pendant_bracket,
    mutual_cut_structural,
    near_full_case_values,
    pair_metrics,
    penultimate_pair_bounds,
    small_k_bounds,
    sum_product_bounds,
)


def test_bound_builders_frozen():
    b = sum_product_bounds(10, 3)
    assert (b.x, b.lower_sum, b.upper_sum, b.lower_prod, b.upper_prod) == \
        (0, 5, 12, 6, 27)
    b = sum_product_bounds(5, 4)  # n <= 2k-3 turns the slack on
    assert (b.x, b.lower_sum, b.upper_sum, b.lower_prod, b.upper_prod) == \
        (1, 6, 14, 9, 49)
    b = small_k_bounds(12)
    assert (b.lower_sum, b.upper_sum, b.lower_prod, b.upper_prod) == \
        (6, 14, 9, 33)
    b = penultimate_pair_bounds(7, both_cut_rich=False)
    assert (b.lower_sum, b.upper_sum, b.lower_prod, b.upper_prod) == \
        (8, 11, 16, 30)
    b = penultimate_pair_bounds(7, both_cut_rich=True)
    assert (b.lower_sum, b.upper_sum, b.lower_prod, b.upper_prod) == \
        (8, 12, 16, 36)
    assert near_full_case_values(7, 0) == (10, 25)
    assert near_full_case_values(7, 1) == (11, 30)
    assert near_full_case_values(7, 2) == (12, 36)
    with pytest.raises(DomainError):
        sum_product_bounds(4, 2)
    with pytest.raises(DomainError):
        near_full_case_values(7, 3)


def test_pair_metrics():
    pm = pair_metrics(path_graph(4), 2)
    assert (pm.d_g, pm.d_gc, pm.sum, pm.product) == (3, 3, 6, 9)
    assert pm.conn_g and pm.conn_c
    pm = pair_metrics(example2(complete_graph(6)), 3)
    assert (pm.sum, pm.product) == (6, 9)  # hits the k=3 lower bounds
    with pytest.raises(DomainError):
        pair_metrics(path_graph(4), 5)


def test_sum_product_verdicts():
    v = check_sum_product_bounds(pair_metrics(cycle_graph(5), 3))
    assert v.applicable and v.holds
    # Disconnected complement makes the check vacuous.
    v = check_sum_product_bounds(pair_metrics(complete_graph(5), 3))
    assert not v.applicable and v.holds
    # The tightness clause: a sum of 2k-2 with n > 2k-3 is a violation,
    # exercised with a hand-built metrics record since no real pair does it.
    fake = PairMetrics(n=6, k=3, d_g=2, d_gc=2, conn_g=True, conn_c=True)
    v = check_sum_product_bounds(fake)
    assert v.applicable and not v.holds


def test_large_forces_small():
    v = check_large_forces_small(pair_metrics(path_graph(8), 3))
    assert v.applicable and v.holds and v.note == ""
    v = check_large_forces_small(pair_metrics(star_graph(5), 3))
    assert v.applicable and v.holds and v.note == "antecedent false"


def test_full_set_diameter():
    assert check_full_set_diameter(pair_metrics(cycle_graph(5), 5)).holds
    v = check_full_set_diameter(pair_metrics(cycle_graph(5), 4))
    assert not v.applicable


def test_two_connected_penultimate():
    assert check_two_connected_penultimate(cycle_graph(6)).holds
    assert check_two_connected_penultimate(path_graph(5)).holds
    v = check_two_connected_penultimate(Graph.from_edges(4, [(0, 1), (2, 3)]))
    assert not v.applicable


def test_degree_pendant_bracket():
    assert degree_pendant_bracket(path_graph(4))  # vertex of degree n-2
    assert not degree_pendant_bracket(star_graph(4))  # max degree n-1
    # Pendant whose removal leaves a spanning complete bipartite subgraph.
    kb = complete_bipartite(2, 3)
    g = Graph.from_edges(6, list(kb.edges()) + [(2, 5)])
    assert max(g.degrees()) == 3  # below n-2, so the pendant clause decides
    assert degree_pendant_bracket(g)
    assert mutual_cut_structural(g)


def test_mutual_cut_characterization():
    assert check_mutual_cut_characterization(path_graph(4)).holds
    v = check_mutual_cut_characterization(complete_graph(4))
    assert not v.applicable  # complement disconnected
    assert check_mutual_cut_characterization(cycle_graph(5)).holds


def test_near_full_pair_cases():
    assert check_near_full_pair(cycle_graph(5)).holds
    assert check_near_full_pair(path_graph(5)).holds
    # Connectivity 1 without a bridge: the case split keys on vertex
    # connectivity, and this graph would land differently under a
    # bridge-based reading. The verdict still holds and carries a note.
    g = from_graph6("ETr?")
    v = check_near_full_pair(g)
    assert v.applicable and v.holds
    assert "no bridge" in v.note
    assert not check_near_full_pair(cycle_graph(4)).applicable  # n < 5


def test_penultimate_and_small_k_pairs():
    sp = star_path(6)
    pm = pair_metrics(sp, 4)
    assert (pm.sum, pm.product) == (9, 20)  # sum meets the 2n-3 ceiling
    assert check_penultimate_pair(sp).holds
    assert not check_small_k_pair(cycle_graph(6)).applicable  # n < 10
    assert check_small_k_pair(example2(complete_graph(6))).holds


def test_pair_bounds_for_k_sweep():
    pet = Graph.from_edges(10, [
        (0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
        (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
        (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
    ])
    for k in range(3, 7):
        v = check_pair_bounds_for_k(pet, k)
        assert v.applicable and v.holds, k
