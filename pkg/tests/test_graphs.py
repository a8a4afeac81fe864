import math

import pytest
from hypothesis import given, strategies as st

from steinerdiam.errors import DomainError
from steinerdiam.graphs import (
    Graph,
    bfs_distances,
    complement,
    components,
    delete_vertex,
    edge_mask_of,
    edge_pairs,
    graph_from_edge_mask,
    induced_connected,
    induced_subgraph,
    is_connected,
    max_degree,
    min_degree,
    pairwise_distances,
)


def test_from_edges_and_accessors():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.num_edges() == 3
    assert g.has_edge(1, 2)
    assert not g.has_edge(0, 3)
    assert g.degrees() == [1, 2, 2, 1]
    assert sorted(g.neighbors(1)) == [0, 2]
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]


def test_rows_validation():
    with pytest.raises(DomainError):
        Graph(2, [2, 0])  # asymmetric
    with pytest.raises(DomainError):
        Graph(2, [3, 2])  # self-loop bit
    with pytest.raises(DomainError):
        Graph(1, [0, 0])  # wrong row count


def test_edge_pairs_column_order():
    assert edge_pairs(4) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


def test_edge_mask_round_trip_small():
    for n in (1, 2, 3, 4):
        for mask in range(1 << (n * (n - 1) // 2)):
            assert edge_mask_of(graph_from_edge_mask(n, mask)) == mask


def test_components_and_connectivity():
    g = Graph.from_edges(5, [(0, 1), (2, 3)])
    assert components(g) == [[0, 1], [2, 3], [4]]
    assert not is_connected(g)
    assert is_connected(Graph.from_edges(1, []))
    assert induced_connected(g, 0b00011)
    assert not induced_connected(g, 0b00101)


def test_bfs_distances_path_and_split():
    p = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    assert bfs_distances(p, 0) == [0, 1, 2, 3]
    split = Graph.from_edges(3, [(0, 1)])
    d = bfs_distances(split, 0)
    assert d[:2] == [0, 1] and math.isinf(d[2])


def test_pairwise_distances_symmetric():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
    dist = pairwise_distances(g)
    for u in range(5):
        assert dist[u][u] == 0
        for v in range(5):
            assert dist[u][v] == dist[v][u]
    assert dist[0][2] == 2


def test_induced_subgraph_and_delete_vertex():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    h = induced_subgraph(g, [0, 1, 2])
    assert h.n == 3 and h.edges() == [(0, 1), (1, 2)]
    assert delete_vertex(g, 3).edges() == [(0, 1), (1, 2)]


edge_masks = st.integers(min_value=0, max_value=(1 << 15) - 1)


@given(edge_masks)
def test_complement_is_an_involution(mask):
    g = graph_from_edge_mask(6, mask)
    assert complement(complement(g)).rows == g.rows


@given(edge_masks)
def test_complement_degrees(mask):
    g = graph_from_edge_mask(6, mask)
    co = complement(g)
    for v in range(6):
        assert g.degree(v) + co.degree(v) == 5
    assert min_degree(g) + max_degree(co) == 5


@given(edge_masks)
def test_edges_round_trip(mask):
    g = graph_from_edge_mask(6, mask)
    assert Graph.from_edges(6, g.edges()).rows == g.rows
