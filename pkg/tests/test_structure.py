import pytest

from steinerdiam.errors import CapacityError
from steinerdiam.families import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    path_graph,
    spider,
    star_graph,
    triangle_spider,
)
from steinerdiam.graphs import Graph, complement
from steinerdiam.structure import (
    bridges,
    circumference,
    cut_vertices,
    edge_connectivity,
    has_spanning_complete_bipartite,
    is_2_connected,
    is_isomorphic,
    vertex_connectivity,
)


def test_cut_vertices_and_bridges():
    p5 = path_graph(5)
    assert cut_vertices(p5) == [1, 2, 3]
    assert bridges(p5) == [(0, 1), (1, 2), (2, 3), (3, 4)]
    c5 = cycle_graph(5)
    assert cut_vertices(c5) == [] and bridges(c5) == []
    s = star_graph(4)
    assert cut_vertices(s) == [0]
    assert len(bridges(s)) == 4
    # A triangle with a pendant edge: one cut vertex, one bridge.
    g = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
    assert cut_vertices(g) == [2]
    assert bridges(g) == [(2, 3)]


def test_two_connectedness():
    assert is_2_connected(cycle_graph(4))
    assert is_2_connected(complete_graph(3))
    assert not is_2_connected(path_graph(3))
    assert not is_2_connected(complete_graph(2))
    assert not is_2_connected(Graph.from_edges(4, [(0, 1), (2, 3)]))


def test_connectivity_values():
    assert vertex_connectivity(complete_graph(5)) == 4
    assert vertex_connectivity(cycle_graph(6)) == 2
    assert vertex_connectivity(path_graph(4)) == 1
    assert vertex_connectivity(complete_bipartite(2, 4)) == 2
    assert vertex_connectivity(Graph.from_edges(3, [(0, 1)])) == 0
    assert edge_connectivity(complete_graph(5)) == 4
    assert edge_connectivity(cycle_graph(6)) == 2
    assert edge_connectivity(star_graph(5)) == 1
    # Two triangles joined at a vertex: 2-edge-connected but has a cut vertex.
    g = Graph.from_edges(
        5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert vertex_connectivity(g) == 1
    assert edge_connectivity(g) == 2


def test_circumference():
    assert circumference(path_graph(6)) == 0
    assert circumference(cycle_graph(7)) == 7
    assert circumference(complete_graph(5)) == 5
    assert circumference(triangle_spider(1, 1, 1)) == 3
    assert circumference(complete_bipartite(2, 3)) == 4
    with pytest.raises(CapacityError):
        circumference(cycle_graph(21))


def test_spanning_complete_bipartite():
    assert has_spanning_complete_bipartite(complete_bipartite(2, 3))
    assert has_spanning_complete_bipartite(star_graph(4))
    assert has_spanning_complete_bipartite(complete_graph(4))
    assert has_spanning_complete_bipartite(cycle_graph(4))
    assert not has_spanning_complete_bipartite(path_graph(4))
    assert not has_spanning_complete_bipartite(cycle_graph(5))


def test_isomorphism():
    assert is_isomorphic(cycle_graph(5), complement(cycle_graph(5)))
    assert is_isomorphic(path_graph(4), complement(path_graph(4)))
    assert not is_isomorphic(cycle_graph(6), complement(cycle_graph(6)))
    assert not is_isomorphic(star_graph(3), path_graph(4))
    assert is_isomorphic(spider(0, 1, 2), path_graph(4))
    # Same degree sequence, different structure: C6 vs two triangles.
    two_tri = Graph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert not is_isomorphic(cycle_graph(6), two_tri)
