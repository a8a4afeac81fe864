from steinerdiam.families import (
    complete_graph,
    cycle_graph,
    double_star,
    h2_graph,
    path_graph,
    spider,
    star_graph,
    triangle_spider,
    triple_star,
)
from steinerdiam.graphs import Graph, complement, graph_from_edge_mask, is_connected
from steinerdiam.recognizers import (
    Sdiam3Class,
    classify_sdiam2,
    classify_sdiam3,
    has_spanning_double_star,
    has_spanning_h2,
    has_spanning_triple_star,
    is_complete,
    is_cycle,
    is_path,
    recognize_spider,
    recognize_triangle_spider,
    sdiam3_is_2,
    sdiam3_is_3,
    sdiam3_is_n_minus_1,
)
from steinerdiam.steiner import steiner_diameter


def test_basic_shape_recognizers():
    assert is_complete(complete_graph(4))
    assert not is_complete(cycle_graph(4))
    assert is_path(path_graph(5)) and is_path(path_graph(1))
    assert not is_path(star_graph(3))
    assert is_cycle(cycle_graph(3))
    assert not is_cycle(path_graph(3))
    assert not is_cycle(Graph.from_edges(6, [(0, 1), (1, 2), (0, 2),
                                             (3, 4), (4, 5), (3, 5)]))


def test_spanning_covers():
    assert has_spanning_double_star(double_star(2, 3))
    assert has_spanning_double_star(path_graph(4))
    assert not has_spanning_double_star(path_graph(5))
    assert has_spanning_triple_star(triple_star(1, 2, 2))
    assert has_spanning_triple_star(complete_graph(4))
    assert not has_spanning_triple_star(path_graph(6))
    assert not has_spanning_triple_star(star_graph(3))  # no triangle
    assert has_spanning_h2(h2_graph(["UVW", "UV", "V"]))
    assert has_spanning_h2(path_graph(3))
    assert not has_spanning_h2(path_graph(6))


def test_spider_round_trip():
    for legs in [(0, 1, 1), (0, 2, 3), (1, 1, 1), (1, 2, 4), (2, 2, 2)]:
        g = spider(*legs)
        got = recognize_spider(g)
        assert got is not None and tuple(got) == legs
    assert recognize_spider(cycle_graph(5)) is None
    assert recognize_spider(double_star(2, 2)) is None
    # A path is a degenerate spider.
    assert tuple(recognize_spider(path_graph(5))) == (0, 2, 2)
    # Four legs is not a spider.
    assert recognize_spider(star_graph(4)) is None


def test_triangle_spider_round_trip():
    for legs in [(0, 0, 1), (0, 1, 2), (1, 1, 1), (1, 2, 3)]:
        g = triangle_spider(*legs)
        got = recognize_triangle_spider(g)
        assert got is not None and tuple(got) == legs
    # The bare triangle is the degenerate case with three zero legs.
    assert tuple(recognize_triangle_spider(complete_graph(3))) == (0, 0, 0)
    assert recognize_triangle_spider(cycle_graph(4)) is None
    assert recognize_triangle_spider(spider(1, 1, 1)) is None
    assert recognize_triangle_spider(complete_graph(4)) is None


def test_sdiam2_classifier():
    assert classify_sdiam2(complete_graph(5)) == 1
    assert classify_sdiam2(path_graph(5)) == 4
    assert classify_sdiam2(cycle_graph(4)) == 2
    assert classify_sdiam2(cycle_graph(6)) is None


def test_sdiam3_predicates_match_value():
    # Exhaustive over all connected labeled graphs on 5 vertices.
    n = 5
    for mask in range(1 << (n * (n - 1) // 2)):
        g = graph_from_edge_mask(n, mask)
        if not is_connected(g):
            continue
        val = steiner_diameter(g, 3)
        assert sdiam3_is_2(g) == (val == 2), mask
        assert sdiam3_is_3(g) == (val == 3), mask
        assert sdiam3_is_n_minus_1(g) == (val == n - 1), mask


def test_classify_precedence_n4():
    # On 4 vertices the classes 3 and n-1 coincide; classification must
    # be consistent with the computed value anyway.
    for mask in range(1 << 6):
        g = graph_from_edge_mask(4, mask)
        if not is_connected(g):
            continue
        val = steiner_diameter(g, 3)
        cls = classify_sdiam3(g)
        if cls == Sdiam3Class.TWO:
            assert val == 2
        elif cls == Sdiam3Class.THREE:
            assert val == 3
        elif cls == Sdiam3Class.N_MINUS_1:
            assert val == 3
        else:
            assert val not in (2, 3)


def test_classify_named_graphs():
    assert classify_sdiam3(complete_graph(6)) == Sdiam3Class.TWO
    assert classify_sdiam3(cycle_graph(5)) == Sdiam3Class.THREE
    assert classify_sdiam3(path_graph(6)) == Sdiam3Class.N_MINUS_1
    assert classify_sdiam3(triangle_spider(1, 1, 2)) == Sdiam3Class.N_MINUS_1
    assert classify_sdiam3(cycle_graph(8)) == Sdiam3Class.OTHER
    # Disconnected graphs fall out of every characterized class; the CLI
    # refuses them up front, the library just reports OTHER.
    assert classify_sdiam3(
        Graph.from_edges(4, [(0, 1), (2, 3)])) == Sdiam3Class.OTHER


def test_complement_conditions_track_value_three():
    # sdiam_3 = 3 iff the complement has a vertex of degree >= 2 and no
    # spanning triple star and no spanning H2 (n >= 4); spot-check against
    # graphs built to hit each clause.
    g = cycle_graph(6)
    c = complement(g)
    assert max(c.degrees()) >= 2
    assert steiner_diameter(g, 3) == 4
    assert has_spanning_triple_star(c) or has_spanning_h2(c) or \
        classify_sdiam3(g) == Sdiam3Class.THREE
