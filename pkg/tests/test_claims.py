import pytest

from steinerdiam.claims import (
    circumference_bound_ok,
    claim_ids,
    get_claims,
    min_degree_implication_ok,
    oracle_differences,
    tree_extension_identity_ok,
    tree_identity_witness,
    tree_leaf_criterion,
)
from steinerdiam.corpus import enumerate_trees
from steinerdiam.errors import CapacityError, DomainError, ParameterError
from steinerdiam.families import (
    complete_graph,
    cycle_graph,
    double_star,
    path_graph,
    spider,
    star_graph,
)
from steinerdiam.graphs import Graph

EXPECTED_IDS = [
    "obs1", "obs2", "th1", "th2", "th3", "th4", "pro1", "pro2", "lem1",
    "lem2", "lemF", "pro6", "th5", "obs3n", "proA", "proB", "proC",
    "lemM", "lem0", "oracle_dp", "oracle_median",
]


def test_registry_ids_exact():
    assert claim_ids() == EXPECTED_IDS
    assert [c.claim_id for c in get_claims(["pro2", "th5"])] == ["pro2", "th5"]
    with pytest.raises(ParameterError, match="unknown claim id"):
        get_claims(["th2", "nope"])


def test_tree_leaf_criterion():
    assert tree_leaf_criterion(path_graph(6), 2)
    assert not tree_leaf_criterion(star_graph(4), 3)
    assert tree_leaf_criterion(star_graph(4), 4)
    assert tree_leaf_criterion(spider(1, 1, 1), 3)
    with pytest.raises(DomainError):
        tree_leaf_criterion(cycle_graph(4), 2)
    with pytest.raises(DomainError):
        tree_leaf_criterion(path_graph(4), 5)


def test_min_degree_implication():
    assert min_degree_implication_ok(complete_graph(5), 3)
    assert min_degree_implication_ok(path_graph(5), 3)
    assert min_degree_implication_ok(cycle_graph(6), 4)


def test_circumference_bound():
    assert circumference_bound_ok(cycle_graph(6))
    assert circumference_bound_ok(path_graph(7))  # acyclic: antecedent false
    assert circumference_bound_ok(complete_graph(5))


def test_tree_extension_identity():
    for g in (path_graph(7), star_graph(5), double_star(2, 3),
              spider(1, 2, 3)):
        assert tree_extension_identity_ok(g)
        assert tree_identity_witness(g) is None
    for g in enumerate_trees(6):
        assert tree_extension_identity_ok(g)
    with pytest.raises(CapacityError):
        tree_extension_identity_ok(path_graph(13))


def test_oracle_differences_empty():
    for g in (cycle_graph(6), complete_graph(4),
              Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])):
        assert oracle_differences(g) == []
