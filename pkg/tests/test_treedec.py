import pytest

from blockrefine import corpus
from blockrefine.errors import InvariantViolation
from blockrefine.graph import Graph
from blockrefine.profiles import find_k_blocks, induced_profile
from blockrefine.separations import OrientedSeparation as OS
from blockrefine.treedec import (
    TreeDecomposition,
    adhesion,
    bag_isomorphic,
    check_canonical,
    induced_separation,
    is_tight_td,
    node_star,
    refines,
    separations_of,
    td_distinguishes,
    validate,
)

from .conftest import S


def td_of(g, bags, edges):
    return TreeDecomposition({t: g.mask(b) for t, b in enumerate(bags)}, edges)


@pytest.fixture
def glued_td(glued):
    return td_of(glued, ["0123", "2345"], [(0, 1)])


def test_induced_separation_both_directions(glued, glued_td):
    s = induced_separation(glued, glued_td, 0, 1)
    assert s == OS(S(glued, 0, 1, 2, 3), S(glued, 2, 3, 4, 5))
    assert induced_separation(glued, glued_td, 1, 0) == s.inverse()
    with pytest.raises(ValueError):
        induced_separation(glued, glued_td, 0, 0)


def test_single_node_star_is_empty(glued):
    td = td_of(glued, ["012345"], [])
    assert node_star(glued, td, 0) == frozenset()
    assert separations_of(glued, td) == set()


def test_node_star_interior_is_bag(glued, glued_td):
    assert node_star(glued, glued_td, 0) == {OS(S(glued, 2, 3, 4, 5), S(glued, 0, 1, 2, 3))}


def test_node_star_rejects_degenerate_edge(glued):
    td = td_of(glued, ["012345", "012345"], [(0, 1)])
    with pytest.raises(InvariantViolation):
        node_star(glued, td, 0)


def test_validate_ok(glued, glued_td):
    assert validate(glued, glued_td).ok


def test_validate_edge_uncovered(glued):
    td = td_of(glued, ["0123", "345"], [(0, 1)])
    report = validate(glued, td)
    assert ("edge-uncovered", "{2,4}") in report.violations


def test_validate_trace_disconnected(path3):
    td = td_of(path3, ["01", "1", "12"], [(0, 1), (1, 2)])
    assert validate(path3, td).ok
    broken = td_of(path3, ["012", "1", "12"], [(0, 1), (1, 2)])
    assert validate(path3, broken).violations == [("trace-disconnected", "2")]


def test_validate_not_a_tree(path3):
    cyc = td_of(path3, ["01", "12", "1"], [(0, 1), (1, 2), (0, 2)])
    assert validate(path3, cyc).violations[0][0] == "not-a-tree"
    forest = td_of(path3, ["01", "12"], [])
    assert validate(path3, forest).violations[0][0] == "not-a-tree"


def test_validate_uncovered_vertex(path3):
    td = td_of(path3, ["01"], [])
    kinds = [k for k, _ in validate(path3, td).violations]
    assert "vertex-uncovered" in kinds and "edge-uncovered" in kinds


def test_adhesion(glued, glued_td, k13):
    assert adhesion(glued, glued_td) == 2
    assert adhesion(glued, td_of(glued, ["012345"], [])) == 0
    star = td_of(k13, ["0", "01", "02", "03"], [(0, 1), (0, 2), (0, 3)])
    assert adhesion(k13, star) == 1


def test_tight_decomposition(path3, glued, glued_td):
    assert is_tight_td(glued, glued_td)
    assert not is_tight_td(path3, td_of(path3, ["012", "12"], [(0, 1)]))
    assert is_tight_td(path3, td_of(path3, ["01", "12"], [(0, 1)]))


def test_td_distinguishes(glued, glued_td):
    p, q = (induced_profile(glued, b) for b in find_k_blocks(glued, 3))
    assert td_distinguishes(glued, glued_td, p, q)
    assert td_distinguishes(glued, glued_td, p, q, efficiently=True)
    trivial = td_of(glued, ["012345"], [])
    assert not td_distinguishes(glued, trivial, p, q)


def test_refines(path3):
    coarse = td_of(path3, ["012"], [])
    fine = td_of(path3, ["01", "12"], [(0, 1)])
    assert refines(path3, fine, coarse)
    assert refines(path3, fine, fine)
    assert not refines(path3, coarse, fine)


def test_bag_isomorphic_ignores_node_ids(glued):
    a = td_of(glued, ["0123", "2345"], [(0, 1)])
    b = TreeDecomposition({7: S(glued, 2, 3, 4, 5), 3: S(glued, 0, 1, 2, 3)}, [(3, 7)])
    assert bag_isomorphic(a, b)
    c = td_of(glued, ["0123", "23", "2345"], [(0, 1), (1, 2)])
    d = td_of(glued, ["23", "0123", "2345"], [(0, 1), (0, 2)])
    e = td_of(glued, ["0123", "2345", "23"], [(0, 1), (1, 2)])
    assert bag_isomorphic(c, d)
    assert not bag_isomorphic(c, e)


def test_canonical_star(k13):
    star = td_of(k13, ["0", "01", "02", "03"], [(0, 1), (0, 2), (0, 3)])
    assert check_canonical(k13, lambda g: star)


def test_label_dependent_split_is_not_canonical():
    c4 = corpus.cycle(4)
    # splitting at {0,2} singles out one diagonal; the rotation moves it
    split = td_of(c4, ["012", "023"], [(0, 1)])
    assert validate(c4, split).ok
    assert not check_canonical(c4, lambda g: split)


def test_canonical_trivial_decomposition_of_any_graph():
    for g in corpus.symmetric_family().values():
        whole = TreeDecomposition({0: g.full})
        assert check_canonical(g, lambda h: whole, cap=None)


def test_relabel_nodes(glued):
    td = TreeDecomposition({5: S(glued, 0, 1, 2, 3), 9: S(glued, 2, 3, 4, 5)}, [(9, 5)])
    r = td.relabel_nodes()
    assert r.nodes == [0, 1] and r.edges == ((0, 1),)
    assert bag_isomorphic(r, td)


def test_disconnected_graph_decomposition():
    g = Graph.from_edges([(0, 1), (2, 3)])
    td = td_of(g, ["01", "23"], [(0, 1)])
    assert validate(g, td).ok
    assert induced_separation(g, td, 0, 1).order == 0
