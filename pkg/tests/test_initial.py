from itertools import combinations

import pytest

from blockrefine import corpus
from blockrefine.errors import IncompleteSystem
from blockrefine.graph import Graph
from blockrefine.initial import (
    NestedSystem,
    consistent_orientations,
    distinguishing_system,
    initial_decomposition,
    tree_from_nested,
)
from blockrefine.profiles import enumerate_profiles, find_k_blocks
from blockrefine.separations import Separation, is_nested, is_tight
from blockrefine.treedec import (
    adhesion,
    check_canonical,
    is_tight_td,
    separations_of,
    td_distinguishes,
    validate,
)

from .conftest import S

# four 3-blocks arranged so that the order-2 distinguishers cross
CROSSING = Graph.from_edges([(0, 1), (0, 2), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (1, 6),
                             (3, 4), (4, 5)])


def bag_labels(g, td):
    return sorted("".join(g.labels(b)) for b in td.bags.values())


def test_glued_system(glued):
    system = distinguishing_system(glued, 3)
    assert system.separations == (Separation.of(S(glued, 0, 1, 2, 3), S(glued, 2, 3, 4, 5)),)


def test_star_system(k13):
    system = distinguishing_system(k13, 2)
    assert len(system) == 3
    assert all(s.order == 1 and s.separator == S(k13, 0) for s in system.separations)


def test_single_profile_gives_empty_system():
    for g in (corpus.complete(4), corpus.cycle(5)):
        assert distinguishing_system(g, 1).separations == ()


def test_system_is_nested_tight_proper(small_corpus):
    for g in small_corpus:
        for k in (1, 2, 3, 4):
            try:
                system = distinguishing_system(g, k, cap=None)
            except IncompleteSystem:
                continue
            for s, t in combinations(system.separations, 2):
                assert is_nested(s, t)
            assert all(s.is_proper and is_tight(g, s) and s.order < k for s in system.separations)


def test_incomplete_system_is_reported():
    assert len(find_k_blocks(CROSSING, 3)) == 4
    with pytest.raises(IncompleteSystem):
        distinguishing_system(CROSSING, 3)


def test_consistent_orientations_of_star(k13):
    system = distinguishing_system(k13, 2)
    # a star of three separations has its centre plus three leaves
    assert len(consistent_orientations(system)) == 4


def test_tree_from_nested_glued(glued):
    td = tree_from_nested(glued, distinguishing_system(glued, 3))
    assert bag_labels(glued, td) == ["0123", "2345"]
    assert td.edges == ((0, 1),)


def test_tree_from_empty_system(glued):
    td = tree_from_nested(glued, NestedSystem((), 3))
    assert list(td.bags.values()) == [glued.full]


def test_tree_from_nested_round_trip(small_corpus):
    for g in small_corpus:
        for k in (2, 3):
            try:
                system = distinguishing_system(g, k, cap=None)
            except IncompleteSystem:
                continue
            td = tree_from_nested(g, system)
            assert separations_of(g, td) == set(system.separations)
            assert len(td.edges) == len(system)


def test_initial_star(k13):
    td = initial_decomposition(k13, 2)
    assert bag_labels(k13, td) == ["0", "01", "02", "03"]


def test_initial_single_profile_is_trivial(k4p):
    # one regular 4-profile: nothing to distinguish yet
    assert bag_labels(k4p, initial_decomposition(k4p, 4)) == ["01234"]


def test_initial_disconnected():
    g = Graph.from_edges([(0, 1), (2, 3)])
    td = initial_decomposition(g, 1)
    assert validate(g, td).ok
    assert adhesion(g, td) == 0
    assert bag_labels(g, td) == ["01", "23"]


def test_three_components_give_empty_centre():
    g = Graph.from_edges([(0, 1), (2, 3)], vertices=[4])
    td = initial_decomposition(g, 1)
    assert validate(g, td).ok
    assert bag_labels(g, td) == ["", "01", "23", "4"]


def test_initial_properties(small_corpus):
    for g in small_corpus:
        for k in (1, 2, 3, 4):
            profiles = enumerate_profiles(g, k, cap=None)
            try:
                td = initial_decomposition(g, k, cap=None, profiles=profiles)
            except IncompleteSystem:
                continue
            assert validate(g, td).ok
            assert is_tight_td(g, td)
            assert adhesion(g, td) < k
            for p, q in combinations(profiles, 2):
                assert td_distinguishes(g, td, p, q, efficiently=True)


@pytest.mark.parametrize("name", ["C6", "K13", "K23", "glued-K4", "prism", "K4+pendant"])
def test_initial_is_canonical(name):
    g = corpus.named_graphs()[name]
    for k in (1, 2, 3):
        assert check_canonical(g, lambda h: initial_decomposition(h, k, cap=None))
