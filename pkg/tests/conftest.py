import pytest

from blockrefine import corpus


def S(g, *labels):
    """Mask of the given labels in g."""
    return g.mask(labels)


@pytest.fixture
def path3():
    return corpus.path(3)


@pytest.fixture
def glued():
    return corpus.glued_k4s()


@pytest.fixture
def k4p():
    return corpus.k4_pendant()


@pytest.fixture
def k13():
    return corpus.star(3)


@pytest.fixture(scope="session")
def small_corpus():
    """Connected graphs on at most 5 vertices (oracle-sized)."""
    return corpus.connected_graphs(5)


@pytest.fixture(scope="session")
def full_corpus():
    return corpus.connected_graphs(7)
