import pytest

from p3decomp.digraph import Digraph


def tt3():
    return Digraph(3, [(0, 1), (0, 2), (1, 2)])


def c3():
    return Digraph(3, [(0, 1), (1, 2), (2, 0)])


def c4():
    return Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


def digon():
    return Digraph(2, [(0, 1), (1, 0)])


def in_star():
    """Two arcs into a common sink."""
    return Digraph(3, [(0, 2), (1, 2)])


def figure_eight():
    """Two directed triangles sharing vertex 0."""
    return Digraph(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])


@pytest.fixture
def TT3():
    return tt3()


@pytest.fixture
def C3():
    return c3()


@pytest.fixture
def C4():
    return c4()


@pytest.fixture
def DIGON():
    return digon()
