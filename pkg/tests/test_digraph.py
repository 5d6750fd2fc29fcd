import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from p3decomp.digraph import (Digraph, Partition3, all_partition_slacks,
                              arc_count_between, cut_degrees, new_digraph,
                              partition_from_mask, partition_slack,
                              structural_predicates)
from p3decomp.errors import InvalidPartition, LoopArc, ParallelArc, VertexOutOfRange

from conftest import c3, tt3


@st.composite
def digraphs(draw, max_n=6, asymmetric=False):
    n = draw(st.integers(0, max_n))
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    if asymmetric:
        seen, arcs = set(), []
        for u, v in chosen:
            if (v, u) not in seen:
                seen.add((u, v))
                arcs.append((u, v))
        chosen = arcs
    return Digraph(n, chosen)


def test_construct_tt3():
    D = new_digraph(3, [(0, 1), (0, 2), (1, 2)])
    assert D.m == 3 and D.is_strict and D.is_asymmetric


def test_parallel_arc_rejected():
    with pytest.raises(ParallelArc) as e:
        Digraph(2, [(0, 1), (0, 1)])
    assert e.value.arc_index == 1


def test_loop_and_range_errors():
    with pytest.raises(LoopArc) as e:
        Digraph(2, [(0, 1), (1, 1)])
    assert e.value.arc_index == 1
    with pytest.raises(VertexOutOfRange):
        Digraph(2, [(0, 2)])


def test_digon_is_not_asymmetric(DIGON):
    assert not DIGON.is_asymmetric


def test_arc_counts():
    T = tt3()
    assert arc_count_between(T, {0}, {1, 2}) == 2
    assert arc_count_between(T, set(), range(3)) == 0
    assert arc_count_between(T, range(3), range(3)) == 3


def test_cut_degrees():
    T = tt3()
    assert cut_degrees(T, {0}) == (2, 0)
    assert cut_degrees(T, {2}) == (0, 2)
    assert cut_degrees(T, range(3)) == (0, 0)


def test_partition_slack_examples():
    assert partition_slack(tt3(), Partition3.of({0}, {2}, {1})) == -1
    assert partition_slack(c3(), Partition3.of({0}, {1}, {2})) == 1
    # with X and Y empty every term vanishes
    assert partition_slack(tt3(), Partition3.of((), (), range(3))) == 0


def test_invalid_partition():
    with pytest.raises(InvalidPartition):
        partition_slack(tt3(), Partition3.of({0}, {0}, {1, 2}))
    with pytest.raises(InvalidPartition):
        partition_slack(tt3(), Partition3.of({0}, {1}, set()))


def test_structural_predicates():
    r = structural_predicates(tt3())
    assert r.is_tournament and not r.strongly_connected and r.weakly_connected
    r = structural_predicates(c3())
    assert r.is_tournament and r.strongly_connected
    r = structural_predicates(Digraph(3, [(0, 2), (1, 2)]), X={0, 1})
    assert r.is_bipartite_with


@given(digraphs())
def test_cut_matches_arc_count(D):
    for bits in range(1 << D.n):
        X = {v for v in range(D.n) if bits >> v & 1}
        rest = set(range(D.n)) - X
        assert cut_degrees(D, X) == (arc_count_between(D, X, rest),
                                     arc_count_between(D, rest, X))
        # outcut of X is the incut of its complement
        assert cut_degrees(D, X)[0] == cut_degrees(D, rest)[1]


@given(digraphs())
def test_handshake(D):
    assert sum(cut_degrees(D, {v})[0] for v in range(D.n)) == D.m
    assert sum(cut_degrees(D, {v})[1] for v in range(D.n)) == D.m


def _slack_by_definition(D, p):
    a = lambda A, B: arc_count_between(D, A, B)
    X, Y, Z = p.X, p.Y, p.Z
    return a(Y, X) + a(X, X) + a(Y, Y) + a(Z, X) + a(Y, Z) - a(X, Y)


@settings(max_examples=40)
@given(digraphs(max_n=4))
def test_vectorised_slacks_match_definition(D):
    slacks = all_partition_slacks(D)
    for mask in range(3 ** D.n):
        p = partition_from_mask(D.n, mask)
        assert slacks[mask] == _slack_by_definition(D, p) == partition_slack(D, p)


@given(digraphs(max_n=5))
def test_slack_swap_identity(D):
    # swapping X and Y exchanges a(X,Y) with a(Y,X) and a(Z,X)+a(Y,Z) with a(Z,Y)+a(X,Z)
    for labels in itertools.islice(itertools.product(range(3), repeat=D.n), 60):
        p = Partition3.from_labels(labels)
        q = Partition3(p.Y, p.X, p.Z)
        a = lambda A, B: arc_count_between(D, A, B)
        lhs = partition_slack(D, p) + a(p.X, p.Y) - a(p.Y, p.X)
        rhs = (partition_slack(D, q) + a(q.X, q.Y) - a(q.Y, q.X)
               - a(p.Z, p.Y) - a(p.X, p.Z) + a(p.Z, p.X) + a(p.Y, p.Z))
        assert lhs == rhs
