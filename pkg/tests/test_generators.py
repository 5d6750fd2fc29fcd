import pytest

from p3decomp.digraph import is_tournament, weakly_connected
from p3decomp.errors import InfeasibleParams
from p3decomp.generators import (complete_bipartite_orientation, generate,
                                 random_bipartite_digraph, random_eulerian,
                                 random_strict_digraph, random_tournament,
                                 transitive_tournament)
from p3decomp.rng import SplitMix64


def test_splitmix_reference_values():
    # published SplitMix64 outputs
    r = SplitMix64(0)
    assert r.next_u64() == 0xE220A8397B1DCDAF
    assert r.next_u64() == 0x6E789E6AA1B965F4
    r = SplitMix64(1234567)
    assert [r.next_u64() for _ in range(3)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423]


def test_below_is_in_range():
    r = SplitMix64(7)
    draws = [r.below(5) for _ in range(2000)]
    assert set(draws) == set(range(5))


def test_transitive_tournament():
    assert [tuple(a) for a in transitive_tournament(3).arcs] == [(0, 1), (0, 2), (1, 2)]


def _has_cycle(D):
    indeg = [D.in_degree(v) for v in range(D.n)]
    queue = [v for v in range(D.n) if indeg[v] == 0]
    seen = 0
    while queue:
        v = queue.pop()
        seen += 1
        for a in D.out_arcs[v]:
            h = D.arcs[a].head
            indeg[h] -= 1
            if indeg[h] == 0:
                queue.append(h)
    return seen < D.n


@pytest.mark.parametrize("n", range(1, 9))
def test_transitive_is_acyclic_tournament(n):
    T = transitive_tournament(n)
    assert is_tournament(T) and not _has_cycle(T)


def test_complete_bipartite_orientation():
    D = complete_bipartite_orientation(2, 2)
    assert D.m == 4 and all(t < 2 <= h for t, h in D.arcs)


def test_random_tournament_deterministic():
    assert random_tournament(5, seed=1) == random_tournament(5, seed=1)
    assert is_tournament(random_tournament(5, seed=1))
    distinct = {random_tournament(5, seed=s).arcs for s in range(30)}
    assert len(distinct) > 10


def test_random_strict_digraph_flags():
    for s in range(20):
        assert random_strict_digraph(6, 0.6, s).is_asymmetric
    assert any(not random_strict_digraph(6, 0.6, s, asymmetric=False).is_asymmetric
               for s in range(20))


def test_random_bipartite_digraph_sides():
    D = random_bipartite_digraph(2, 3, 0.5, seed=3)
    assert all((t < 2) != (h < 2) for t, h in D.arcs)


@pytest.mark.parametrize("seed", range(25))
def test_random_eulerian(seed):
    D = random_eulerian(6, 8 + seed % 5, seed)
    assert D.m == 8 + seed % 5 and D.is_asymmetric
    assert all(D.in_degree(v) == D.out_degree(v) for v in range(D.n))
    active = [v for v in range(D.n) if D.out_arcs[v]]
    from p3decomp.digraph import Digraph
    # weak connectivity of the non-isolated part
    relabel = {v: i for i, v in enumerate(active)}
    sub = Digraph(len(active), [(relabel[t], relabel[h]) for t, h in D.arcs])
    assert weakly_connected(sub)


def test_random_eulerian_infeasible():
    with pytest.raises(InfeasibleParams):
        random_eulerian(5, 2, 0)
    with pytest.raises(InfeasibleParams):
        random_eulerian(3, 4, 0)


def test_generate_dispatch():
    assert generate("transitive_tournament", {"n": 3}) == transitive_tournament(3)
    assert generate("random_tournament", {"n": 4}, 9) == random_tournament(4, 9)
    with pytest.raises(InfeasibleParams):
        generate("random_tournament", {"n": 4})
    with pytest.raises(InfeasibleParams):
        generate("nope", {})
