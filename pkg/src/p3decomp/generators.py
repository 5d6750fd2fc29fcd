"""Deterministic digraph families, seeded through :class:`SplitMix64`."""

from __future__ import annotations

from .digraph import Digraph
from .errors import InfeasibleParams
from .rng import SplitMix64


def transitive_tournament(n: int) -> Digraph:
    """Every pair oriented low -> high."""
    return Digraph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def random_tournament(n: int, seed: int) -> Digraph:
    rng = SplitMix64(seed)
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            arcs.append((i, j) if rng.below(2) == 0 else (j, i))
    return Digraph(n, arcs)


def complete_bipartite_orientation(a: int, b: int) -> Digraph:
    """Vertices 0..a-1 form X, a..a+b-1 form Y; all a*b arcs go X -> Y."""
    return Digraph(a + b, [(x, a + y) for x in range(a) for y in range(b)])


def random_bipartite_digraph(a: int, b: int, p: float, seed: int) -> Digraph:
    """Each of x->y and y->x is present independently with probability p."""
    if not 0.0 <= p <= 1.0:
        raise InfeasibleParams(f"probability {p} outside [0, 1]")
    rng = SplitMix64(seed)
    arcs = []
    for x in range(a):
        for y in range(a, a + b):
            if rng.random() < p:
                arcs.append((x, y))
            if rng.random() < p:
                arcs.append((y, x))
    return Digraph(a + b, arcs)


def random_strict_digraph(n: int, p: float, seed: int, asymmetric: bool = True) -> Digraph:
    """Random strict digraph.

    With ``asymmetric`` each unordered pair carries an arc with probability p,
    oriented by a fair coin.  Otherwise each ordered pair is an arc with
    probability p independently, so digons can appear.
    """
    if not 0.0 <= p <= 1.0:
        raise InfeasibleParams(f"probability {p} outside [0, 1]")
    rng = SplitMix64(seed)
    arcs = []
    for i in range(n):
        for j in range(i + 1, n):
            if asymmetric:
                if rng.random() < p:
                    arcs.append((i, j) if rng.below(2) == 0 else (j, i))
            else:
                if rng.random() < p:
                    arcs.append((i, j))
                if rng.random() < p:
                    arcs.append((j, i))
    return Digraph(n, arcs)


def _random_cycle(rng, n, length, touched, present, asymmetric, tries=50):
    for _ in range(tries):
        if touched:
            start = rng.choice(sorted(touched))
        else:
            start = rng.below(n)
        others = [v for v in range(n) if v != start]
        rng.shuffle(others)
        cycle = [start] + others[:length - 1]
        arcs = [(cycle[i], cycle[(i + 1) % length]) for i in range(length)]
        if any(a in present for a in arcs):
            continue
        if asymmetric and any((h, t) in present for t, h in arcs):
            continue
        return arcs
    return None


def random_eulerian(n: int, m: int, seed: int, asymmetric: bool = True,
                    max_restarts: int = 200) -> Digraph:
    """Weakly connected digraph with exactly m arcs and d+(v) = d-(v) everywhere.

    Built as a union of arc-disjoint directed cycles, each new cycle passing
    through a vertex already in use.  With ``asymmetric`` cycles have length
    at least 3 and no digon is ever created.  Vertices not on any cycle stay
    isolated.
    """
    min_len = 3 if asymmetric else 2
    if m < 3:
        raise InfeasibleParams(f"eulerian instances need m >= 3, got {m}")
    if n < min_len:
        raise InfeasibleParams(f"need n >= {min_len}, got {n}")
    cap = n * (n - 1) // 2 if asymmetric else n * (n - 1)
    if m > cap:
        raise InfeasibleParams(f"m={m} exceeds the {cap} arcs available on {n} vertices")
    rng = SplitMix64(seed)
    for _ in range(max_restarts):
        present: set[tuple[int, int]] = set()
        order: list[tuple[int, int]] = []
        touched: set[int] = set()
        remaining = m
        while remaining > 0:
            lengths = [L for L in range(min_len, min(remaining, n) + 1)
                       if remaining - L == 0 or remaining - L >= min_len]
            if not lengths:
                break
            cycle = _random_cycle(rng, n, rng.choice(lengths), touched,
                                  present, asymmetric)
            if cycle is None:
                break
            for arc in cycle:
                present.add(arc)
                order.append(arc)
                touched.update(arc)
            remaining -= len(cycle)
        if remaining == 0:
            return Digraph(n, order)
    raise InfeasibleParams(
        f"no eulerian digraph with n={n}, m={m} found in {max_restarts} restarts")


_KINDS = {
    "transitive_tournament": (transitive_tournament, False),
    "random_tournament": (random_tournament, True),
    "complete_bipartite_orientation": (complete_bipartite_orientation, False),
    "random_bipartite_digraph": (random_bipartite_digraph, True),
    "random_strict_digraph": (random_strict_digraph, True),
    "random_eulerian": (random_eulerian, True),
}

KINDS = tuple(_KINDS)


def generate(kind: str, params: dict, seed: int | None = None) -> Digraph:
    """Dispatch by family name; randomized families require a seed."""
    try:
        fn, seeded = _KINDS[kind]
    except KeyError:
        raise InfeasibleParams(f"unknown generator kind {kind!r}") from None
    if seeded:
        if seed is None:
            raise InfeasibleParams(f"{kind} requires a seed")
        return fn(**params, seed=seed)
    return fn(**params)
