"""Euler tours of digraphs and the Hamilton cycle they trace in L(D)."""

from __future__ import annotations

from .digraph import Digraph
from .errors import HamiltonVerificationError, NotEulerian, TooSmall
from .linegraph import LineGraph, P3Policy, build_line_graph


def is_eulerian(D: Digraph) -> bool:
    """Balanced degrees everywhere and the non-isolated vertices weakly connected."""
    if any(D.in_degree(v) != D.out_degree(v) for v in range(D.n)):
        return False
    active = [v for v in range(D.n) if D.out_arcs[v]]
    if not active:
        return True
    seen = {active[0]}
    stack = [active[0]]
    while stack:
        v = stack.pop()
        for a in D.out_arcs[v] + D.in_arcs[v]:
            t, h = D.arcs[a]
            w = h if t == v else t
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(active)


def euler_tour(D: Digraph) -> list[int]:
    """Cyclic arc-id sequence using every arc once (Hierholzer).

    Starts at the lowest vertex with arcs and always leaves by the unused
    out-arc of lowest id.
    """
    if D.m == 0 or not is_eulerian(D):
        raise NotEulerian("digraph is not eulerian (or has no arcs)")
    nxt = [0] * D.n
    start = next(v for v in range(D.n) if D.out_arcs[v])
    stack: list[tuple[int, int]] = [(start, -1)]  # (vertex, arc used to enter)
    tour: list[int] = []
    while stack:
        v, via = stack[-1]
        if nxt[v] < len(D.out_arcs[v]):
            a = D.out_arcs[v][nxt[v]]
            nxt[v] += 1
            stack.append((D.arcs[a].head, a))
        else:
            stack.pop()
            if via != -1:
                tour.append(via)
    tour.reverse()
    return tour


def verify_hamilton_cycle(L: LineGraph, cycle: list[int]) -> None:
    """Raise :class:`HamiltonVerificationError` unless ``cycle`` visits every
    vertex of L once with cyclically consecutive entries adjacent."""
    m = L.vertex_count
    if sorted(cycle) != list(range(m)):
        raise HamiltonVerificationError("sequence is not a permutation of the arcs")
    bad = [(cycle[i], cycle[(i + 1) % m]) for i in range(m)
           if not L.has_edge(cycle[i], cycle[(i + 1) % m])]
    if not bad:
        return
    D = L.digraph
    closed_ok = all(D.arcs[a].head == D.arcs[b].tail for a, b in bad)
    raise HamiltonVerificationError(
        f"consecutive arcs {bad[0]} are not adjacent in L(D) under {L.policy.value}",
        policy_mismatch=closed_ok and L.policy is P3Policy.STRICT)


def line_hamilton_cycle(D: Digraph, policy: P3Policy = P3Policy.STRICT) -> list[int]:
    """The Euler tour read as a Hamilton cycle of L(D), verified before return."""
    policy = P3Policy.parse(policy)
    if not is_eulerian(D) or D.m == 0:
        raise NotEulerian("digraph is not eulerian")
    if D.m < 3:
        raise TooSmall(f"need at least 3 arcs, got {D.m}")
    cycle = euler_tour(D)
    verify_hamilton_cycle(build_line_graph(D, policy), cycle)
    return cycle
