"""Line graphs of digraphs, the source/sink split transform, and their
connectivity and component structure.

Two arcs are adjacent in L(D) when they chain head-to-tail into a directed
path of length 2.  Whether a closed walk u->v->u (a digon traversed both
ways) counts is a policy choice: ``STRICT`` rejects it, ``CLOSED`` accepts
it.  On asymmetric digraphs the two coincide.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from enum import Enum

from .digraph import Digraph, weakly_connected
from .errors import IsolatedVertex, PreconditionViolated
from .matching import UGraph, components


class P3Policy(str, Enum):
    STRICT = "strict"
    CLOSED = "closed"

    @classmethod
    def parse(cls, value) -> "P3Policy":
        if isinstance(value, cls):
            return value
        return cls(str(value).lower())


def chains(D: Digraph, a1: int, a2: int, policy: P3Policy) -> bool:
    """True if arc a1 followed by arc a2 is a P3 under ``policy``."""
    t1, h1 = D.arcs[a1]
    t2, h2 = D.arcs[a2]
    if h1 != t2:
        return False
    return policy is P3Policy.CLOSED or t1 != h2


class LineGraph(UGraph):
    """L(D): vertex i is arc i of ``digraph``."""

    def __init__(self, digraph: Digraph, policy: P3Policy, edges):
        super().__init__(digraph.m, edges)
        self.digraph = digraph
        self.policy = policy

    def to_json(self) -> str:
        return json.dumps({"vertices": self.vertex_count,
                           "edges": [list(e) for e in self.edges],
                           "policy": self.policy.value})

    def to_dot(self, highlight: set[tuple[int, int]] | None = None) -> str:
        lines = ["graph L {"]
        for i, (t, h) in enumerate(self.digraph.arcs):
            lines.append(f'  {i} [label="{i}: {t}->{h}"];')
        for u, v in self.edges:
            if highlight and (u, v) in highlight:
                lines.append(f"  {u} -- {v} [color=red, penwidth=2];")
            else:
                lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_line_graph(D: Digraph, policy: P3Policy = P3Policy.STRICT) -> LineGraph:
    policy = P3Policy.parse(policy)
    edges = set()
    # bucket by shared middle vertex: in-arcs of v chain into out-arcs of v
    for v in range(D.n):
        for a_in in D.in_arcs[v]:
            u = D.arcs[a_in].tail
            for a_out in D.out_arcs[v]:
                if policy is P3Policy.STRICT and D.arcs[a_out].head == u:
                    continue
                edges.add((a_in, a_out) if a_in < a_out else (a_out, a_in))
    return LineGraph(D, policy, edges)


@dataclass(frozen=True)
class SplitResult:
    Dprime: Digraph
    origin: tuple[tuple[int, int], ...]  # D' vertex -> (original vertex, ordinal)


def split_transform(D: Digraph) -> SplitResult:
    """Split every sink of indegree k >= 2 into k sinks of indegree 1, and
    every source of outdegree k >= 2 into k sources of outdegree 1.

    New vertices have degree 1, so one pass reaches the fixpoint.  Copies
    are numbered in arc-id order and D' is indexed densely, original
    vertices first-come.
    """
    iso = D.isolated_vertices()
    if iso:
        raise IsolatedVertex(f"vertex {iso[0]} is isolated")
    origin: list[tuple[int, int]] = []
    # for split vertices: arc id -> new vertex id
    head_map: dict[int, int] = {}
    tail_map: dict[int, int] = {}
    plain: dict[int, int] = {}
    for v in range(D.n):
        dout, din = D.out_degree(v), D.in_degree(v)
        if dout == 0 and din >= 2:
            for k, a in enumerate(D.in_arcs[v]):
                head_map[a] = len(origin)
                origin.append((v, k))
        elif din == 0 and dout >= 2:
            for k, a in enumerate(D.out_arcs[v]):
                tail_map[a] = len(origin)
                origin.append((v, k))
        else:
            plain[v] = len(origin)
            origin.append((v, 0))
    arcs = []
    for i, (t, h) in enumerate(D.arcs):
        arcs.append((tail_map.get(i, plain.get(t)), head_map.get(i, plain.get(h))))
    return SplitResult(Digraph(len(origin), arcs), tuple(origin))


def _require_asymmetric_no_isolated(D: Digraph) -> None:
    if not D.is_asymmetric:
        raise PreconditionViolated("digraph has a digon (not asymmetric)")
    iso = D.isolated_vertices()
    if iso:
        raise PreconditionViolated(f"vertex {iso[0]} is isolated")


def _bfs_connected(G: UGraph) -> bool:
    if G.vertex_count == 0:
        return True
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in G.adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == G.vertex_count


def line_graph_connected(D: Digraph, policy: P3Policy = P3Policy.STRICT) -> tuple[bool, bool]:
    """Return (L(D) connected, agreement with weak connectivity of D').

    The first value comes from a BFS on L(D); the second reports whether
    weak connectivity of the split digraph gives the same answer.
    """
    _require_asymmetric_no_isolated(D)
    by_bfs = _bfs_connected(build_line_graph(D, policy))
    by_split = weakly_connected(split_transform(D).Dprime)
    return by_bfs, by_bfs == by_split


def f_bound(n: int) -> int:
    """floor(n^2 / 4): (n^2 - 1)/4 for odd n, n^2/4 for even n."""
    return n * n // 4


def extremal_kind(D: Digraph) -> str | None:
    """Name the component-count extremal family D belongs to, if any.

    ``"TT3"`` for the transitive tournament of order 3 (any labelling),
    ``"balanced_bipartite"`` for a complete bipartite orientation with all
    arcs from one side to the other and side sizes differing by at most 1.
    """
    n, m = D.n, D.m
    if n == 3 and m == 3 and D.is_asymmetric:
        outs = sorted(D.out_degree(v) for v in range(3))
        if outs == [0, 1, 2]:
            return "TT3"
    if m == 0:
        return "balanced_bipartite" if n <= 1 else None
    sources = [v for v in range(n) if D.in_degree(v) == 0 and D.out_degree(v) > 0]
    sinks = [v for v in range(n) if D.out_degree(v) == 0 and D.in_degree(v) > 0]
    if len(sources) + len(sinks) != n or abs(len(sources) - len(sinks)) > 1:
        return None
    if m != len(sources) * len(sinks):
        return None
    return "balanced_bipartite"


def sources_and_sinks_only(D: Digraph) -> bool:
    """Every non-isolated vertex is a pure source or a pure sink."""
    return all(D.in_degree(v) == 0 or D.out_degree(v) == 0 for v in range(D.n))


@dataclass(frozen=True)
class ComponentReport:
    num_components: int
    f_n: int
    bound_holds: bool
    is_extremal: bool
    extremal_kind: str | None
    edgeless: bool
    edgeless_structural: bool

    @property
    def consistent(self) -> bool:
        """Equality happens exactly on the two families, and the edgeless
        test agrees with the source/sink structure."""
        return (self.bound_holds
                and self.is_extremal == (self.extremal_kind is not None)
                and self.edgeless == self.edgeless_structural)


def component_analysis(D: Digraph, policy: P3Policy = P3Policy.STRICT) -> ComponentReport:
    if not D.is_asymmetric:
        raise PreconditionViolated("digraph has a digon (not asymmetric)")
    L = build_line_graph(D, policy)
    c = len(components(L))
    fn = f_bound(D.n)
    return ComponentReport(
        num_components=c,
        f_n=fn,
        bound_holds=c <= fn,
        is_extremal=c == fn,
        extremal_kind=extremal_kind(D),
        edgeless=not L.edges,
        edgeless_structural=sources_and_sinks_only(D),
    )
