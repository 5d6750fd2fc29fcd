"""Matching engines on simple undirected graphs and the witnesses they yield.

All engines scan vertices and neighbours in increasing id order, so the
matchings and witness sets they return are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .errors import (HasPerfectMatching, NoViolatorExists, NotBipartiteAsGiven,
                     WitnessSearchExhausted)


class UGraph:
    """Simple undirected graph on vertices 0..vertex_count-1."""

    def __init__(self, vertex_count: int, edges: Iterable[tuple[int, int]]):
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) outside [0, {vertex_count})")
            e = (u, v) if u < v else (v, u)
            if e in norm:
                raise ValueError(f"duplicate edge {e}")
            norm.add(e)
        self.vertex_count = vertex_count
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        adj: list[list[int]] = [[] for _ in range(vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self.adj = tuple(tuple(sorted(a)) for a in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def neighbors(self, S: Iterable[int]) -> frozenset[int]:
        """N(S): every vertex adjacent to some vertex of S (may meet S)."""
        return frozenset(w for v in S for w in self.adj[v])

    def __eq__(self, other):
        if not isinstance(other, UGraph):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.edges == other.edges

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"{type(self).__name__}({self.vertex_count}, {list(self.edges)})"


def components(G: UGraph, removed: Iterable[int] = ()) -> list[list[int]]:
    """Connected components of G - removed, each sorted, ordered by least vertex."""
    gone = set(removed)
    seen = [False] * G.vertex_count
    comps = []
    for s in range(G.vertex_count):
        if seen[s] or s in gone:
            continue
        seen[s] = True
        comp = [s]
        stack = [s]
        while stack:
            v = stack.pop()
            for w in G.adj[v]:
                if not seen[w] and w not in gone:
                    seen[w] = True
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def odd_component_count(G: UGraph, S: Iterable[int]) -> int:
    return sum(len(c) % 2 for c in components(G, S))


def isolated_count(G: UGraph, S: Iterable[int]) -> int:
    """i(G - S)."""
    gone = set(S)
    return sum(1 for v in range(G.vertex_count)
               if v not in gone and all(w in gone for w in G.adj[v]))


@dataclass(frozen=True)
class Matching:
    pairs: tuple[tuple[int, int], ...]
    mate: tuple[int, ...]  # -1 for exposed vertices

    @classmethod
    def from_mate(cls, mate: list[int]) -> "Matching":
        pairs = tuple((v, w) for v, w in enumerate(mate) if w > v)
        return cls(pairs, tuple(mate))

    @property
    def size(self) -> int:
        return len(self.pairs)

    @property
    def is_perfect(self) -> bool:
        return 2 * len(self.pairs) == len(self.mate)

    def exposed(self) -> list[int]:
        return [v for v, w in enumerate(self.mate) if w == -1]


# -- Edmonds' blossom algorithm -------------------------------------------

def _lca(mate, base, parent, a, b):
    on_path = [False] * len(mate)
    while True:
        a = base[a]
        on_path[a] = True
        if mate[a] == -1:
            break
        a = parent[mate[a]]
    while True:
        b = base[b]
        if on_path[b]:
            return b
        b = parent[mate[b]]


def _mark_path(mate, base, parent, blossom, v, b, child):
    while base[v] != b:
        blossom[base[v]] = blossom[base[mate[v]]] = True
        parent[v] = child
        child = mate[v]
        v = parent[mate[v]]


def _search(adj, mate, root):
    """Grow an alternating tree from an exposed root, shrinking blossoms.

    Returns (endpoint, parent, outer): endpoint is the exposed vertex that
    ends an augmenting path, or -1; outer marks the even (outer) vertices
    of the tree, blossom members included.
    """
    n = len(adj)
    outer = [False] * n
    parent = [-1] * n
    base = list(range(n))
    outer[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if base[v] == base[to] or mate[v] == to:
                continue
            if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                cur = _lca(mate, base, parent, v, to)
                blossom = [False] * n
                _mark_path(mate, base, parent, blossom, v, cur, to)
                _mark_path(mate, base, parent, blossom, to, cur, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not outer[i]:
                            outer[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if mate[to] == -1:
                    return to, parent, outer
                outer[mate[to]] = True
                queue.append(mate[to])
    return -1, parent, outer


def _blossom_mate(G: UGraph) -> list[int]:
    mate = [-1] * G.vertex_count
    # greedy start, lowest ids first
    for v in range(G.vertex_count):
        if mate[v] == -1:
            for w in G.adj[v]:
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break
    for root in range(G.vertex_count):
        if mate[root] != -1:
            continue
        end, parent, _ = _search(G.adj, mate, root)
        v = end
        while v != -1:
            pv = parent[v]
            nxt = mate[pv]
            mate[v], mate[pv] = pv, v
            v = nxt
    return mate


def max_matching(G: UGraph) -> Matching:
    """Maximum-cardinality matching of a general graph."""
    return Matching.from_mate(_blossom_mate(G))


@dataclass(frozen=True)
class GallaiEdmonds:
    D_set: frozenset[int]
    A_set: frozenset[int]
    C_set: frozenset[int]
    deficiency: int
    matching: Matching


def gallai_edmonds(G: UGraph, matching: Matching | None = None) -> GallaiEdmonds:
    """Gallai-Edmonds structure from one maximum matching.

    D is the set of vertices reachable from an exposed vertex along an
    even alternating path, which are exactly the vertices some maximum
    matching leaves exposed.
    """
    if matching is None:
        matching = max_matching(G)
    mate = list(matching.mate)
    D = set()
    for r in matching.exposed():
        end, _, outer = _search(G.adj, mate, r)
        if end != -1:
            raise ValueError("matching passed to gallai_edmonds is not maximum")
        D.update(v for v in range(G.vertex_count) if outer[v])
    D_set = frozenset(D)
    A_set = G.neighbors(D_set) - D_set
    C_set = frozenset(range(G.vertex_count)) - D_set - A_set
    deficiency = G.vertex_count - 2 * matching.size
    return GallaiEdmonds(D_set, A_set, C_set, deficiency, matching)


@dataclass(frozen=True)
class TutteWitness:
    S: frozenset[int]
    odd_component_count: int


def tutte_witness(G: UGraph) -> TutteWitness:
    """A set S with c_o(G - S) > |S| and every component of G - S odd.

    Starts from the Gallai-Edmonds A-set, which attains the maximum of
    c_o(G - S) - |S|, then repeatedly moves the lowest vertex of an even
    component into S.  Each move keeps the difference at its maximum.
    """
    ge = gallai_edmonds(G)
    if ge.deficiency == 0:
        raise HasPerfectMatching("graph has a perfect matching")
    S = set(ge.A_set)
    while True:
        even = [c for c in components(G, S) if len(c) % 2 == 0]
        if not even:
            break
        S.add(even[0][0])
    odd = odd_component_count(G, S)
    assert odd - len(S) == ge.deficiency
    return TutteWitness(frozenset(S), odd)


# -- bipartite engine ------------------------------------------------------

def _check_bipartite(G: UGraph, left: frozenset[int]) -> None:
    for u, v in G.edges:
        if (u in left) == (v in left):
            raise NotBipartiteAsGiven(f"edge ({u}, {v}) does not cross the given sides")


def _hopcroft_karp(G: UGraph, left_list: list[int]) -> list[int]:
    mate = [-1] * G.vertex_count
    INF = float("inf")
    while True:
        dist = {}
        queue = deque()
        for u in left_list:
            if mate[u] == -1:
                dist[u] = 0
                queue.append(u)
        found = False
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                x = mate[w]
                if x == -1:
                    found = True
                elif x not in dist:
                    dist[x] = dist[u] + 1
                    queue.append(x)
        if not found:
            return mate

        def dfs(u):
            for w in G.adj[u]:
                x = mate[w]
                if x == -1 or (dist.get(x) == dist[u] + 1 and dfs(x)):
                    mate[u], mate[w] = w, u
                    return True
            dist[u] = INF
            return False

        for u in left_list:
            if mate[u] == -1:
                dfs(u)


def bipartite_max_matching(G: UGraph, left: Iterable[int]) -> Matching:
    """Hopcroft-Karp; every edge must join ``left`` to its complement."""
    left = frozenset(left)
    _check_bipartite(G, left)
    return Matching.from_mate(_hopcroft_karp(G, sorted(left)))


@dataclass(frozen=True)
class HallViolator:
    S: frozenset[int]
    neighborhood_size: int


def hall_violator(G: UGraph, left: Iterable[int],
                  matching: Matching | None = None) -> HallViolator:
    """Left vertices reachable by alternating paths from exposed left vertices."""
    left = frozenset(left)
    if matching is None:
        matching = bipartite_max_matching(G, left)
    else:
        _check_bipartite(G, left)
    mate = matching.mate
    roots = [u for u in sorted(left) if mate[u] == -1]
    if not roots:
        raise NoViolatorExists("a matching saturating the left side exists")
    reached = set(roots)
    queue = deque(roots)
    while queue:
        u = queue.popleft()
        for w in G.adj[u]:
            x = mate[w]
            # x == -1 would be an augmenting path; the matching is maximum
            if x != -1 and x not in reached:
                reached.add(x)
                queue.append(x)
    S = frozenset(reached)
    nb = len(G.neighbors(S))
    assert nb < len(S)
    return HallViolator(S, nb)


# -- fractional perfect matchings ----------------------------------------

def bipartite_double_cover(G: UGraph) -> UGraph:
    """Copies v (left) and v + n (right); edge uv gives u-(v+n) and v-(u+n)."""
    n = G.vertex_count
    edges = []
    for u, v in G.edges:
        edges.append((u, v + n))
        edges.append((v, u + n))
    return UGraph(2 * n, edges)


@dataclass(frozen=True)
class FractionalResult:
    exists: bool
    witness: frozenset[int] | None = None
    isolated: int | None = None


def _exhaustive_isolated_witness(G: UGraph, limit: int):
    n = G.vertex_count
    if n > limit:
        return None
    for k in range(n + 1):
        for S in combinations(range(n), k):
            if isolated_count(G, S) > k:
                return frozenset(S)
    return None


def fractional_pm(G: UGraph, fallback_limit: int = 20) -> FractionalResult:
    """Decide whether G has a spanning subgraph made of K2's and cycles.

    Such a subgraph exists iff the bipartite double cover has a perfect
    matching.  Otherwise a Hall violator T of the cover's left side is
    mapped down to S = N(T) - T.  The set I = T - N(T) is independent and
    all its neighbours lie in S, so i(G - S) - |S| >= |I| - |S|, which
    equals |T| - |N(T)| > 0.  The witness is re-checked anyway; the
    exhaustive search only runs if that re-check fails.
    """
    n = G.vertex_count
    cover = bipartite_double_cover(G)
    left = range(n)
    m = bipartite_max_matching(cover, left)
    if m.size == n:
        return FractionalResult(True)
    T = hall_violator(cover, left, m).S
    S = G.neighbors(T) - T
    if isolated_count(G, S) > len(S):
        return FractionalResult(False, S, isolated_count(G, S))
    S = _exhaustive_isolated_witness(G, fallback_limit)
    if S is None:
        raise WitnessSearchExhausted(
            f"no validated isolated-vertex witness on {n} vertices")
    return FractionalResult(False, S, isolated_count(G, S))
