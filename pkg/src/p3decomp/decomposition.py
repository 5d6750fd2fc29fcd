"""Deciding P3-decomposability, with a checkable answer either way.

A yes answer is a list of triples (u, v, w), one per directed path
u->v->w.  A no answer is a :class:`Certificate` that
:func:`verify_certificate` re-checks from the digraph alone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .digraph import (Digraph, Partition3, all_partition_slacks, arc_count_between,
                      cut_degrees, heads, is_bipartite_with, is_tournament,
                      partition_from_mask, partition_slack, tails)
from .errors import (CertificateSearchExhausted, InvalidPartition, NotBipartiteAsGiven,
                     NotTournament, OddSize)
from .linegraph import P3Policy, build_line_graph, chains
from .matching import (UGraph, bipartite_max_matching, components, fractional_pm,
                       hall_violator, max_matching,
                       odd_component_count, tutte_witness)

EXHAUSTIVE_LIMIT = 12


# -- positive certificates ---------------------------------------------------

@dataclass(frozen=True)
class P3Decomposition:
    triples: tuple[tuple[int, int, int], ...]

    def __len__(self):
        return len(self.triples)

    def to_list(self) -> list[list[int]]:
        return [list(t) for t in self.triples]


def _triple(D: Digraph, a1: int, a2: int, policy: P3Policy) -> tuple[int, int, int]:
    # lower id first when both orders chain (closed walk on a digon)
    if chains(D, a1, a2, policy):
        first, second = a1, a2
    else:
        first, second = a2, a1
    t, h = D.arcs[first]
    return (t, h, D.arcs[second].head)


def verify_decomposition(D: Digraph, dec: P3Decomposition | Iterable,
                         policy: P3Policy = P3Policy.STRICT) -> bool:
    policy = P3Policy.parse(policy)
    triples = dec.triples if isinstance(dec, P3Decomposition) else tuple(dec)
    used = [False] * D.m
    for triple in triples:
        if len(triple) != 3:
            return False
        u, v, w = triple
        if not (D.has_arc(u, v) and D.has_arc(v, w)):
            return False
        if policy is P3Policy.STRICT and u == w:
            return False
        for a in (D.arc_id(u, v), D.arc_id(v, w)):
            if used[a]:
                return False
            used[a] = True
    return all(used)


# -- negative certificates ---------------------------------------------------

@dataclass(frozen=True)
class Certificate:
    kind = "certificate"

    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class OddArcCount(Certificate):
    m: int
    kind = "odd_arc_count"

    def to_dict(self):
        return {"kind": self.kind, "m": self.m}


@dataclass(frozen=True)
class TournamentPartition(Certificate):
    p: Partition3
    slack: int
    kind = "tournament_partition"

    def to_dict(self):
        return {"kind": self.kind, **self.p.as_dict(), "slack": self.slack}


@dataclass(frozen=True)
class FractionalPartition(Certificate):
    p: Partition3
    slack: int
    kind = "fractional_partition"

    def to_dict(self):
        return {"kind": self.kind, **self.p.as_dict(), "slack": self.slack}


@dataclass(frozen=True)
class BipartiteImbalance(Certificate):
    X: frozenset[int]
    d_plus_X: int
    d_minus_X: int
    kind = "bipartite_imbalance"

    def to_dict(self):
        return {"kind": self.kind, "X": sorted(self.X),
                "d_plus_X": self.d_plus_X, "d_minus_X": self.d_minus_X}


@dataclass(frozen=True)
class BipartiteHall(Certificate):
    X: frozenset[int]
    X1: frozenset[int]
    Y1: frozenset[int]
    lhs: int
    rhs: int
    kind = "bipartite_hall"

    def to_dict(self):
        return {"kind": self.kind, "X": sorted(self.X), "X1": sorted(self.X1),
                "Y1": sorted(self.Y1), "lhs": self.lhs, "rhs": self.rhs}


@dataclass(frozen=True)
class GenericTutte(Certificate):
    S: frozenset[int]
    odd_components: int
    policy: P3Policy = P3Policy.STRICT
    kind = "generic_tutte"

    def to_dict(self):
        return {"kind": self.kind, "S": sorted(self.S),
                "odd_components": self.odd_components, "policy": self.policy.value}


def _hall_sides(D: Digraph, X1, Y1) -> tuple[int, int]:
    lhs = arc_count_between(D, X1, Y1) + arc_count_between(D, Y1, X1)
    rhs = cut_degrees(D, Y1)[0] + cut_degrees(D, X1)[1]
    return lhs, rhs


def verify_certificate(D: Digraph, c: Certificate) -> bool:
    """Recompute the claimed violation from D; stored counts are not trusted."""
    try:
        if isinstance(c, OddArcCount):
            return D.m % 2 == 1 and c.m == D.m
        if isinstance(c, (TournamentPartition, FractionalPartition)):
            return partition_slack(D, c.p) < 0
        if isinstance(c, BipartiteImbalance):
            if not is_bipartite_with(D, c.X):
                return False
            d_plus, d_minus = cut_degrees(D, c.X)
            return d_plus != d_minus
        if isinstance(c, BipartiteHall):
            if not is_bipartite_with(D, c.X):
                return False
            if not (c.X1 <= c.X and not (c.Y1 & c.X)):
                return False
            lhs, rhs = _hall_sides(D, c.X1, c.Y1)
            return lhs > rhs
        if isinstance(c, GenericTutte):
            L = build_line_graph(D, c.policy)
            if any(not 0 <= a < D.m for a in c.S):
                return False
            return odd_component_count(L, c.S) > len(c.S)
    except (InvalidPartition, ValueError, TypeError):
        return False
    return False


def _checked(D: Digraph, c: Certificate) -> Certificate:
    if not verify_certificate(D, c):
        raise RuntimeError(f"internal error: unverifiable certificate {c}")
    return c


# -- general pipeline --------------------------------------------------------

def _pairs_to_decomposition(D, pairs, policy) -> P3Decomposition:
    return P3Decomposition(tuple(_triple(D, a1, a2, policy) for a1, a2 in pairs))


def decompose(D: Digraph, policy: P3Policy = P3Policy.STRICT) -> P3Decomposition | Certificate:
    """P3-decomposition from a perfect matching of L(D), or a certificate."""
    policy = P3Policy.parse(policy)
    if D.m % 2:
        return _checked(D, OddArcCount(D.m))
    L = build_line_graph(D, policy)
    M = max_matching(L)
    if M.is_perfect:
        dec = _pairs_to_decomposition(D, M.pairs, policy)
        assert verify_decomposition(D, dec, policy)
        return dec
    w = tutte_witness(L)
    return _checked(D, GenericTutte(w.S, w.odd_component_count, policy))


@dataclass(frozen=True)
class CheckResult:
    decomposable: bool
    policy: P3Policy
    decomposition: P3Decomposition | None = None
    certificate: Certificate | None = None
    route: str | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {
            "decomposable": self.decomposable,
            "decomposition": None if self.decomposition is None else self.decomposition.to_list(),
            "certificate": None if self.certificate is None else self.certificate.to_dict(),
            "policy": self.policy.value,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def result_of(D: Digraph, outcome, policy: P3Policy) -> CheckResult:
    if isinstance(outcome, P3Decomposition):
        return CheckResult(True, policy, decomposition=outcome)
    return CheckResult(False, policy, certificate=outcome)


# -- tournaments ---------------------------------------------------------------

def source_sink_certificate(T: Digraph) -> TournamentPartition | None:
    """An arc from a vertex of indegree 0 to a vertex of outdegree 0."""
    for u, v in T.arcs:
        if T.in_degree(u) == 0 and T.out_degree(v) == 0:
            p = Partition3.of({u}, {v}, set(range(T.n)) - {u, v})
            slack = partition_slack(T, p)
            if slack < 0:
                return TournamentPartition(p, slack)
    return None


def dominant_bipartition_certificate(T: Digraph) -> TournamentPartition | None:
    """A near-balanced split X, Y with every X->Y arc present.

    In such a split every vertex of X outscores every vertex of Y, so only
    the top-k sets by outdegree need checking.
    """
    n = T.n
    order = sorted(range(n), key=lambda v: (-T.out_degree(v), v))
    for k in sorted({n // 2, (n + 1) // 2}):
        if k == 0 or k == n:
            continue
        X, Y = set(order[:k]), set(order[k:])
        if arc_count_between(T, X, Y) == len(X) * len(Y):
            p = Partition3.of(X, Y, ())
            slack = partition_slack(T, p)
            if slack < 0:
                return TournamentPartition(p, slack)
    return None


def quick_tournament_certificate(T: Digraph) -> tuple[TournamentPartition, str] | None:
    c = source_sink_certificate(T)
    if c is not None:
        return c, "source_sink"
    c = dominant_bipartition_certificate(T)
    if c is not None:
        return c, "dominant_bipartition"
    return None


def partition_from_isolated(D: Digraph, L: UGraph, S: Iterable[int]) -> Partition3 | None:
    """X = tails and Y = heads of the isolated vertices of L - S."""
    S = set(S)
    iso = [a for a in range(L.vertex_count)
           if a not in S and all(b in S for b in L.adj[a])]
    if not iso:
        return None
    X, Y = tails(D, iso), heads(D, iso)
    if X & Y:
        return None
    return Partition3.of(X, Y, set(range(D.n)) - X - Y)


def first_violating_partition(D: Digraph, limit: int = EXHAUSTIVE_LIMIT) -> Partition3 | None:
    """Lowest-mask partition with negative slack, scanning all 3^n."""
    import numpy as np

    if D.n > limit:
        raise CertificateSearchExhausted(
            f"exhaustive partition scan needs n <= {limit}, got {D.n}")
    slacks = all_partition_slacks(D)
    neg = np.flatnonzero(slacks < 0)
    if neg.size == 0:
        return None
    return partition_from_mask(D.n, int(neg[0]))


def check_tournament(T: Digraph, exhaustive: bool = True) -> CheckResult:
    """Decide an even-size tournament; on "no" return a violating partition.

    Certificate routes, in order: source-to-sink arc, dominant near-balanced
    bipartition, partition read off a Tutte witness of L(T), exhaustive
    scan of all partitions (n <= 12).  ``route`` names the one that fired.
    """
    if not is_tournament(T):
        raise NotTournament("digraph is not a tournament")
    if T.m % 2:
        raise OddSize(f"tournament has odd size {T.m}")
    policy = P3Policy.STRICT
    outcome = decompose(T, policy)
    if isinstance(outcome, P3Decomposition):
        return CheckResult(True, policy, decomposition=outcome)
    quick = quick_tournament_certificate(T)
    if quick is not None:
        cert, route = quick
        return CheckResult(False, policy, certificate=_checked(T, cert), route=route)
    L = build_line_graph(T, policy)
    p = partition_from_isolated(T, L, outcome.S)
    if p is not None:
        slack = partition_slack(T, p)
        if slack < 0:
            return CheckResult(False, policy, route="tutte_witness",
                               certificate=_checked(T, TournamentPartition(p, slack)))
    if not exhaustive:
        raise CertificateSearchExhausted("cheap certificate routes failed; exhaustive scan disabled")
    p = first_violating_partition(T)
    if p is None:
        raise RuntimeError("internal error: non-decomposable tournament with no violating partition")
    cert = TournamentPartition(p, partition_slack(T, p))
    return CheckResult(False, policy, certificate=_checked(T, cert), route="exhaustive")


# -- bipartite digraphs ----------------------------------------------------------

def check_bipartite(D: Digraph, X: Iterable[int]) -> CheckResult:
    """Decide a bipartite digraph with side X (closed walks u->v->u allowed).

    L(D) is bipartite between the X->Y arcs and the Y->X arcs; a maximum
    matching decides, and an unsaturated X->Y arc yields a Hall violator
    whose tails and heads give X1 and Y1.
    """
    X = frozenset(X)
    if not is_bipartite_with(D, X):
        raise NotBipartiteAsGiven("some arc has both ends on one side")
    policy = P3Policy.CLOSED
    forward = [i for i, (t, _) in enumerate(D.arcs) if t in X]
    d_plus, d_minus = len(forward), D.m - len(forward)
    if d_plus != d_minus:
        return CheckResult(False, policy,
                           certificate=_checked(D, BipartiteImbalance(X, d_plus, d_minus)))
    L = build_line_graph(D, policy)
    M = bipartite_max_matching(L, forward)
    if M.is_perfect:
        dec = _pairs_to_decomposition(D, M.pairs, policy)
        assert verify_decomposition(D, dec, policy)
        return CheckResult(True, policy, decomposition=dec)
    S = hall_violator(L, forward, M).S
    X1, Y1 = tails(D, S), heads(D, S)
    lhs, rhs = _hall_sides(D, X1, Y1)
    return CheckResult(False, policy,
                       certificate=_checked(D, BipartiteHall(X, X1, Y1, lhs, rhs)))


# -- fractional condition ----------------------------------------------------------

@dataclass(frozen=True)
class FractionalCheck:
    exists: bool
    certificate: FractionalPartition | None = None
    route: str | None = field(default=None, compare=False)

    def to_dict(self) -> dict:
        return {"exists": self.exists,
                "certificate": None if self.certificate is None else self.certificate.to_dict()}


def check_fractional(D: Digraph, policy: P3Policy = P3Policy.STRICT) -> FractionalCheck:
    """Does L(D) have a fractional perfect matching?

    On "no" the isolated vertices of L(D) - S, for the matching witness S,
    give the partition.  When digons are present under the strict policy
    that partition can fail, and no violating partition need exist at all;
    then the certificate is None.
    """
    policy = P3Policy.parse(policy)
    L = build_line_graph(D, policy)
    r = fractional_pm(L)
    if r.exists:
        return FractionalCheck(True)
    p = partition_from_isolated(D, L, r.witness)
    if p is not None:
        slack = partition_slack(D, p)
        if slack < 0:
            return FractionalCheck(False, _checked(D, FractionalPartition(p, slack)),
                                   route="witness")
    if D.n <= EXHAUSTIVE_LIMIT:
        p = first_violating_partition(D)
        if p is not None:
            cert = FractionalPartition(p, partition_slack(D, p))
            return FractionalCheck(False, _checked(D, cert), route="exhaustive")
    return FractionalCheck(False, None, route="none")


# -- undirected baseline -------------------------------------------------------------

@dataclass(frozen=True)
class KotzigResult:
    paths: tuple[tuple[int, int, int], ...]  # (a, centre, b)
    failures: tuple[tuple[int, ...], ...]    # vertex sets of odd-size components


def kotzig_undirected(G: UGraph) -> KotzigResult:
    """Pair the edges of every even-size component into paths of length 2.

    Walk a DFS tree in post-order; at each vertex pair up its unused
    non-parent edges, and if one is left over pair it with the parent edge.
    """
    n = G.vertex_count
    used: set[tuple[int, int]] = set()
    paths = []
    failures = []
    visited = [False] * n
    for comp in components(G):
        comp_set = set(comp)
        m = sum(1 for u, v in G.edges if u in comp_set)
        if m % 2:
            failures.append(tuple(comp))
            continue
        if m == 0:
            continue
        root = comp[0]
        parent = {root: -1}
        post = []
        visited[root] = True
        stack = [(root, iter(G.adj[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if not visited[w]:
                    visited[w] = True
                    parent[w] = v
                    stack.append((w, iter(G.adj[w])))
                    break
            else:
                stack.pop()
                post.append(v)
        for v in post:
            p = parent[v]
            avail = [w for w in G.adj[v]
                     if w != p and (min(v, w), max(v, w)) not in used]
            if len(avail) % 2:
                assert p != -1, "odd leftover at the root of an even component"
                avail.append(p)
            for a, b in zip(avail[::2], avail[1::2]):
                paths.append((a, v, b))
                used.add((min(v, a), max(v, a)))
                used.add((min(v, b), max(v, b)))
    return KotzigResult(tuple(paths), tuple(failures))
