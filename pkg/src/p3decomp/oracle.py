"""Brute-force ground truth for small instances.

Nothing here calls the matching engines; each function decides its
question by plain enumeration so it can referee the fast paths.  Budgets
are hard limits: exceeding one raises :class:`BudgetExceeded`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterator

import numpy as np

from .digraph import Digraph, Partition3, all_partition_slacks, partition_from_mask
from .errors import BudgetExceeded
from .linegraph import P3Policy, chains
from .matching import UGraph, components


# -- decompositions ----------------------------------------------------------

def brute_decompose(D: Digraph, policy: P3Policy = P3Policy.STRICT,
                    max_arcs: int = 16) -> list[tuple[int, int, int]] | None:
    """Lexicographically first P3-decomposition by backtracking, or None.

    Always extends with the lowest unused arc, trying its partners in
    increasing arc-id order.
    """
    policy = P3Policy.parse(policy)
    m = D.m
    if m > max_arcs:
        raise BudgetExceeded(f"brute_decompose allows at most {max_arcs} arcs, got {m}")
    if m % 2:
        return None
    partners = [[b for b in range(m) if b != a and
                 (chains(D, a, b, policy) or chains(D, b, a, policy))]
                for a in range(m)]
    used = [False] * m
    out: list[tuple[int, int, int]] = []

    def triple(a, b):
        first, second = (a, b) if chains(D, a, b, policy) else (b, a)
        return (*D.arcs[first], D.arcs[second].head)

    def go(start):
        a = start
        while a < m and used[a]:
            a += 1
        if a == m:
            return True
        used[a] = True
        for b in partners[a]:
            if not used[b]:
                used[b] = True
                out.append(triple(a, b))
                if go(a + 1):
                    return True
                out.pop()
                used[b] = False
        used[a] = False
        return False

    return list(out) if go(0) else None


def count_decompositions(D: Digraph, policy: P3Policy = P3Policy.STRICT,
                         max_arcs: int = 16) -> int:
    """Number of distinct P3-decompositions (as sets of arc pairs)."""
    policy = P3Policy.parse(policy)
    m = D.m
    if m > max_arcs:
        raise BudgetExceeded(f"count_decompositions allows at most {max_arcs} arcs")
    used = [False] * m

    def go():
        a = next((i for i in range(m) if not used[i]), None)
        if a is None:
            return 1
        used[a] = True
        total = 0
        for b in range(m):
            if not used[b] and (chains(D, a, b, policy) or chains(D, b, a, policy)):
                used[b] = True
                total += go()
                used[b] = False
        used[a] = False
        return total

    return go() if m % 2 == 0 else 0


# -- partition inequality ------------------------------------------------------

@dataclass(frozen=True)
class PartitionMinimum:
    min_slack: int
    argmin: Partition3
    mask: int


def brute_partition3(D: Digraph, max_n: int = 12) -> PartitionMinimum:
    """Minimum slack over all 3^n partitions; ties go to the lowest mask."""
    if D.n > max_n:
        raise BudgetExceeded(f"brute_partition3 allows n <= {max_n}, got {D.n}")
    slacks = all_partition_slacks(D)
    k = int(np.argmin(slacks))
    return PartitionMinimum(int(slacks[k]), partition_from_mask(D.n, k), k)


# -- subset conditions -----------------------------------------------------------

@dataclass(frozen=True)
class SubsetViolation:
    mode: str
    excess: int                  # amount by which the condition fails (> 0)
    S: frozenset[int] | None = None
    X1: frozenset[int] | None = None
    Y1: frozenset[int] | None = None


def _subsets(n):
    for mask in range(1 << n):
        yield mask, [v for v in range(n) if mask >> v & 1]


def brute_tutte(G: UGraph, max_vertices: int = 16) -> SubsetViolation | None:
    """Worst S for c_o(G - S) <= |S|, or None if it always holds."""
    n = G.vertex_count
    if n > max_vertices:
        raise BudgetExceeded(f"brute_tutte allows <= {max_vertices} vertices, got {n}")
    best = None
    for _, S in _subsets(n):
        odd = sum(len(c) % 2 for c in components(G, S))
        excess = odd - len(S)
        if excess > 0 and (best is None or excess > best.excess):
            best = SubsetViolation("tutte", excess, S=frozenset(S))
    return best


def brute_fractional(G: UGraph, max_vertices: int = 16) -> SubsetViolation | None:
    """Worst S for i(G - S) <= |S|, or None if it always holds."""
    n = G.vertex_count
    if n > max_vertices:
        raise BudgetExceeded(f"brute_fractional allows <= {max_vertices} vertices, got {n}")
    nbr = [sum(1 << w for w in G.adj[v]) for v in range(n)]
    best = None
    for mask, S in _subsets(n):
        iso = sum(1 for v in range(n) if not mask >> v & 1 and nbr[v] & ~mask == 0)
        excess = iso - len(S)
        if excess > 0 and (best is None or excess > best.excess):
            best = SubsetViolation("fractional", excess, S=frozenset(S))
    return best


def brute_hall(D: Digraph, X, max_vertices: int = 12) -> SubsetViolation | None:
    """Check d+(X) = d-(X) and, for all X1 in X, Y1 in Y,
    a(X1,Y1) + a(Y1,X1) <= d+(Y1) + d-(X1).  Returns the worst failure."""
    X = frozenset(X)
    if D.n > max_vertices:
        raise BudgetExceeded(f"brute_hall allows <= {max_vertices} vertices, got {D.n}")
    Y = [v for v in range(D.n) if v not in X]
    Xs = sorted(X)
    d_plus = sum(1 for t, h in D.arcs if t in X and h not in X)
    d_minus = sum(1 for t, h in D.arcs if h in X and t not in X)
    if d_plus != d_minus:
        return SubsetViolation("imbalance", abs(d_plus - d_minus))
    best = None
    for _, X1 in _subsets(len(Xs)):
        X1 = {Xs[i] for i in X1}
        for _, Y1 in _subsets(len(Y)):
            Y1 = {Y[i] for i in Y1}
            lhs = rhs = 0
            for t, h in D.arcs:
                if (t in X1 and h in Y1) or (t in Y1 and h in X1):
                    lhs += 1
                if t in Y1 and h not in Y1:
                    rhs += 1
                if h in X1 and t not in X1:
                    rhs += 1
            if lhs > rhs and (best is None or lhs - rhs > best.excess):
                best = SubsetViolation("hall", lhs - rhs, X1=frozenset(X1), Y1=frozenset(Y1))
    return best


def brute_subset_checks(target, mode: str, X=None, **budget) -> SubsetViolation | None:
    """Dispatch: ``tutte`` / ``fractional`` take a UGraph, ``hall`` a
    bipartite Digraph with side X."""
    if mode == "tutte":
        return brute_tutte(target, **budget)
    if mode == "fractional":
        return brute_fractional(target, **budget)
    if mode == "hall":
        return brute_hall(target, X, **budget)
    raise ValueError(f"unknown mode {mode!r}")


def brute_max_matching_size(G: UGraph, max_edges: int = 24) -> int:
    """Exhaustive maximum matching size by include/exclude on edges."""
    edges = G.edges
    if len(edges) > max_edges:
        raise BudgetExceeded(f"brute matching allows <= {max_edges} edges")

    def go(i, used):
        if i == len(edges):
            return 0
        best = go(i + 1, used)
        u, v = edges[i]
        if not (used >> u & 1 or used >> v & 1):
            best = max(best, 1 + go(i + 1, used | 1 << u | 1 << v))
        return best

    return go(0, 0)


def brute_exposable(G: UGraph) -> frozenset[int]:
    """Vertices left exposed by some maximum matching, via nu(G - v) = nu(G)."""
    nu = brute_max_matching_size(G)
    out = set()
    for v in range(G.vertex_count):
        H = UGraph(G.vertex_count, [e for e in G.edges if v not in e])
        if brute_max_matching_size(H) == nu:
            out.add(v)
    return frozenset(out)


# -- forbidden induced patterns -----------------------------------------------------

def _k4_minus_e(G: UGraph):
    # K4 - e is an edge uv plus two non-adjacent common neighbours
    for u, v in G.edges:
        common = sorted(set(G.adj[u]) & set(G.adj[v]))
        for a, b in combinations(common, 2):
            if not G.has_edge(a, b):
                return (u, v, a, b)
    return None


def _is_k33_minus_e(G: UGraph, vs) -> bool:
    inside = set(vs)
    edges = [(u, w) for u in vs for w in G.adj[u] if w in inside and u < w]
    if len(edges) != 8:
        return False
    side = {vs[0]: 0}
    stack = [vs[0]]
    while stack:
        u = stack.pop()
        for w in G.adj[u]:
            if w not in inside:
                continue
            if w not in side:
                side[w] = 1 - side[u]
                stack.append(w)
            elif side[w] == side[u]:
                return False
    # 8 edges, connected, bipartite, sides 3 + 3: K3,3 minus one edge
    return len(side) == 6 and sum(side.values()) == 3


def induced_pattern_scan(G: UGraph, pattern: str, max_subsets: int = 2_000_000):
    """Vertices inducing ``K4_minus_e`` or ``K33_minus_e`` in G, or None."""
    if pattern == "K4_minus_e":
        if comb(G.vertex_count, 4) > max_subsets:
            raise BudgetExceeded("K4_minus_e scan over budget")
        return _k4_minus_e(G)
    if pattern == "K33_minus_e":
        if comb(G.vertex_count, 6) > max_subsets:
            raise BudgetExceeded("K33_minus_e scan over budget")
        for vs in combinations(range(G.vertex_count), 6):
            if _is_k33_minus_e(G, vs):
                return vs
        return None
    raise ValueError(f"unknown pattern {pattern!r}")


# -- exhaustive instance families -----------------------------------------------------

def tournaments(n: int) -> Iterator[Digraph]:
    """All 2^(n(n-1)/2) labelled tournaments; bit k of the mask reverses
    the k-th pair (i < j, lexicographic) to j -> i."""
    if n > 6:
        raise BudgetExceeded(f"tournament enumeration allows n <= 6, got {n}")
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        yield Digraph(n, [(j, i) if mask >> k & 1 else (i, j)
                          for k, (i, j) in enumerate(pairs)])


def bipartite_digraphs(a: int, b: int) -> Iterator[Digraph]:
    """All 4^(ab) bipartite digraphs with X = 0..a-1, Y = a..a+b-1.

    Base-4 digit k of the mask is the state of the k-th pair (x, y):
    0 none, 1 x->y, 2 y->x, 3 both.
    """
    if a * b > 6:
        raise BudgetExceeded(f"bipartite enumeration allows a*b <= 6, got {a * b}")
    pairs = [(x, a + y) for x in range(a) for y in range(b)]
    for mask in range(4 ** len(pairs)):
        arcs = []
        for x, y in pairs:
            mask, state = divmod(mask, 4)
            if state & 1:
                arcs.append((x, y))
            if state & 2:
                arcs.append((y, x))
        yield Digraph(a + b, arcs)


def enumerate_instances(kind: str, *params: int) -> Iterator[Digraph]:
    if kind == "tournaments":
        return tournaments(*params)
    if kind == "bipartite_digraphs":
        return bipartite_digraphs(*params)
    raise ValueError(f"unknown instance family {kind!r}")


# -- engine versus oracle ----------------------------------------------------------------

@dataclass
class OracleReport:
    instance: dict
    engine: object
    oracle: object
    agreement: bool
    witness: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"instance": self.instance, "engine": self.engine,
                "oracle": self.oracle, "agreement": self.agreement,
                "witness": self.witness}


def describe(D: Digraph, **extra) -> dict:
    return {"n": D.n, "arcs": [list(a) for a in D.arcs], **extra}


def report_decompose(D: Digraph, policy: P3Policy = P3Policy.STRICT, **extra) -> OracleReport:
    from .decomposition import P3Decomposition, decompose, verify_certificate

    policy = P3Policy.parse(policy)
    outcome = decompose(D, policy)
    engine = isinstance(outcome, P3Decomposition)
    brute = brute_decompose(D, policy)
    witness = {"engine": outcome.to_list() if engine else outcome.to_dict(),
               "oracle": brute}
    ok = engine == (brute is not None) and (engine or verify_certificate(D, outcome))
    return OracleReport(describe(D, policy=policy.value, **extra), engine,
                        brute is not None, ok, witness)


def report_tournament(D: Digraph, **extra) -> OracleReport:
    from .decomposition import check_tournament, verify_certificate

    res = check_tournament(D)
    pm = brute_partition3(D)
    ok = res.decomposable == (pm.min_slack >= 0)
    if not res.decomposable:
        ok = ok and verify_certificate(D, res.certificate)
    return OracleReport(describe(D, **extra), res.decomposable, pm.min_slack >= 0, ok,
                        {"engine": res.to_dict(), "route": res.route,
                         "min_slack": pm.min_slack, "argmin": pm.argmin.as_dict()})


def report_fractional(D: Digraph, policy: P3Policy = P3Policy.STRICT, **extra) -> OracleReport:
    from .decomposition import check_fractional, verify_certificate

    res = check_fractional(D, policy)
    pm = brute_partition3(D)
    ok = res.exists == (pm.min_slack >= 0)
    if not res.exists:
        ok = ok and res.certificate is not None and verify_certificate(D, res.certificate)
    return OracleReport(describe(D, **extra), res.exists, pm.min_slack >= 0, ok,
                        {"engine": res.to_dict(), "min_slack": pm.min_slack})


def report_bipartite(D: Digraph, X, **extra) -> OracleReport:
    from .decomposition import check_bipartite, verify_certificate

    res = check_bipartite(D, X)
    viol = brute_hall(D, X)
    ok = res.decomposable == (viol is None)
    if not res.decomposable:
        ok = ok and verify_certificate(D, res.certificate)
    return OracleReport(describe(D, X=sorted(X), **extra), res.decomposable, viol is None, ok,
                        {"engine": res.to_dict(),
                         "oracle_mode": None if viol is None else viol.mode})
