"""Acceptance gate: ten oracle-backed criteria, one PASS/FAIL line each.

Run under pytest (lines are printed with capture disabled) or directly
with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import collections
import functools
import sys
import time
from dataclasses import dataclass, field

import pytest

from p3decomp.decomposition import (P3Decomposition, check_bipartite, check_fractional,
                                    check_tournament, decompose, verify_certificate)
from p3decomp.digraph import Digraph, weakly_connected
from p3decomp.errors import CertificateSearchExhausted
from p3decomp.generators import (complete_bipartite_orientation, random_eulerian,
                                 random_strict_digraph, transitive_tournament)
from p3decomp.euler import line_hamilton_cycle, verify_hamilton_cycle
from p3decomp.linegraph import (P3Policy, build_line_graph, component_analysis, f_bound,
                                line_graph_connected, split_transform)
from p3decomp.matching import (UGraph, components, fractional_pm, gallai_edmonds, max_matching,
                               odd_component_count, tutte_witness)
from p3decomp.oracle import (brute_decompose, brute_hall, brute_max_matching_size,
                             brute_partition3, brute_tutte, induced_pattern_scan,
                             tournaments, bipartite_digraphs)
from p3decomp.rng import SplitMix64

STRICT, CLOSED = P3Policy.STRICT, P3Policy.CLOSED
BIP_A, BIP_B = 2, 3                      # |X| * |Y| = 6, 4^6 = 4096 instances
BIP_X = frozenset(range(BIP_A))


@dataclass
class Outcome:
    ok: bool
    detail: str
    seconds: float = 0.0
    limit: float | None = None

    @property
    def passed(self) -> bool:
        return self.ok and (self.limit is None or self.seconds < self.limit)

    def line(self, number: int) -> str:
        timing = f"{self.seconds:.1f}s" + (f" (limit {self.limit:.0f}s)" if self.limit else "")
        return f"criterion {number:2d}: {'PASS' if self.passed else 'FAIL'}  {self.detail}  [{timing}]"


@dataclass
class CertificateLog:
    """Every "no" answer met in criteria 1-4, with its verification."""
    checked: int = 0
    failed: list = field(default_factory=list)
    exhausted: int = 0

    def record(self, D, cert, where):
        self.checked += 1
        if cert is None or not verify_certificate(D, cert):
            self.failed.append((where, D.arcs))


CERTS = CertificateLog()


def timed(fn):
    @functools.cache
    def wrapper() -> Outcome:
        start = time.perf_counter()
        out = fn()
        out.seconds = time.perf_counter() - start
        return out
    return wrapper


# -- shared corpora -----------------------------------------------------------------

@functools.cache
def random_asymmetric_corpus(count=600, max_n=6, seed0=10_000):
    """Seeded strict asymmetric digraphs with 2 <= n <= max_n."""
    out = []
    for k in range(count):
        n = 2 + k % (max_n - 1)
        p = (0.25, 0.4, 0.55, 0.7, 0.85)[k // (max_n - 1) % 5]
        out.append(random_strict_digraph(n, p, seed0 + k))
    return tuple(out)


@functools.cache
def no_isolated_corpus(count=600, max_n=8, seed0=50_000):
    """Seeded strict asymmetric digraphs, 2 <= n <= max_n, no isolated vertex.

    Draws that contain an isolated vertex are discarded and the next seed
    is tried, so the corpus is fixed by ``seed0``.
    """
    out, seed = [], seed0
    while len(out) < count:
        k = len(out)
        n = 2 + k % (max_n - 1)
        p = (0.2, 0.35, 0.5, 0.65)[k // (max_n - 1) % 4]
        D = random_strict_digraph(n, p, seed)
        seed += 1
        if not D.isolated_vertices():
            out.append(D)
    return tuple(out)


# -- criteria --------------------------------------------------------------------------

@timed
def criterion_1() -> Outcome:
    bad, total, yes = 0, 0, 0
    cases = [(T, STRICT, "tournament n=5") for T in tournaments(5)]
    cases += [(D, pol, f"bipartite {BIP_A}x{BIP_B} {pol.value}")
              for D in bipartite_digraphs(BIP_A, BIP_B) for pol in (STRICT, CLOSED)]
    for D, pol, where in cases:
        total += 1
        out = decompose(D, pol)
        brute = brute_decompose(D, pol)
        engine = isinstance(out, P3Decomposition)
        yes += engine
        if engine != (brute is not None):
            bad += 1
        elif not engine:
            CERTS.record(D, out, f"criterion 1 {where}")
    return Outcome(bad == 0, f"decompose vs brute_decompose: {total} instances, "
                             f"{yes} decomposable, {bad} disagreements", limit=60)


@timed
def criterion_2() -> Outcome:
    bad, total = 0, 0
    routes = collections.Counter()
    for n in (4, 5):
        for T in tournaments(n):
            total += 1
            try:
                res = check_tournament(T)
            except CertificateSearchExhausted:
                CERTS.exhausted += 1
                bad += 1
                continue
            holds = brute_partition3(T).min_slack >= 0
            brute_yes = brute_decompose(T) is not None
            if not res.decomposable == holds == brute_yes:
                bad += 1
            if not res.decomposable:
                routes[res.route] += 1
                CERTS.record(T, res.certificate, f"criterion 2 n={n}")
    no = sum(routes.values())
    tutte_rate = routes["tutte_witness"] / no if no else 0.0
    return Outcome(bad == 0, f"tournaments n=4,5: {total} instances, {bad} mismatches; "
                             f"certificate routes {dict(sorted(routes.items()))}, "
                             f"tutte-route rate {tutte_rate:.2f}", limit=120)


@timed
def criterion_3() -> Outcome:
    bad, no = 0, 0
    corpus = random_asymmetric_corpus()
    for D in corpus:
        exists = fractional_pm(build_line_graph(D)).exists
        holds = brute_partition3(D).min_slack >= 0
        res = check_fractional(D)
        if not exists == holds == res.exists:
            bad += 1
        if not res.exists:
            no += 1
            CERTS.record(D, res.certificate, "criterion 3")
    return Outcome(bad == 0, f"fractional PM vs partition minimum: {len(corpus)} digraphs "
                             f"({no} without), {bad} mismatches")


@timed
def criterion_4() -> Outcome:
    bad, total = 0, 0
    for D in bipartite_digraphs(BIP_A, BIP_B):
        total += 1
        res = check_bipartite(D, BIP_X)
        brute_ok = brute_hall(D, BIP_X) is None
        if res.decomposable != brute_ok:
            bad += 1
        if brute_ok != (brute_decompose(D, CLOSED) is not None):
            bad += 1
        if not res.decomposable:
            CERTS.record(D, res.certificate, "criterion 4")
    return Outcome(bad == 0, f"bipartite {BIP_A}x{BIP_B} closed policy: {total} instances, "
                             f"{bad} mismatches")


@timed
def criterion_5() -> Outcome:
    bad, connected = 0, 0
    corpus = no_isolated_corpus()
    for D in corpus:
        L = build_line_graph(D)
        by_bfs = len(components(L)) <= 1
        by_split = weakly_connected(split_transform(D).Dprime)
        connected += by_bfs
        if not by_bfs == by_split or line_graph_connected(D) != (by_bfs, True):
            bad += 1
    return Outcome(bad == 0, f"L(D) connectivity vs weak connectivity of D': {len(corpus)} "
                             f"digraphs ({connected} connected), {bad} mismatches")


@timed
def criterion_6() -> Outcome:
    problems = []
    corpus = random_asymmetric_corpus() + no_isolated_corpus()
    over = sum(not component_analysis(D).bound_holds for D in corpus)
    if over:
        problems.append(f"{over} bound violations")
    tt3 = component_analysis(transitive_tournament(3))
    if not (tt3.num_components == f_bound(3) == 2 and tt3.extremal_kind == "TT3"):
        problems.append(f"TT3 gives c={tt3.num_components}")
    family = [T for n in range(1, 6) for T in tournaments(n)]
    family += [complete_bipartite_orientation(a, b) for a in range(1, 4) for b in range(1, 4)]
    extremal = 0
    for D in family:
        rep = component_analysis(D)
        extremal += rep.is_extremal
        if rep.is_extremal != (rep.extremal_kind is not None) or not rep.bound_holds:
            problems.append(f"extremal mismatch on {D.arcs}")
    return Outcome(not problems, f"c(L(D)) <= f(n) on {len(corpus)} digraphs; TT3 c=2=f(3); "
                                 f"{extremal} extremal among {len(family)} family members"
                                 + ("; " + "; ".join(problems[:3]) if problems else ""))


@timed
def criterion_7() -> Outcome:
    for crit in (criterion_1, criterion_2, criterion_3, criterion_4):
        crit()
    n12 = 0
    for seed in range(3):
        try:
            check_tournament(_even_nondecomposable_tournament(12, seed))
            n12 += 1
        except CertificateSearchExhausted:
            CERTS.exhausted += 1
    ok = not CERTS.failed and CERTS.exhausted == 0 and CERTS.checked > 0
    return Outcome(ok, f"{CERTS.checked} certificates from criteria 1-4, "
                       f"{len(CERTS.failed)} unverified, {CERTS.exhausted} search exhaustions "
                       f"(incl. {n12} n=12 tournaments)")


def _even_nondecomposable_tournament(n, seed):
    # a near-transitive tournament: reverse a few arcs of TT_n until the
    # size is even and a decomposition is impossible
    rng = SplitMix64(seed)
    T = transitive_tournament(n)
    for _ in range(100):
        arcs = [(h, t) if rng.random() < 0.1 else (t, h) for t, h in T.arcs]
        D = Digraph(n, arcs)
        if D.m % 2 == 0 and not check_tournament(D, exhaustive=False).decomposable:
            return D
    return T


@timed
def criterion_8() -> Outcome:
    bad, total = 0, 0
    cases = [(random_eulerian(8, 3 + k % 22, 70_000 + k), STRICT) for k in range(220)]
    cases += [(random_eulerian(6, 3 + k % 22, 80_000 + k, asymmetric=False), CLOSED)
              for k in range(44)]
    for D, pol in cases:
        total += 1
        try:
            cycle = line_hamilton_cycle(D, pol)
            verify_hamilton_cycle(build_line_graph(D, pol), cycle)
        except Exception:
            bad += 1
    return Outcome(bad == 0, f"Euler tour -> Hamilton cycle of L(D): {total} eulerian digraphs "
                             f"(3 <= m <= 24), {bad} failures")


@timed
def criterion_9() -> Outcome:
    k4 = 0
    corpus = random_asymmetric_corpus() + no_isolated_corpus()
    for D in corpus:
        k4 += induced_pattern_scan(build_line_graph(D), "K4_minus_e") is not None
    k33, scanned = 0, 0
    for D in bipartite_digraphs(BIP_A, BIP_B):
        if D.is_asymmetric:
            scanned += 1
            k33 += induced_pattern_scan(build_line_graph(D), "K33_minus_e") is not None
    return Outcome(k4 == 0 and k33 == 0,
                   f"induced K4-e in {k4} of {len(corpus)} line graphs; "
                   f"induced K33-e in {k33} of {scanned} asymmetric bipartite line graphs")


@functools.cache
def ugraph_corpus(count=200, seed=424242):
    rng = SplitMix64(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, 10)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        rng.shuffle(pairs)
        out.append(UGraph(n, pairs[:rng.randint(0, min(12, len(pairs)))]))
    return tuple(out)


@timed
def criterion_10() -> Outcome:
    bad, no_pm = 0, 0
    for G in ugraph_corpus():
        M = max_matching(G)
        if M.size != brute_max_matching_size(G):
            bad += 1
            continue
        deficiency = G.vertex_count - 2 * M.size
        if deficiency == 0:
            continue
        no_pm += 1
        worst = brute_tutte(G)
        ge = gallai_edmonds(G)
        W = tutte_witness(G)
        if not (worst is not None and worst.excess == deficiency == ge.deficiency
                == odd_component_count(G, ge.A_set) - len(ge.A_set)
                == W.odd_component_count - len(W.S)):
            bad += 1
    return Outcome(bad == 0, f"max_matching vs exhaustive on {len(ugraph_corpus())} graphs; "
                             f"Berge-Tutte identity on {no_pm} graphs without a perfect "
                             f"matching; {bad} failures")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("number", range(1, 11))
def test_criterion(number, capsys):
    out = CRITERIA[number - 1]()
    with capsys.disabled():
        print("\n" + out.line(number))
    assert out.passed, out.line(number)


if __name__ == "__main__":
    results = []
    for i, crit in enumerate(CRITERIA, start=1):
        out = crit()
        results.append(out.passed)
        print(out.line(i), flush=True)
    sys.exit(0 if all(results) else 1)
