"""
Checking the engines against brute force
========================================

Every fast path has a slow, obviously correct counterpart.  Here they are
run side by side on small exhaustive families.
"""

import time

from p3decomp import P3Policy
from p3decomp.oracle import (bipartite_digraphs, report_bipartite, report_decompose,
                             report_tournament, tournaments)

start = time.perf_counter()
reports = [report_decompose(T) for T in tournaments(5)]
print(f"decompose vs backtracking on {len(reports)} tournaments:",
      all(r.agreement for r in reports))

reports = [report_tournament(T) for T in tournaments(4)]
print(f"partition certificates on {len(reports)} tournaments:",
      all(r.agreement for r in reports))

reports = [report_bipartite(D, {0, 1}) for D in bipartite_digraphs(2, 2)]
print(f"Hall condition on {len(reports)} bipartite digraphs:",
      all(r.agreement for r in reports))

reports = [report_decompose(D, P3Policy.CLOSED) for D in bipartite_digraphs(2, 2)]
print("closed-policy decompositions agree:", all(r.agreement for r in reports))
print(f"{time.perf_counter() - start:.2f}s")
