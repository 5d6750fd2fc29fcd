"""
Which tournaments split into 2-paths?
=====================================

An even-size tournament decomposes exactly when no partition X, Y, Z of
its vertices has negative slack.  When one does, the partition is the
certificate.
"""

from p3decomp import check_tournament, partition_slack, verify_certificate
from p3decomp.generators import random_tournament, transitive_tournament
from p3decomp.oracle import brute_partition3, tournaments

# TT4 has six arcs, but 0->3 runs from the source to the sink and cannot chain
res = check_tournament(transitive_tournament(4))
print("TT4 decomposable:", res.decomposable)
print("  certificate:", res.certificate.to_dict(), "via", res.route)

# a random one
T = random_tournament(8, seed=7)          # 28 arcs
res = check_tournament(T)
print("random T8 decomposable:", res.decomposable)
if res.decomposable:
    print("  paths:", res.decomposition.triples)

# count the non-decomposable labelled tournaments on 5 vertices, and how the
# certificate was found for each
routes = {}
for T in tournaments(5):
    res = check_tournament(T)
    if not res.decomposable:
        assert verify_certificate(T, res.certificate)
        routes[res.route] = routes.get(res.route, 0) + 1
print("n=5 certificate routes:", routes)

# the exhaustive minimum for comparison, on one of them
bad = next(T for T in tournaments(5) if not check_tournament(T).decomposable)
low = brute_partition3(bad)
print("minimum slack", low.min_slack, "at", low.argmin.as_dict())
print("recomputed:", partition_slack(bad, low.argmin))
