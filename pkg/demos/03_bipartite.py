"""
Bipartite digraphs and Hall's condition
=======================================

With closed walks u->v->u allowed, the line graph of a bipartite digraph is
itself bipartite, so a decomposition is a matching problem with a Hall-type
obstruction.
"""

from p3decomp import Digraph, check_bipartite
from p3decomp.generators import random_bipartite_digraph

# unequal flow across the cut: two arcs out of X, none back
D = Digraph(3, [(0, 2), (1, 2)])
print(check_bipartite(D, {0, 1}).certificate.to_dict())

# balanced cut, but the arc 0->2 has no partner to chain with
D = Digraph(4, [(0, 2), (3, 1)])
print(check_bipartite(D, {0, 1}).certificate.to_dict())

# a digon pair 0->2->0 is a valid closed 2-path
D = Digraph(3, [(0, 2), (2, 0), (1, 2), (2, 1)])
res = check_bipartite(D, {0, 1})
print("digons:", res.decomposable, res.decomposition.triples)

# random instances: how often does a decomposition exist?
yes = 0
for seed in range(200):
    D = random_bipartite_digraph(3, 3, 0.5, seed)
    yes += check_bipartite(D, range(3)).decomposable
print(f"{yes}/200 random 3x3 bipartite digraphs decompose")
