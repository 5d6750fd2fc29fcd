"""
Euler tours become Hamilton cycles
==================================

Walking an Euler tour of a digraph visits each arc once, and consecutive
arcs chain, so the tour is a Hamilton cycle of the line graph.
"""

from p3decomp import build_line_graph, euler_tour, line_hamilton_cycle
from p3decomp.generators import random_eulerian

D = random_eulerian(6, 12, seed=3)
print("arcs:", D.arcs)

tour = euler_tour(D)
print("euler tour (arc ids):", tour)
print("as vertices:", [D.arcs[a].tail for a in tour])

# the same sequence, checked as a Hamilton cycle of L(D)
cycle = line_hamilton_cycle(D)
L = build_line_graph(D)
print("hamilton cycle of L(D):", cycle)
print("every step is an edge:",
      all(L.has_edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))))
