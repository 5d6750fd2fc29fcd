"""
Line graphs of digraphs
=======================

Two arcs of a digraph are adjacent in its line graph when one ends where
the other starts.  A decomposition into directed 2-paths is then just a
perfect matching of the line graph.
"""

from p3decomp import Digraph, build_line_graph, component_analysis, split_transform
from p3decomp.generators import complete_bipartite_orientation, transitive_tournament

# the transitive tournament on three vertices: 0->1, 0->2, 1->2
tt3 = transitive_tournament(3)
L = build_line_graph(tt3)
print("arcs:", tt3.arcs)
print("line graph edges:", L.edges)          # only 0->1 chains into 1->2

# three arcs, one edge: the middle arc 0->2 sits alone
report = component_analysis(tt3)
print("components:", report.num_components, "bound f(3):", report.f_n)

# orienting every edge of K_{2,2} from one side to the other gives no chains at all
k22 = complete_bipartite_orientation(2, 2)
print("K2,2 components:", component_analysis(k22).num_components,
      "extremal family:", component_analysis(k22).extremal_kind)

# splitting multi-arc sources and sinks keeps the line graph but makes
# connectivity visible in the digraph itself
# here vertex 2 is a sink with two in-arcs and 3 a source with two out-arcs
D = Digraph(5, [(0, 2), (1, 2), (3, 4), (3, 0)])
split = split_transform(D)
print("split digraph:", split.Dprime.arcs)
print("vertex origins:", split.origin)
