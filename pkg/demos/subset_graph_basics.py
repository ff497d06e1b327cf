"""
Uniform subset graphs
=====================

Build a few uniform subset graphs G(n, k, t), look at their degrees and check
the two standard isomorphisms: complementation J(n, k) -> J(n, n - k) and
deleting every subset that contains a fixed entry.
"""

from johnson_conn.subset_graph import (
    GraphParams,
    build_graph,
    complement_isomorphism,
    delete_entry_subgraph,
    is_isomorphism,
    johnson_graph,
    kneser_graph,
)

# J(7, 3): 35 vertices, regular of degree k(n - k) = 12
g = johnson_graph(7, 3)
print(g, "degrees:", sorted({g.degree(i) for i in range(len(g))}))

# t = 0 gives the Kneser graph; G(5, 2, 0) is the Petersen graph
petersen = kneser_graph(5, 2)
print(petersen, "degree", petersen.degree(0))

# vertices are ranked lexicographically and that rank is used by every file format
print([v.entries() for v in johnson_graph(4, 2).vertices])

# x -> [n] - x maps J(5, 2) onto J(5, 3)
m = complement_isomorphism(johnson_graph(5, 2).params)
print("complement is an isomorphism:", is_isomorphism(johnson_graph(5, 2), johnson_graph(5, 3), m))

# removing the subsets containing entry 5 leaves a copy of J(4, 2)
d = delete_entry_subgraph(johnson_graph(5, 2), 5)
print("J(5,2) minus entry 5:", d.graph)

# the same works for general t
print(delete_entry_subgraph(build_graph(GraphParams(7, 3, 1)), 2).graph)
