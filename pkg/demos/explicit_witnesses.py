"""
Explicit cuts and disjoint path families
=========================================

The upper bound on super-connectivity comes from explicit cuts; the lower
bound from families of internally disjoint paths.  Both are built here and
run through the independent checkers.
"""

from johnson_conn.connectivity import is_super_vertex_cut
from johnson_conn.subset_graph import johnson_graph
from johnson_conn.witnesses import (
    cut_edge_neighborhood,
    cut_jn2,
    entry_layer_paths,
    enumerate_entry_layer_cases,
    neighbour_class_config,
    neighbour_class_paths,
    verify_path_family,
)

# pairs meeting {1,2,3} in exactly one entry: a super cut of J(n, 2) of size 3(n - 3)
g = johnson_graph(7, 2)
print("jn2 cut on J(7,2):", len(cut_jn2(7, graph=g)), is_super_vertex_cut(g, cut_jn2(7, graph=g)).is_super)

# the open neighbourhood of an edge, size (2k-1)(n-k) - k
enc = cut_edge_neighborhood(8, 4)
g = johnson_graph(8, 4)
cert = is_super_vertex_cut(g, enc.cut(g))
print("edge neighbourhood on J(8,4):", len(enc), "super:", cert.is_super,
      "parts:", len(enc.s1), len(enc.s2), len(enc.s3))

# (k-1)(n-k) disjoint paths from w back to {x, x_k^n}, avoiding N(x) minus the entry-n layer
cfg = neighbour_class_config(9, 4)
fam = neighbour_class_paths(cfg)
print("neighbour classes", cfg.class_sizes, "paths", len(fam),
      "check:", verify_path_family(johnson_graph(9, 4), fam).ok)

# 2k - 1 paths inside the entry-r layer for every shape of (u_bar, v_bar)
g = johnson_graph(10, 4)
for cfg in enumerate_entry_layer_cases(10, 4)[:6]:
    fam = entry_layer_paths(cfg)
    print(f"  {cfg.label:24s} {len(fam)} paths  ok={verify_path_family(g, fam).ok}")
