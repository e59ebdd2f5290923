"""
Building the graph families
===========================

Constructs each family, prints its size and role names, and checks the
splitting-graph degree law on a few of them.
"""

from spclab import families as fam

# a star and its splitting graph: twins are primed and never touch their original
g = fam.star(4)
s = fam.splitting_graph(g)
print("K_1,4:", g.num_vertices, "vertices,", g.num_edges, "edges")
print("Spltg(K_1,4):", s.num_vertices, "vertices,", s.num_edges, "edges")
print("roles:", [s.role(v) for v in range(s.num_vertices)])

# every original vertex doubles its degree, every twin copies it
for v in range(g.num_vertices):
    print(f"  {s.role(v):>4}: deg {s.degrees()[v]}   {s.role(g.num_vertices + v):>4}: "
          f"deg {s.degrees()[g.num_vertices + v]}")

# the other families
for text in ["bull", "psquare:8", "helm:4", "corona(cycle:4,3)", "helmdumbbell:5"]:
    h = fam.build(fam.parse_spec(text))
    print(f"{text:>20}: |V|={h.num_vertices:3d} |E|={h.num_edges:3d}")
