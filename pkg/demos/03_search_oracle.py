"""
Exhaustive search as ground truth
=================================

Counts SPC labelings of small graphs, cross-checks schemes against full
enumeration, and finds witnesses for the helm dumbbell where the written
construction fails.
"""

import time

from spclab import (SearchOptions, count_spc, evaluate, search_spc, spltg_bull_scheme,
                    verify_scheme_against_oracle)
from spclab import families as fam

print("P_2:", count_spc(fam.path(2)), " P_3:", count_spc(fam.path(3)),
      " C_3:", count_spc(fam.cycle(3)))

# pruning changes the work, not the answer
g = fam.splitting_graph(fam.star(8))
for prune in (True, False):
    t = time.perf_counter()
    r = search_spc(g, SearchOptions("count", True, prune=prune))
    print(f"Spltg(K_1,8) prune={prune!s:5}: count={r.count} "
          f"nodes={r.nodes_explored} {time.perf_counter() - t:.3f}s")

print("bull scheme vs oracle:", verify_scheme_against_oracle(spltg_bull_scheme()))

for k in range(2, 7):
    h = fam.helm_dumbbell(k)
    r = search_spc(h)
    print(f"helmdumbbell:{k}  witness {evaluate(h, r.witness).summary()}")
    print("   +1 on:", [h.role(v) for v in range(h.num_vertices) if r.witness[v] == 1])
