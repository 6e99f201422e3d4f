"""Braid graphs and their exact densities.

A braid B(ell, r, t) is t ordered ell-cliques with consecutive cliques
joined by an r-bridge.  Two density regimes matter:

  * ell >= r(r+1): a single ell-clique is the densest piece (density ell/2);
  * ell <  r(r+1): the whole braid is strictly densest, its density
    increases with t, and the limit is the quantity steering the thresholds.

This script builds braids, checks both regimes by brute force, and shows the
min-cut maximizer agreeing with the scan.
"""

from fractions import Fraction

from hampower.braids import braid, bridge, s_braids
from hampower.density import (
    braid_density,
    is_strictly_balanced,
    max_density_brute,
    max_density_opt,
    one_density,
)
from hampower.graphs import path_power, to_edge_list
from hampower.thresholds import braid_density_limit

print("=== the 3-bridge ===")
print(to_edge_list(bridge(3)), end="")
print("degrees:", [bridge(3).degree(v) for v in range(6)])

print()
print("=== B(5, 3, 4): 4 cliques K_5 chained by 3-bridges ===")
b = braid(5, 3, 4)
print(f"{b.n} vertices, {b.num_edges} edges, density {one_density(b)}")
print("two disjoint copies:", s_braids(5, 3, 4, 2).n, "vertices,",
      s_braids(5, 3, 4, 2).num_edges, "edges")

print()
print("=== saturated bridges collapse to path powers ===")
print("B(3, 3, 2) equals the 3rd power of a 6-path:", braid(3, 3, 2) == path_power(6, 3))

print()
print("=== regime ell < r(r+1): the braid itself is the densest subgraph ===")
for ell, r, t in [(4, 3, 3), (5, 3, 3), (3, 2, 4)]:
    g = braid(ell, r, t)
    rep = max_density_brute(g)
    balanced, _ = is_strictly_balanced(g)
    assert rep.value == braid_density(ell, r, t)
    print(
        f"B({ell},{r},{t}): max density {rep.value} attained by "
        f"{'the whole braid' if len(rep.witness) == g.n else 'a proper subgraph'}; "
        f"strictly balanced: {balanced}"
    )

print()
print("=== regime ell >= r(r+1): an ell-clique wins ===")
for ell, r, t in [(6, 2, 3), (7, 2, 2), (2, 1, 4)]:
    rep = max_density_brute(braid(ell, r, t))
    assert rep.value == Fraction(ell, 2)
    print(f"B({ell},{r},{t}): max density {rep.value} with witness size {len(rep.witness)}")

print()
print("=== density growth toward the limit (ell=4, r=3) ===")
limit = braid_density_limit(7, 4)
for t in (1, 2, 5, 20, 100, 1000):
    d = braid_density(4, 3, t)
    print(f"  t={t:>5}: d = {str(d):>16}  gap to limit {limit}: {float(limit - d):.2e}")

print()
print("=== the scan and the min-cut maximizer agree ===")
for ell, r, t in [(4, 3, 3), (6, 2, 3), (5, 4, 2)]:
    g = braid(ell, r, t)
    assert max_density_opt(g).value == max_density_brute(g).value
    print(f"B({ell},{r},{t}): both maximizers report {max_density_opt(g).value}")
