"""Build the distance-3 graph of the Heawood line graph step by step.

This 21-vertex graph is edge-regular with parameters (21, 8, 3) but not
strongly regular, and it separates the three bounds cleanly: its clique
number is 3, the eigenvalue-based Delsarte expression with least eigenvalue
-sqrt(8) gives 3 (tight), the Hoffman bound on the complement gives 5, and
the clique adjacency bound gives 4.

Run:  python3 demos/demo_delta3.py
"""

from srgbounds import QuadExt, max_clique
from srgbounds.cab import cab, hoffman_clique_bound
from srgbounds.graphs import (
    distance_graph,
    heawood_graph,
    is_edge_regular,
    is_strongly_regular,
    line_graph,
)

heawood = heawood_graph()
print(f"Heawood graph:        n={heawood.n}, m={heawood.edge_count()}")

lg = line_graph(heawood)
print(f"line graph:           n={lg.n}, m={lg.edge_count()}, "
      f"regular of degree {lg.degree(0)}")

d3 = distance_graph(lg, 3)
er = is_edge_regular(d3)
print(f"distance-3 graph:     n={d3.n}, m={d3.edge_count()}")
print(f"edge-regular:         ({er.v},{er.k},{er.lam})")
print(f"strongly regular:     {is_strongly_regular(d3) is not None}")

omega = max_clique(d3)
print(f"clique number:        {omega.size}  witness {list(omega.witness)}")

c, wit = cab(er)
print(f"clique adjacency:     {c}  witness C({wit.b},{wit.c_plus_1}) = {wit.value}")

s = QuadExt.make(0, -1, 8)
delsarte = (1 - QuadExt.make(er.k) / s).floor()
print(f"delsarte (s=-sqrt8):  {delsarte}")

hoffman = hoffman_clique_bound(er.v, er.v - er.k - 1, QuadExt.make(-1, -1, 8))
print(f"hoffman (complement): {hoffman}")
