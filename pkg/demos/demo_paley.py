"""Paley graphs: construction, regularity check, clique search, graph6 IO.

Run:  python3 demos/demo_paley.py
"""

from srgbounds import SrgParams, full_report, max_clique
from srgbounds.graphio import parse_graph6, write_graph6
from srgbounds.graphs import is_strongly_regular, paley

for p in (5, 13, 17, 29, 37, 41):
    g = paley(p)
    srg = is_strongly_regular(g)
    omega = max_clique(g).size
    rep = full_report(SrgParams(srg.v, srg.k, srg.lam, srg.mu))
    marker = "  <- bound attained" if omega == rep.cab else ""
    print(f"paley({p:>2}): ({srg.v},{srg.k},{srg.lam},{srg.mu})  "
          f"omega = {omega}  cab = {rep.cab}  delsarte = {rep.delsarte}{marker}")

# round-trip the smallest one through graph6
g5 = paley(5)
encoded = write_graph6(g5)
assert parse_graph6(encoded) == g5
print(f"\npaley(5) in graph6: {encoded}")
