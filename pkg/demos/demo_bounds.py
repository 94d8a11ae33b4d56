"""Walk through every clique bound for a handful of parameter tuples.

Run:  python3 demos/demo_bounds.py
"""

from srgbounds import SrgParams, full_report

TUPLES = [
    (17, 8, 3, 4),     # Paley(17): the conference improvement applies
    (144, 39, 6, 12),  # integer eigenvalues: the ratio improvement applies
    (10, 3, 0, 1),     # Petersen: no improvement, cab equals delsarte
    (378, 52, 1, 8),   # the bound gap is 2 here
]

for tup in TUPLES:
    rep = full_report(SrgParams(*tup))
    p = rep.params
    print(f"({p.v},{p.k},{p.lam},{p.mu})  type {rep.type_tag.value}")
    print(f"  trivial bound        lam+2        = {rep.trivial}")
    print(f"  delsarte bound       [1 - k/s]    = {rep.delsarte}")
    if rep.hoffman_complement is not None:
        print(f"  hoffman (complement) [v/(1-kb/sb)] = {rep.hoffman_complement}")
    wit = rep.cab_witness
    print(f"  clique adjacency     cab          = {rep.cab}"
          f"   witness C({wit.b},{wit.c_plus_1}) = {wit.value} < 0")
    if rep.improved is not None:
        print(f"  improvement predicate holds: improved bound {rep.improved}")
    print()
