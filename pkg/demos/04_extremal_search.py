"""
How large can a tau-critical hypergraph be?
===========================================

Bound formulas first, then an isomorph-free search that grows hypergraphs
edge by edge and keeps only those that can still extend to a tau-critical
one.  Every maximum found is written out as a checkable certificate.
"""

from taucrit import bounds, search_v_max, verify_certificate
from taucrit.extremal import lower_bound_gap_report

for t in range(1, 6):
    print(bounds(3, t).columns())

# Graphs: the largest tau-critical graphs are perfect matchings.
for t in range(1, 5):
    rec = search_v_max(2, t)
    print(f"v_max(2,{t}) = {rec.best_n}", rec.certificate.hypergraph.edge_tuples())

# 3-uniform, t = 2: exhaustive, with node counts.
rec = search_v_max(3, 2)
for key, value in rec.lines():
    print(f"{key}: {value}")
print(rec.certificate.to_text())
print("certificate accepted:", verify_certificate(rec.certificate).accepted)

# A budgeted dive at t = 3.
dive = search_v_max(3, 3, mode="budgeted", budget=50_000)
print("budgeted (3,3): best n =", dive.best_n, "nodes =", dive.nodes, "space exhausted:", dive.space_exhausted)
for key, value in lower_bound_gap_report(3, 3, records=[dive]).lines():
    print(f"{key}: {value}")
