"""
From tau-critical hypergraphs to witnesses and back
===================================================

A tau-critical hypergraph loses one unit of transversal number whenever any
edge is removed.  Its complement is a witness: the maximum cliques share no
vertex.  Going the other way, the complement of a witness always contains a
spanning tau-critical partial hypergraph.
"""

from taucrit import (Hypergraph, critical_to_witness, is_tau_critical, is_witness,
                     round_trip_check, witness_to_critical)
from taucrit.criticality import check_observation2
from taucrit.hypercore import format_set, serialize

k4 = Hypergraph.complete(2, 4)
rep = is_tau_critical(k4)
print("K4 tau-critical:", rep.is_tau_critical, "tau =", rep.tau, "tau(H-e):", sorted(set(rep.per_edge.values())))

# Every vertex sits in one minimum transversal and is missed by another.
for v, st in check_observation2(k4).per_vertex.items():
    print(f"  vertex {v}: containing {format_set(st.containing)} avoiding {format_set(st.avoiding)}")

# Complement side: a witness with k = n - tau.
trace = critical_to_witness(k4)
print(trace.to_text())
w = is_witness(trace.output)
print("maximum cliques:", [format_set(c) for c in w.cliques])

# A path is not tau-critical; extraction inside the complement of a witness
# recovers a spanning critical hypergraph.
c4 = Hypergraph.from_edges(2, 4, [(0, 1), (1, 2), (2, 3), (0, 3)])
back = witness_to_critical(c4)
print(serialize(back.output))

rt = round_trip_check(Hypergraph.from_edges(2, 5, [(i, (i + 1) % 5) for i in range(5)]))
print("5-cycle round trip keeps (n, t):", rt.ok, "same class:", rt.same_class)
