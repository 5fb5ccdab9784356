"""
Transversals, independent sets and cliques under complementation
================================================================

The transversal number is the only quantity solved directly; independence
and clique numbers follow from it by taking complements.  This script
computes all of them for a few small hypergraphs and checks the identities
linking them.
"""

from taucrit import Hypergraph, complement, gallai_check
from taucrit.solvers import enumerate_min_transversals, transversal_number
from taucrit.hypercore import members

# A 5-cycle: every vertex lies in exactly two edges.
c5 = Hypergraph.from_edges(2, 5, [(i, (i + 1) % 5) for i in range(5)])
tau = transversal_number(c5)
print("5-cycle tau =", tau.value, "witness", members(tau.witness))

# All minimum transversals; their complements are the maximum independent sets.
for t in enumerate_min_transversals(c5):
    print("  transversal", members(t), "independent", members(c5.vertex_mask & ~t))

# The three complementation identities, checked on a 3-uniform example.
h = Hypergraph.from_edges(3, 7, [(0, 1, 2), (2, 3, 4), (4, 5, 6), (0, 3, 6), (1, 4, 5)])
for key, value in gallai_check(h).lines():
    print(f"{key:>32}: {value}")

# Below size r every set is vacuously a clique, so an edgeless 3-uniform
# hypergraph still has clique number 2.
print("omega(edgeless 3-uniform on 4) =", gallai_check(Hypergraph(3, 4)).omega)
print("complement of K_4^(3) has", complement(Hypergraph.complete(3, 4)).m, "edges")
