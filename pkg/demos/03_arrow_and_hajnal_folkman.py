"""
Clique families, negative arrows and the Hajnal-Folkman lemma
=============================================================

A family of vertex sets generates the hypergraph whose edges are the
r-subsets of its members.  A family with no t-element hitting set whose
generated hypergraph has no u-clique witnesses (n, k, t)^r -/-> u.
"""
import itertools
import random

from taucrit import CliqueFamily, Hypergraph, generate, verify_negative_arrow
from taucrit.arrow import hajnal_folkman_check, problem2_check

# The edges of a 4-cycle, read as a family of 2-sets.
family = CliqueFamily.from_sets(2, 2, [(0, 1), (1, 2), (2, 3), (0, 3)])
for key, value in verify_negative_arrow(family, 4, 2, 1, 3).lines():
    print(f"{key}: {value}")

fam3 = CliqueFamily.from_sets(3, 3, [(0, 1, 2, 3), (3, 4, 5)])
print("generated edges:", generate(fam3).edge_tuples())

# In a graph on n vertices with clique number k, the maximum cliques share
# at least 2k - n vertices.  Sample a few thousand random graphs.
rng = random.Random(7)
worst = 0
for _ in range(3000):
    n = rng.randint(1, 9)
    g = Hypergraph.from_edges(2, n, [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.6])
    rep = hajnal_folkman_check(g)
    assert rep.holds
    worst = min(worst, rep.size - rep.bound)
print("smallest slack over 3000 graphs:", worst)

# The same inequality with the 3-uniform right-hand side.
print(problem2_check(Hypergraph.complete(3, 6)).lines())
