"""Product and coproduct, on both sides of the correspondence.

Disjoint union of digraphs multiplies expansions; subsets closed under
outgoing solid and double edges give the coproduct. Both identities
hold exactly, and the seeded verification suites check them in bulk.
"""

from chromexp import combine, coproduct, coproduct_digraph, expand, make
from chromexp.verify import verify_hopf

g1 = make(2, [(0, 1, "neq")])
g2 = make(1)

print("X(g1)      =", expand(g1).pretty())
print("X(g2)      =", expand(g2).pretty())
print("X(g1)X(g2) =", (expand(g1) * expand(g2)).pretty())
print("X(g1+g2)   =", expand(combine("disjoint", g1, g2)).pretty())
print()

# The running four-vertex example: v1 => v2, v2 -/-> v4, v1 -> v3.
g = make(4, [(0, 1, "leq"), (1, 3, "neq"), (0, 2, "lt")])
digraph_side = coproduct_digraph(g)
algebra_side = coproduct(expand(g).at_t(1))
print("coproduct terms:", len(digraph_side.terms))
print("digraph side == deconcatenation:", digraph_side == algebra_side)
print()

# A short randomized pass over the full identity list.
result = verify_hopf(trials=8, max_n=4, seed=7)
print(f"hopf suite: ok={result.ok} after {result.checks} checks")
