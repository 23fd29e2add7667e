"""First steps: build edge-coloured digraphs and expand their colouring
sums into monomial quasisymmetric functions.

Edges constrain the colours of their endpoints: dashed means different,
solid means strictly increasing, double means weakly increasing. The
expansion collects one t^asc x_kappa term per proper colouring, where
asc counts edges whose colours rise.
"""

from chromexp import (
    atom,
    chromatic_number,
    expand,
    make,
    parse_dsl,
    split_dashed,
)

# A triangle with one edge of each kind: 0 -/-> 1, 1 -> 2, 2 => 0.
triangle = make(3, [(0, 1, "neq"), (1, 2, "lt"), (2, 0, "leq")])
print("triangle:", triangle)
print("expansion:", expand(triangle).pretty())
print("at t=1:   ", expand(triangle).at_t(1).pretty())
print("least number of colours:", chromatic_number(triangle))
print()

# Constraints can be unsatisfiable: a -> b -> c => a wants a < b < c <= a.
impossible = make(3, [(0, 1, "lt"), (1, 2, "lt"), (2, 0, "leq")])
print("impossible cycle expands to:", expand(impossible).pretty())
print("its chromatic number:", chromatic_number(impossible))
print()

# The four building blocks: cycles force equality around the loop,
# solid paths force strict ascent, double paths weak ascent, and the
# complete dashed digraph forces distinctness.
for kind, name in (("C", "double cycle"), ("P", "solid path"),
                   ("Q", "double path"), ("K", "dashed complete")):
    g = atom(kind, 3)
    print(f"{kind}(3) ({name}):", expand(g).at_t(1).pretty())
print()

# A dashed edge splits into its two strict resolutions, and the two
# expansions add up (at t=1) to the original.
k2 = make(2, [(0, 1, "neq")])
low, high = split_dashed(k2, (0, 1, "neq"))
print("K(2):        ", expand(k2).pretty())
print("split parts: ", expand(low).pretty(), "and", expand(high).pretty())
print("sum at t=1:  ", (expand(low).at_t(1) + expand(high).at_t(1)).pretty())
print()

# The same digraphs can be written in the builder notation.
print('parse_dsl("W(C(2),C(1))") expands to:',
      expand(parse_dsl("W(C(2),C(1))")).at_t(1).pretty())
