"""The chain of subspaces between quasisymmetric and symmetric.

For each level r, the span of the dominant monomials M_(beta,mu) -- with
composition parts at least r and partition parts below r -- interpolates
between the full quasisymmetric space (r=1) and the symmetric functions
(r=infinity). The same construction with set compositions carries a
Hopf structure, verified here by regrouping products and coproducts
into level coordinates.
"""

from chromexp.combinat import (
    INFINITY,
    format_set_composition,
    format_set_partition,
    r_compositions,
    set_composition,
    set_partition,
)
from chromexp.ncqsym import basis_ncr, coproduct_nc, in_ncqsym_r, r_regroup, r_regroup_tensor
from chromexp.qsym import basis_M, basis_r, basis_sym, in_qsym_r

print("level-2 compositions of 4:")
for rc in r_compositions(4, 2):
    f = basis_r("M", rc.beta, rc.mu, 2)
    print(f"  beta={rc.beta!s:8} mu={rc.mu!s:10} M = {f.pretty()}")
print()

print("membership in the chain:")
p = basis_sym("p", (3, 1))
for r in (1, 2, 3, INFINITY):
    print(f"  power sum p_(3,1) in level {r}: {in_qsym_r(p, r)}")
print(f"  M(1,2) in level 2: {in_qsym_r(basis_M((1, 2)), 2)}")
print()

phi = set_composition(((2, 4),))
pi = set_partition(((1,), (3,)))
m = basis_ncr("M", phi, pi, 2)
print("M_((24),1/3) =", m.pretty())
print()

square = r_regroup(m * m, 2)
print(f"its square regroups into {len(square)} level-2 coordinates")

delta = r_regroup_tensor(coproduct_nc(m), 2)
print(f"its coproduct regroups into {len(delta)} tensor coordinates:")
for (left, right), coeff in sorted(delta.items(), key=lambda kv: (kv[0][0].phi, kv[0][0].pi)):
    print(f"  M({format_set_composition(left.phi)},{format_set_partition(left.pi)})"
          f" (x) M({format_set_composition(right.phi)},{format_set_partition(right.pi)})")
print()
print("p_13/24 lives in every level:",
      all(in_ncqsym_r(basis_ncr("M", (), set_partition(((1, 3), (2, 4))), INFINITY), r)
          for r in (1, 2, 3, INFINITY)))
