"""Structure tensors and degeneration to the big Coppersmith-Winograd tensor.

Every 1-generic minimal-border-rank tensor is a structure tensor of a
Gorenstein algebra, and every such algebra degenerates onto the G-fat
point A_q, whose structure tensor is CW_q.  The degeneration is an explicit
one-parameter family here, checked exactly.
"""

from gorlab import QQ, poly_ring, quotient_algebra
from gorlab.algebra import base_change
from gorlab.families import gm_rescale_check
from gorlab.frobenius import Augmented, OrientedAlgebra
from gorlab.tensors import (
    aq_algebra,
    cw_tensor,
    degeneration_to_cw,
    matrix_algebra_tensor,
    one_generic,
    reduced_degeneration,
    strassen_commuting,
    structure_tensor,
)

# CW_q from its closed-form support equals the structure tensor of A_q
for q in (1, 2, 3):
    assert cw_tensor(QQ, q) == structure_tensor(aq_algebra(QQ, q))
print("CW_q = structure tensor of A_q for q = 1, 2, 3")

T = cw_tensor(QQ, 2)
rep = one_generic(T)
print("CW_2 is 1-generic; witness slice direction:",
      [str(v) for v in rep.witness])
print("normalized slices commute:", strassen_commuting(T, rep.witness))

# a non-example: the 2x2 matrix algebra is not commutative
M = matrix_algebra_tensor(QQ, 2)
print("matrix multiplication tensor commutes:",
      strassen_commuting(M, [1, 0, 0, 1]))

# the explicit degeneration family for C = QQ[x]/x^4 (q = 2)
x, = poly_ring(QQ, "x")
C = quotient_algebra([x**4])
t = Augmented(OrientedAlgebra(C, [0, 0, 0, 1]), [1, 0, 0, 0])
drep = degeneration_to_cw(t)
print("\ndegeneration family basis:", drep.family.labels)
print("V-form invariants:", drep.invariants)
f1 = drep.family.at(1)
print("fiber at 1 is C in the adapted basis:",
      f1.c == base_change(C, drep.adapted_basis).c)
print("rescaling symmetry (c = 2):", gm_rescale_check(drep.family, 2))

# the reduced case: points on general lines collapsing to the origin
rrep = reduced_degeneration(2, seed=0)
print("\nreduced degeneration (q = 2): Hilbert function", rrep.hilbert)
print("limit algebra dimension:", rrep.limit.dim,
      " Gorenstein:", rrep.gorenstein.status)
