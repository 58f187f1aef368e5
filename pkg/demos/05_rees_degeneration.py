"""The Rees family of an isotropic oriented algebra.

For phi(1) = 0 the filtration k <= ker(phi) <= A has a one-parameter Rees
deformation: the fiber at t = 1 is the algebra itself, the fiber at t = 0
is the square-zero extension built from the surgered bilinear form.
"""

from gorlab import QQ, poly_ring, quotient_algebra
from gorlab.algebra import base_change
from gorlab.frobenius import (
    OrientedAlgebra,
    form_to_algebra,
    rees_family,
    surgery_inverse,
)

x, = poly_ring(QQ, "x")
A = quotient_algebra([x**5])
oa = OrientedAlgebra(A, [0, 0, 0, 0, 1])  # (x^4)*: note phi(1) = 0

rr = rees_family(oa)
print("Rees family basis:", rr.family.labels)
print("family Gram matrix over k[t]:")
for row in rr.gram.gram:
    print("  ", [str(p) for p in row])

f1 = rr.family.at(1)
moved = base_change(A, rr.adapted_basis, labels=rr.family.labels)
print("\nfiber at 1 equals the input in the adapted basis:", f1 == moved)

B = surgery_inverse(oa)
print("\nsurgered form (dim d-2):", [[str(v) for v in r] for r in B.gram])
fta = form_to_algebra(B)
f0 = rr.family.at(0)
d = A.dim
perm = [[1 if j == 0 else 0 for j in range(d)]]
perm.append([1 if j == d - 1 else 0 for j in range(d)])
for i in range(d - 2):
    perm.append([1 if j == 1 + i else 0 for j in range(d)])
print("fiber at 0 equals form_to_algebra(surgered form):",
      base_change(f0, perm, labels=fta.algebra.labels) == fta.algebra)
