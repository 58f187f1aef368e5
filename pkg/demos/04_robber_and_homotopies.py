"""The robber family: two double points colliding at t = 0.

The rank-4 family k[x,t]/((x-t)^2 x^2) carries two augmentations (x -> 0
and x -> t) whose socle generators stay isotropic for every t.  Connected
summing a fixed algebra with this family produces the two homotopies whose
endpoints swap which double point carries the augmentation.
"""

from gorlab import QQ, poly_ring, quotient_algebra
from gorlab.families import (
    family_socle_generator,
    homotopy_families,
    robber_family,
    specialize,
)
from gorlab.frobenius import Augmented, OrientedAlgebra

rob = robber_family(QQ)
print("robber family on basis", rob.labels)
print("x^3 * x =", [str(p) for p in rob.c[3][1]], " (i.e. 2t x^3 - t^2 x^2)")

for name in ("const", "mv"):
    s = family_socle_generator(rob, name)
    print(f"socle generator for e^{name}:", [str(p) for p in s])

# fibers: t = 0 is the chain k[x]/x^4; t = 1 splits into two double points
f0 = specialize(rob, 0)
print("\nfiber at 0: orientation", [str(v) for v in f0.orientation])
f1 = specialize(rob, 1)
from gorlab.algebra import multiply

e1 = f1.algebra.coerce_vector([1, 0, -3, 2])  # idempotent 1 - 3x^2 + 2x^3
print("fiber at 1: e1 idempotent:", multiply(f1.algebra, e1, e1) == e1)

# the two homotopies out of a base algebra
x, = poly_ring(QQ, "x")
A = quotient_algebra([x**4])
T = Augmented(OrientedAlgebra(A, [0, 0, 0, 1]), [1, 0, 0, 0])
hf = homotopy_families(T)
print("\nhomotopy family dimension:", hf.h_const.dim, "=", T.oa.dim, "+ 2")
print("shared structure constants:", hf.h_const.c == hf.h_mv.c)

at0_const = specialize(hf.h_const, 0)
at0_mv = specialize(hf.h_mv, 0)
print("fibers at 0 coincide:", at0_const.algebra == at0_mv.algebra)

at1_const = specialize(hf.h_const, 1)
at1_mv = specialize(hf.h_mv, 1)
print("augmentation at 1 (const):", [str(v) for v in at1_const.augmentations["aug"]])
print("augmentation at 1 (mv):   ", [str(v) for v in at1_mv.augmentations["aug"]])
print("(they differ: the distinguished point moved to the split-off double point)")
