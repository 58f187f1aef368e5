"""Socle generators, isotropic augmentations, and connected sums.

An augmentation e: A -> k is isotropic when its pairing-adjoint vector
e*(1) is isotropic; that vector is the local socle generator.  Two
isotropically augmented algebras glue along their augmentations into a
connected sum of dimension d1 + d2 - 2.
"""

from gorlab import QQ, poly_ring, quotient_algebra
from gorlab.frobenius import (
    Augmented,
    OrientedAlgebra,
    connected_sum,
    decompose_augmented,
    isotropy_check,
    socle_generator,
    unitalize,
)

x, = poly_ring(QQ, "x")

# k[x]/x^4 with orientation (x^3)* and the augmentation x -> 0
A = quotient_algebra([x**4])
oa = OrientedAlgebra(A, [0, 0, 0, 1])
e = (QQ.one, QQ.zero, QQ.zero, QQ.zero)
s = socle_generator(oa, e)
print("socle generator of (QQ[x]/x^4, (x^3)*, x->0):",
      {l: str(v) for l, v in zip(A.labels, s)})
print("isotropic:", isotropy_check(oa, e))

# splitting off the canonical double point: A = k[x]/x^2 (+) V
dec = decompose_augmented(oa, e)
print("\nphi(1) =", dec.lam, "   dim V =", dec.nonunital.dim)
print("form on V:", [[str(v) for v in r] for r in dec.nonunital.form.gram])

# unitalize inverts the decomposition on the nose (in the adapted basis)
rebuilt = unitalize(dec.lam, dec.nonunital)
print("round trip dimensions:", rebuilt.oa.dim, "=", oa.dim)

# connected sums: dual # dual collapses back to the dual numbers
dual = quotient_algebra([x**2])
t_dual = Augmented(OrientedAlgebra(dual, [0, 1]), [1, 0])
s2 = connected_sum(t_dual, t_dual)
print("\ndual # dual: dim", s2.oa.dim, " phi =", [str(v) for v in s2.oa.phi])

# gluing the chain with a double point: dimension 4 + 2 - 2 = 4
t4 = Augmented(oa, e)
s3 = connected_sum(t4, t_dual)
print("chain4 # dual: dim", s3.oa.dim,
      " isotropic:", isotropy_check(s3.oa, s3.e))
