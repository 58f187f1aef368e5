"""Bilinear-form machinery: embeddings, surgery, paths, invariants.

Includes the signature computation that obstructs the naive square-zero
equivalence: the summation form on QQ^d has signature d, which no
(d-2)-dimensional form can reach after adding one hyperbolic plane.
"""

from gorlab import QQ, GF, linalg
from gorlab.algebra import FiniteAlgebra, Subspace
from gorlab.forms import (
    BilinearForm,
    elementary_factorization,
    gro_member,
    hyp_embed,
    hyperbolic_form,
    metabolic_path,
    surgery,
    witt_invariants,
)
from gorlab.frobenius import OrientedAlgebra

# --- hyperbolic embeddings ---------------------------------------------------
B = BilinearForm(QQ, [[1]])
E = hyp_embed(B)
print("embedding of [1] into Hyp(QQ):", [[str(v) for v in r] for r in E])
H = hyperbolic_form(QQ, 1)
check = linalg.mat_mul(linalg.mat_mul(linalg.transpose(E), H.gram), E)
print("E^T G_Hyp E == B:", check == B.gram)

# the orthogonal Grassmannian membership test in Hyp(QQ)
print("span(e1) in GrO:", gro_member(Subspace(2, [[1, 0]], QQ), 1))
print("span(e1+e2) in GrO:", gro_member(Subspace(2, [[1, 1]], QQ), 1))

# --- algebraic surgery -------------------------------------------------------
H2 = hyperbolic_form(QQ, 2)
res = surgery(H2, Subspace(4, [[1, 0, 0, 0]], QQ))
print("\nsurgery of Hyp(QQ^2) along an isotropic line:",
      [[str(v) for v in r] for r in res.form.gram])

# --- metabolic forms deform onto hyperbolic ones -----------------------------
Bm = BilinearForm(QQ, [[0, 1], [1, 5]])
mp = metabolic_path(Bm, Subspace(2, [[1, 0]], QQ))
print("\nmetabolic path Gram over k[t]:")
for row in mp.family.gram:
    print("  ", [str(p) for p in row])
print("fiber at 0:", [[str(v) for v in r] for r in mp.family.at(0).gram])

# --- Witt invariants and the signature obstruction ---------------------------
for d in (2, 4, 6):
    c = [[[QQ.zero] * d for _ in range(d)] for _ in range(d)]
    for i in range(d):
        c[i][i][i] = QQ.one
    A = FiniteAlgebra(QQ, [f"p{i}" for i in range(d)], c, unit=[1] * d)
    oa = OrientedAlgebra(A, [1] * d)
    inv = witt_invariants(oa.form)
    print(f"QQ^{d} with the summation orientation: signature {inv.signature}"
          f"  (> {d - 2}, so it is not in the image of the naive map)")

# --- elementary factorizations ----------------------------------------------
cyc = [[QQ.zero, QQ.one, QQ.zero], [QQ.zero, QQ.zero, QQ.one], [QQ.one, QQ.zero, QQ.zero]]
factors = elementary_factorization(cyc)
print("\ncyclic permutation of QQ^3 factors into", len(factors), "shears")
prod = linalg.identity(QQ, 3)
for F in factors:
    prod = linalg.mat_mul(F, prod)
print("product reproduces the matrix:", prod == linalg.mat(cyc))

# char-2 evenness: only alternating forms embed
B2 = BilinearForm(GF(2), [[0, 1], [1, 0]])
print("\nalternating form over F2 embeds:",
      len(hyp_embed(B2)), "x", B2.dim, "matrix")
