"""Oriented Gorenstein structure on finite algebras.

Orientations and their bilinear pairings, the Gorenstein decision procedure,
augmentations and socle generators, the equivalence between isotropically
augmented algebras and non-unital ones (decompose/unitalize), connected
sums, hyperbolic algebras, the bridge to symmetric bilinear forms, surgery,
and the Rees degeneration family.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg
from .algebra import (
    AlgebraFamily,
    FiniteAlgebra,
    Subspace,
    annihilator,
    base_change,
    multiply,
    table_multiply,
)
from .errors import (
    BadUnit,
    Degenerate,
    DimensionMismatch,
    FieldMismatch,
    NotIsotropic,
    NotIsotropicUnit,
    Singular,
)
from .forms import BilinearForm, FormFamily, is_nondegenerate, surgery
from .poly import MultiPoly, det_multipoly
from .scalar import Field, Scalar, TPoly


def b_phi(A: FiniteAlgebra, phi) -> BilinearForm:
    """The pairing (x, y) -> phi(x*y) attached to a functional phi."""
    phi = A.coerce_vector(phi)
    d = A.dim
    gram = [
        [linalg.sum_dot(A.c[i][j], phi) if d else A.field.zero for j in range(d)]
        for i in range(d)
    ]
    return BilinearForm(A.field, gram)


class OrientedAlgebra:
    """A unital algebra with a functional making b_phi non-degenerate."""

    __slots__ = ("algebra", "phi", "form")

    def __init__(self, algebra: FiniteAlgebra, phi, validate: bool = True):
        if not algebra.is_unital:
            raise BadUnit("orientations require a unital algebra")
        phi = algebra.coerce_vector(phi)
        form = b_phi(algebra, phi)
        if validate and not is_nondegenerate(form):
            raise Degenerate("phi does not orient the algebra: b_phi is degenerate")
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "phi", phi)
        object.__setattr__(self, "form", form)

    def __setattr__(self, *a):
        raise AttributeError("OrientedAlgebra is immutable")

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def phi_of(self, v) -> Scalar:
        return linalg.sum_dot(self.phi, self.algebra.coerce_vector(v))

    def __eq__(self, other):
        return (
            isinstance(other, OrientedAlgebra)
            and self.algebra == other.algebra
            and self.phi == other.phi
        )

    def __repr__(self):
        return f"OrientedAlgebra(dim {self.dim} over {self.field})"

    def serialize(self) -> dict:
        out = self.algebra.serialize()
        out["orientation"] = {l: str(x) for l, x in zip(self.algebra.labels, self.phi)}
        return out


@dataclass(frozen=True)
class NonUnitalOriented:
    """A non-unital algebra with a compatible non-degenerate pairing."""

    algebra: FiniteAlgebra
    form: BilinearForm

    def __post_init__(self):
        A, B = self.algebra, self.form
        if A.is_unital:
            raise BadUnit("expected a non-unital algebra")
        if A.dim != B.dim or A.field != B.field:
            raise DimensionMismatch("algebra and form do not match")
        if not is_nondegenerate(B):
            raise Degenerate("pairing is degenerate")
        for i in range(A.dim):
            ei = A.basis_vector(i)
            for j in range(A.dim):
                ej = A.basis_vector(j)
                for k in range(j, A.dim):
                    ek = A.basis_vector(k)
                    lhs = B.apply(multiply(A, ei, ej), ek)
                    rhs = B.apply(ei, multiply(A, ej, ek))
                    if lhs != rhs:
                        raise Degenerate(
                            f"pairing is not multiplication-compatible at ({i},{j},{k})"
                        )

    @property
    def dim(self) -> int:
        return self.algebra.dim


@dataclass(frozen=True)
class Augmented:
    """An oriented algebra together with an augmentation vector."""

    oa: OrientedAlgebra
    e: tuple

    def __post_init__(self):
        e = self.oa.algebra.coerce_vector(self.e)
        object.__setattr__(self, "e", e)
        if not augmentation_check(self.oa.algebra, e):
            raise BadUnit("e is not an algebra map to the base field")

    @property
    def algebra(self) -> FiniteAlgebra:
        return self.oa.algebra


def augmentation_check(A: FiniteAlgebra, e) -> bool:
    """Whether e(1) = 1 and e is multiplicative on all basis pairs."""
    e = A.coerce_vector(e)
    if A.unit is None or linalg.sum_dot(e, A.unit) != A.field.one:
        return False
    for i in range(A.dim):
        for j in range(i, A.dim):
            if linalg.sum_dot(A.c[i][j], e) != e[i] * e[j]:
                return False
    return True


def kernel_of_functional(A: FiniteAlgebra, e) -> Subspace:
    e = A.coerce_vector(e)
    return Subspace(A.dim, linalg.kernel_basis(A.field, [e], A.dim))


def enumerate_augmentations(A: FiniteAlgebra, budget: int = 10**6) -> list:
    """All algebra maps A -> F_p, by exhaustive search (p^dim <= budget).

    Over infinite fields only verification is offered; use
    augmentation_check there.
    """
    p = A.field.characteristic
    if p == 0:
        raise FieldMismatch("exhaustive search needs a finite field")
    if p**A.dim > budget:
        raise BadUnit(f"p^dim = {p ** A.dim} exceeds the search budget")
    out = []
    from itertools import product as iproduct

    for values in iproduct(range(p), repeat=A.dim):
        e = tuple(A.field.scalar(v) for v in values)
        if augmentation_check(A, e):
            out.append(e)
    return out


def socle_generator(oa: OrientedAlgebra, e):
    """The adjoint vector x with B_phi(x, y) = e(y) for all y."""
    e = oa.algebra.coerce_vector(e)
    return linalg.solve_right(oa.field, oa.form.gram, e)


def isotropy_check(oa: OrientedAlgebra, e) -> bool:
    """Whether the augmentation is isotropic: e(e*(1)) = 0.

    Cross-validated against the annihilator criterion Ann(ker e) <= ker e;
    disagreement would be an internal defect, not a caller error.
    """
    e = oa.algebra.coerce_vector(e)
    x = socle_generator(oa, e)
    first = not linalg.sum_dot(e, x)
    ker = kernel_of_functional(oa.algebra, e)
    ann = annihilator(oa.algebra, ker)
    second = all(not linalg.sum_dot(e, row) for row in ann.rows)
    if first != second:  # pragma: no cover
        raise AssertionError("isotropy criteria disagree: internal defect")
    return first


@dataclass(frozen=True)
class Decomposition:
    """Result of splitting off the canonical double point."""

    lam: Scalar  # phi(1)
    nonunital: NonUnitalOriented
    adapted_basis: tuple  # rows (1, x, v_1, ..., v_{d-2}) in old coordinates


def decompose_augmented(oa: OrientedAlgebra, e) -> Decomposition:
    """Split an isotropically augmented algebra as k[x]/x^2 (+) V.

    V is the orthogonal complement of span(1, x); its multiplication is the
    ambient one followed by orthogonal projection back onto V.
    """
    A = oa.algebra
    e = A.coerce_vector(e)
    if not isotropy_check(oa, e):
        raise NotIsotropic("augmentation is not isotropic")
    f = oa.field
    x = socle_generator(oa, e)
    lam = oa.phi_of(A.unit)
    span1x = Subspace(A.dim, [A.unit, x])
    from .forms import orth_complement

    V = orth_complement(oa.form, span1x)
    vrows = V.rows
    m = len(vrows)
    # projection onto V along span(1, x): subtract the 2x2 correction
    small = ((lam, f.one), (f.one, f.zero))
    solver = linalg.RowSolver(f, vrows) if m else None
    z = f.zero
    cV = [[None] * m for _ in range(m)]
    for i in range(m):
        for j in range(i, m):
            w = multiply(A, vrows[i], vrows[j])
            rhs = (oa.form.apply(w, A.unit), oa.form.apply(w, x))
            ab = linalg.solve_right(f, small, rhs)
            proj = tuple(
                wc - ab[0] * uc - ab[1] * xc for wc, uc, xc in zip(w, A.unit, x)
            )
            coords = solver.coords(proj)
            cV[i][j] = coords
            cV[j][i] = coords
    gramV = linalg.mat_mul(linalg.mat_mul(vrows, oa.form.gram), linalg.transpose(vrows))
    alg = FiniteAlgebra(
        f, [f"v{i + 1}" for i in range(m)], cV if m else [], None, validate=True
    )
    nonu = NonUnitalOriented(alg, BilinearForm(f, gramV))
    adapted = linalg.mat([A.unit, x] + list(vrows))
    return Decomposition(lam, nonu, adapted)


def unitalize(lam, nu: NonUnitalOriented) -> Augmented:
    """Rebuild the augmented oriented algebra k[x]/x^2 (+) V from (lam, V, B).

    Products follow (r+sx, v)(r'+s'x, v') =
    (rr' + (sr'+s'r+B(v,v')) x, r'v + rv' + vv'), with phi(r+sx, v) = r lam + s
    and e(r+sx, v) = r.
    """
    f = nu.algebra.field
    lam = f.scalar(lam)
    m = nu.dim
    d = m + 2
    z, o = f.zero, f.one
    c = [[[z] * d for _ in range(d)] for _ in range(d)]
    # unit products
    for k in range(d):
        c[0][k][k] = o
        c[k][0][k] = o
    # x*x = 0 and x*v = 0 already encoded by zeros
    for i in range(m):
        for j in range(m):
            row = [z] * d
            row[1] = nu.form.gram[i][j]
            prod = nu.algebra.c[i][j]
            for k in range(m):
                row[2 + k] = prod[k]
            c[2 + i][2 + j] = row
    labels = ("1", "x") + tuple(nu.algebra.labels)
    unit = tuple(o if k == 0 else z for k in range(d))
    alg = FiniteAlgebra(f, labels, c, unit, validate=True)
    phi = tuple([lam, o] + [z] * m)
    e = tuple([o] + [z] * (m + 1))
    oa = OrientedAlgebra(alg, phi)
    out = Augmented(oa, e)
    if not isotropy_check(oa, e):  # pragma: no cover
        raise AssertionError("unitalize produced a non-isotropic augmentation")
    return out


def form_to_algebra(B: BilinearForm) -> Augmented:
    """The isotropically augmented algebra attached to a non-degenerate form:
    unitalize(0, (V, B)) with the zero multiplication on V."""
    if not is_nondegenerate(B):
        raise Degenerate("form is degenerate")
    f = B.field
    m = B.dim
    z = f.zero
    zero_mult = [[[z] * m for _ in range(m)] for _ in range(m)]
    alg = FiniteAlgebra(
        f, [f"v{i + 1}" for i in range(m)], zero_mult if m else [], None, validate=False
    )
    return unitalize(f.zero, NonUnitalOriented(alg, B))


def hyp_algebra(A: FiniteAlgebra) -> OrientedAlgebra:
    """The square-zero extension of A by its dual, oriented hyperbolically.

    Products: (a, f)(b, g) = (ab, a.g + b.f) with (a.f)(b) = f(ab); the
    orientation evaluates the functional part at the unit, and its Gram
    matrix in the basis (e_i; e_i^*) is exactly [[0, I], [I, 0]].
    """
    if not A.is_unital:
        raise BadUnit("hyp_algebra needs a unital input")
    f = A.field
    d = A.dim
    n = 2 * d
    z = f.zero
    c = [[[z] * n for _ in range(n)] for _ in range(n)]
    for i in range(d):
        for j in range(d):
            for k in range(d):
                c[i][j][k] = A.c[i][j][k]
            # (e_i, 0) * (0, e_j^*) = (0, e_i . e_j^*), value at e_l is c[i][l][j]
            row = [z] * n
            for l in range(d):
                row[d + l] = A.c[i][l][j]
            c[i][d + j] = tuple(row)
            c[d + j][i] = tuple(row)
    unit = tuple(A.unit) + (z,) * d
    phi = (z,) * d + tuple(A.unit)
    labels = tuple(A.labels) + tuple(l + "*" for l in A.labels)
    alg = FiniteAlgebra(f, labels, c, unit, validate=True)
    return OrientedAlgebra(alg, phi)


# ---------------------------------------------------------------------------
# connected sums (shared core: also drives the family version over k[t])


@dataclass(frozen=True)
class _ConsumData:
    labels: tuple
    c: tuple
    unit: tuple
    phi: tuple
    e_left: tuple  # the gluing augmentation, through the left factor
    e_right_of: object  # callable: right-side functional -> quotient vector
    project: object  # callable: fiber-product vector -> quotient coordinates


def _consum_core(field, A1, A2, e1, e2, x1, x2, phi1, phi2, zero):
    """Glue two augmented algebras along their augmentations and kill the
    difference of the socle generators.

    Entries of the right factor's table/orientation/socle may be TPolys; all
    basis bookkeeping uses constant vectors only (the fiber-product basis is
    the joint unit plus the two augmentation kernels, and the eliminated
    coordinate has constant coefficient), so no polynomial elimination ever
    happens.
    """
    d1, d2 = len(A1["c"]), len(A2["c"])
    k1 = linalg.kernel_basis(field, [e1], d1)
    k2 = linalg.kernel_basis(field, [e2], d2)
    z1, z2 = (field.zero,) * d1, (field.zero,) * d2
    rows = [tuple(A1["unit"]) + tuple(A2["unit"])]
    rows += [tuple(r) + z2 for r in k1]
    rows += [z1 + tuple(r) for r in k2]
    solver = linalg.RowSolver(field, rows)
    w = tuple(x1) + tuple(-x for x in x2)
    w_coords = solver.coords(w)

    def is_const_nonzero(v):
        if isinstance(v, TPoly):
            return v.is_constant() and bool(v)
        return bool(v)

    elim = max((i for i, v in enumerate(w_coords) if is_const_nonzero(v)), default=None)
    if elim is None or elim == 0:  # pragma: no cover
        raise Singular("no constant coordinate available to eliminate")
    w_at = w_coords[elim]
    inv = (w_at.constant_value() if isinstance(w_at, TPoly) else w_at).inverse()
    keep = [i for i in range(len(rows)) if i != elim]

    def reduce(coords):
        factor = coords[elim] * inv
        if factor:
            coords = tuple(a - factor * b for a, b in zip(coords, w_coords))
        return tuple(coords[i] for i in keep)

    def product(u, v):
        p1 = table_multiply(A1["c"], u[:d1], v[:d1], zero)
        p2 = table_multiply(A2["c"], u[d1:], v[d1:], zero)
        return p1 + p2

    n = len(keep)
    c = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(a, n):
            coords = solver.coords(product(rows[keep[a]], rows[keep[b]]))
            red = reduce(coords)
            c[a][b] = red
            c[b][a] = red
    phi = tuple(
        linalg.sum_dot(phi1, rows[i][:d1]) + linalg.sum_dot(phi2, rows[i][d1:])
        for i in keep
    )
    # well-definedness on the quotient
    if linalg.sum_dot(phi1, x1) != linalg.sum_dot(phi2, x2):  # pragma: no cover
        raise Singular("orientation does not descend to the connected sum")
    e_left = tuple(linalg.sum_dot(e1, rows[i][:d1]) for i in keep)
    unit = tuple(field.one if i == 0 else field.zero for i in range(n))

    def e_right_of(functional):
        return tuple(linalg.sum_dot(functional, rows[i][d1:]) for i in keep)

    labels = ["1"]
    labels += [f"a{i + 1}" for i in range(len(k1))]
    labels += [f"b{i + 1}" for i in range(len(k2))]
    labels = tuple(labels[i] for i in keep)

    def project(ambient):
        return reduce(solver.coords(tuple(ambient)))

    return _ConsumData(
        labels, tuple(map(tuple, c)), unit, phi, e_left, e_right_of, project
    )


def connected_sum(t1: Augmented, t2: Augmented) -> Augmented:
    """Connected sum of two isotropically augmented oriented algebras.

    The result has dimension d1 + d2 - 2, carries phi1 + phi2, and the
    common augmentation; all validators are re-run on the output.
    """
    if t1.oa.field != t2.oa.field:
        raise FieldMismatch("summands live over different fields")
    for t in (t1, t2):
        if not isotropy_check(t.oa, t.e):
            raise NotIsotropic("connected sum needs isotropic augmentations")
    f = t1.oa.field
    x1 = socle_generator(t1.oa, t1.e)
    x2 = socle_generator(t2.oa, t2.e)
    data = _consum_core(
        f,
        {"c": t1.algebra.c, "unit": t1.algebra.unit},
        {"c": t2.algebra.c, "unit": t2.algebra.unit},
        t1.e,
        t2.e,
        x1,
        x2,
        t1.oa.phi,
        t2.oa.phi,
        f.zero,
    )
    alg = FiniteAlgebra(f, data.labels, data.c, data.unit, validate=True)
    oa = OrientedAlgebra(alg, data.phi)
    out = Augmented(oa, data.e_left)
    if not isotropy_check(oa, out.e):  # pragma: no cover
        raise AssertionError("connected sum lost isotropy")
    return out


# ---------------------------------------------------------------------------
# surgery and the Rees family


def surgery_inverse(oa: OrientedAlgebra) -> BilinearForm:
    """Surgery of B_phi along the unit line of an isotropic oriented algebra
    (phi(1) = 0); inverse to form_to_algebra up to congruence."""
    if oa.phi_of(oa.algebra.unit):
        raise NotIsotropicUnit("phi(1) must vanish")
    W = Subspace(oa.dim, [oa.algebra.unit])
    return surgery(oa.form, W).form


@dataclass(frozen=True)
class ReesResult:
    """The Rees degeneration of an isotropic oriented algebra."""

    family: AlgebraFamily  # basis (1, e_1 t, ..., e_{d-2} t, x t^2)
    adapted_basis: tuple  # rows (1, e_1, ..., e_{d-2}, x) in old coordinates
    gram: FormFamily  # [[0,0,1],[0,D,0],[1,0,phi(x^2) t^2]]
    surgered: BilinearForm  # the form D on the middle block


def rees_family(oa: OrientedAlgebra) -> ReesResult:
    """One-parameter family from an isotropic oriented algebra to its
    associated graded along k <= k-perp <= A.

    The basis (1, e_i t, x t^2) has e_i spanning a complement of the unit
    line inside ker(phi) and x chosen with phi(x) = 1, phi(x e_i) = 0 (exact
    linear solving, free coordinates zeroed).  The fiber at t=1 is the input
    in the adapted basis; the fiber at t=0 is form_to_algebra of the
    surgered form, with the x-line as socle.
    """
    A = oa.algebra
    f = oa.field
    if oa.phi_of(A.unit):
        raise NotIsotropicUnit("phi(1) must vanish")
    W = Subspace(A.dim, [A.unit])
    sres = surgery(oa.form, W)
    evecs = sres.section  # complement of the unit line in ker phi
    D = sres.form
    # x: phi(x) = 1 and B(x, e_i) = 0
    constraints = [tuple(oa.phi)]
    constraints += [linalg.mat_vec(oa.form.gram, ev) for ev in evecs]
    rhs = [f.one] + [f.zero] * len(evecs)
    x = linalg.solve_right_affine(f, constraints, rhs)
    adapted = linalg.mat([A.unit] + list(evecs) + [x])
    ad_alg = base_change(A, adapted)
    d = A.dim
    weights = [0] + [1] * len(evecs) + [2]
    t = TPoly.t(f)
    zt = TPoly(f)
    c = []
    for i in range(d):
        plane = []
        for j in range(d):
            row = []
            for k in range(d):
                coeff = ad_alg.c[i][j][k]
                if not coeff:
                    row.append(zt)
                    continue
                exp = weights[i] + weights[j] - weights[k]
                if exp < 0:  # pragma: no cover
                    raise Singular("filtration is not multiplicative")
                row.append(TPoly.const(coeff).shift(exp))
            plane.append(tuple(row))
        c.append(tuple(plane))
    labels = ["1"] + [f"e{i + 1}*t" for i in range(len(evecs))] + ["x*t^2"]
    unit = [f.one] + [f.zero] * (d - 1)
    phi = [zt] * (d - 1) + [TPoly.const(f.one)]
    fam = AlgebraFamily(
        f, labels, c, unit=unit, orientation=phi, validate=True
    )
    gram = FormFamily(f, fam.gram())
    return ReesResult(fam, adapted, gram, D)


# ---------------------------------------------------------------------------
# the Gorenstein decision procedure


@dataclass(frozen=True)
class GorensteinResult:
    status: str  # "oriented" | "not_gorenstein" | "inconclusive"
    witness: tuple | None
    certificate: MultiPoly | None  # the symbolic determinant, when expanded
    trials: int

    def serialize(self, labels=None) -> dict:
        out = {"status": self.status, "trials": self.trials}
        if self.witness is not None:
            if labels is None:
                labels = [f"e{i}" for i in range(len(self.witness))]
            out["witness"] = {l: str(x) for l, x in zip(labels, self.witness)}
        if self.certificate is not None:
            out["certificate"] = {
                "symbolic_determinant": str(self.certificate),
                "is_zero": not self.certificate,
            }
        return out


def _find_nonvanishing(Dpoly: MultiPoly, field: Field):
    """A point where a nonzero polynomial does not vanish, by incremental
    substitution; None when the field is too small to provide one."""
    n = len(Dpoly.variables)
    if field.characteristic == 0:
        deg = Dpoly.total_degree()
        candidates = []
        k = 0
        while len(candidates) <= deg + 1:
            candidates.append(k)
            if k > 0:
                candidates.append(-k)
            k += 1
    else:
        candidates = list(range(field.characteristic))
    point = []
    cur = Dpoly
    for i in range(n):
        for v in candidates:
            sub = cur.substitute(i, field.scalar(v))
            if sub:
                point.append(field.scalar(v))
                cur = sub
                break
        else:
            return None
    return tuple(point)


def gorenstein_test(
    A: FiniteAlgebra, seed: int = 0, trials: int = 64, symbolic_max_dim: int = 8
) -> GorensteinResult:
    """Decide whether some functional orients A.

    Strategy: seeded sampling of candidate functionals first; on failure and
    when the dimension is small enough, expand det(B_phi) symbolically.  A
    zero symbolic determinant certifies NotGorenstein; a nonzero one yields
    a witness by incremental substitution.  Otherwise the verdict is
    Inconclusive (honest, e.g. over tiny prime fields).
    """
    if not A.is_unital:
        raise BadUnit("the Gorenstein test needs a unital algebra")
    f = A.field
    d = A.dim
    rng = random.Random(seed)
    for trial in range(trials):
        if f.characteristic == 0:
            phi = tuple(f.scalar(rng.randint(-9, 9)) for _ in range(d))
        else:
            phi = tuple(f.scalar(rng.randrange(f.characteristic)) for _ in range(d))
        if is_nondegenerate(b_phi(A, phi)):
            return GorensteinResult("oriented", phi, None, trial + 1)
    if d <= symbolic_max_dim:
        variables = tuple(f"p{i}" for i in range(d))
        matrix = [
            [
                MultiPoly(
                    f,
                    variables,
                    {
                        tuple(1 if v == k else 0 for v in range(d)): A.c[i][j][k]
                        for k in range(d)
                        if A.c[i][j][k]
                    },
                )
                for j in range(d)
            ]
            for i in range(d)
        ]
        Dpoly = det_multipoly(matrix, f, variables)
        if not Dpoly:
            return GorensteinResult("not_gorenstein", None, Dpoly, trials)
        point = _find_nonvanishing(Dpoly, f)
        if point is not None:
            return GorensteinResult("oriented", point, Dpoly, trials)
    return GorensteinResult("inconclusive", None, None, trials)
