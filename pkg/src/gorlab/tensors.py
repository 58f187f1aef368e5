"""Structure tensors, the big Coppersmith-Winograd tensor, 1-genericity,
Strassen slice commutativity, and explicit degenerations.

Border rank itself is never computed; minimal border rank enters only
through its algebraic characterization (1-generic with commuting
normalized slices), and "degenerates to CW_q" is certified by an explicit
one-parameter family.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from . import linalg
from .algebra import AlgebraFamily, FiniteAlgebra
from .errors import (
    BadParameter,
    GenericityFailure,
    ShapeMismatch,
    SingularWitness,
)
from .forms import BilinearForm, WittInvariants, witt_invariants
from .frobenius import (
    Augmented,
    GorensteinResult,
    _find_nonvanishing,
    decompose_augmented,
    gorenstein_test,
)
from .poly import (
    MultiPoly,
    det_multipoly,
    graded_hilbert,
    lowest_degree_initial_ideal,
    monomials_of_degree,
    quotient_algebra,
)
from .scalar import Field, TPoly


class Tensor3:
    """A d1 x d2 x d3 array of scalars."""

    __slots__ = ("field", "dims", "entries")

    def __init__(self, field: Field, entries):
        entries = tuple(
            tuple(tuple(field.scalar(x) for x in row) for row in plane)
            for plane in entries
        )
        d1 = len(entries)
        d2 = len(entries[0]) if d1 else 0
        d3 = len(entries[0][0]) if d2 else 0
        if any(len(p) != d2 or any(len(r) != d3 for r in p) for p in entries):
            raise ShapeMismatch("ragged tensor")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dims", (d1, d2, d3))
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, *a):
        raise AttributeError("Tensor3 is immutable")

    @classmethod
    def from_support(cls, field: Field, dims, support):
        """Build from a sparse list of (i, j, k, value) entries."""
        d1, d2, d3 = dims
        z = field.zero
        e = [[[z] * d3 for _ in range(d2)] for _ in range(d1)]
        for i, j, k, v in support:
            e[i][j][k] = field.scalar(v)
        return cls(field, e)

    def slice_first(self, a):
        """Contraction sum_i a_i T[i][.][.] (a d2 x d3 matrix)."""
        a = [self.field.scalar(x) for x in a]
        if len(a) != self.dims[0]:
            raise ShapeMismatch("contraction vector has wrong length")
        d1, d2, d3 = self.dims
        z = self.field.zero
        out = [[z] * d3 for _ in range(d2)]
        for i, ai in enumerate(a):
            if not ai:
                continue
            for j in range(d2):
                row = self.entries[i][j]
                for k in range(d3):
                    if row[k]:
                        out[j][k] = out[j][k] + ai * row[k]
        return linalg.mat(out)

    def __eq__(self, other):
        return (
            isinstance(other, Tensor3)
            and self.field == other.field
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"Tensor3{self.dims} over {self.field}"

    def serialize(self) -> dict:
        d1, d2, d3 = self.dims
        flat = [
            str(self.entries[i][j][k])
            for i in range(d1)
            for j in range(d2)
            for k in range(d3)
        ]
        return {
            "field": {"kind": self.field.kind, "characteristic": self.field.characteristic},
            "dims": list(self.dims),
            "entries": flat,
        }


def structure_tensor(A: FiniteAlgebra) -> Tensor3:
    """The multiplication table of A, viewed as a 3-tensor."""
    return Tensor3(A.field, A.c)


def cw_tensor(field: Field, q: int) -> Tensor3:
    """The big Coppersmith-Winograd tensor CW_q, from its closed-form support.

    Independent of the quotient-ring machinery on purpose: equality with the
    structure tensor of the G-fat point algebra is a real test.
    """
    if q < 1:
        raise BadParameter("q must be at least 1")
    d = q + 2
    support = []
    for j in range(d):
        support.append((0, j, j, 1))
        if j != 0:
            support.append((j, 0, j, 1))
    for i in range(1, q + 1):
        support.append((i, i, q + 1, 1))
    return Tensor3.from_support(field, (d, d, d), support)


def aq_algebra(field: Field, q: int) -> FiniteAlgebra:
    """The G-fat point algebra of degree q+2, compiled from its presentation
    k[y_1..y_q]/((y_i y_j)_{i<j}, (y_i^2 - y_j^2)_{i<j}, y_1^3)."""
    if q < 1:
        raise BadParameter("q must be at least 1")
    names = tuple(f"y{i + 1}" for i in range(q))
    gens = []
    for i in range(q):
        for j in range(i + 1, q):
            mi = tuple(1 if v in (i, j) else 0 for v in range(q))
            gens.append(MultiPoly(field, names, {mi: 1}))
            sq_i = tuple(2 if v == i else 0 for v in range(q))
            sq_j = tuple(2 if v == j else 0 for v in range(q))
            gens.append(MultiPoly(field, names, {sq_i: 1, sq_j: -1}))
    cube = tuple(3 if v == 0 else 0 for v in range(q))
    gens.append(MultiPoly(field, names, {cube: 1}))
    return quotient_algebra(gens)


@dataclass(frozen=True)
class OneGenericResult:
    status: str  # "witness" | "no" | "inconclusive"
    witness: tuple | None
    certificate: MultiPoly | None
    trials: int

    def serialize(self) -> dict:
        out = {"status": self.status, "trials": self.trials}
        if self.witness is not None:
            out["witness"] = [str(x) for x in self.witness]
        if self.certificate is not None:
            out["certificate"] = {
                "symbolic_determinant": str(self.certificate),
                "is_zero": not self.certificate,
            }
        return out


def one_generic(
    T: Tensor3, seed: int = 0, trials: int = 64, symbolic_max_dim: int = 8
) -> OneGenericResult:
    """Search for a first-slot contraction of full rank.

    Same sample-then-symbolic strategy as the Gorenstein test, applied to
    det of the symbolic slice.
    """
    d1, d2, d3 = T.dims
    if d2 != d3:
        raise ShapeMismatch("slices are not square")
    f = T.field
    rng = random.Random(seed)
    for trial in range(trials):
        if f.characteristic == 0:
            a = tuple(f.scalar(rng.randint(-9, 9)) for _ in range(d1))
        else:
            a = tuple(f.scalar(rng.randrange(f.characteristic)) for _ in range(d1))
        if linalg.det(f, T.slice_first(a)):
            return OneGenericResult("witness", a, None, trial + 1)
    if d1 <= symbolic_max_dim:
        variables = tuple(f"a{i}" for i in range(d1))
        matrix = [
            [
                MultiPoly(
                    f,
                    variables,
                    {
                        tuple(1 if v == i else 0 for v in range(d1)): T.entries[i][j][k]
                        for i in range(d1)
                        if T.entries[i][j][k]
                    },
                )
                for k in range(d3)
            ]
            for j in range(d2)
        ]
        Dpoly = det_multipoly(matrix, f, variables)
        if not Dpoly:
            return OneGenericResult("no", None, Dpoly, trials)
        point = _find_nonvanishing(Dpoly, f)
        if point is not None:
            return OneGenericResult("witness", point, Dpoly, trials)
    return OneGenericResult("inconclusive", None, None, trials)


def strassen_commuting(T: Tensor3, witness) -> bool:
    """Whether the normalized slices N_i = slice(a)^-1 slice(e_i) pairwise
    commute (Strassen's commutativity, necessary for minimal border rank)."""
    f = T.field
    M = T.slice_first(witness)
    if not linalg.det(f, M):
        raise SingularWitness("witness slice is singular")
    Minv = linalg.invert(f, M)
    d1 = T.dims[0]
    slices = []
    for i in range(d1):
        a = [f.zero] * d1
        a[i] = f.one
        slices.append(linalg.mat_mul(Minv, T.slice_first(a)))
    for i in range(d1):
        for j in range(i + 1, d1):
            ab = linalg.mat_mul(slices[i], slices[j])
            ba = linalg.mat_mul(slices[j], slices[i])
            if ab != ba:
                return False
    return True


def matrix_algebra_tensor(field: Field, n: int) -> Tensor3:
    """Structure tensor of the n x n matrix algebra (non-commutative; a
    negative fixture for the commutativity check)."""
    d = n * n
    support = []
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for e in range(n):
                    if b == c:
                        support.append((a * n + b, c * n + e, a * n + e, 1))
    return Tensor3.from_support(field, (d, d, d), support)


@dataclass(frozen=True)
class DegenerationReport:
    """Explicit degeneration of an isotropically augmented algebra toward
    the G-fat point shape, with the isometry invariants of the V-form."""

    family: AlgebraFamily  # basis (1, x, v_1, ..., v_q)
    v_form: BilinearForm
    invariants: WittInvariants
    adapted_basis: tuple
    closed_fiber_is_aq: bool  # over the algebraic closure


def degeneration_to_cw(T: Augmented) -> DegenerationReport:
    """The multiplication-scaling family through a Gorenstein algebra.

    Fiber at 1 is the input (in the adapted basis); fiber at 0 has zero
    V-multiplication, i.e. the shape of form_to_algebra(B).  Over an
    algebraically closed field the special fiber is the G-fat point A_q;
    over the given exact field the report carries the isometry invariants
    of B instead of an isomorphism claim.
    """
    dec = decompose_augmented(T.oa, T.e)  # raises NotIsotropic
    f = T.oa.field
    nu = dec.nonunital
    m = nu.dim
    d = m + 2
    t = TPoly.t(f)
    z = TPoly(f)
    o = TPoly.const(f.one)

    def const(x):
        return TPoly.const(x)

    c = [[[z] * d for _ in range(d)] for _ in range(d)]
    for k in range(d):
        c[0][k] = [o if l == k else z for l in range(d)]
        c[k][0] = list(c[0][k])
    for i in range(m):
        for j in range(m):
            row = [z] * d
            row[1] = const(nu.form.gram[i][j])
            for k in range(m):
                if nu.algebra.c[i][j][k]:
                    row[2 + k] = const(nu.algebra.c[i][j][k]) * t
            c[2 + i][2 + j] = row
    labels = ("1", "x") + tuple(f"v{i + 1}" for i in range(m))
    unit = [1] + [0] * (d - 1)
    phi = [const(dec.lam), o] + [z] * m
    e = [1] + [0] * (d - 1)
    fam = AlgebraFamily(
        f,
        labels,
        c,
        unit=unit,
        orientation=phi,
        augmentations={"aug": e},
        validate=True,
    )
    inv = witt_invariants(nu.form)
    return DegenerationReport(
        fam, nu.form, inv, dec.adapted_basis, closed_fiber_is_aq=True
    )


@dataclass(frozen=True)
class ReducedDegeneration:
    limit: FiniteAlgebra
    hilbert: list
    points: tuple
    gorenstein: GorensteinResult

    def serialize(self) -> dict:
        return {
            "hilbert": self.hilbert,
            "limit": self.limit.serialize(),
            "points": [[str(x) for x in p] for p in self.points],
            "gorenstein": self.gorenstein.serialize(self.limit.labels),
        }


def degeneration_from_points(field: Field, points) -> ReducedDegeneration:
    """Flat limit at the origin of the rescaled point set, via the graded
    initial-ideal computation; succeeds only with Hilbert function (1, q, 1)
    and a Gorenstein limit."""
    points = [tuple(field.scalar(x) for x in p) for p in points]
    q = len(points) - 2
    nvars = len(points[0])
    names = tuple(f"y{i + 1}" for i in range(nvars))
    monos = []
    for s in range(4):
        monos.extend(monomials_of_degree(nvars, s))
    rows = []
    for p in points:
        row = []
        for m in monos:
            v = field.one
            for x, e in zip(p, m):
                for _ in range(e):
                    v = v * x
            row.append(v)
        rows.append(tuple(row))
    coeff_vectors = linalg.kernel_basis(field, rows, len(monos))
    gens = [
        MultiPoly(field, names, {m: c for m, c in zip(monos, vec) if c})
        for vec in coeff_vectors
    ]
    forms = lowest_degree_initial_ideal(gens, 3)
    hilbert = graded_hilbert(forms, nvars, 3)
    expected = [1, q, 1, 0]
    if hilbert != expected:
        raise GenericityFailure(
            f"limit Hilbert function {hilbert[:3]} != (1, {q}, 1); resample"
        )
    limit = quotient_algebra(forms)
    gor = gorenstein_test(limit, seed=0)
    if gor.status != "oriented":
        raise GenericityFailure("limit algebra failed the Gorenstein test")
    return ReducedDegeneration(limit, hilbert[:3], tuple(points), gor)


def reduced_degeneration(q: int, seed: int, field: Field = None) -> ReducedDegeneration:
    """Degeneration of q+2 reduced points on general lines through the
    origin, per sampled directions on the hyperplane y_{q+1} = 1."""
    from .scalar import QQ

    if field is None:
        field = QQ
    if q < 1:
        raise BadParameter("q must be at least 1")
    if field.characteristic and field.characteristic <= q + 2:
        raise BadParameter("prime field is too small for q+2 distinct points")
    rng = random.Random(seed)
    points = []
    for _ in range(q + 2):
        if field.characteristic == 0:
            p = tuple(rng.randint(-30, 30) for _ in range(q)) + (1,)
        else:
            p = tuple(rng.randrange(field.characteristic) for _ in range(q)) + (1,)
        points.append(p)
    if len(set(points)) != q + 2:
        raise GenericityFailure("sampled points collide; resample")
    return degeneration_from_points(field, points)
