"""Symmetric bilinear forms over exact fields.

Gram-matrix calculus: radicals, orthogonal complements, evenness and
hyperbolic embeddings, algebraic surgery, metabolic one-parameter paths,
elementary factorizations of special linear matrices, and Witt-type
invariants (rank, discriminant class, rational signature).
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import Subspace
from .errors import (
    BadParameter,
    Degenerate,
    DimensionMismatch,
    NotEven,
    NotIsotropic,
    NotLagrangian,
    NotSpecialLinear,
    SignatureUnavailable,
)
from .scalar import Field, Scalar, TPoly, square_class, tpoly_eval


class BilinearForm:
    """A symmetric bilinear form, given by its Gram matrix."""

    __slots__ = ("field", "dim", "gram")

    def __init__(self, field: Field, gram):
        gram = tuple(tuple(field.scalar(x) for x in row) for row in gram)
        d = len(gram)
        if any(len(r) != d for r in gram):
            raise DimensionMismatch("Gram matrix must be square")
        for i in range(d):
            for j in range(i + 1, d):
                if gram[i][j] != gram[j][i]:
                    raise DimensionMismatch(f"Gram matrix not symmetric at ({i},{j})")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "gram", gram)

    def __setattr__(self, *a):
        raise AttributeError("BilinearForm is immutable")

    def apply(self, u, v) -> Scalar:
        u = [self.field.scalar(x) for x in u]
        v = [self.field.scalar(x) for x in v]
        return linalg.sum_dot(u, linalg.mat_vec(self.gram, v)) if self.dim else self.field.zero

    def __eq__(self, other):
        return (
            isinstance(other, BilinearForm)
            and self.field == other.field
            and self.gram == other.gram
        )

    def __hash__(self):
        return hash((self.field, self.gram))

    def __repr__(self):
        return f"BilinearForm(dim {self.dim} over {self.field})"

    def serialize(self) -> dict:
        return {
            "field": {"kind": self.field.kind, "characteristic": self.field.characteristic},
            "gram": [[str(x) for x in row] for row in self.gram],
        }


class FormFamily:
    """A symmetric Gram matrix over k[t]; specializes to a BilinearForm."""

    __slots__ = ("field", "dim", "gram")

    def __init__(self, field: Field, gram):
        from .scalar import as_tpoly

        gram = tuple(tuple(as_tpoly(x, field) for x in row) for row in gram)
        d = len(gram)
        if any(len(r) != d for r in gram):
            raise DimensionMismatch("Gram matrix must be square")
        for i in range(d):
            for j in range(i + 1, d):
                if gram[i][j] != gram[j][i]:
                    raise DimensionMismatch(f"family Gram not symmetric at ({i},{j})")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "gram", gram)

    def __setattr__(self, *a):
        raise AttributeError("FormFamily is immutable")

    def at(self, c) -> BilinearForm:
        return BilinearForm(
            self.field,
            [[tpoly_eval(x, c) for x in row] for row in self.gram],
        )

    def serialize(self) -> dict:
        return {
            "field": {"kind": self.field.kind, "characteristic": self.field.characteristic},
            "gram": [[x.serialize() for x in row] for row in self.gram],
        }


def radical(B: BilinearForm) -> Subspace:
    """Kernel of the Gram matrix."""
    return Subspace(B.dim, linalg.kernel_basis(B.field, B.gram, B.dim))


def is_nondegenerate(B: BilinearForm) -> bool:
    return bool(linalg.det(B.field, B.gram))


def orth_complement(B: BilinearForm, W: Subspace) -> Subspace:
    """{v : B(v, w) = 0 for all w in W}; requires B non-degenerate."""
    if W.ambient_dim != B.dim:
        raise DimensionMismatch("subspace has wrong ambient dimension")
    if not is_nondegenerate(B):
        raise Degenerate("form is degenerate")
    constraints = linalg.mat_mul(W.rows, B.gram)
    return Subspace(B.dim, linalg.kernel_basis(B.field, constraints, B.dim))


def is_even(B: BilinearForm) -> bool:
    """Divisibility of all B(x,x) by 2; over F_2 this means alternating."""
    if B.field.characteristic != 2:
        return True
    return all(not B.gram[i][i] for i in range(B.dim))


def hyperbolic_form(field: Field, n: int) -> BilinearForm:
    """The 2n-dimensional hyperbolic form [[0, I], [I, 0]]."""
    if n < 0:
        raise BadParameter("n must be non-negative")
    z, o = field.zero, field.one
    d = 2 * n
    gram = [[z] * d for _ in range(d)]
    for i in range(n):
        gram[i][n + i] = o
        gram[n + i][i] = o
    return BilinearForm(field, gram)


def hyp_embed(B: BilinearForm):
    """An isometric embedding of an even form into Hyp(k^d).

    Returns a (2d x d) matrix E whose columns are the images of the basis
    vectors, so that E^T G_Hyp E equals gram(B) exactly.  The recipe follows
    the halving trick: write B = B' + B'^T (B' = B/2 away from
    characteristic 2, the strictly upper triangle over F_2) and embed with
    components (B', id).
    """
    if not is_even(B):
        raise NotEven("form is not even (not alternating over F_2)")
    d = B.dim
    f = B.field
    if f.characteristic != 2:
        half = f.scalar(1) / f.scalar(2)
        A = [[half * x for x in row] for row in B.gram]
    else:
        A = [
            [B.gram[i][j] if j > i else f.zero for j in range(d)]
            for i in range(d)
        ]
    rows = [tuple(A[i]) for i in range(d)] + list(linalg.identity(f, d))
    return linalg.mat(rows)


@dataclass(frozen=True)
class SurgeryResult:
    """Induced form on W-perp/W plus the recorded complement section."""

    form: BilinearForm
    section: tuple  # rows: the chosen complement basis of W in W-perp


def surgery(B: BilinearForm, W: Subspace) -> SurgeryResult:
    """Algebraic surgery along an isotropic subspace W of a non-degenerate B."""
    for u in W.rows:
        for v in W.rows:
            if B.apply(u, v):
                raise NotIsotropic("B does not vanish on W")
    perp = orth_complement(B, W)  # raises Degenerate when B is degenerate
    section = linalg.complement_in(B.field, W.rows, perp.rows, B.dim)
    gram = linalg.mat_mul(linalg.mat_mul(section, B.gram), linalg.transpose(section))
    out = BilinearForm(B.field, gram)
    if not is_nondegenerate(out):
        raise Degenerate("surgery produced a degenerate form")  # pragma: no cover
    return SurgeryResult(out, section)


@dataclass(frozen=True)
class MetabolicPath:
    """Family [[0, I], [I, tA]] together with the adapted basis rows."""

    family: FormFamily
    adapted_basis: tuple  # rows (l_1..l_n, w_1..w_n) in ambient coordinates


def metabolic_path(B: BilinearForm, L: Subspace) -> MetabolicPath:
    """One-parameter path from a metabolic form to the hyperbolic one.

    In a basis adapted to the Lagrangian L the Gram matrix is
    [[0, I], [I, A]]; scaling A by t interpolates to Hyp(L) at t = 0 while
    the fiber at t = 1 is the input in the adapted basis.
    """
    if L != orth_complement(B, L):
        raise NotLagrangian("subspace is not equal to its own perpendicular")
    n = L.dim
    if B.dim != 2 * n:
        raise NotLagrangian("Lagrangian must have half the ambient dimension")
    f = B.field
    W0 = linalg.extend_to_basis(f, L.rows, B.dim)
    pairing = linalg.mat_mul(linalg.mat_mul(W0, B.gram), linalg.transpose(L.rows))
    W = linalg.mat_mul(linalg.invert(f, pairing), W0)
    adapted = linalg.mat(list(L.rows) + list(W))
    gram1 = linalg.mat_mul(linalg.mat_mul(adapted, B.gram), linalg.transpose(adapted))
    t = TPoly.t(f)
    z = TPoly(f)
    o = TPoly.const(f.one)
    fam = [[z] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        fam[i][n + i] = o
        fam[n + i][i] = o
        for j in range(n):
            fam[n + i][n + j] = TPoly.const(gram1[n + i][n + j]) * t
    return MetabolicPath(FormFamily(f, fam), adapted)


@dataclass(frozen=True)
class WittInvariants:
    rank: int
    det_square_class: Scalar
    signature: int | None

    def serialize(self) -> dict:
        out = {"rank": self.rank, "det_square_class": str(self.det_square_class)}
        if self.signature is not None:
            out["signature"] = self.signature
        return out


def _congruence_diagonal(B: BilinearForm) -> list[Scalar]:
    """Diagonal of a congruent diagonal form (char != 2), by symmetric pivoting."""
    f = B.field
    d = B.dim
    g = [list(r) for r in B.gram]
    diag = []
    idx = list(range(d))
    for step in range(d):
        n = len(idx)
        # find a nonzero diagonal entry, or create one from an off-diagonal
        pivot = next((a for a in range(n) if g[idx[a]][idx[a]]), None)
        if pivot is None:
            offs = next(
                ((a, b) for a in range(n) for b in range(a + 1, n) if g[idx[a]][idx[b]]),
                None,
            )
            if offs is None:
                diag.extend(f.zero for _ in idx)
                break
            a, b = offs
            ia, ib = idx[a], idx[b]
            # e_a += e_b turns the 2x2 hyperbolic block into a nonzero diagonal
            for k in range(d):
                g[ia][k] = g[ia][k] + g[ib][k]
            for k in range(d):
                g[k][ia] = g[k][ia] + g[k][ib]
            pivot = a
        ip = idx[pivot]
        p = g[ip][ip]
        diag.append(p)
        idx.pop(pivot)
        inv = p.inverse()
        for a in idx:
            fct = g[a][ip] * inv
            if fct:
                for k in range(d):
                    g[a][k] = g[a][k] - fct * g[ip][k]
                for k in range(d):
                    g[k][a] = g[k][a] - fct * g[k][ip]
        if not idx:
            break
    return diag


def signature(B: BilinearForm) -> int:
    """Signature over the rationals by exact congruence diagonalization."""
    if B.field.characteristic != 0:
        raise SignatureUnavailable("signature needs an ordered field")
    if not is_nondegenerate(B):
        raise Degenerate("form is degenerate")
    sig = 0
    for x in _congruence_diagonal(B):
        sig += 1 if x.value > 0 else -1
    return sig


def witt_invariants(B: BilinearForm) -> WittInvariants:
    """Rank, determinant square class, and (over QQ) the signature."""
    d = linalg.det(B.field, B.gram)
    if not d:
        raise Degenerate("form is degenerate")
    sig = signature(B) if B.field.characteristic == 0 else None
    return WittInvariants(B.dim, square_class(d), sig)


def gro_member(W: Subspace, n: int) -> bool:
    """Whether the restriction of the hyperbolic form Hyp(k^n) to W is
    non-degenerate (membership in the orthogonal Grassmannian chart)."""
    if W.ambient_dim != 2 * n:
        raise DimensionMismatch(f"ambient of W must be 2n = {2 * n}")
    if not W.rows:
        return True
    f = W.rows[0][0].field
    H = hyperbolic_form(f, n)
    restricted = linalg.mat_mul(linalg.mat_mul(W.rows, H.gram), linalg.transpose(W.rows))
    return bool(linalg.det(f, restricted))


def _elementary(field: Field, n: int, i: int, j: int, lam: Scalar):
    e = [list(r) for r in linalg.identity(field, n)]
    e[i][j] = lam
    return linalg.mat(e)


def elementary_factorization(M) -> list:
    """Factor a determinant-1 matrix into elementary transvections.

    Returns matrices E_1, ..., E_m, each differing from the identity in one
    off-diagonal entry, with E_m * ... * E_1 = M.  Row swaps are never used;
    zero or non-unit pivots are repaired with auxiliary shears.
    """
    M = linalg.mat(M)
    n = len(M)
    if n == 0:
        return []
    field = M[0][0].field
    if linalg.det(field, M) != field.one:
        raise NotSpecialLinear("determinant is not 1")
    work = [list(r) for r in M]
    ops: list[tuple[int, int, Scalar]] = []  # left-multiplications, in order

    def addrow(i, j, lam):
        if not lam:
            return
        work[i] = [a + lam * b for a, b in zip(work[i], work[j])]
        ops.append((i, j, lam))

    for c in range(n):
        if c < n - 1:
            if not work[c][c]:
                r = next(r for r in range(c + 1, n) if work[r][c])
                addrow(c, r, field.one)
            if work[c][c] != field.one:
                r = next((r for r in range(c + 1, n) if work[r][c]), None)
                if r is None:
                    r = c + 1
                    addrow(r, c, field.one)
                addrow(c, r, (field.one - work[c][c]) / work[r][c])
        # pivot c is now 1 (for the last column this is forced by det = 1)
        for r in range(n):
            if r != c and work[r][c]:
                addrow(r, c, -work[r][c])
    factors = [_elementary(field, n, i, j, -lam) for (i, j, lam) in ops]
    factors.reverse()
    return factors
