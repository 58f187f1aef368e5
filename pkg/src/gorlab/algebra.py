"""Structure-constant model of finite-dimensional commutative algebras.

An algebra is a basis plus a d*d*d array c with e_i e_j = sum_k c[i][j][k] e_k
and an optional unit vector.  Validation is exhaustive over basis triples:
at desk scale exactness is cheap, and every later construction leans on it.
"""

from __future__ import annotations

from . import linalg
from .errors import (
    BadUnit,
    DimensionMismatch,
    FieldMismatch,
    NotAssociative,
    NotCommutative,
)
from .scalar import Field, Scalar


class Subspace:
    """A subspace of k^n, stored as a reduced-row-echelon basis.

    Canonical form makes equality of subspaces literal equality of rows.
    """

    __slots__ = ("ambient_dim", "rows", "field")

    def __init__(self, ambient_dim: int, rows, field: Field = None):
        rows = [tuple(r) for r in rows]
        if any(len(r) != ambient_dim for r in rows):
            raise DimensionMismatch("row length does not match ambient dimension")
        if field is None:
            field = next(
                (x.field for r in rows for x in r if isinstance(x, Scalar)), None
            )
        if field is not None:
            rows = [tuple(field.scalar(x) for x in r) for r in rows]
        red, _ = linalg.rref(rows, ambient_dim)
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "rows", red)
        object.__setattr__(self, "field", field)

    def __setattr__(self, *a):
        raise AttributeError("Subspace is immutable")

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector has wrong length")
        if self.field is not None:
            v = [self.field.scalar(x) for x in v]
        if not self.rows:
            return all(not x for x in v)
        stacked, _ = linalg.rref(list(self.rows) + [tuple(v)], self.ambient_dim)
        return len(stacked) == self.dim

    def is_contained_in(self, other: "Subspace") -> bool:
        return all(other.contains(r) for r in self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.rows))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of k^{self.ambient_dim})"


def full_space(field: Field, n: int) -> Subspace:
    return Subspace(n, linalg.identity(field, n))


def zero_space(n: int) -> Subspace:
    return Subspace(n, ())


def validate_structure(c, unit, zero, check_pair=None):
    """Check commutativity, associativity and the unit law of a table.

    Ring-generic: entries may be Scalars or TPolys, so the same code
    validates algebras and one-parameter families (there the checks are
    polynomial identities).  Raises naming the first violating triple.
    """
    d = len(c)
    for i in range(d):
        for j in range(i + 1, d):
            if c[i][j] != c[j][i]:
                raise NotCommutative(f"e{i}*e{j} != e{j}*e{i}")
    for i in range(d):
        for k in range(i, d):
            for j in range(d):
                # (e_i e_j) e_k - e_i (e_j e_k), component by component
                row_ij = c[i][j]
                row_jk = c[j][k]
                for l in range(d):
                    lhs = zero
                    for m in range(d):
                        x = row_ij[m]
                        if x:
                            y = c[m][k][l]
                            if y:
                                lhs = lhs + x * y
                    rhs = zero
                    for m in range(d):
                        x = row_jk[m]
                        if x:
                            y = c[i][m][l]
                            if y:
                                rhs = rhs + x * y
                    if lhs != rhs:
                        raise NotAssociative(f"(e{i}*e{j})*e{k} != e{i}*(e{j}*e{k})")
    if unit is not None:
        for i in range(d):
            for l in range(d):
                acc = zero
                for m in range(d):
                    if unit[m] and c[m][i][l]:
                        acc = acc + unit[m] * c[m][i][l]
                want = 1 if l == i else 0
                if acc != want:
                    raise BadUnit(f"unit*e{i} has wrong e{l}-component")


class FiniteAlgebra:
    """A commutative (optionally unital) algebra of finite dimension."""

    __slots__ = ("field", "dim", "labels", "c", "unit")

    def __init__(self, field: Field, labels, c, unit=None, validate: bool = True):
        d = len(labels)
        c = tuple(
            tuple(tuple(field.scalar(x) for x in row) for row in plane) for plane in c
        )
        if len(c) != d or any(len(p) != d or any(len(r) != d for r in p) for p in c):
            raise DimensionMismatch("structure constants are not d*d*d")
        if unit is not None:
            unit = tuple(field.scalar(x) for x in unit)
            if len(unit) != d:
                raise DimensionMismatch("unit has wrong length")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "labels", tuple(str(x) for x in labels))
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "unit", unit)
        if validate:
            validate_structure(c, unit, field.zero)

    def __setattr__(self, *a):
        raise AttributeError("FiniteAlgebra is immutable")

    @property
    def is_unital(self) -> bool:
        return self.unit is not None

    def coerce_vector(self, v):
        v = tuple(self.field.scalar(x) for x in v)
        if len(v) != self.dim:
            raise DimensionMismatch(f"expected length {self.dim}, got {len(v)}")
        return v

    def basis_vector(self, i: int):
        return tuple(
            self.field.one if j == i else self.field.zero for j in range(self.dim)
        )

    def __eq__(self, other):
        return (
            isinstance(other, FiniteAlgebra)
            and self.field == other.field
            and self.labels == other.labels
            and self.c == other.c
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.field, self.labels, self.c, self.unit))

    def __repr__(self):
        u = "unital" if self.is_unital else "non-unital"
        return f"FiniteAlgebra(dim {self.dim}, {u}, basis {self.labels})"

    def serialize(self) -> dict:
        out = {
            "field": {"kind": self.field.kind, "characteristic": self.field.characteristic},
            "labels": list(self.labels),
            "structure_constants": [
                [[str(x) for x in row] for row in plane] for plane in self.c
            ],
        }
        if self.unit is not None:
            out["unit"] = [str(x) for x in self.unit]
        return out


def algebra_from_constants(field: Field, labels, c, unit=None) -> FiniteAlgebra:
    """Validate a raw structure-constant table and wrap it."""
    return FiniteAlgebra(field, labels, c, unit, validate=True)


def table_multiply(c, u, v, zero):
    """Bilinear contraction against a raw table; ring-generic (TPoly-safe)."""
    d = len(c)
    out = [zero] * d
    for i, ui in enumerate(u):
        if not ui:
            continue
        plane = c[i]
        for j, vj in enumerate(v):
            if not vj:
                continue
            f = ui * vj
            for k, ck in enumerate(plane[j]):
                if ck:
                    out[k] = out[k] + f * ck
    return tuple(out)


def multiply(A: FiniteAlgebra, u, v):
    """The product of two coefficient vectors, by bilinear contraction."""
    u = A.coerce_vector(u)
    v = A.coerce_vector(v)
    return table_multiply(A.c, u, v, A.field.zero)


def ideal_span(A: FiniteAlgebra, gens) -> Subspace:
    """Smallest multiplication-closed subspace containing the generators."""
    gens = [A.coerce_vector(g) for g in gens]
    span = Subspace(A.dim, gens)
    while True:
        new_rows = list(span.rows)
        for b in span.rows:
            for i in range(A.dim):
                new_rows.append(multiply(A, b, A.basis_vector(i)))
        grown = Subspace(A.dim, new_rows)
        if grown.dim == span.dim:
            return span
        span = grown


def annihilator(A: FiniteAlgebra, I: Subspace) -> Subspace:
    """{a in A : a * I = 0}, the kernel of the stacked multiplication maps."""
    if I.ambient_dim != A.dim:
        raise DimensionMismatch("subspace lives in the wrong ambient space")
    constraints = []
    for v in I.rows:
        # row i of the constraint block is e_i * v
        block = [multiply(A, A.basis_vector(i), v) for i in range(A.dim)]
        # a * v = sum_i a_i (e_i v); one linear condition per component
        constraints.extend(zip(*block))
    return Subspace(A.dim, linalg.kernel_basis(A.field, constraints, A.dim))


def direct_product(A: FiniteAlgebra, B: FiniteAlgebra) -> FiniteAlgebra:
    """Componentwise product algebra on the concatenated basis."""
    if A.field != B.field:
        raise FieldMismatch("factors live over different fields")
    da, db = A.dim, B.dim
    d = da + db
    z = A.field.zero
    c = [[[z] * d for _ in range(d)] for _ in range(d)]
    for i in range(da):
        for j in range(da):
            for k in range(da):
                c[i][j][k] = A.c[i][j][k]
    for i in range(db):
        for j in range(db):
            for k in range(db):
                c[da + i][da + j][da + k] = B.c[i][j][k]
    unit = None
    if A.unit is not None and B.unit is not None:
        unit = tuple(A.unit) + tuple(B.unit)
    labels = tuple(f"{l}.1" for l in A.labels) + tuple(f"{l}.2" for l in B.labels)
    return FiniteAlgebra(A.field, labels, c, unit, validate=False)


def base_change(A: FiniteAlgebra, P, labels=None) -> FiniteAlgebra:
    """Rewrite the table in the basis f_i = sum_j P[i][j] e_j."""
    P = tuple(A.coerce_vector(row) for row in P)
    if len(P) != A.dim:
        raise DimensionMismatch("change of basis must be square")
    Pinv = linalg.invert(A.field, P)
    c = []
    for i in range(A.dim):
        plane = []
        for j in range(A.dim):
            w = multiply(A, P[i], P[j])
            plane.append(linalg.vec_mat(w, Pinv))
        c.append(plane)
    unit = linalg.vec_mat(A.unit, Pinv) if A.unit is not None else None
    if labels is None:
        labels = tuple(f"b{i}" for i in range(A.dim))
    return FiniteAlgebra(A.field, labels, c, unit, validate=False)


def functional_on(A: FiniteAlgebra, vec, v) -> Scalar:
    """Apply a functional (coefficient vector in the dual basis) to v."""
    vec = A.coerce_vector(vec)
    v = A.coerce_vector(v)
    return linalg.sum_dot(vec, v)


class AlgebraFamily:
    """An algebra whose structure constants are polynomials in t.

    Commutativity, associativity and the unit law are required as exact
    polynomial identities, so every specialization is valid at once.  An
    optional orientation and named augmentations ride along as TPoly
    vectors.  (Exposed through the families module.)
    """

    __slots__ = ("field", "dim", "labels", "c", "unit", "orientation", "augmentations")

    def __init__(
        self,
        field: Field,
        labels,
        c,
        unit=None,
        orientation=None,
        augmentations=None,
        validate: bool = True,
    ):
        from .scalar import TPoly, as_tpoly

        d = len(labels)
        c = tuple(
            tuple(tuple(as_tpoly(x, field) for x in row) for row in plane)
            for plane in c
        )
        if len(c) != d or any(len(p) != d or any(len(r) != d for r in p) for p in c):
            raise DimensionMismatch("structure constants are not d*d*d")

        def vec(v):
            if v is None:
                return None
            v = tuple(as_tpoly(x, field) for x in v)
            if len(v) != d:
                raise DimensionMismatch("vector has wrong length")
            return v

        object.__setattr__(self, "field", field)
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "labels", tuple(str(x) for x in labels))
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "unit", vec(unit))
        object.__setattr__(self, "orientation", vec(orientation))
        object.__setattr__(
            self,
            "augmentations",
            {k: vec(v) for k, v in (augmentations or {}).items()},
        )
        if validate:
            validate_structure(c, self.unit, TPoly(field))

    def __setattr__(self, *a):
        raise AttributeError("AlgebraFamily is immutable")

    def at(self, value, validate: bool = True) -> FiniteAlgebra:
        """The fiber algebra at t = value."""
        value = self.field.scalar(value)
        c = [
            [[x(value) for x in row] for row in plane] for plane in self.c
        ]
        unit = [x(value) for x in self.unit] if self.unit is not None else None
        return FiniteAlgebra(self.field, self.labels, c, unit, validate=validate)

    def gram(self):
        """Family Gram matrix of the orientation pairing, entries in k[t]."""
        from .scalar import TPoly

        if self.orientation is None:
            raise BadUnit("family carries no orientation")
        z = TPoly(self.field)
        d = self.dim
        return tuple(
            tuple(
                sum((self.c[i][j][k] * self.orientation[k] for k in range(d)), z)
                for j in range(d)
            )
            for i in range(d)
        )

    def serialize(self) -> dict:
        out = {
            "field": {"kind": self.field.kind, "characteristic": self.field.characteristic},
            "labels": list(self.labels),
            "structure_constants": [
                [[x.serialize() for x in row] for row in plane] for plane in self.c
            ],
        }
        if self.unit is not None:
            out["unit"] = [x.serialize() for x in self.unit]
        if self.orientation is not None:
            out["orientation"] = [x.serialize() for x in self.orientation]
        if self.augmentations:
            out["augmentations"] = {
                k: [x.serialize() for x in v] for k, v in self.augmentations.items()
            }
        return out
