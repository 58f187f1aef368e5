"""One-parameter algebra families over k[t].

Specialization, the rank-4 robber family of two colliding double points,
the two homotopies built from its augmentations, multiplication-scaling
degenerations of non-unital algebras, and the rescaling symmetry check for
degeneration families.  Family validity always means exact polynomial
identities, which subsumes validity of every fiber at once.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra import AlgebraFamily, FiniteAlgebra
from .errors import BadShape, NotIsotropic, Singular, ZeroScalar
from .frobenius import (
    Augmented,
    NonUnitalOriented,
    OrientedAlgebra,
    _consum_core,
    isotropy_check,
    socle_generator,
)
from .scalar import Field, TPoly, as_tpoly, tpoly_eval

__all__ = [
    "AlgebraFamily",
    "Fiber",
    "family_det_is_unit",
    "family_socle_generator",
    "gm_rescale_check",
    "homotopy_families",
    "robber_family",
    "scale_multiplication_family",
    "specialize",
]


@dataclass(frozen=True)
class Fiber:
    """A specialized family: the fiber algebra plus evaluated functionals."""

    algebra: FiniteAlgebra
    orientation: tuple | None
    augmentations: dict

    def oriented(self) -> OrientedAlgebra:
        if self.orientation is None:
            raise Singular("fiber carries no orientation")
        return OrientedAlgebra(self.algebra, self.orientation)

    def augmented(self, name: str) -> Augmented:
        return Augmented(self.oriented(), self.augmentations[name])


def specialize(F: AlgebraFamily, c) -> Fiber:
    """Evaluate every structure constant and functional at t = c; the fiber
    is re-validated."""
    c = F.field.scalar(c)
    alg = F.at(c, validate=True)
    ori = (
        tuple(tpoly_eval(x, c) for x in F.orientation)
        if F.orientation is not None
        else None
    )
    augs = {
        k: tuple(tpoly_eval(x, c) for x in v) for k, v in F.augmentations.items()
    }
    return Fiber(alg, ori, augs)


def family_det_is_unit(F: AlgebraFamily) -> bool:
    """Whether det of the family Gram matrix is a nonzero constant, i.e. the
    orientation is non-degenerate simultaneously in every fiber."""
    gram = F.gram()
    zero = TPoly(F.field)
    one = TPoly.const(F.field.one)
    d = linalg.det_in_domain(zero, one, gram, lambda a, b: a.divexact(b))
    return bool(d) and d.is_constant()


def family_augmentation_check(F: AlgebraFamily, name: str) -> bool:
    """Whether a named augmentation is an algebra map to k[t], as exact
    polynomial identities (e(1) = 1 and multiplicativity on basis pairs)."""
    e = F.augmentations[name]
    if F.unit is None or linalg.sum_dot(e, F.unit) != 1:
        return False
    for i in range(F.dim):
        for j in range(i, F.dim):
            if linalg.sum_dot(F.c[i][j], e) != e[i] * e[j]:
                return False
    return True


def family_socle_generator(F: AlgebraFamily, aug: str):
    """Socle generator of a family augmentation, as a TPoly vector.

    Solves gram * x = e by Cramer determinants (Bareiss, fraction-free);
    since a valid oriented family has unit determinant, the solution is
    polynomial.
    """
    gram = [list(r) for r in F.gram()]
    e = F.augmentations[aug]
    zero = TPoly(F.field)
    one = TPoly.const(F.field.one)

    def bdet(m):
        return linalg.det_in_domain(zero, one, m, lambda a, b: a.divexact(b))

    D = bdet(gram)
    if not D or not D.is_constant():
        raise Singular("family Gram determinant is not a unit")
    dinv = D.constant_value().inverse()
    out = []
    d = F.dim
    for i in range(d):
        m = [
            [e[r] if c == i else gram[r][c] for c in range(d)]
            for r in range(d)
        ]
        out.append(bdet(m) * dinv)
    return tuple(out)


def robber_family(field: Field) -> AlgebraFamily:
    """Two double points colliding at t = 0: the rank-4 family on basis
    (1, x, x^2, x^3) with rewrite x^4 = 2t x^3 - t^2 x^2.

    Carries the orientation extracting the x^3 coefficient and the two
    augmentations sending x to 0 ("const") and to t ("mv").
    """
    t = TPoly.t(field)
    z = TPoly(field)
    o = TPoly.const(field.one)

    def vec(*coeffs):
        return tuple(as_tpoly(x, field) for x in coeffs)

    powers = {
        0: vec(1, 0, 0, 0),
        1: vec(0, 1, 0, 0),
        2: vec(0, 0, 1, 0),
        3: vec(0, 0, 0, 1),
        4: (z, z, -(t**2), 2 * t),
        5: (z, z, -2 * t**3, 3 * t**2),
        6: (z, z, -3 * t**4, 4 * t**3),
    }
    c = tuple(tuple(powers[i + j] for j in range(4)) for i in range(4))
    fam = AlgebraFamily(
        field,
        ("1", "x", "x^2", "x^3"),
        c,
        unit=vec(1, 0, 0, 0),
        orientation=vec(0, 0, 0, 1),
        augmentations={"const": vec(1, 0, 0, 0), "mv": (o, t, t**2, t**3)},
        validate=True,
    )
    if not family_det_is_unit(fam):  # pragma: no cover
        raise Singular("robber family lost its orientation")
    for name in ("const", "mv"):  # pragma: no branch
        if not family_augmentation_check(fam, name):  # pragma: no cover
            raise Singular(f"robber augmentation {name} is not an algebra map")
    return fam


@dataclass(frozen=True)
class HomotopyFamilies:
    """The two homotopies out of the robber construction.

    h_const and h_mv share structure constants and orientation (literally
    the same tuples) and differ only in the distinguished augmentation
    "aug"; both also carry the other one under its own name.  `project`
    maps a vector of the ambient product T + robber (length dim(T) + 4,
    entries Scalar or TPoly) to its class in the family basis.
    """

    h_const: AlgebraFamily
    h_mv: AlgebraFamily
    project: object


def homotopy_families(T: Augmented) -> HomotopyFamilies:
    """Connected sum of the constant family on T with the robber family,
    carried out over k[t]; endpoints interpolate between adding a split-off
    double point with T's augmentation and with the double point's own."""
    if not isotropy_check(T.oa, T.e):
        raise NotIsotropic("input augmentation is not isotropic")
    f = T.oa.field
    robber = robber_family(f)
    x1 = socle_generator(T.oa, T.e)
    x2 = family_socle_generator(robber, "const")
    zero = TPoly(f)
    data = _consum_core(
        f,
        {"c": T.algebra.c, "unit": T.algebra.unit},
        {"c": robber.c, "unit": tuple(u.constant_value() for u in robber.unit)},
        T.e,
        tuple(u.constant_value() for u in robber.augmentations["const"]),
        x1,
        x2,
        T.oa.phi,
        robber.orientation,
        zero,
    )
    e_const = data.e_left
    e_mv = data.e_right_of(robber.augmentations["mv"])
    base = AlgebraFamily(
        f,
        data.labels,
        data.c,
        unit=data.unit,
        orientation=data.phi,
        augmentations={"const": e_const, "mv": e_mv},
        validate=True,
    )
    if not family_det_is_unit(base):  # pragma: no cover
        raise Singular("homotopy family lost its orientation")
    for name in ("const", "mv"):  # pragma: no branch
        if not family_augmentation_check(base, name):  # pragma: no cover
            raise Singular(f"augmentation {name} does not descend to the sum")
    h_const = AlgebraFamily(
        f,
        base.labels,
        base.c,
        unit=base.unit,
        orientation=base.orientation,
        augmentations={"aug": base.augmentations["const"], **base.augmentations},
        validate=False,
    )
    h_mv = AlgebraFamily(
        f,
        base.labels,
        base.c,
        unit=base.unit,
        orientation=base.orientation,
        augmentations={"aug": base.augmentations["mv"], **base.augmentations},
        validate=False,
    )
    return HomotopyFamilies(h_const, h_mv, data.project)


def scale_multiplication_family(nu: NonUnitalOriented) -> AlgebraFamily:
    """The non-unital family with multiplication scaled by t and constant
    pairing: fiber 0 has zero multiplication, fiber 1 is the input."""
    f = nu.algebra.field
    t = TPoly.t(f)
    c = tuple(
        tuple(tuple(TPoly.const(x) * t for x in row) for row in plane)
        for plane in nu.algebra.c
    )
    return AlgebraFamily(f, nu.algebra.labels, c, unit=None, validate=True)


def gm_rescale_check(F: AlgebraFamily, c) -> bool:
    """Verify the rescaling symmetry of a degeneration family in the shape
    (1, x, V): the map 1 -> 1, x -> x/c^4, v -> v/c^2 must transport the
    fiber at 1 isomorphically onto the fiber at c^2."""
    f = F.field
    c = f.scalar(c)
    if not c:
        raise ZeroScalar("rescaling needs a nonzero scalar")
    d = F.dim
    if d < 2:
        raise BadShape("family is too small to have the (1, x, V) shape")
    one_vec = tuple(1 if i == 0 else 0 for i in range(d))
    if F.unit is None or tuple(
        x.constant_value() if x.is_constant() else None for x in F.unit
    ) != tuple(f.scalar(v) for v in one_vec):
        raise BadShape("unit must be the first basis vector")
    zero = TPoly(f)
    for j in range(1, d):
        if F.c[1][j] != tuple([zero] * d):
            raise BadShape("x must annihilate x and V")
    for i in range(2, d):
        for j in range(2, d):
            if F.c[i][j][0]:
                raise BadShape("V products may not hit the unit component")
    A1 = F.at(1, validate=False)
    A2 = F.at(c * c, validate=False)
    s = [f.one, (c**4).inverse()] + [(c * c).inverse()] * (d - 2)
    for i in range(d):
        for j in range(d):
            for k in range(d):
                if s[k] * A1.c[i][j][k] != s[i] * s[j] * A2.c[i][j][k]:
                    return False
    return True
