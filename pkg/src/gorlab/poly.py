"""Multivariate polynomials, Buchberger's algorithm, quotient algebras, and
graded flat limits of point ideals.

The single monomial order is graded reverse lexicographic with significance
increasing along the declared variable list (the last declared variable is
the largest).  This is the order under which the G-fat-point relations
y_i*y_j, y_i^2 - y_j^2, y_1^3 leave exactly {1, y_1, ..., y_q, y_1^2}
standard, which fixes the basis labels everywhere downstream.
"""

from __future__ import annotations

from itertools import product

from . import linalg
from .algebra import FiniteAlgebra
from .errors import (
    BoundTooSmall,
    DimensionMismatch,
    FieldMismatch,
    InfiniteDimensional,
    UnitIdeal,
    ZeroInput,
)
from .scalar import Field, Scalar

Monomial = tuple  # exponent tuples, one entry per variable


def mono_degree(m: Monomial) -> int:
    return sum(m)


def grevlex_key(m: Monomial):
    """Sort key: ascending under the order described in the module docstring."""
    return (sum(m), tuple(-e for e in m))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_label(m: Monomial, variables) -> str:
    parts = []
    for name, e in zip(variables, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


class MultiPoly:
    """A multivariate polynomial: a map from exponent tuples to nonzero scalars."""

    __slots__ = ("field", "variables", "terms")

    def __init__(self, field: Field, variables, terms):
        variables = tuple(variables)
        n = len(variables)
        clean = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != n:
                raise DimensionMismatch(f"monomial {m} has wrong length")
            c = field.scalar(c)
            if c:
                clean[m] = c
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("MultiPoly is immutable")

    @classmethod
    def zero(cls, field, variables):
        return cls(field, variables, {})

    @classmethod
    def constant(cls, field, variables, c):
        return cls(field, variables, {(0,) * len(variables): c})

    @classmethod
    def variable(cls, field, variables, i):
        m = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(field, variables, {m: 1})

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.field != self.field or other.variables != self.variables:
                raise FieldMismatch("polynomials live in different rings")
            return other
        if isinstance(other, (int, Scalar)) or type(other).__name__ == "Fraction":
            return MultiPoly.constant(self.field, self.variables, other)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash((self.field, self.variables, frozenset(self.terms.items())))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in o.terms.items():
            s = terms.get(m, self.field.zero) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return MultiPoly(self.field, self.variables, terms)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(
            self.field, self.variables, {m: -c for m, c in self.terms.items()}
        )

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = mono_mul(m1, m2)
                s = terms.get(m, self.field.zero) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        return MultiPoly(self.field, self.variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MultiPoly.constant(self.field, self.variables, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c: Scalar) -> "MultiPoly":
        c = self.field.scalar(c)
        return MultiPoly(
            self.field, self.variables, {m: c * v for m, v in self.terms.items()}
        )

    def term_mul(self, m: Monomial, c: Scalar) -> "MultiPoly":
        return MultiPoly(
            self.field,
            self.variables,
            {mono_mul(m, m2): c * c2 for m2, c2 in self.terms.items()},
        )

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ZeroInput("the zero polynomial has no leading monomial")
        return max(self.terms, key=grevlex_key)

    def leading_coeff(self) -> Scalar:
        return self.terms[self.leading_monomial()]

    def monic(self) -> "MultiPoly":
        return self.scale(self.leading_coeff().inverse())

    def total_degree(self) -> int:
        return max((mono_degree(m) for m in self.terms), default=-1)

    def homogeneous_component(self, s: int) -> "MultiPoly":
        return MultiPoly(
            self.field,
            self.variables,
            {m: c for m, c in self.terms.items() if mono_degree(m) == s},
        )

    def evaluate(self, point) -> Scalar:
        point = [self.field.scalar(x) for x in point]
        acc = self.field.zero
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                for _ in range(e):
                    v = v * x
            acc = acc + v
        return acc

    def substitute(self, i: int, value: Scalar) -> "MultiPoly":
        """Plug a scalar into variable i (the variable list is unchanged)."""
        value = self.field.scalar(value)
        out = MultiPoly.zero(self.field, self.variables)
        for m, c in self.terms.items():
            v = c * value**m[i]
            m2 = m[:i] + (0,) + m[i + 1 :]
            out = out + MultiPoly(self.field, self.variables, {m2: v})
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=grevlex_key, reverse=True):
            c = self.terms[m]
            lbl = mono_label(m, self.variables)
            if lbl == "1":
                parts.append(str(c))
            elif c == 1:
                parts.append(lbl)
            else:
                parts.append(f"{c}*{lbl}" if " " not in str(c) else f"({c})*{lbl}")
        return " + ".join(parts)

    __repr__ = __str__


def poly_ring(field: Field, *names):
    """Generators of k[names], for building polynomials with operators."""
    return tuple(
        MultiPoly.variable(field, names, i) for i in range(len(names))
    )


# ---------------------------------------------------------------------------
# division and Buchberger


def normal_form(f: MultiPoly, gb) -> MultiPoly:
    """Remainder of f under multivariate division by a Groebner basis."""
    gb = [g for g in gb if g]
    rem = MultiPoly.zero(f.field, f.variables)
    work = f
    lms = [(g.leading_monomial(), g.leading_coeff(), g) for g in gb]
    while work:
        m = work.leading_monomial()
        c = work.terms[m]
        for lm, lc, g in lms:
            if mono_divides(lm, m):
                work = work - g.term_mul(mono_div(m, lm), c / lc)
                break
        else:
            rem = rem + MultiPoly(f.field, f.variables, {m: c})
            work = work - MultiPoly(f.field, f.variables, {m: c})
    return rem


def s_polynomial(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    lf, lg = f.leading_monomial(), g.leading_monomial()
    l = mono_lcm(lf, lg)
    return f.term_mul(mono_div(l, lf), f.leading_coeff().inverse()) - g.term_mul(
        mono_div(l, lg), g.leading_coeff().inverse()
    )


def groebner_basis(gens) -> list[MultiPoly]:
    """Reduced Groebner basis of the ideal generated by gens.

    Buchberger with the coprimality and chain criteria; output is the unique
    reduced basis, sorted by ascending leading monomial.
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    field, variables = gens[0].field, gens[0].variables
    for g in gens[1:]:
        if g.field != field or g.variables != variables:
            raise FieldMismatch("generators live in different rings")
    basis = [g.monic() for g in gens]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i + 1, len(basis))}

    def lm(i):
        return basis[i].leading_monomial()

    while pairs:
        i, j = min(
            pairs, key=lambda p: (grevlex_key(mono_lcm(lm(p[0]), lm(p[1]))), p)
        )
        pairs.discard((i, j))
        l = mono_lcm(lm(i), lm(j))
        # first Buchberger criterion: coprime leading monomials
        if l == mono_mul(lm(i), lm(j)):
            continue
        # chain criterion: some k with lm(k) | lcm and both side pairs done
        skip = False
        for k in range(len(basis)):
            if k in (i, j) or not mono_divides(lm(k), l):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a not in pairs and b not in pairs:
                skip = True
                break
        if skip:
            continue
        h = normal_form(s_polynomial(basis[i], basis[j]), basis)
        if h:
            h = h.monic()
            basis.append(h)
            new = len(basis) - 1
            pairs.update((k, new) for k in range(new))
    # interreduce to the unique reduced basis: minimalize by leading
    # monomial first, then reduce each tail against the others
    lead = {}
    for g in basis:
        lead.setdefault(g.leading_monomial(), g)
    minimal = [
        g
        for m, g in lead.items()
        if not any(m != m2 and mono_divides(m2, m) for m2 in lead)
    ]
    final = []
    for i, g in enumerate(minimal):
        others = [h for k, h in enumerate(minimal) if k != i]
        final.append(normal_form(g, others).monic())
    final.sort(key=lambda g: grevlex_key(g.leading_monomial()))
    return final


def standard_monomials(gb, cap: int = 100_000) -> list[Monomial]:
    """Monomials outside the leading-term ideal, sorted ascending.

    These form the canonical basis of the quotient ring.  Raises
    InfiniteDimensional when the staircase is infinite or exceeds cap.
    """
    gb = [g for g in gb if g]
    if not gb:
        raise InfiniteDimensional("the zero ideal has infinite quotient")
    nvars = len(gb[0].variables)
    lms = [g.leading_monomial() for g in gb]
    if any(mono_degree(m) == 0 for m in lms):
        return []  # unit ideal: zero ring
    bounds = []
    for i in range(nvars):
        pure = [
            m[i] for m in lms if all(e == 0 for j, e in enumerate(m) if j != i)
        ]
        if not pure:
            raise InfiniteDimensional(f"no pure power of variable {i} in the ideal")
        bounds.append(min(pure))
    out = []
    for m in product(*(range(b) for b in bounds)):
        if not any(mono_divides(lm, m) for lm in lms):
            out.append(m)
            if len(out) > cap:
                raise InfiniteDimensional(f"more than {cap} standard monomials")
    out.sort(key=grevlex_key)
    return out


def quotient_algebra(gens, cap: int = 100_000) -> FiniteAlgebra:
    """Compile a finite-dimensional quotient presentation into an algebra.

    Basis: the standard monomials; structure constants by normal form of
    pairwise products; the unit is the class of 1.
    """
    gens = [g for g in gens if g]
    if not gens:
        raise InfiniteDimensional("the zero ideal has infinite quotient")
    field, variables = gens[0].field, gens[0].variables
    gb = groebner_basis(gens)
    monos = standard_monomials(gb, cap)
    if not monos:
        raise UnitIdeal("the relations generate the unit ideal")
    index = {m: i for i, m in enumerate(monos)}
    d = len(monos)
    z = field.zero
    c = [[[z] * d for _ in range(d)] for _ in range(d)]
    for i, mi in enumerate(monos):
        for j in range(i, d):
            prod = MultiPoly(field, variables, {mono_mul(mi, monos[j]): 1})
            nf = normal_form(prod, gb)
            row = [z] * d
            for m, coeff in nf.terms.items():
                row[index[m]] = coeff
            c[i][j] = row
            c[j][i] = row
    unit = [z] * d
    unit[index[(0,) * len(variables)]] = field.one
    labels = [mono_label(m, variables) for m in monos]
    return FiniteAlgebra(field, labels, c, unit, validate=False)


# ---------------------------------------------------------------------------
# flat limits of point ideals


def monomials_of_degree(nvars: int, s: int) -> list[Monomial]:
    if nvars == 0:
        return [()] if s == 0 else []
    out = []

    def rec(prefix, rem, pos):
        if pos == nvars - 1:
            out.append(tuple(prefix + [rem]))
            return
        for e in range(rem + 1):
            rec(prefix + [e], rem - e, pos + 1)

    rec([], s, 0)
    out.sort(key=grevlex_key)
    return out


def lowest_degree_initial_ideal(gens, degree_bound: int) -> list[MultiPoly]:
    """Initial forms of a point ideal, degree by degree up to the bound.

    For an ideal I of a finite point set, the flat limit at 0 of the
    rescaled family t*V(I) is cut out by the initial forms in(f) of the
    elements of I: the homogeneous components of top degree.  (Under the
    reverse rescaling these are the forms of lowest degree in 1/t, whence
    the traditional name.)  Computed by exact linear algebra on graded
    pieces; the result lists, for each degree s <= degree_bound, an
    independent spanning set of in(I)_s.

    Raises UnitIdeal if 1 is an initial form, and BoundTooSmall when the
    graded quotient has not died by degree_bound (its total dimension over
    all degrees would then not have stabilized).
    """
    gens = [g for g in gens if g]
    if not gens:
        raise ZeroInput("no generators")
    field, variables = gens[0].field, gens[0].variables
    nvars = len(variables)
    D = degree_bound
    monos_by_deg = [monomials_of_degree(nvars, s) for s in range(D + 1)]
    # columns ordered by descending degree so pivots isolate top components
    columns = []
    for s in range(D, -1, -1):
        columns.extend(monos_by_deg[s])
    col_index = {m: i for i, m in enumerate(columns)}
    deg_start = {}
    pos = 0
    for s in range(D, -1, -1):
        deg_start[s] = pos
        pos += len(monos_by_deg[s])

    rows = []
    for g in gens:
        dg = g.total_degree()
        if dg > D:
            continue
        for s in range(D - dg + 1):
            for m in monos_by_deg[s]:
                shifted = g.term_mul(m, field.one)
                row = [field.zero] * len(columns)
                for mm, cc in shifted.terms.items():
                    row[col_index[mm]] = cc
                rows.append(tuple(row))
    red, pivots = linalg.rref(rows, len(columns))

    def col_degree(c: int) -> int:
        return mono_degree(columns[c])

    forms: list[MultiPoly] = []
    count_by_deg = {s: 0 for s in range(D + 1)}
    for r, p in enumerate(pivots):
        s = col_degree(p)
        start = deg_start[s]
        terms = {}
        for k, m in enumerate(monos_by_deg[s]):
            v = red[r][start + k]
            if v:
                terms[m] = v
        forms.append(MultiPoly(field, variables, terms))
        count_by_deg[s] += 1
    if count_by_deg[0]:
        raise UnitIdeal("1 is an initial form: the input ideal is the unit ideal")
    if len(monos_by_deg[D]) - count_by_deg[D] != 0:
        raise BoundTooSmall(
            f"graded quotient still has dimension in degree {D}; raise the bound"
        )
    forms.sort(key=lambda f: grevlex_key(f.leading_monomial()))
    return forms


def det_multipoly(matrix, field: Field, variables) -> MultiPoly:
    """Determinant of a matrix of polynomials, by minor expansion with
    memoization over column subsets (fine through dimension ~10)."""
    n = len(matrix)
    if n == 0:
        return MultiPoly.constant(field, variables, 1)
    memo: dict = {}

    def rec(cols: tuple) -> MultiPoly:
        if cols in memo:
            return memo[cols]
        r = n - len(cols)
        if not cols:
            return MultiPoly.constant(field, variables, 1)
        acc = MultiPoly.zero(field, variables)
        sign = 1
        for pos, c in enumerate(cols):
            entry = matrix[r][c]
            if entry:
                sub = rec(cols[:pos] + cols[pos + 1 :])
                term = entry * sub
                acc = acc + (term if sign > 0 else -term)
            sign = -sign
        memo[cols] = acc
        return acc

    return rec(tuple(range(n)))


def graded_hilbert(forms, nvars: int, bound: int) -> list[int]:
    """Hilbert function of k[x]/<forms> through the bound, assuming the forms
    are the per-degree independent spanning sets produced above."""
    counts = [0] * (bound + 1)
    for f in forms:
        counts[f.total_degree()] += 1
    return [
        len(monomials_of_degree(nvars, s)) - counts[s] for s in range(bound + 1)
    ]
