"""Dense exact linear algebra over a base field.

Matrices are tuples of row tuples of Scalar.  Row-space bases are always
canonicalized to reduced row echelon form, so subspace equality is literal
matrix equality.  The matrix-vector helpers are ring-generic: they also act
on vectors of TPoly, which is how family computations stay polynomial.
"""

from __future__ import annotations

from .errors import DimensionMismatch, Singular
from .scalar import Field


def mat(rows):
    return tuple(tuple(r) for r in rows)


def identity(field: Field, n: int):
    z, o = field.zero, field.one
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def zeros(field: Field, n: int, m: int):
    z = field.zero
    return tuple((z,) * m for _ in range(n))


def transpose(m):
    return tuple(zip(*m)) if m else ()


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum_dot(ra, rb) for rb in bt) for ra in a)


def sum_dot(u, v):
    acc = None
    for x, y in zip(u, v):
        if not x or not y:
            continue
        acc = x * y if acc is None else acc + x * y
    if acc is None:
        # all terms vanished; recover a zero of the right kind
        return u[0] * v[0] if u else 0
    return acc


def mat_vec(m, v):
    return tuple(sum_dot(row, v) for row in m)


def vec_mat(v, m):
    return mat_vec(transpose(m), v)


def rref(rows, ncols=None):
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    work = [list(r) for r in rows]
    if ncols is None:
        ncols = len(work[0]) if work else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][c].inverse()
        work[r] = [inv * x for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [a - f * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return mat(work[:r]), tuple(pivots)


def rank(rows, ncols=None):
    return len(rref(rows, ncols)[0])


def kernel_basis(field: Field, rows, ncols: int):
    """RREF basis of the right null space {x : M x = 0}."""
    red, pivots = rref(rows, ncols)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    z, o = field.zero, field.one
    basis = []
    for fcol in free:
        v = [z] * ncols
        v[fcol] = o
        for r, pcol in enumerate(pivots):
            v[pcol] = -red[r][fcol]
        basis.append(tuple(v))
    return rref(basis, ncols)[0]


def det(field: Field, m):
    """Determinant by exact Gaussian elimination (field entries)."""
    n = len(m)
    if n == 0:
        return field.one
    work = [list(r) for r in m]
    out = field.one
    for c in range(n):
        pivot = next((i for i in range(c, n) if work[i][c]), None)
        if pivot is None:
            return field.zero
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            out = -out
        out = out * work[c][c]
        inv = work[c][c].inverse()
        for i in range(c + 1, n):
            if work[i][c]:
                f = work[i][c] * inv
                work[i] = [a - f * b for a, b in zip(work[i], work[c])]
    return out


def det_in_domain(zero, one, m, exact_div):
    """Bareiss fraction-free determinant over an integral domain.

    ``exact_div(a, b)`` must perform the (guaranteed exact) division used by
    the Bareiss recurrence; used for determinants of TPoly matrices.
    """
    n = len(m)
    if n == 0:
        return one
    work = [list(r) for r in m]
    sign = 1
    prev = one
    for c in range(n - 1):
        pivot = next((i for i in range(c, n) if work[i][c]), None)
        if pivot is None:
            return zero
        if pivot != c:
            work[c], work[pivot] = work[pivot], work[c]
            sign = -sign
        for i in range(c + 1, n):
            for j in range(c + 1, n):
                work[i][j] = exact_div(
                    work[c][c] * work[i][j] - work[i][c] * work[c][j], prev
                )
            work[i][c] = zero
        prev = work[c][c]
    d = work[n - 1][n - 1]
    return -d if sign < 0 else d


def invert(field: Field, m):
    n = len(m)
    aug = [list(r) + list(e) for r, e in zip(m, identity(field, n))]
    red, pivots = rref(aug, 2 * n)
    if list(pivots[:n]) != list(range(n)) or len(red) < n:
        raise Singular("matrix is not invertible")
    return mat(row[n:] for row in red)


def solve_right(field: Field, m, b):
    """The unique x with M x = b; raises Singular otherwise."""
    n = len(m)
    ncols = len(m[0]) if m else 0
    aug = [list(r) + [bv] for r, bv in zip(m, b)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        raise Singular("inconsistent system")
    if len(pivots) < ncols:
        raise Singular("underdetermined system")
    x = [field.zero] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][ncols]
    return tuple(x)


def solve_right_affine(field: Field, m, b):
    """Some solution of M x = b, free coordinates set to 0 (canonical)."""
    ncols = len(m[0]) if m else 0
    aug = [list(r) + [bv] for r, bv in zip(m, b)]
    red, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        raise Singular("inconsistent system")
    x = [field.zero] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][ncols]
    return tuple(x)


class RowSolver:
    """Coordinates with respect to a fixed full-rank row basis.

    The basis must have field entries; the vectors being expressed may have
    TPoly entries (constant matrix, polynomial right-hand side), which keeps
    all family computations free of polynomial elimination.
    """

    def __init__(self, field: Field, rows):
        self.rows = mat(rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        red, pivots = rref(self.rows, self.ncols)
        if len(red) != len(self.rows):
            raise Singular("rows are dependent")
        self.pivots = pivots
        # coords of v = v[pivots] @ inv(rows[:, pivots])
        sub = mat(tuple(row[p] for p in pivots) for row in self.rows)
        self._inv = invert(field, sub)

    def coords(self, v):
        sel = tuple(v[p] for p in self.pivots)
        c = vec_mat(sel, self._inv)
        # membership check: the expressed combination must reproduce v
        recon = [sum_dot(c, col) for col in zip(*self.rows)]
        for a, b in zip(recon, v):
            if a != b:
                raise Singular("vector is not in the row space")
        return c


def extend_to_basis(field: Field, rows, ambient: int):
    """Standard vectors completing an rref row set to a basis of k^ambient."""
    red, pivots = rref(rows, ambient)
    pivset = set(pivots)
    z, o = field.zero, field.one
    extra = []
    for c in range(ambient):
        if c not in pivset:
            v = [z] * ambient
            v[c] = o
            extra.append(tuple(v))
    return mat(extra)


def complement_in(field: Field, inner, outer, ambient: int):
    """Rows of `outer` completing `inner` to a basis of the outer row space.

    Both inputs must be rref bases with inner contained in outer; the choice
    is deterministic (greedy scan in row order).
    """
    chosen = [list(r) for r in inner]
    out = []
    cur_rank = len(rref(chosen, ambient)[0]) if chosen else 0
    for row in outer:
        if cur_rank == len(outer):
            break
        cand = chosen + [list(row)]
        r = len(rref(cand, ambient)[0])
        if r > cur_rank:
            chosen = cand
            cur_rank = r
            out.append(tuple(row))
    if cur_rank != len(outer):
        raise DimensionMismatch("inner space is not contained in outer space")
    return mat(out)
