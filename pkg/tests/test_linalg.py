import random

import pytest

from gorlab import GF, QQ, linalg
from gorlab.errors import Singular
from gorlab.scalar import TPoly


def M(field, rows):
    return linalg.mat([[field.scalar(x) for x in r] for r in rows])


def test_rref_canonical():
    red, piv = linalg.rref(M(QQ, [[2, 4], [1, 2]]), 2)
    assert red == M(QQ, [[1, 2]])
    assert piv == (0,)
    red2, _ = linalg.rref(M(QQ, [[1, 2], [3, 7]]), 2)
    assert red2 == linalg.identity(QQ, 2)


def test_kernel_basis():
    k = linalg.kernel_basis(QQ, M(QQ, [[1, 1, 0]]), 3)
    assert len(k) == 2
    for v in k:
        assert linalg.mat_vec(M(QQ, [[1, 1, 0]]), v) == (QQ.zero,)


def test_det_and_inverse():
    A = M(QQ, [[1, 2], [3, 4]])
    assert linalg.det(QQ, A) == QQ.scalar(-2)
    Ainv = linalg.invert(QQ, A)
    assert linalg.mat_mul(A, Ainv) == linalg.identity(QQ, 2)
    with pytest.raises(Singular):
        linalg.invert(QQ, M(QQ, [[1, 2], [2, 4]]))
    assert linalg.det(QQ, ()) == QQ.one


def test_solve_right():
    A = M(QQ, [[2, 0], [1, 1]])
    x = linalg.solve_right(QQ, A, [QQ.scalar(4), QQ.scalar(5)])
    assert x == (QQ.scalar(2), QQ.scalar(3))
    with pytest.raises(Singular):
        linalg.solve_right(QQ, M(QQ, [[1, 1], [1, 1]]), [QQ.one, QQ.zero])


def test_solve_right_affine_deterministic():
    # one equation, two unknowns: free coordinate pinned to zero
    x = linalg.solve_right_affine(QQ, M(QQ, [[1, 1]]), [QQ.scalar(3)])
    assert x == (QQ.scalar(3), QQ.zero)


def test_bareiss_matches_field_det():
    rng = random.Random(7)
    zero, one = TPoly(QQ), TPoly.const(QQ.one)
    for _ in range(20):
        n = rng.randint(1, 4)
        rows = [[QQ.scalar(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
        d1 = linalg.det(QQ, rows)
        poly_rows = [[TPoly.const(x) for x in r] for r in rows]
        d2 = linalg.det_in_domain(zero, one, poly_rows, lambda a, b: a.divexact(b))
        assert d2 == TPoly.const(d1)


def test_bareiss_polynomial_matrix():
    t = TPoly.t(QQ)
    zero, one = TPoly(QQ), TPoly.const(QQ.one)
    m = [[t, one], [one, t]]
    d = linalg.det_in_domain(zero, one, m, lambda a, b: a.divexact(b))
    assert d == t * t - 1


def test_row_solver_membership_and_tpoly_rhs():
    rows = M(QQ, [[1, 0, 1], [0, 1, 1]])
    solver = linalg.RowSolver(QQ, rows)
    c = solver.coords([QQ.scalar(2), QQ.scalar(3), QQ.scalar(5)])
    assert c == (QQ.scalar(2), QQ.scalar(3))
    with pytest.raises(Singular):
        solver.coords([QQ.one, QQ.zero, QQ.zero])
    t = TPoly.t(QQ)
    c2 = solver.coords((t, 2 * t, 3 * t))
    assert c2[0] == t and c2[1] == 2 * t


def test_complement_in():
    inner = M(QQ, [[1, 0, 0]])
    outer = M(QQ, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    comp = linalg.complement_in(QQ, inner, outer, 3)
    assert len(comp) == 2


def test_extend_to_basis():
    rows = M(GF(5), [[1, 2, 0]])
    extra = linalg.extend_to_basis(GF(5), rows, 3)
    full, _ = linalg.rref(list(rows) + list(extra), 3)
    assert len(full) == 3
