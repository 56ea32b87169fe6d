from fractions import Fraction

from ncgraded import linalg
from ncgraded.scalars import QQ, Field

F = Field(13)


def test_rref_identity():
    a = linalg.as_matrix(F, [[1, 0], [0, 1]])
    r, piv = linalg.rref(F, a)
    assert piv == [0, 1]
    assert (r == linalg.eye(F, 2)).all()


def test_rank_and_nullspace_mod_p():
    a = linalg.as_matrix(F, [[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert linalg.rank(F, a) == 2
    ns = linalg.nullspace(F, a)
    assert ns.shape == (3, 1)
    assert not linalg.matmul(F, a, ns).any()


def test_solve_consistent_and_inconsistent():
    a = linalg.as_matrix(F, [[1, 1], [0, 1]])
    b = linalg.as_matrix(F, [[3], [2]])
    x = linalg.solve(F, a, b)
    assert (linalg.matmul(F, a, x) == b).all()


def test_solve_no_solution_returns_none():
    a = linalg.as_matrix(F, [[1, 1], [1, 1]])
    b = linalg.as_matrix(F, [[0], [1]])
    assert linalg.solve(F, a, b) is None


def test_inverse_mod_p():
    a = linalg.as_matrix(F, [[2, 1], [1, 1]])
    inv = linalg.inverse(F, a)
    assert (linalg.matmul(F, a, inv) == linalg.eye(F, 2)).all()


def test_rational_exactness():
    # a matrix that loses rank under floating point but not exactly
    a = linalg.as_matrix(QQ, [[Fraction(1, 3), Fraction(1, 6)],
                              [Fraction(2, 3), Fraction(1, 3)]])
    assert linalg.rank(QQ, a) == 1
    ns = linalg.nullspace(QQ, a)
    assert ns.shape == (2, 1)


def test_complement_pivots():
    span = linalg.as_matrix(F, [[1], [0], [0]])
    cands = linalg.eye(F, 3)
    piv = linalg.complement_pivots(F, span, cands)
    assert len(piv) == 2
    assert 0 not in piv


def test_in_span():
    basis = linalg.as_matrix(F, [[1, 0], [0, 1], [0, 0]])
    assert linalg.in_span(F, basis, linalg.as_matrix(F, [[5], [7], [0]])[:, 0])
    assert not linalg.in_span(F, basis, linalg.as_matrix(F, [[0], [0], [1]])[:, 0])


def test_column_space_basis():
    a = linalg.as_matrix(F, [[1, 2, 0], [2, 4, 1]])
    basis, piv = linalg.column_space_basis(F, a)
    assert piv == [0, 2]
    assert basis.shape == (2, 2)
