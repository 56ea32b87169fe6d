import numpy as np
import pytest

from ncgraded.errors import FieldTooSmall, NonSplit
from ncgraded.findim import (
    FinDimAlgebra,
    gabriel_quiver,
    is_local,
    primitive_idempotents,
    radical_basis,
)
from ncgraded.scalars import Field

F = Field(13)


def _group_algebra_z2():
    # k[Z/2]: basis 1, g with g^2 = 1
    mult = np.zeros((2, 2, 2), dtype=np.int64)
    mult[0, 0, 0] = mult[0, 1, 1] = mult[1, 0, 1] = mult[1, 1, 0] = 1
    unit = np.array([1, 0], dtype=np.int64)
    return FinDimAlgebra(F, mult, unit)


def _dual_numbers(field=F):
    # k[e]/(e^2): basis 1, e
    mult = np.zeros((2, 2, 2), dtype=np.int64)
    mult[0, 0, 0] = mult[0, 1, 1] = mult[1, 0, 1] = 1
    unit = np.array([1, 0], dtype=np.int64)
    return FinDimAlgebra(field, mult, unit)


def _mat2():
    # 2x2 matrices, basis e11, e12, e21, e22
    mult = np.zeros((4, 4, 4), dtype=np.int64)
    idx = {(1, 1): 0, (1, 2): 1, (2, 1): 2, (2, 2): 3}
    for (a, b), i in idx.items():
        for (c, d), j in idx.items():
            if b == c:
                mult[i, j, idx[(a, d)]] = 1
    unit = np.array([1, 0, 0, 1], dtype=np.int64)
    return FinDimAlgebra(F, mult, unit)


def test_axiom_check_rejects_bad_unit():
    mult = np.zeros((1, 1, 1), dtype=np.int64)
    with pytest.raises(Exception):
        FinDimAlgebra(F, mult, np.array([1], dtype=np.int64))


def test_semisimple_group_algebra():
    alg = _group_algebra_z2()
    assert radical_basis(alg).shape[1] == 0
    assert len(primitive_idempotents(alg)) == 2


def test_dual_numbers_local():
    alg = _dual_numbers()
    assert radical_basis(alg).shape[1] == 1
    assert is_local(alg)
    assert len(primitive_idempotents(alg)) == 1


def test_matrix_algebra_radical_zero_but_nonsplit_corner():
    alg = _mat2()
    assert radical_basis(alg).shape[1] == 0
    with pytest.raises(NonSplit):
        primitive_idempotents(alg)


def test_field_too_small_guard():
    small = _dual_numbers(Field(2))
    with pytest.raises(FieldTooSmall):
        radical_basis(small)


def test_gabriel_quiver_of_triangular_matrices():
    # upper triangular 2x2 matrices: basis e11, e22, e12
    mult = np.zeros((3, 3, 3), dtype=np.int64)
    mult[0, 0, 0] = 1  # e11 e11
    mult[1, 1, 1] = 1  # e22 e22
    mult[0, 2, 2] = 1  # e11 e12
    mult[2, 1, 2] = 1  # e12 e22
    unit = np.array([1, 1, 0], dtype=np.int64)
    alg = FinDimAlgebra(F, mult, unit)
    idems, arrows = gabriel_quiver(alg)
    assert len(idems) == 2
    assert int(np.asarray(arrows).sum()) == 1
