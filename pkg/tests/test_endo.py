import numpy as np

from ncgraded.endo import (
    as_regular_over_R_check,
    b0_module,
    check_nonnegative,
    degree_zero_algebra,
    quiver_of,
    radical_and_idempotents,
)
from ncgraded.findim import radical_basis


def test_endo_dims_match_series(B, window):
    # End(X) for the five-summand module: dims 9(2d+1), frozen from the
    # rational form 9(1+t)/(1-t)^2 and reproduced degreewise
    for d in range(0, window.algebra_degree_cap + 1):
        assert B.algebra.dim(d) == 9 * (2 * d + 1)


def test_endo_nonnegative(B, window):
    assert check_nonnegative(B)
    for d in range(window.internal_lo, 0):
        assert B.algebra.dim(d) == 0


def test_degree_zero_structure(B):
    B0 = degree_zero_algebra(B)
    assert B0.n == 9
    rad = radical_basis(B0)
    assert rad.shape[1] == 4
    # rad^2 = 0
    for a in range(4):
        for b in range(4):
            assert not B0.mul(rad[:, a], rad[:, b]).any()
    rad2, idems = radical_and_idempotents(B0)
    assert len(idems) == 5


def test_quiver_shape(B):
    B0 = degree_zero_algebra(B)
    Q = quiver_of(B0)
    assert len(Q.vertices) == 5
    assert len(Q.arrows) == 4
    sources = {s for s, _, _ in Q.arrows}
    targets = {t for _, t, _ in Q.arrows}
    assert len(sources) == 4 and len(targets) == 1
    assert all(m == 1 for _, _, m in Q.arrows)
    # dim kQ = vertices + arrows = 9 = dim B0
    assert len(Q.vertices) + sum(m for _, _, m in Q.arrows) == B0.n


def test_endo_associativity_spot_check(B, F13):
    for d1, d2, d3 in [(0, 0, 0), (0, 1, 0), (1, 1, 0)]:
        t12 = B.algebra.mult_tensor(d1, d2)
        t3 = B.algebra.mult_tensor(d1 + d2, d3)
        t23 = B.algebra.mult_tensor(d2, d3)
        t1 = B.algebra.mult_tensor(d1, d2 + d3)
        lhs = np.tensordot(t12, t3, axes=(2, 0)) % F13.p
        rhs = np.tensordot(t1, t23, axes=(1, 2)).transpose(0, 2, 3, 1) % F13.p
        assert (lhs == rhs).all()


def test_as_regular_over_degree_zero(B, window):
    rep = as_regular_over_R_check(B, 2, 1, window)
    assert rep["verdict"] is True
    assert rep["terminates_at_d"] is True
    ext0 = rep["ext"].get(0, rep["ext"].get("0", {}))
    assert not any(ext0.values())
