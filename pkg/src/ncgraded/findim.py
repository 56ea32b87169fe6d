"""Finite-dimensional associative algebras by structure constants.

Provides the Jacobson radical (trace-form kernel, valid over GF(p) with
p exceeding the dimension), a complete orthogonal set of primitive
idempotents lifted from the semisimple quotient, and the Gabriel quiver.
Scalars are assumed split (the semisimple quotient must be a product of
matrix algebras over the base field); NonSplit is raised otherwise.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .errors import FieldTooSmall, NonSplit, NotSemisimple
from .scalars import Field


class FinDimAlgebra:
    """Associative unital algebra on basis e_0..e_{n-1} with structure tensor
    mult[i, j, :] = coords of e_i e_j."""

    def __init__(self, field: Field, mult: np.ndarray, unit: np.ndarray, labels=None,
                 check: bool = True):
        self.field = field
        self.mult = mult
        self.unit = np.asarray(unit)
        self.n = mult.shape[0]
        self.labels = list(labels) if labels is not None else [f"b{i}" for i in range(self.n)]
        if check:
            self._check_axioms()

    def _check_axioms(self):
        f = self.field
        n = self.n
        # (e_i e_j) e_k = e_i (e_j e_k), checked as one tensor identity
        left = np.tensordot(self.mult, self.mult, axes=(2, 0))  # (i, j, k, l)
        right = np.tensordot(self.mult, self.mult, axes=(2, 1)).transpose(2, 0, 1, 3)
        if f.is_prime_field:
            left %= f.p
            right %= f.p
            ok = (left == right).all()
        else:
            ok = all(x == y for x, y in zip(left.flat, right.flat))
        if not ok:
            raise ValueError("structure constants are not associative")
        for i in range(n):
            v = linalg.zeros(f, n, 1)[:, 0]
            v[i] = f.one
            if not _veq(f, self.mul(self.unit, v), v) or not _veq(f, self.mul(v, self.unit), v):
                raise ValueError("unit vector fails the unit law")

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        out = np.tensordot(np.tensordot(a, self.mult, axes=(0, 0)), b, axes=(0, 0))
        if self.field.is_prime_field:
            out %= self.field.p
        return out

    def left_mult(self, a: np.ndarray) -> np.ndarray:
        m = np.tensordot(a, self.mult, axes=(0, 0)).T  # (out, in)
        if self.field.is_prime_field:
            m %= self.field.p
        return m

    def right_mult(self, b: np.ndarray) -> np.ndarray:
        m = np.tensordot(self.mult, b, axes=(1, 0)).T
        if self.field.is_prime_field:
            m %= self.field.p
        return m

    def element(self, i: int) -> np.ndarray:
        v = linalg.zeros(self.field, self.n, 1)[:, 0]
        v[i] = self.field.one
        return v


def _veq(field, a, b) -> bool:
    if field.is_prime_field:
        return bool(((a - b) % field.p == 0).all())
    return all(field.is_zero(field.sub(x, y)) for x, y in zip(a, b))


def radical_basis(alg: FinDimAlgebra) -> np.ndarray:
    """Columns = basis of the Jacobson radical, via the trace form
    G_{ij} = tr(L_{e_i} L_{e_j}); its kernel is rad when char 0 or p > dim."""
    f = alg.field
    n = alg.n
    if f.is_prime_field and f.p <= n:
        raise FieldTooSmall(f"trace-form radical needs p > dim; got p={f.p}, dim={n}")
    lmats = [alg.left_mult(alg.element(i)) for i in range(n)]
    gram = linalg.zeros(f, n, n)
    for i in range(n):
        for j in range(i, n):
            t = np.trace(lmats[i] @ lmats[j])
            t = f(int(t) if f.is_prime_field else t)
            gram[i, j] = t
            gram[j, i] = t
    rad = linalg.nullspace(f, gram)
    # the kernel must be nilpotent; verify by raising the span
    span = rad
    for _ in range(n):
        if span.shape[1] == 0:
            return rad
        prods = []
        for a in range(span.shape[1]):
            for b in range(rad.shape[1]):
                prods.append(alg.mul(span[:, a], rad[:, b]))
        span = np.stack(prods, axis=1) if prods else linalg.zeros(f, n, 0)
        span, _ = linalg.column_space_basis(f, span)
    if span.shape[1]:
        raise NotSemisimple("trace-form kernel is not nilpotent")
    return rad


def _min_poly(field: Field, alg: FinDimAlgebra, v: np.ndarray):
    """Coefficients (low to high, monic) of the minimal polynomial of v."""
    pows = [alg.unit.copy()]
    cur = alg.unit.copy()
    for _ in range(alg.n + 1):
        cur = alg.mul(cur, v)
        mat = np.stack(pows, axis=1)
        sol = linalg.solve(field, mat, cur)
        if sol is not None:
            coeffs = [field.neg(field(c)) for c in sol[:, 0]] + [field.one]
            return coeffs
        pows.append(cur.copy())
    raise RuntimeError("minimal polynomial not found")


def _poly_roots(field: Field, coeffs):
    """All roots in the base field of the monic polynomial with the given
    low-to-high coefficients, with multiplicity ignored; None entry means
    a non-linear irreducible factor remains."""
    if not field.is_prime_field:
        raise NonSplit("root search over QQ is not supported here")
    roots = []
    rem = [field(c) for c in coeffs]
    for r in range(field.p):
        while True:
            # synthetic division by (x - r)
            out = []
            acc = field.zero
            for c in reversed(rem):
                acc = field.add(field.mul(acc, field(r)), c)
                out.append(acc)
            if field.is_zero(out[-1]) and len(rem) > 1:
                roots.append(r)
                rem = list(reversed(out[:-1]))
            else:
                break
    return roots, len(rem) - 1  # residual degree


def primitive_idempotents(alg: FinDimAlgebra, rad: np.ndarray | None = None):
    """Complete orthogonal primitive idempotents, deterministically ordered.

    Splits commutative semisimple pieces by eigenvalues of basis elements and
    lifts through the radical with Newton steps e <- 3e^2 - 2e^3."""
    f = alg.field
    if rad is None:
        rad = radical_basis(alg)
    idems = [alg.unit.copy()]
    done = False
    guard = 0
    while not done:
        guard += 1
        if guard > 4 * alg.n + 8:
            raise NonSplit("idempotent splitting did not terminate")
        done = True
        nxt = []
        for e in idems:
            pieces = _split_corner(alg, e, rad)
            if len(pieces) > 1:
                done = False
            nxt.extend(pieces)
        idems = nxt
    return idems


def _corner_basis(alg: FinDimAlgebra, e: np.ndarray) -> np.ndarray:
    f = alg.field
    cols = []
    for i in range(alg.n):
        v = alg.mul(alg.mul(e, alg.element(i)), e)
        cols.append(v)
    mat = np.stack(cols, axis=1)
    bas, _ = linalg.column_space_basis(f, mat)
    return bas


def _lift_idempotent(alg: FinDimAlgebra, e: np.ndarray) -> np.ndarray:
    """Newton-iterate e <- 3e^2 - 2e^3 until idempotent (modulo-radical input)."""
    f = alg.field
    for _ in range(alg.n + 4):
        e2 = alg.mul(e, e)
        if _veq(f, e2, e):
            return e
        e3 = alg.mul(e2, e)
        three = f(3)
        two = f(2)
        if f.is_prime_field:
            e = (three * e2 - two * e3) % f.p
        else:
            e = np.array([f.sub(f.mul(three, a), f.mul(two, b)) for a, b in zip(e2, e3)], dtype=object)
    raise NonSplit("idempotent lift did not converge")


def _split_corner(alg: FinDimAlgebra, e: np.ndarray, rad: np.ndarray):
    """Try to write the idempotent e as e1 + e2 with e1 e2 = e2 e1 = 0; return
    [e] if primitive.  Works in the corner eAe modulo its radical (required
    commutative there, the only case this library needs), where minimal
    polynomials are squarefree, then Newton-lifts back into alg."""
    f = alg.field
    corner = _corner_basis(alg, e)
    k = corner.shape[1]
    if k <= 1:
        return [e]
    rad_corner = []
    for c in range(rad.shape[1]):
        rad_corner.append(alg.mul(alg.mul(e, rad[:, c]), e))
    radm = np.stack(rad_corner, axis=1) if rad_corner else linalg.zeros(f, alg.n, 0)
    radm, _ = linalg.column_space_basis(f, radm)
    rep_idx = linalg.complement_pivots(f, radm, corner)
    if len(rep_idx) <= 1:
        # corner = k.e (+) radical part: local, so e is primitive
        return [e]
    # quotient corner algebra on representative columns
    reps = corner[:, rep_idx]
    stacked = np.concatenate([radm, reps], axis=1)

    def qcoords(v):
        sol = linalg.solve(f, stacked, v)
        return sol[radm.shape[1] :, 0]

    q = len(rep_idx)
    qmult = linalg.zeros(f, q * q, q).reshape(q, q, q)
    for i in range(q):
        for j in range(q):
            qmult[i, j, :] = qcoords(alg.mul(reps[:, i], reps[:, j]))
    for i in range(q):
        for j in range(i + 1, q):
            a = np.asarray(qmult[i, j, :])
            b = np.asarray(qmult[j, i, :])
            if not _veq(f, a, b):
                raise NonSplit("non-commutative semisimple corner (matrix block)")
    qalg = FinDimAlgebra(f, qmult, qcoords(e), check=False)
    for c in range(q):
        coeffs = _min_poly(f, qalg, qalg.element(c))
        roots, resid = _poly_roots(f, coeffs)
        if resid > 0:
            raise NonSplit(f"irreducible factor of degree {resid} over the base field")
        if len(roots) >= 2:
            # Lagrange idempotent for the first eigenvalue, then lift
            r = roots[0]
            v = reps[:, c]
            e1 = e.copy()
            for rp in roots[1:]:
                inv = f.inv(f.sub(f(r), f(rp)))
                term = _saxpy(f, v, f.neg(f(rp)), e)  # v - rp*e
                e1 = alg.mul(e1, _scale(f, term, inv))
            e1 = _lift_idempotent(alg, e1)
            if _veq(f, e1, e) or not e1.any():
                continue
            e2 = _sub(f, e, e1)
            return [e1, e2]
    return [e]


def _coords_in(field, basis, v):
    sol = linalg.solve(field, basis, v)
    return sol[:, 0]


def _corner_alg_view(alg: FinDimAlgebra, e: np.ndarray, corner: np.ndarray) -> FinDimAlgebra:
    f = alg.field
    k = corner.shape[1]
    mult = linalg.zeros(f, k * k, k).reshape(k, k, k)
    for i in range(k):
        for j in range(k):
            mult[i, j, :] = _coords_in(f, corner, alg.mul(corner[:, i], corner[:, j]))
    unit = _coords_in(f, corner, e)
    return FinDimAlgebra(f, mult, unit, check=False)


def _scale(field, v, c):
    if field.is_prime_field:
        return (v * c) % field.p
    return np.array([field.mul(c, x) for x in v], dtype=object)


def _saxpy(field, v, c, w):
    if field.is_prime_field:
        return (v + c * w) % field.p
    return np.array([field.add(x, field.mul(c, y)) for x, y in zip(v, w)], dtype=object)


def _sub(field, v, w):
    if field.is_prime_field:
        return (v - w) % field.p
    return np.array([field.sub(x, y) for x, y in zip(v, w)], dtype=object)


def is_local(alg: FinDimAlgebra) -> bool:
    """True when alg / rad is one-dimensional (so 0, 1 are the only idempotents)."""
    rad = radical_basis(alg)
    return rad.shape[1] == alg.n - 1


def gabriel_quiver(alg: FinDimAlgebra):
    """(idempotents, arrow multiplicity matrix) of a split basic algebra.

    arrows[i][j] = dim e_j (rad / rad^2) e_i  (an arrow vertex_i -> vertex_j)."""
    f = alg.field
    rad = radical_basis(alg)
    idems = primitive_idempotents(alg, rad)
    # basicness check: distinct idempotents should not be linked by inverse pairs
    rad2 = []
    for a in range(rad.shape[1]):
        for b in range(rad.shape[1]):
            rad2.append(alg.mul(rad[:, a], rad[:, b]))
    rad2m = np.stack(rad2, axis=1) if rad2 else linalg.zeros(f, alg.n, 0)
    rad2m, _ = linalg.column_space_basis(f, rad2m)
    m = len(idems)
    arrows = [[0] * m for _ in range(m)]
    for i in range(m):
        for j in range(m):
            cols = []
            for c in range(rad.shape[1]):
                cols.append(alg.mul(alg.mul(idems[j], rad[:, c]), idems[i]))
            mat = np.stack(cols, axis=1) if cols else linalg.zeros(f, alg.n, 0)
            r_all = linalg.rank(f, np.concatenate([rad2m, mat], axis=1))
            arrows[i][j] = r_all - rad2m.shape[1]
    return idems, arrows
