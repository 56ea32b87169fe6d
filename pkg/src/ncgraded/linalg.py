"""Exact dense linear algebra over GF(p) and QQ.

Matrices over GF(p) are numpy int64 arrays kept reduced mod p (row
operations vectorize, products stay far below 2**63 for the primes used
here).  Matrices over QQ are object arrays of Fractions; that path is
slower and only exercised by small inputs.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .scalars import Field


def zeros(field: Field, m: int, n: int) -> np.ndarray:
    if field.is_prime_field:
        return np.zeros((m, n), dtype=np.int64)
    out = np.empty((m, n), dtype=object)
    out[:] = Fraction(0)
    return out


def eye(field: Field, n: int) -> np.ndarray:
    out = zeros(field, n, n)
    for i in range(n):
        out[i, i] = field.one
    return out


def as_matrix(field: Field, rows) -> np.ndarray:
    rows = list(rows)
    m = len(rows)
    n = len(rows[0]) if m else 0
    out = zeros(field, m, n)
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            out[i, j] = field(v)
    return out


def matmul(field: Field, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    c = a @ b
    if field.is_prime_field:
        c %= field.p
    return c


def rref(field: Field, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form; returns (R, pivot column indices)."""
    r = a.copy()
    m, n = r.shape
    pivots: list[int] = []
    row = 0
    if field.is_prime_field:
        p = field.p
        for col in range(n):
            if row == m:
                break
            nz = np.nonzero(r[row:, col])[0]
            if nz.size == 0:
                continue
            piv = row + int(nz[0])
            if piv != row:
                r[[row, piv]] = r[[piv, row]]
            r[row] = (r[row] * pow(int(r[row, col]), -1, p)) % p
            other = np.nonzero(r[:, col])[0]
            other = other[other != row]
            if other.size:
                r[other] = (r[other] - np.outer(r[other, col], r[row])) % p
            pivots.append(col)
            row += 1
    else:
        for col in range(n):
            if row == m:
                break
            piv = None
            for i in range(row, m):
                if r[i, col] != 0:
                    piv = i
                    break
            if piv is None:
                continue
            if piv != row:
                r[[row, piv]] = r[[piv, row]]
            r[row] = r[row] / r[row, col]
            for i in range(m):
                if i != row and r[i, col] != 0:
                    r[i] = r[i] - r[i, col] * r[row]
            pivots.append(col)
            row += 1
    return r, pivots


def rank(field: Field, a: np.ndarray) -> int:
    if 0 in a.shape:
        return 0
    return len(rref(field, a)[1])


def nullspace(field: Field, a: np.ndarray) -> np.ndarray:
    """Columns form a basis of {x : a x = 0} (echelon-normalized, deterministic)."""
    m, n = a.shape
    if n == 0:
        return zeros(field, 0, 0)
    if m == 0:
        return eye(field, n)
    r, pivots = rref(field, a)
    free = [j for j in range(n) if j not in pivots]
    out = zeros(field, n, len(free))
    for k, j in enumerate(free):
        out[j, k] = field.one
        for i, pc in enumerate(pivots):
            out[pc, k] = field.neg(field(r[i, j]))
    return out


def solve(field: Field, a: np.ndarray, b: np.ndarray):
    """One solution x of a x = b (b may have several columns); None if inconsistent."""
    m, n = a.shape
    if b.ndim == 1:
        b = b.reshape(-1, 1)
    aug = np.concatenate([a, b], axis=1)
    r, pivots = rref(field, aug)
    ncols = b.shape[1]
    for pc in pivots:
        if pc >= n:
            return None
    x = zeros(field, n, ncols)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, n:]
    return x


def inverse(field: Field, a: np.ndarray):
    """Inverse of a square matrix, or None if singular."""
    n = a.shape[0]
    if a.shape[0] != a.shape[1]:
        return None
    r, pivots = rref(field, np.concatenate([a, eye(field, n)], axis=1))
    if len(pivots) != n or pivots != list(range(n)):
        return None
    return r[:, n:]


def column_space_basis(field: Field, a: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """(basis matrix of pivot columns, their indices in a)."""
    _, pivots = rref(field, a)
    return a[:, pivots].copy(), pivots


def in_span(field: Field, basis: np.ndarray, v: np.ndarray) -> bool:
    return solve(field, basis, v) is not None


def complement_pivots(field: Field, span: np.ndarray, candidates: np.ndarray) -> list[int]:
    """Indices j such that candidate columns j extend span(``span``) to
    span([span | candidates]).  Greedy left-to-right (first valid choice),
    computed with a single elimination.
    """
    k = span.shape[1]
    _, pivots = rref(field, np.concatenate([span, candidates], axis=1))
    return [j - k for j in pivots if j >= k]
