"""Graded endomorphism algebras B = End(X) = (+)_i Hom(X, X(i)).

B is materialized as a TabulatedAlgebra within a window (negative pieces
included so that B_{<0} = 0 can be verified rather than assumed), its
degree-0 part is analyzed as a finite-dimensional algebra, and the
regularity checks for B over B_0 and Gorensteinness for a connected
algebra are run from resolutions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import PresentedAlgebra, TabulatedAlgebra
from .errors import NotConnected, ShapeMismatch
from .findim import FinDimAlgebra, gabriel_quiver as _findim_quiver, primitive_idempotents, radical_basis
from .gmodule import (
    GradedModule,
    cyclic_module,
    free_graded_module,
    hom_basis,
    identity_hom,
    opposite_algebra,
)
from .homology import Window, ext_graded_dims, free_resolution
from .projfree import Deg0Data


class EndoAlgebra:
    """B = End(X) with its hom bases kept for composition and module transport."""

    def __init__(self, X: GradedModule, window: Window):
        self.X = X
        self.window = window
        field = X.field
        lo = window.internal_lo
        hi = window.algebra_degree_cap
        self.bases = {}
        dims = {}
        for d in range(lo, hi + 1):
            self.bases[d] = hom_basis(X, X, d)
            dims[d] = len(self.bases[d])
        self._stacks = {
            d: (np.stack([b.stacked() for b in bs], axis=1) if bs else None)
            for d, bs in self.bases.items()
        }
        tensors = {}
        for d1 in range(lo, hi + 1):
            for d2 in range(lo, min(hi, hi - d1) + 1):
                if d1 + d2 < lo:
                    continue
                tensors[(d1, d2)] = self._compose_tensor(d1, d2)
        ident = identity_hom(X)
        unit = linalg.solve(field, self._stacks[0], ident.stacked())
        if unit is None:
            raise ShapeMismatch("identity endomorphism missing from Hom(X, X)_0")
        self.algebra = TabulatedAlgebra(
            field, dims, tensors, unit[:, 0], valid_through=hi, valid_from=lo
        )

    def _compose_tensor(self, d1: int, d2: int) -> np.ndarray:
        """tensor[i, j, :] = coords of b_i o b_j (b_j applied first)."""
        field = self.X.field
        b1, b2, b12 = self.bases[d1], self.bases[d2], self.bases[d1 + d2]
        n1, n2, n12 = len(b1), len(b2), len(b12)
        t = linalg.zeros(field, n1 * n2, n12).reshape(n1, n2, n12)
        if not (n1 and n2 and n12):
            return t
        cover = self.X.presentation().cover
        rhs_blocks = []
        for j in range(cover.rank):
            gj = cover.summands[j][1]
            mats = np.stack([b.matrix(gj + d2) for b in b1])      # (n1, out, in)
            U = np.stack([g.gen_images[j] for g in b2], axis=1)   # (in, n2)
            comp = np.tensordot(mats, U, axes=(2, 0))             # (n1, out, n2)
            if field.is_prime_field:
                comp %= field.p
            rhs_blocks.append(comp)
        R = np.concatenate(rhs_blocks, axis=1)                    # (n1, L, n2)
        L = R.shape[1]
        rhs = R.transpose(1, 0, 2).reshape(L, n1 * n2)
        sol = linalg.solve(field, self._stacks[d1 + d2], rhs)
        if sol is None:
            raise ShapeMismatch("composition left the computed hom space")
        return sol.T.reshape(n1, n2, n12)


def endomorphism_algebra(X: GradedModule, window: Window) -> EndoAlgebra:
    return EndoAlgebra(X, window)


def check_nonnegative(B: EndoAlgebra) -> bool:
    return all(B.algebra.dim(d) == 0
               for d in range(B.window.internal_lo, 0))


def degree_zero_algebra(B: EndoAlgebra) -> FinDimAlgebra:
    alg = B.algebra
    n = alg.dim(0)
    mult = np.asarray(alg.mult_tensor(0, 0))
    return FinDimAlgebra(alg.field, mult, alg.unit, check=False)


def radical_and_idempotents(F: FinDimAlgebra):
    rad = radical_basis(F)
    idems = primitive_idempotents(F, rad)
    idems = sorted(idems, key=lambda e: _support_key(F.field, e))
    return rad, idems


def _support_key(field, v):
    nz = [(i, int(c) if field.is_prime_field else str(c)) for i, c in enumerate(v)
          if not field.is_zero(field(c))]
    return (nz[0][0] if nz else -1, tuple(nz))


@dataclass
class Quiver:
    vertices: list
    arrows: list  # (src, dst, mult)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"src": s, "dst": t, "mult": m} for s, t, m in self.arrows],
        }

    def canonical_signature(self):
        """Degree-sequence signature invariant under vertex permutation."""
        n = len(self.vertices)
        indeg = {v: 0 for v in self.vertices}
        outdeg = {v: 0 for v in self.vertices}
        for s, t, m in self.arrows:
            outdeg[s] += m
            indeg[t] += m
        degs = sorted((indeg[v], outdeg[v]) for v in self.vertices)
        return (n, sum(m for _, _, m in self.arrows), tuple(degs))


def quiver_of(F: FinDimAlgebra) -> Quiver:
    """Gabriel quiver with the right-module path convention: an arrow
    u -> v for each basis element of e_u (rad/rad^2) e_v."""
    idems, arrows = _findim_quiver(F)
    order = sorted(range(len(idems)), key=lambda i: _support_key(F.field, idems[i]))
    names = [f"v{k}" for k in range(len(idems))]
    arr = []
    for a, i in enumerate(order):
        for b, j in enumerate(order):
            m = arrows[i][j]
            if m:
                arr.append((names[b], names[a], m))
    arr.sort()
    return Quiver(names, arr)


def deg0_data(B: EndoAlgebra) -> Deg0Data:
    F = degree_zero_algebra(B)
    rad, idems = radical_and_idempotents(F)
    return Deg0Data(rad, idems)


def b0_module(B: EndoAlgebra) -> GradedModule:
    """B_0 = B / B_{>=1} as a graded right B-module (one piece in degree 0)."""
    alg = B.algebra
    n = alg.dim(0)
    dims = {0: n}
    act = {(0, 0): np.asarray(alg.mult_tensor(0, 0))}
    return GradedModule(alg, dims, act, 0, alg.valid_through)


def as_regular_over_R_check(B: EndoAlgebra, d: int, ell: int, window: Window) -> dict:
    """AS-regularity of B over R = B_0: Ext^i_B(B_0, B) = 0 for i < d,
    Ext^d concentrated in internal degree -ell with dim = dim B_0, and the
    minimal resolution of B_0 terminating at step d (within the window)."""
    deg0 = deg0_data(B)
    M = b0_module(B)
    alg = B.algebra
    NB = free_graded_module(alg, [0], alg.valid_from, alg.valid_through)
    report = {"window": window.tag(), "d": d, "ell": ell}
    res = free_resolution(M, min(d + 1, window.homological_max + 1), window, deg0)
    report["resolution_shifts"] = [res.shifts(i) for i in range(res.length + 1)]
    report["terminates_at_d"] = res.terminated_at == d
    ok = res.terminated_at == d
    ext_rep = {}
    for i in range(0, d + 1):
        dims = ext_graded_dims(M, NB, i, window, deg0)
        nz = {s: v for s, v in dims.items() if v}
        ext_rep[i] = nz
        if i < d and nz:
            ok = False
        if i == d and nz != {-ell: alg.dim(0)}:
            ok = False
    report["ext"] = ext_rep
    report["expected_top"] = {-ell: alg.dim(0)}
    report["verdict"] = ok
    return report


def as_gorenstein_check(A: PresentedAlgebra, d: int, ell: int, window: Window) -> dict:
    """AS-Gorenstein test for a connected algebra: Ext^i(k, A) on both sides
    vanishes for i != d within the window and is k(ell) for i = d."""
    if A.dim(0) != 1:
        raise NotConnected("Gorenstein test requires a connected algebra")
    report = {"window": window.tag(), "d": d, "ell": ell, "sides": {}}
    ok = True
    top = min(d + 1, window.homological_max)
    for side, alg in (("right", A), ("left", opposite_algebra(A))):
        from .freealg import NcPoly

        gens = [NcPoly.gen(alg.gens, alg.field, i) for i in range(len(alg.gens))]
        k = cyclic_module(alg, gens, alg.valid_through)
        NA = free_graded_module(alg, [0], 0, alg.valid_through)
        side_rep = {}
        for i in range(0, top + 1):
            dims = ext_graded_dims(k, NA, i, window)
            nz = {s: v for s, v in dims.items() if v}
            side_rep[i] = nz
            want = {-ell: 1} if i == d else {}
            if nz != want:
                ok = False
        report["sides"][side] = side_rep
    report["verdict"] = ok
    return report


def hom_into_b_module(B: EndoAlgebra, M: GradedModule, lo: int, hi: int) -> GradedModule:
    """Hom(X, M) as a graded right B-module: degree-a piece Hom(X, M(a))_0,
    action h * beta = h o beta."""
    from .gmodule import compose_hom

    field = M.field
    bases = {a: hom_basis(B.X, M, a) for a in range(lo, hi + 1)}
    stacks = {a: (np.stack([b.stacked() for b in bs], axis=1) if bs else None)
              for a, bs in bases.items()}
    dims = {a: len(bs) for a, bs in bases.items()}
    alg = B.algebra
    act = {}
    for a in range(lo, hi + 1):
        for e in range(max(alg.valid_from, lo - a), hi - a + 1):
            na, ne, nt = dims.get(a, 0), alg.dim(e), dims.get(a + e, 0)
            t = linalg.zeros(field, na * ne, nt).reshape(na, ne, nt)
            if na and ne and nt:
                for i, h in enumerate(bases[a]):
                    for j, beta in enumerate(B.bases[e]):
                        comp = compose_hom(beta, h)  # h o beta : X -> M(a+e)
                        sol = linalg.solve(field, stacks[a + e], comp.stacked())
                        if sol is None:
                            raise ShapeMismatch("hom transport left the computed window")
                        t[i, j, :] = sol[:, 0]
            act[(a, e)] = t
    return GradedModule(alg, dims, act, lo, hi)
