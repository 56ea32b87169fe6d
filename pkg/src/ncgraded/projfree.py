"""Shifted projective modules P = (+) eps_j . Alg(-g_j) and graded morphisms
between them, evaluated degreewise by exact linear algebra.

Over a connected algebra every summand has eps = None and these are the
usual shifted free modules.  Over an algebra with a nontrivial degree-0
part (an endomorphism algebra), summands may be cut out by an idempotent
eps of the degree-0 part; that is what makes minimal resolutions terminate
when the relevant projectives are not free.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import AlgebraOracle
from .errors import IncompleteKernel, ShapeMismatch


@dataclass
class Deg0Data:
    """Radical and primitive idempotents of the degree-0 part, used to pick
    minimal generating sets of modules over a non-connected algebra."""

    radical_basis: np.ndarray      # columns: radical basis in alg_0 coords
    idempotents: list              # primitive orthogonal idempotent vectors


class _Subspace:
    """Basis of eps . alg_d inside alg_d, with a coordinate extractor."""

    def __init__(self, field, basis: np.ndarray):
        self.field = field
        self.basis = basis  # (ambient_dim, r)
        self.r = basis.shape[1]
        if self.r:
            _, pivots = linalg.rref(field, basis.T)
            self.rows = pivots  # rows where the basis is invertible
            self._inv = linalg.inverse(field, basis[pivots, :])
        else:
            self.rows = []
            self._inv = None

    def coords(self, v: np.ndarray) -> np.ndarray:
        """Coordinates of a vector (or matrix of columns) lying in the subspace."""
        if self.r == 0:
            shape = (0,) if v.ndim == 1 else (0, v.shape[1])
            return linalg.zeros(self.field, 0, shape[1] if len(shape) == 2 else 0).reshape(shape)
        out = self._inv @ v[self.rows]
        if self.field.is_prime_field:
            out %= self.field.p
        return out


class ProjFree:
    """(+)_j eps_j . Alg(-g_j); generator j sits in degree g_j."""

    def __init__(self, alg: AlgebraOracle, summands):
        # summands: list of (eps vector in alg_0 coords or None, gdeg)
        self.alg = alg
        self.field = alg.field
        self.summands = [(None if e is None else np.asarray(e), int(g)) for e, g in summands]
        self._sub: dict[tuple, _Subspace] = {}

    @property
    def rank(self) -> int:
        return len(self.summands)

    def gen_degrees(self):
        return [g for _, g in self.summands]

    def subspace(self, j: int, d: int) -> _Subspace:
        """Basis data of summand j's piece in internal degree d (ambient alg_{d-g_j})."""
        eps, g = self.summands[j]
        key = (j, d)
        if key not in self._sub:
            e = d - g
            n = self.alg.dim(e) if e >= 0 else 0
            if n == 0:
                bas = linalg.zeros(self.field, 0, 0)
            elif eps is None:
                bas = linalg.eye(self.field, n)
            else:
                lm = self.alg.left_mult_matrix(0, eps, e)  # (n, n)
                bas, _ = linalg.column_space_basis(self.field, lm)
            self._sub[key] = _Subspace(self.field, bas)
        return self._sub[key]

    def piece_dims(self, d: int):
        return [self.subspace(j, d).r for j in range(self.rank)]

    def dim(self, d: int) -> int:
        return sum(self.piece_dims(d))

    def offsets(self, d: int):
        dims = self.piece_dims(d)
        offs = [0]
        for r in dims:
            offs.append(offs[-1] + r)
        return offs

    def split(self, v: np.ndarray, d: int):
        """Split coordinates at degree d into per-summand blocks."""
        offs = self.offsets(d)
        return [v[offs[j] : offs[j + 1]] for j in range(self.rank)]

    def ambient(self, j: int, d: int, block: np.ndarray) -> np.ndarray:
        """Summand-j block coords -> ambient alg_{d-g_j} vector (or matrix)."""
        sub = self.subspace(j, d)
        e = d - self.summands[j][1]
        n = self.alg.dim(e) if e >= 0 else 0
        if sub.r == 0:
            shape = (n,) if block.ndim == 1 else (n, block.shape[1])
            return linalg.zeros(self.field, shape[0], shape[1] if len(shape) == 2 else 0).reshape(shape) if len(shape) == 2 else linalg.zeros(self.field, n, 1)[:, 0]
        out = sub.basis @ block
        if self.field.is_prime_field:
            out %= self.field.p
        return out

    def act(self, d: int, v: np.ndarray, e: int, w: np.ndarray) -> np.ndarray:
        """(element v at degree d) . (algebra vector w at degree e), in degree d+e."""
        blocks = self.split(v, d)
        out_blocks = []
        for j, ((eps, g), blk) in enumerate(zip(self.summands, blocks)):
            sub_in = self.subspace(j, d)
            sub_out = self.subspace(j, d + e)
            if sub_out.r == 0:
                out_blocks.append(linalg.zeros(self.field, 0, 1)[:, 0])
                continue
            if sub_in.r == 0:
                out_blocks.append(linalg.zeros(self.field, sub_out.r, 1)[:, 0])
                continue
            amb = self.ambient(j, d, blk)
            rm = self.alg.right_mult_matrix(e, w, d - g)  # (dim_{d-g+e}, dim_{d-g})
            out_blocks.append(sub_out.coords(rm @ amb % self.field.p if self.field.is_prime_field else rm @ amb))
        return np.concatenate(out_blocks) if out_blocks else linalg.zeros(self.field, 0, 1)[:, 0]

    def action_block(self, j: int, d: int, e: int) -> np.ndarray:
        """Matrix of right mult (summand j piece at d) x (alg basis of e) -> piece at d+e.

        Returns tensor of shape (r_in, dim alg_e, r_out)."""
        eps, g = self.summands[j]
        sub_in = self.subspace(j, d)
        sub_out = self.subspace(j, d + e)
        ne = self.alg.dim(e)
        t = linalg.zeros(self.field, sub_in.r * ne, sub_out.r).reshape(sub_in.r, ne, sub_out.r)
        if sub_in.r == 0 or sub_out.r == 0 or ne == 0:
            return t
        mt = self.alg.mult_tensor(d - g, e)  # (dim_{d-g}, ne, dim_{d-g+e})
        amb = np.tensordot(sub_in.basis, mt, axes=(0, 0))  # (r_in, ne, dim_out_amb)
        if self.field.is_prime_field:
            amb %= self.field.p
        flat = amb.reshape(-1, amb.shape[2]).T  # (dim_out_amb, r_in*ne)
        coords = sub_out.coords(flat)  # (r_out, r_in*ne)
        return coords.T.reshape(sub_in.r, ne, sub_out.r)


class Morphism:
    """Graded degree-0 morphism between ProjFree modules, stored as images of
    the source generators (coordinates in the target at the generator degree)."""

    def __init__(self, source: ProjFree, target: ProjFree, images):
        if len(images) != source.rank:
            raise ShapeMismatch("one image per source generator required")
        self.source = source
        self.target = target
        self.images = [np.asarray(v) for v in images]
        self._mat: dict[int, np.ndarray] = {}

    def matrix(self, d: int) -> np.ndarray:
        """Degreewise matrix F'_d -> F_d (target coords x source coords)."""
        if d in self._mat:
            return self._mat[d]
        field = self.source.field
        nrow = self.target.dim(d)
        cols = []
        for j in range(self.source.rank):
            _, gj = self.source.summands[j]
            sub = self.source.subspace(j, d)
            if sub.r == 0:
                continue
            amb = sub.basis  # columns: ambient elements of alg_{d-gj}
            img = self.images[j]  # target coords at degree gj
            # image of (gen_j . a) = images[j] . a, for each basis column a
            tblocks = self.target.split(img, gj)
            out = linalg.zeros(field, nrow, sub.r)
            toffs = self.target.offsets(d)
            for i in range(self.target.rank):
                _, gi = self.target.summands[i]
                sub_ti = self.target.subspace(i, gj)
                if sub_ti.r == 0:
                    continue
                sub_to = self.target.subspace(i, d)
                if sub_to.r == 0:
                    continue
                a = self.target.ambient(i, gj, tblocks[i])  # alg_{gj-gi}
                lm = self.target.alg.left_mult_matrix(gj - gi, a, d - gj)  # (dim_{d-gi}, dim_{d-gj})
                prod = lm @ amb
                if field.is_prime_field:
                    prod %= field.p
                out[toffs[i] : toffs[i + 1], :] = sub_to.coords(prod)
            cols.append(out)
        if cols:
            m = np.concatenate(cols, axis=1)
        else:
            m = linalg.zeros(field, nrow, 0)
        self._mat[d] = m
        return m

    def kernel_basis(self, d: int) -> np.ndarray:
        return linalg.nullspace(self.source.field, self.matrix(d))


def scan_minimal_generators(field, container, piece_basis, action_span, deg_range, deg0: Deg0Data | None):
    """Pick minimal generators of a graded submodule given degreewise bases.

    piece_basis(d) -> matrix whose columns are a basis of the submodule piece
    (in ambient coordinates of the containing graded object).
    action_span(gens, d) -> matrix of columns spanning (chosen gens) . alg_{>=0}
    inside degree d; must include the degree-0 action.

    Returns list of (eps_or_None, degree, vector).  Raises IncompleteKernel if
    a chosen set fails to span a piece it should span (consistency check).
    """
    gens = []
    for d in deg_range:
        kb = piece_basis(d)
        if kb.shape[1] == 0:
            continue
        span = action_span(gens, d)
        if deg0 is None:
            idxs = linalg.complement_pivots(field, span, kb)
            for j in idxs:
                gens.append((None, d, kb[:, j].copy()))
        else:
            # quotient V = K_d / span, then V/(V.rad) split by idempotents
            radcols = []
            if deg0.radical_basis.shape[1]:
                for j in range(kb.shape[1]):
                    for r in range(deg0.radical_basis.shape[1]):
                        radcols.append(_module_act(container, kb[:, j], d, deg0.radical_basis[:, r]))
            sp = span
            if radcols:
                sp = np.concatenate([span] + [c.reshape(-1, 1) for c in radcols], axis=1)
            for eps in deg0.idempotents:
                cands = np.stack(
                    [_module_act(container, kb[:, j], d, eps) for j in range(kb.shape[1])], axis=1
                )
                idxs = linalg.complement_pivots(field, sp, cands)
                for j in idxs:
                    v = cands[:, j].copy()
                    gens.append((eps, d, v))
                    sp = np.concatenate([sp, v.reshape(-1, 1)], axis=1)
        # consistency: the chosen generators must span the piece
        full = action_span(gens, d)
        if linalg.rank(field, full) != linalg.rank(
            field, np.concatenate([full, kb], axis=1)
        ):
            raise IncompleteKernel(f"generator extraction failed to span degree {d}")
    return gens


def _module_act(container, v, d, w):
    """Right action of a degree-0 algebra vector inside the container object.

    container must expose act(d, v, 0, w); used by scan_minimal_generators."""
    return container.act(d, v, 0, w)
