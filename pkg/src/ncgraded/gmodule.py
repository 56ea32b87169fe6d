"""Finitely generated graded right modules over an algebra oracle.

A GradedModule is tabulated: per-degree dimensions plus right-action
tensors.  Every module also carries (or lazily extracts) a projective
presentation  F1 -> F0 -> M -> 0  used by Hom/Ext computations; for
modules over a non-connected algebra the cover summands are cut out by
idempotents of the degree-0 part.
"""

from __future__ import annotations

import numpy as np

from . import linalg
from .algebra import AlgebraOracle, PresentedAlgebra, opposite_presentation
from .errors import (
    AlgebraMismatch,
    DegreeBeyondTruncation,
    InvalidAutomorphism,
    NonHomogeneous,
    WindowExceeded,
)
from .freealg import NcPoly
from .projfree import Deg0Data, Morphism, ProjFree, _Subspace, scan_minimal_generators


class _Presentation:
    """Cover data: surjections F0_d ->> M_d with sections, plus relation
    generators (a morphism onto the kernel)."""

    def __init__(self, cover: ProjFree, cover_mats: dict, sections: dict, rel: Morphism,
                 complete_through: int):
        self.cover = cover
        self.cover_mats = cover_mats
        self.sections = sections
        self.rel = rel
        self.complete_through = complete_through


class GradedModule:
    def __init__(self, algebra: AlgebraOracle, dims: dict, act: dict,
                 valid_from: int, valid_to: int, pres: _Presentation | None = None):
        self.algebra = algebra
        self.field = algebra.field
        self._dims = {d: int(n) for d, n in dims.items() if n}
        self._act = act
        self.valid_from = valid_from
        self.valid_to = valid_to
        self._pres = pres

    # -- pieces ------------------------------------------------------------

    def dim(self, d: int) -> int:
        if d < self.valid_from:
            return 0
        if d > self.valid_to:
            raise DegreeBeyondTruncation(f"degree {d} beyond module validity {self.valid_to}")
        return self._dims.get(d, 0)

    def dims_list(self, lo: int, hi: int):
        return [self.dim(d) for d in range(lo, hi + 1)]

    def act_tensor(self, d: int, e: int) -> np.ndarray:
        """(dim M_d, dim alg_e, dim M_{d+e}) action tensor."""
        t = self._act.get((d, e))
        if t is None:
            t = linalg.zeros(self.field, self.dim(d) * self.algebra.dim(e), self.dim(d + e))
            t = t.reshape(self.dim(d), self.algebra.dim(e), self.dim(d + e))
            self._act[(d, e)] = t
        return t

    def act(self, d: int, v: np.ndarray, e: int, w: np.ndarray) -> np.ndarray:
        """(v at degree d) . (algebra vector w at degree e)."""
        t = self.act_tensor(d, e)
        out = np.tensordot(np.tensordot(v, t, axes=(0, 0)), w, axes=(0, 0))
        if self.field.is_prime_field:
            out %= self.field.p
        return out

    def act_matrix(self, d: int, e: int, w: np.ndarray) -> np.ndarray:
        """Matrix of (- . w): M_d -> M_{d+e}  (shape out x in)."""
        t = self.act_tensor(d, e)
        m = np.tensordot(t, w, axes=(1, 0)).T
        if self.field.is_prime_field:
            m %= self.field.p
        return m

    def action_span(self, gens, d: int) -> np.ndarray:
        """Columns spanning sum of g . alg_{d - deg g} over chosen generators
        (degree-0 action included)."""
        cols = [linalg.zeros(self.field, self.dim(d), 0)]
        for _, dg, v in gens:
            e = d - dg
            if e < 0:
                continue
            ne = self.algebra.dim(e)
            if ne == 0:
                continue
            w = np.tensordot(v, self.act_tensor(dg, e), axes=(0, 0))  # (ne, dim_d)
            if self.field.is_prime_field:
                w %= self.field.p
            cols.append(w.T)
        return np.concatenate(cols, axis=1)

    # -- presentation ------------------------------------------------------

    def presentation(self, deg0: Deg0Data | None = None) -> _Presentation:
        if self._pres is None:
            self._pres = _extract_presentation(self, deg0)
        return self._pres

    def __repr__(self):
        ds = ", ".join(f"{d}:{self.dim(d)}" for d in range(self.valid_from, min(self.valid_to, self.valid_from + 8) + 1))
        return f"GradedModule(dims {{{ds}}})"


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------


def _cover_action_tensor(cover: ProjFree, d: int, e: int) -> np.ndarray:
    """Full right-action tensor of a ProjFree piece: (F_d, alg_e, F_{d+e})."""
    field = cover.field
    ne = cover.alg.dim(e)
    t = linalg.zeros(field, cover.dim(d) * ne, cover.dim(d + e)).reshape(
        cover.dim(d), ne, cover.dim(d + e)
    )
    offs_in = cover.offsets(d)
    offs_out = cover.offsets(d + e)
    for j in range(cover.rank):
        blk = cover.action_block(j, d, e)  # (r_in, ne, r_out)
        t[offs_in[j] : offs_in[j + 1], :, offs_out[j] : offs_out[j + 1]] = blk
    return t


def module_from_cover(cover: ProjFree, rel: Morphism | None, lo: int, hi: int) -> GradedModule:
    """Cokernel of rel: F1 -> F0 as a tabulated module with known presentation."""
    alg = cover.alg
    field = cover.field
    dims, act, cover_mats, sections = {}, {}, {}, {}
    idxs_by_deg = {}
    for d in range(lo, hi + 1):
        n = cover.dim(d)
        im = rel.matrix(d) if rel is not None else linalg.zeros(field, n, 0)
        idxs = linalg.complement_pivots(field, im, linalg.eye(field, n))
        idxs_by_deg[d] = idxs
        k = len(idxs)
        dims[d] = k
        sec = linalg.zeros(field, n, k)
        for c, i in enumerate(idxs):
            sec[i, c] = field.one
        sections[d] = sec
        aug = np.concatenate([im, sec], axis=1)
        sol = linalg.solve(field, aug, linalg.eye(field, n))
        cover_mats[d] = sol[im.shape[1] :, :]  # (k, n): projection F0_d ->> M_d
    for d in range(lo, hi + 1):
        for e in range(0, hi - d + 1):
            if dims.get(d, 0) == 0 or alg.dim(e) == 0 or dims.get(d + e, 0) == 0:
                continue
            tf = _cover_action_tensor(cover, d, e)
            u = np.tensordot(sections[d], tf, axes=(0, 0))  # (k, ne, F0_{d+e})
            m = np.tensordot(u, cover_mats[d + e], axes=(2, 1))  # (k, ne, k')
            if field.is_prime_field:
                m %= field.p
            act[(d, e)] = m
    pres = _Presentation(cover, cover_mats, sections, rel, hi)
    return GradedModule(alg, dims, act, lo, hi, pres)


def free_graded_module(alg: AlgebraOracle, shifts, lo: int = 0, hi: int | None = None) -> GradedModule:
    """(+)_i Alg(s_i): zero relation matrix."""
    if hi is None:
        hi = alg.valid_through
    gdegs = [-s for s in shifts]
    cover = ProjFree(alg, [(None, g) for g in gdegs])
    lo = min([lo] + gdegs)
    return module_from_cover(cover, None, lo, hi)


def cyclic_module(alg: PresentedAlgebra, gens, hi: int | None = None) -> GradedModule:
    """Alg / sum g_i Alg as a right module."""
    if hi is None:
        hi = alg.valid_through
    for g in gens:
        if not g.is_zero() and not g.is_homogeneous():
            raise NonHomogeneous(f"generator {g} is not homogeneous")
    cover = ProjFree(alg, [(None, 0)])
    gens = [g for g in gens if not g.is_zero()]
    src = ProjFree(alg, [(None, g.homogeneous_degree()) for g in gens])
    images = [alg.poly_to_vec(g.homogeneous_degree(), g) for g in gens]
    rel = Morphism(src, cover, images) if gens else None
    return module_from_cover(cover, rel, 0, hi)


def module_piece(M: GradedModule, d: int):
    """(dimension, deterministic basis labels) of the degree-d piece."""
    n = M.dim(d)
    return n, [f"m{d}_{i}" for i in range(n)]


def shift_module(M: GradedModule, n: int) -> GradedModule:
    """M(n)_i = M_{n+i}."""
    dims = {d - n: k for d, k in M._dims.items()}
    act = {(d - n, e): t for (d, e), t in M._act.items()}
    return GradedModule(M.algebra, dims, act, M.valid_from - n, M.valid_to - n)


def truncate_module(M: GradedModule, n: int) -> GradedModule:
    """M_{>= n}: pieces of M for d >= n, zero below."""
    dims = {d: k for d, k in M._dims.items() if d >= n}
    act = {(d, e): t for (d, e), t in M._act.items() if d >= n}
    return GradedModule(M.algebra, dims, act, max(M.valid_from, n), M.valid_to)


def direct_sum(mods) -> GradedModule:
    mods = list(mods)
    if not mods:
        raise ValueError("empty direct sum")
    alg = mods[0].algebra
    field = mods[0].field
    for m in mods[1:]:
        if m.algebra is not alg:
            raise AlgebraMismatch("direct sum requires a common algebra")
    lo = min(m.valid_from for m in mods)
    hi = min(m.valid_to for m in mods)
    dims = {d: sum(m.dim(d) for m in mods) for d in range(lo, hi + 1)}
    act = {}
    for d in range(lo, hi + 1):
        for e in range(0, hi - d + 1):
            ne = alg.dim(e)
            t = linalg.zeros(field, dims[d] * ne, dims[d + e]).reshape(dims[d], ne, dims[d + e])
            o_in = 0
            o_out = 0
            for m in mods:
                a, b = m.dim(d), m.dim(d + e)
                if a and b and ne:
                    t[o_in : o_in + a, :, o_out : o_out + b] = m.act_tensor(d, e)
                o_in += a
                o_out += b
            act[(d, e)] = t
    # merge presentations when every summand has one with the same kind of cover
    pres = None
    try:
        parts = [m.presentation() for m in mods]
    except Exception:
        parts = None
    if parts is not None:
        cover = ProjFree(alg, [s for p in parts for s in p.cover.summands])
        cover_mats, sections = {}, {}
        for d in range(lo, hi + 1):
            cms = [p.cover_mats.get(d, linalg.zeros(field, mods[i].dim(d), p.cover.dim(d)))
                   for i, p in enumerate(parts)]
            cover_mats[d] = _block_diag(field, cms)
            scs = [p.sections.get(d, linalg.zeros(field, p.cover.dim(d), mods[i].dim(d)))
                   for i, p in enumerate(parts)]
            sections[d] = _block_diag(field, scs)
        rel_summands = []
        rel_images = []
        for i, p in enumerate(parts):
            if p.rel is None:
                continue
            for j in range(p.rel.source.rank):
                rel_summands.append(p.rel.source.summands[j])
                g = p.rel.source.summands[j][1]
                img = p.rel.images[j]
                full = linalg.zeros(field, cover.dim(g), 1)[:, 0]
                off = sum(pp.cover.dim(g) for pp in parts[:i])
                full[off : off + parts[i].cover.dim(g)] = img
                rel_images.append(full)
        rel = Morphism(ProjFree(alg, rel_summands), cover, rel_images) if rel_summands else None
        pres = _Presentation(cover, cover_mats, sections, rel, hi)
    out = GradedModule(alg, dims, act, lo, hi, pres)
    return out


def _block_diag(field, mats):
    rows = sum(m.shape[0] for m in mats)
    cols = sum(m.shape[1] for m in mats)
    out = linalg.zeros(field, rows, cols)
    r = c = 0
    for m in mats:
        out[r : r + m.shape[0], c : c + m.shape[1]] = m
        r += m.shape[0]
        c += m.shape[1]
    return out


def zero_module(alg: AlgebraOracle, lo: int = 0, hi: int | None = None) -> GradedModule:
    if hi is None:
        hi = alg.valid_through
    cover = ProjFree(alg, [])
    return module_from_cover(cover, None, lo, hi)


# ---------------------------------------------------------------------------
# presentation extraction for tabulated modules
# ---------------------------------------------------------------------------


def _extract_presentation(M: GradedModule, deg0: Deg0Data | None) -> _Presentation:
    field = M.field
    alg = M.algebra

    def piece_basis(d):
        return linalg.eye(field, M.dim(d))

    gens = scan_minimal_generators(
        field, M, piece_basis, M.action_span, range(M.valid_from, M.valid_to + 1), deg0
    )
    cover = ProjFree(alg, [(eps, d) for eps, d, _ in gens])
    cover_mats, sections = {}, {}
    for d in range(M.valid_from, M.valid_to + 1):
        cols = []
        for j, (eps, dg, v) in enumerate(gens):
            sub = cover.subspace(j, d)
            if sub.r == 0:
                continue
            w = np.tensordot(v, M.act_tensor(dg, d - dg), axes=(0, 0))  # (ne, dimM_d)
            if field.is_prime_field:
                w %= field.p
            cols.append((sub.basis.T @ w).T)  # (dimM_d, r)
        cm = np.concatenate(cols, axis=1) if cols else linalg.zeros(field, M.dim(d), 0)
        if field.is_prime_field:
            cm %= field.p
        cover_mats[d] = cm
        sec = linalg.solve(field, cm, linalg.eye(field, M.dim(d)))
        if sec is None:
            raise WindowExceeded(f"cover not surjective at degree {d}")
        sections[d] = sec

    def ker_basis(d):
        return linalg.nullspace(field, cover_mats[d])

    def ker_span(kgens, d):
        cols = [linalg.zeros(field, cover.dim(d), 0)]
        for _, dg, v in kgens:
            e = d - dg
            if e < 0 or alg.dim(e) == 0:
                continue
            tf = _cover_action_tensor(cover, dg, e)
            w = np.tensordot(v, tf, axes=(0, 0))
            if field.is_prime_field:
                w %= field.p
            cols.append(w.T)
        return np.concatenate(cols, axis=1)

    kgens = scan_minimal_generators(
        field, cover, ker_basis, ker_span, range(M.valid_from, M.valid_to + 1), deg0
    )
    rel = None
    if kgens:
        src = ProjFree(alg, [(eps, d) for eps, d, _ in kgens])
        rel = Morphism(src, cover, [v for _, _, v in kgens])
    return _Presentation(cover, cover_mats, sections, rel, M.valid_to)


# ---------------------------------------------------------------------------
# Hom solver (shared by homology.hom_space, duals, endomorphism algebras)
# ---------------------------------------------------------------------------


class HomElement:
    """A degree-s homomorphism M -> N(s), stored by generator images."""

    def __init__(self, M: GradedModule, N: GradedModule, s: int, gen_images):
        self.M = M
        self.N = N
        self.s = s
        self.gen_images = [np.asarray(u) for u in gen_images]
        self._mat: dict[int, np.ndarray] = {}

    def matrix(self, d: int) -> np.ndarray:
        """f_d: M_d -> N_{d+s}  (shape out x in)."""
        if d in self._mat:
            return self._mat[d]
        field = self.M.field
        P = self.M.presentation()
        cover = P.cover
        nout = self.N.dim(d + self.s)
        cols = []
        for j in range(cover.rank):
            _, gj = cover.summands[j]
            sub = cover.subspace(j, d)
            if sub.r == 0:
                continue
            u = self.gen_images[j]
            w = np.tensordot(u, self.N.act_tensor(gj + self.s, d - gj), axes=(0, 0))
            if field.is_prime_field:
                w %= field.p
            cols.append((sub.basis.T @ w).T)  # (nout, r)
        f0 = np.concatenate(cols, axis=1) if cols else linalg.zeros(field, nout, 0)
        if field.is_prime_field:
            f0 %= field.p
        m = f0 @ P.sections[d]
        if field.is_prime_field:
            m %= field.p
        self._mat[d] = m
        return m

    def stacked(self) -> np.ndarray:
        return np.concatenate([u for u in self.gen_images]) if self.gen_images else np.zeros(0, dtype=np.int64)


def hom_basis(M: GradedModule, N: GradedModule, s: int, deg0: Deg0Data | None = None):
    """Basis of Hom_GrMod(M, N(s)) as HomElements, by exact linear solve on
    the generators and relations of M's presentation."""
    field = M.field
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("hom requires a common algebra")
    P = M.presentation(deg0)
    cover = P.cover
    # unknown parametrization per generator
    Ws = []
    for j in range(cover.rank):
        eps, gj = cover.summands[j]
        dN = gj + s
        if dN > N.valid_to:
            raise WindowExceeded(f"need N at degree {dN} beyond validity {N.valid_to}")
        n = N.dim(dN)
        if n == 0:
            Ws.append(linalg.zeros(field, 0, 0))
            continue
        if eps is None:
            Ws.append(linalg.eye(field, n))
        else:
            rm = N.act_matrix(dN, 0, eps)  # (n, n)
            bas, _ = linalg.column_space_basis(field, rm)
            Ws.append(bas)
    widths = [w.shape[1] for w in Ws]
    total = sum(widths)
    rows = []
    if P.rel is not None:
        for m in range(P.rel.source.rank):
            _, h = P.rel.source.summands[m]
            if h + s > N.valid_to:
                raise WindowExceeded(f"need N at degree {h + s} beyond validity {N.valid_to}")
            rho = P.rel.images[m]
            blocks = cover.split(rho, h)
            nrow = N.dim(h + s)
            row = linalg.zeros(field, nrow, total)
            off = 0
            for j in range(cover.rank):
                _, gj = cover.summands[j]
                wj = widths[j]
                if wj:
                    amb = cover.ambient(j, h, blocks[j])  # alg_{h-gj} ambient
                    am = N.act_matrix(gj + s, h - gj, amb)  # (nrow, n_j)
                    blk = am @ Ws[j]
                    if field.is_prime_field:
                        blk %= field.p
                    row[:, off : off + wj] = blk
                off += wj
            rows.append(row)
    sys_mat = np.concatenate(rows, axis=0) if rows else linalg.zeros(field, 0, total)
    null = linalg.nullspace(field, sys_mat)
    out = []
    for c in range(null.shape[1]):
        coeff = null[:, c]
        gen_images = []
        off = 0
        for j in range(cover.rank):
            wj = widths[j]
            n = N.dim(cover.summands[j][1] + s)
            if wj == 0:
                gen_images.append(linalg.zeros(field, n, 1)[:, 0] if n else linalg.zeros(field, 0, 0).reshape(0))
            else:
                u = Ws[j] @ coeff[off : off + wj]
                if field.is_prime_field:
                    u %= field.p
                gen_images.append(u)
            off += wj
        out.append(HomElement(M, N, s, gen_images))
    return out


def hom_coords(basis, f: HomElement):
    """Coordinates of f in a hom basis (via stacked generator images)."""
    field = f.M.field
    if not basis:
        return None
    mat = np.stack([b.stacked() for b in basis], axis=1)
    return linalg.solve(field, mat, f.stacked())


def compose_hom(f: HomElement, g: HomElement) -> HomElement:
    """g o f: M -> P(s+t) for f: M -> N(s), g: N -> P(t)."""
    if f.N is not g.M:
        raise AlgebraMismatch("compose: target of f must be source of g")
    gen_images = []
    cover = f.M.presentation().cover
    for j in range(cover.rank):
        _, gj = cover.summands[j]
        u = f.gen_images[j]  # in N_{gj+s}
        v = g.matrix(gj + f.s) @ u
        if f.M.field.is_prime_field:
            v %= f.M.field.p
        gen_images.append(v)
    return HomElement(f.M, g.N, f.s + g.s, gen_images)


def identity_hom(M: GradedModule) -> HomElement:
    P = M.presentation()
    cover = P.cover
    gen_images = []
    for j in range(cover.rank):
        eps, gj = cover.summands[j]
        sub = cover.subspace(j, gj)
        col = sub.coords(eps if eps is not None else M.algebra.unit)
        # image of generator j in M = cover_mats[gj] applied to its coords in F0
        full = linalg.zeros(M.field, cover.dim(gj), 1)[:, 0]
        offs = cover.offsets(gj)
        full[offs[j] : offs[j] + sub.r] = col
        img = P.cover_mats[gj] @ full
        if M.field.is_prime_field:
            img %= M.field.p
        gen_images.append(img)
    return HomElement(M, M, 0, gen_images)


# ---------------------------------------------------------------------------
# graded automorphisms and twists
# ---------------------------------------------------------------------------


class GradedAutomorphism:
    """Degree-preserving algebra automorphism of a presented algebra, given by
    generator images; validated on relations and per-degree invertibility."""

    def __init__(self, alg: PresentedAlgebra, images, check_through: int = 4):
        self.alg = alg
        self.images = list(images)
        if len(self.images) != len(alg.gens):
            raise InvalidAutomorphism("one image per generator required")
        for i, f in enumerate(self.images):
            if f.is_zero() or not f.is_homogeneous() or f.homogeneous_degree() != alg.gens.degrees[i]:
                raise InvalidAutomorphism(f"image of generator {alg.gens.names[i]} must be homogeneous of the same degree")
        self._mats: dict[int, np.ndarray] = {}
        for r in alg.presentation.relations:
            img = self._apply_poly(r)
            if not alg.gb.normal_form(img).is_zero():
                raise InvalidAutomorphism(f"relation {r} not preserved")
        for d in range(0, check_through + 1):
            m = self.matrix(d)
            if m.shape[0] and linalg.inverse(alg.field, m) is None:
                raise InvalidAutomorphism(f"not invertible in degree {d}")

    def _apply_poly(self, f: NcPoly) -> NcPoly:
        out = NcPoly.zero(self.alg.gens, self.alg.field)
        for w, c in f.terms.items():
            t = NcPoly.one(self.alg.gens, self.alg.field).scale(c)
            for letter in w:
                t = t * self.images[letter]
            out = out + t
        return out

    def matrix(self, d: int) -> np.ndarray:
        """Matrix of sigma on the degree-d piece (columns = images of basis words)."""
        if d not in self._mats:
            ws = self.alg.basis_words(d)
            n = len(ws)
            m = linalg.zeros(self.alg.field, n, n)
            for b, w in enumerate(ws):
                img = self._apply_poly(NcPoly.word(self.alg.gens, self.alg.field, w))
                m[:, b] = self.alg.poly_to_vec(d, img)
            self._mats[d] = m
        return self._mats[d]

    @staticmethod
    def identity(alg: PresentedAlgebra) -> "GradedAutomorphism":
        gens = alg.gens
        return GradedAutomorphism(alg, [NcPoly.gen(gens, alg.field, i) for i in range(len(gens))])


def twist_module(M: GradedModule, sigma: GradedAutomorphism) -> GradedModule:
    """Same graded pieces, new action m * a = m sigma(a)."""
    if not isinstance(M.algebra, PresentedAlgebra) or sigma.alg is not M.algebra:
        raise AlgebraMismatch("twist requires the module's presented algebra")
    field = M.field
    act = {}
    for (d, e), t in M._act.items():
        se = sigma.matrix(e)
        if se.shape[0] == 0:
            act[(d, e)] = t
            continue
        nt = np.tensordot(t, se, axes=(1, 0)).transpose(0, 2, 1)
        if field.is_prime_field:
            nt %= field.p
        act[(d, e)] = nt
    return GradedModule(M.algebra, dict(M._dims), act, M.valid_from, M.valid_to)


# ---------------------------------------------------------------------------
# duals
# ---------------------------------------------------------------------------


def opposite_algebra(alg: PresentedAlgebra) -> PresentedAlgebra:
    """Presented opposite algebra, cached so that op(op(A)) is A itself."""
    op = getattr(alg, "_op_cache", None)
    if op is None:
        op = PresentedAlgebra(opposite_presentation(alg.presentation), alg.valid_through)
        op._op_cache = alg
        alg._op_cache = op
    return op


def dual_module(M: GradedModule, lo: int | None = None, hi: int | None = None) -> GradedModule:
    """M-dagger = Hom(M, Alg) as a right module over the opposite algebra:
    degree-s piece = Hom_GrMod(M, Alg(s)), action (f * a)(m) = a . f(m)."""
    alg = M.algebra
    if not isinstance(alg, PresentedAlgebra):
        raise AlgebraMismatch("dual_module needs a presented algebra")
    op = opposite_algebra(alg)
    if hi is None:
        hi = M.valid_to - 1
    if lo is None:
        lo = -max([g for _, g in M.presentation().cover.summands] + [0])
    NA = free_graded_module(alg, [0], 0, alg.valid_through)
    bases = {s: hom_basis(M, NA, s) for s in range(lo, hi + 1)}
    dims = {s: len(bases[s]) for s in bases}
    act = {}
    for s in range(lo, hi + 1):
        for e in range(0, hi - s + 1):
            hb, tb = bases[s], bases.get(s + e, [])
            ne = op.dim(e)
            t = linalg.zeros(alg.field, len(hb) * ne, len(tb)).reshape(len(hb), ne, len(tb))
            if hb and tb and ne:
                stack = np.stack([b.stacked() for b in tb], axis=1)
                for bidx, w in enumerate(op.basis_words(e)):
                    rev = alg.poly_to_vec(e, NcPoly.word(alg.gens, alg.field, tuple(reversed(w))))
                    for i, f in enumerate(hb):
                        gen_images = []
                        for j, u in enumerate(f.gen_images):
                            gj = M.presentation().cover.summands[j][1]
                            lm = alg.left_mult_matrix(e, rev, gj + s)
                            v = lm @ u
                            if alg.field.is_prime_field:
                                v %= alg.field.p
                            gen_images.append(v)
                        target = np.concatenate(gen_images) if gen_images else np.zeros(0, dtype=np.int64)
                        sol = linalg.solve(alg.field, stack, target)
                        if sol is None:
                            raise WindowExceeded("dual action left the computed window")
                        t[i, bidx, :] = sol[:, 0]
            act[(s, e)] = t
    return GradedModule(op, dims, act, lo, hi)
