"""Degreewise-exact homological algebra within a truncation window.

All answers are certified only inside the window they were computed in;
report dictionaries carry the window so callers (and the CLI) can say
"within window" honestly.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    IncompleteKernel,
    NonSplitResidue,
    NonSplit,
    ShapeMismatch,
    WindowExceeded,
)
from .findim import FinDimAlgebra, is_local, primitive_idempotents, radical_basis
from .gmodule import (
    GradedModule,
    HomElement,
    compose_hom,
    free_graded_module,
    hom_basis,
    identity_hom,
    twist_module,
)
from .projfree import Deg0Data, Morphism, ProjFree, _Subspace, scan_minimal_generators


@dataclass(frozen=True)
class Window:
    internal_lo: int = -6
    internal_hi: int = 6
    homological_max: int = 4
    algebra_degree_cap: int = 8

    def __post_init__(self):
        if self.internal_lo > self.internal_hi:
            raise ValueError("internal_lo must not exceed internal_hi")

    def tag(self) -> str:
        return (f"internal [{self.internal_lo}, {self.internal_hi}], "
                f"homological <= {self.homological_max}, cap {self.algebra_degree_cap}")


class HomSpace:
    def __init__(self, M: GradedModule, N: GradedModule, s: int, basis, window: Window):
        self.M = M
        self.N = N
        self.s = s
        self.basis = basis
        self.window = window

    @property
    def dim(self) -> int:
        return len(self.basis)


def hom_space(M: GradedModule, N: GradedModule, s: int, window: Window,
              deg0: Deg0Data | None = None) -> HomSpace:
    return HomSpace(M, N, s, hom_basis(M, N, s, deg0), window)


def compose(f: HomElement, g: HomElement) -> HomElement:
    """g after f, for f: M -> N(s) and g: N -> P(t)."""
    if f.N is not g.M:
        raise ShapeMismatch("compose: target of f must equal source of g")
    return compose_hom(f, g)


class FreeResolution:
    """... -> F2 -> F1 -> F0 -> M -> 0 by projective covers within a window.

    steps[i] is the ProjFree F_i; diffs[i] is the differential F_{i+1} -> F_i
    (diffs[0] = relation map).  terminated_at = i means the kernel at F_i was
    zero through the cap, so the resolution is complete with length i.
    """

    def __init__(self, M: GradedModule, steps, diffs, terminated_at, cap: int):
        self.M = M
        self.steps = steps
        self.diffs = diffs
        self.terminated_at = terminated_at
        self.cap = cap

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    def shifts(self, i: int):
        """Generator degrees of F_i, negated (so free covers read A(-d))."""
        if i > self.length:
            return []
        return [-g for _, g in self.steps[i].summands]


def free_resolution(M: GradedModule, steps: int, window: Window,
                    deg0: Deg0Data | None = None) -> FreeResolution:
    cap = window.algebra_degree_cap
    if steps > window.homological_max + 1:
        raise WindowExceeded(
            f"requested {steps} steps beyond homological_max {window.homological_max} + 1")
    cached = getattr(M, "_res_cache", None)
    if cached is not None and cached.cap == cap and (
        cached.terminated_at is not None or cached.length >= steps
    ):
        return cached
    P = M.presentation(deg0)
    covers = [P.cover]
    diffs = []
    field = M.field
    alg = M.algebra
    if P.rel is None:
        if P.cover.rank == 0 or _kernel_vanishes(field, P, cap):
            res = FreeResolution(M, covers, diffs, 0, cap)
            M._res_cache = res
            return res
        raise IncompleteKernel("presentation lacks a relation map but the cover has a kernel")
    diffs.append(P.rel)
    covers.append(P.rel.source)
    while len(covers) <= steps:
        prev = diffs[-1]
        lo = min([g for _, g in prev.source.summands], default=0)

        def ker_basis(d):
            return prev.kernel_basis(d)

        def ker_span(kgens, d):
            cols = [linalg.zeros(field, prev.source.dim(d), 0)]
            for _, dg, v in kgens:
                e = d - dg
                if e < 0 or alg.dim(e) == 0:
                    continue
                ne = alg.dim(e)
                block = []
                for b in range(ne):
                    w = linalg.zeros(field, ne, 1)[:, 0]
                    w[b] = field.one
                    block.append(prev.source.act(dg, v, e, w))
                cols.append(np.stack(block, axis=1))
            return np.concatenate(cols, axis=1)

        kgens = scan_minimal_generators(
            field, prev.source, ker_basis, ker_span, range(lo, cap + 1), deg0
        )
        if not kgens:
            res = FreeResolution(M, covers, diffs, len(covers) - 1, cap)
            M._res_cache = res
            return res
        if any(dg >= cap for _, dg, _ in kgens):
            raise IncompleteKernel(
                f"kernel generators found at the degree cap {cap}; raise the cap")
        src = ProjFree(alg, [(eps, dg) for eps, dg, _ in kgens])
        d_next = Morphism(src, prev.source, [v for _, _, v in kgens])
        diffs.append(d_next)
        covers.append(src)
    res = FreeResolution(M, covers, diffs, None, cap)
    M._res_cache = res
    return res


def _kernel_vanishes(field, P, cap) -> bool:
    for d in range(min([g for _, g in P.cover.summands], default=0), cap + 1):
        if linalg.nullspace(field, P.cover_mats[d]).shape[1]:
            return False
    return True


# ---------------------------------------------------------------------------
# Ext via Hom(resolution, N)
# ---------------------------------------------------------------------------


def _hom_block_bases(cover: ProjFree, N: GradedModule, s: int):
    """Per-summand coordinate bases W_m of Hom(eps_m Alg(-g_m), N(s)) = N_{g_m+s} eps_m."""
    field = N.field
    Ws = []
    for eps, gm in cover.summands:
        dN = gm + s
        if dN > N.valid_to:
            raise WindowExceeded(f"need module degree {dN} beyond validity {N.valid_to}")
        n = N.dim(dN)
        if n == 0:
            Ws.append(linalg.zeros(field, 0, 0))
        elif eps is None:
            Ws.append(linalg.eye(field, n))
        else:
            bas, _ = linalg.column_space_basis(field, N.act_matrix(dN, 0, eps))
            Ws.append(bas)
    return Ws


def _hom_complex_map(diff: Morphism, N: GradedModule, s: int, Ws_src, Ws_tgt) -> np.ndarray:
    """delta: Hom(F_j, N(s)) -> Hom(F_{j+1}, N(s)), f -> f o diff."""
    field = N.field
    src_cover = diff.target   # F_j
    tgt_cover = diff.source   # F_{j+1}
    wid_in = [w.shape[1] for w in Ws_src]
    wid_out = [w.shape[1] for w in Ws_tgt]
    out = linalg.zeros(field, sum(wid_out), sum(wid_in))
    roff = 0
    for mp in range(tgt_cover.rank):
        _, gp = tgt_cover.summands[mp]
        wo = wid_out[mp]
        if wo == 0:
            continue
        sub = _Subspace(field, Ws_tgt[mp])
        rho = diff.images[mp]
        blocks = src_cover.split(rho, gp)
        coff = 0
        for m in range(src_cover.rank):
            _, gm = src_cover.summands[m]
            wi = wid_in[m]
            if wi:
                amb = src_cover.ambient(m, gp, blocks[m])
                am = N.act_matrix(gm + s, gp - gm, amb)  # N_{gm+s} -> N_{gp+s}
                blk = am @ Ws_src[m]
                if field.is_prime_field:
                    blk %= field.p
                out[roff : roff + wo, coff : coff + wi] = sub.coords(blk)
            coff += wi
        roff += wo
    return out


def ext_graded_dims(M: GradedModule, N: GradedModule, i: int, window: Window,
                    deg0: Deg0Data | None = None) -> dict:
    """Map internal degree s -> dim Ext^i_{GrMod}(M, N(s)), for s in the window."""
    if i > window.homological_max:
        raise WindowExceeded(f"homological degree {i} beyond window bound {window.homological_max}")
    res = free_resolution(M, i + 1, window, deg0)
    out = {}
    field = M.field
    for s in range(window.internal_lo, window.internal_hi + 1):
        if i > res.length:
            out[s] = 0
            continue
        Ws_i = _hom_block_bases(res.steps[i], N, s)
        dim_i = sum(w.shape[1] for w in Ws_i)
        if i < len(res.diffs):
            Ws_next = _hom_block_bases(res.steps[i + 1], N, s)
            delta_i = _hom_complex_map(res.diffs[i], N, s, Ws_i, Ws_next)
            ker = dim_i - linalg.rank(field, delta_i)
        else:
            ker = dim_i
        if i > 0:
            Ws_prev = _hom_block_bases(res.steps[i - 1], N, s)
            delta_prev = _hom_complex_map(res.diffs[i - 1], N, s, Ws_prev, Ws_i)
            im = linalg.rank(field, delta_prev)
        else:
            im = 0
        out[s] = ker - im
    return out


# ---------------------------------------------------------------------------
# module-theoretic tests
# ---------------------------------------------------------------------------


def algebra_free_module(alg, window: Window) -> GradedModule:
    return free_graded_module(alg, [0], 0, alg.valid_through)


def is_mcm(M: GradedModule, window: Window) -> tuple[bool, dict]:
    """Ext^i(M, Alg) = 0 for 1 <= i <= homological_max, within the window."""
    NA = algebra_free_module(M.algebra, window)
    report = {"window": window.tag(), "ext": {}}
    ok = True
    for i in range(1, window.homological_max + 1):
        dims = ext_graded_dims(M, NA, i, window)
        nz = {s: d for s, d in dims.items() if d}
        report["ext"][i] = nz
        if nz:
            ok = False
    report["mcm"] = ok
    return ok, report


def end0_algebra(M: GradedModule, deg0: Deg0Data | None = None) -> tuple[FinDimAlgebra, list]:
    """End(M)_0 as a finite-dimensional algebra; product is composition
    (b_i * b_j means apply b_j first)."""
    field = M.field
    basis = hom_basis(M, M, 0, deg0)
    n = len(basis)
    stack = (np.stack([b.stacked() for b in basis], axis=1)
             if n else linalg.zeros(field, 0, 0))
    mult = linalg.zeros(field, n * n, n).reshape(n, n, n)
    for i in range(n):
        for j in range(n):
            prod = compose_hom(basis[j], basis[i])
            sol = linalg.solve(field, stack, prod.stacked())
            if sol is None:
                raise ShapeMismatch("composition left the hom space; presentation incomplete")
            mult[i, j, :] = sol[:, 0]
    ident = identity_hom(M)
    unit = linalg.solve(field, stack, ident.stacked())
    if unit is None:
        raise ShapeMismatch("identity not found in End(M)_0")
    return FinDimAlgebra(field, mult, unit[:, 0], check=False), basis


def is_indecomposable(M: GradedModule, window: Window) -> bool:
    E, _ = end0_algebra(M)
    if E.n == 0:
        return False  # zero module
    if is_local(E):
        return True
    try:
        idems = primitive_idempotents(E)
    except NonSplit as exc:
        raise NonSplitResidue(str(exc))
    return len(idems) == 1


@dataclass
class IsoResult:
    status: str            # "isomorphic" | "not-found" | "non-isomorphic"
    witness: tuple | None  # coefficients in the Hom(M,N,0) basis
    certified: bool
    detail: str


def are_isomorphic_graded(M: GradedModule, N: GradedModule, window: Window,
                          trials: int = 64, seed: int = 0) -> IsoResult:
    lo = max(M.valid_from, N.valid_from, window.internal_lo)
    hi = min(M.valid_to, N.valid_to, window.internal_hi)
    for d in range(lo, hi + 1):
        if M.dim(d) != N.dim(d):
            return IsoResult("non-isomorphic", None, True,
                             f"graded dimensions differ at degree {d}")
    basis = hom_basis(M, N, 0)
    k = len(basis)
    if k == 0:
        if any(M.dim(d) for d in range(lo, hi + 1)):
            return IsoResult("non-isomorphic", None, True, "Hom(M, N)_0 = 0 but M is nonzero")
        return IsoResult("isomorphic", (), True, "both modules vanish within the window")
    field = M.field

    def invertible(coeffs) -> bool:
        for d in range(lo, hi + 1):
            n = M.dim(d)
            if n == 0:
                continue
            m = linalg.zeros(field, N.dim(d), n)
            for c, b in zip(coeffs, basis):
                if not field.is_zero(field(c)):
                    m = m + b.matrix(d) * c
            if field.is_prime_field:
                m %= field.p
            if linalg.inverse(field, m) is None:
                return False
        return True

    if field.is_prime_field and field.p ** k <= 10_000:
        for coeffs in itertools.product(range(field.p), repeat=k):
            if any(coeffs) and invertible(coeffs):
                return IsoResult("isomorphic", coeffs, True, "exhaustive scan witness")
        return IsoResult("non-isomorphic", None, True,
                         "no invertible element of Hom(M, N)_0 (exhaustive scan)")
    rng = random.Random(seed)
    for _ in range(trials):
        coeffs = tuple(rng.randrange(field.p) if field.is_prime_field else rng.randint(-5, 5)
                       for _ in range(k))
        if any(coeffs) and invertible(coeffs):
            return IsoResult("isomorphic", coeffs, True, "randomized witness (certified exactly)")
    return IsoResult("not-found", None, False,
                     f"no witness in {trials} seeded trials; not a proof of non-isomorphism")


def nu_stability_check(M: GradedModule, sigma, window: Window,
                       trials: int = 64, seed: int = 0) -> IsoResult:
    return are_isomorphic_graded(twist_module(M, sigma), M, window, trials, seed)


# ---------------------------------------------------------------------------
# cluster tilting and the evaluation isomorphism
# ---------------------------------------------------------------------------


def in_add_of(X: GradedModule, M: GradedModule, window: Window) -> tuple[bool, str]:
    """Whether M lies in add{X(i)}: id_M must be a sum of compositions
    M -> X(s) -> M, i.e. the trace ideal of X in End(M)_0 is the whole algebra."""
    field = M.field
    E, ebasis = end0_algebra(M)
    if E.n == 0:
        return True, "zero module"
    estack = np.stack([b.stacked() for b in ebasis], axis=1)
    ident = identity_hom(M).stacked()
    cols = []
    for s in range(window.internal_lo, window.internal_hi + 1):
        try:
            down = hom_basis(M, X, s)    # M -> X(s)
            up = hom_basis(X, M, -s)     # X(s) -> M, shifted view
        except WindowExceeded:
            continue
        for g in down:
            for f in up:
                # f(s) o g : M -> M; same generator-image arithmetic as an
                # unshifted composite because matrices only see true degrees
                comp_images = []
                cover = M.presentation().cover
                for j in range(cover.rank):
                    gj = cover.summands[j][1]
                    u = g.gen_images[j]          # in X_{gj+s}
                    v = f.matrix(gj + s) @ u     # in M_{gj}
                    if field.is_prime_field:
                        v %= field.p
                    comp_images.append(v)
                cols.append(np.concatenate(comp_images) if comp_images
                            else np.zeros(0, dtype=np.int64))
    if not cols:
        return False, "no maps through add{X(i)} at all"
    tr = np.stack(cols, axis=1)
    ok = linalg.solve(field, tr, ident) is not None
    return ok, ("identity realized through add{X(i)}" if ok
                else "identity not in the trace ideal within the window")


def check_cluster_tilting(X: GradedModule, n: int, candidates, window: Window) -> dict:
    report = {"window": window.tag(), "n": n}
    ok_mcm, mcm_rep = is_mcm(X, window)
    report["X_mcm"] = ok_mcm
    if n == 1:
        report["self_ext"] = "vacuous for n = 1 (no 0 < i < 1)"
        self_ok = True
    else:
        self_ok = True
        ext_rep = {}
        for i in range(1, n):
            dims = ext_graded_dims(X, X, i, window)
            nz = {s: d for s, d in dims.items() if d}
            ext_rep[i] = nz
            if nz:
                self_ok = False
        report["self_ext"] = ext_rep
    cand_rep = []
    all_ok = ok_mcm and self_ok
    for name, M in candidates:
        entry = {"name": name}
        m_ok, _ = is_mcm(M, window)
        entry["mcm"] = m_ok
        cross_ok = True
        for i in range(1, n):
            if any(ext_graded_dims(X, M, i, window).values()):
                cross_ok = False
            if any(ext_graded_dims(M, X, i, window).values()):
                cross_ok = False
        entry["cross_ext_zero"] = cross_ok if n > 1 else "vacuous for n = 1"
        member, why = in_add_of(X, M, window)
        entry["in_add_X"] = member
        entry["why"] = why
        if m_ok and cross_ok:
            entry["consistent"] = member  # MCM + ext-vanishing should imply membership
            all_ok = all_ok and member
        cand_rep.append(entry)
    report["candidates"] = cand_rep
    report["verdict"] = all_ok
    return report


def eval_iso_check(X: GradedModule, M: GradedModule, window: Window,
                   a_is_summand: bool = True) -> dict:
    """Degreewise check that evaluation Hom(X, M) (x)_B X -> M is bijective."""
    from .errors import HypothesisViolated

    if not a_is_summand:
        raise HypothesisViolated("the free module must be a declared summand of X")
    field = M.field
    report = {"window": window.tag(), "degrees": {}, "verdict": True}
    a_lo = M.valid_from
    for d in range(max(window.internal_lo, M.valid_from), min(window.internal_hi, M.valid_to) + 1):
        a_hi = min(d - X.valid_from, M.valid_to)
        homs = {}
        for a in range(a_lo, a_hi + 1):
            b = d - a
            if b < X.valid_from or b > X.valid_to:
                continue
            homs[a] = hom_basis(X, M, a)
        blocks = [(a, i, x) for a in sorted(homs) for i in range(len(homs[a]))
                  for x in range(X.dim(d - a))]
        pos = {blk: c for c, blk in enumerate(blocks)}
        total = len(blocks)
        relcols = []
        for a in sorted(homs):
            for e in range(0, a_hi - a + 1):
                bdeg = d - a - e
                if bdeg < X.valid_from or bdeg > X.valid_to or X.dim(bdeg) == 0:
                    continue
                bb = hom_basis(X, X, e)
                for beta in bb:
                    bmat = beta.matrix(bdeg)  # X_{bdeg} -> X_{d-a}
                    for f in homs[a]:
                        fb = compose_hom(beta, f)  # f o beta : X -> M(a+e)
                        coords = _coords_in_homs(field, homs.get(a + e, []), fb)
                        for x in range(X.dim(bdeg)):
                            col = linalg.zeros(field, total, 1)[:, 0]
                            # (f o beta) (x)_B x  at block (a+e, d-a-e)
                            for i, c in enumerate(coords):
                                if not field.is_zero(field(c)):
                                    col[pos[(a + e, i, x)]] = field.add(
                                        field(col[pos[(a + e, i, x)]]), field(c))
                            # minus f (x)_B beta(x)  at block (a, d-a)
                            bx = bmat[:, x]
                            fi = homs[a].index(f)
                            for y in range(X.dim(d - a)):
                                c = field.neg(field(bx[y]))
                                if not field.is_zero(c):
                                    col[pos[(a, fi, y)]] = field.add(
                                        field(col[pos[(a, fi, y)]]), c)
                            relcols.append(col)
        rel = (np.stack(relcols, axis=1) if relcols
               else linalg.zeros(field, total, 0))
        ev = linalg.zeros(field, M.dim(d), total)
        for (a, i, x), c in pos.items():
            fx = homs[a][i].matrix(d - a)[:, x]
            ev[:, c] = fx
        rk_rel = linalg.rank(field, rel)
        rk_ev = linalg.rank(field, ev)
        # relations must die under evaluation
        comp = ev @ rel
        if field.is_prime_field:
            comp %= field.p
        bal = not comp.any() if field.is_prime_field else all(field.is_zero(v) for v in comp.flat)
        surj = rk_ev == M.dim(d)
        inj = (total - rk_rel) == rk_ev
        ok = bal and surj and inj
        report["degrees"][d] = {
            "tensor_dim": total, "relation_rank": rk_rel,
            "quotient_dim": total - rk_rel, "module_dim": M.dim(d), "bijective": ok,
        }
        if not ok:
            report["verdict"] = False
    return report


def _coords_in_homs(field, basis, f: HomElement):
    fv = f.stacked()
    zero = (not fv.any()) if field.is_prime_field else all(field.is_zero(v) for v in fv)
    if not basis:
        if zero:
            return []
        raise ShapeMismatch("nonzero composite hom missing from the computed block")
    mat = np.stack([b.stacked() for b in basis], axis=1)
    sol = linalg.solve(field, mat, fv)
    if sol is None:
        raise ShapeMismatch("composite hom not in the computed basis")
    return sol[:, 0]
