"""Command-line interface: workspace files, command dispatch, JSON reports.

Workspace (.nws) files are line-based: sections `[field]`, `[algebra N]`,
`[module N]`, `[automorphism N]`, `[window]` with `key = value` pairs;
values are integers or double-quoted strings.  Expression lists inside
strings split on ';', name/number lists on ','.

Exit codes: 0 all pass, 1 any fail, 2 inconclusive, 3 error.  Reports are
deterministic (no wall-clock content unless --timing is given).
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import gmodule, homology, koszul
from . import endo as endo_mod
from .algebra import (
    PresentedAlgebra,
    build_presented_algebra,
    hilbert_series,
    is_central,
    is_regular_element,
    match_rational,
    quotient_algebra,
)
from .errors import NcgError, ParseError, UnknownReference
from .freealg import Gens, parse_poly
from .gbasis import MonomialOrder, Presentation
from .gmodule import GradedAutomorphism, cyclic_module, direct_sum, free_graded_module, shift_module
from .homology import Window
from .scalars import Field, root_of_unity

DEFAULT_MAX_DEG = 12


# ---------------------------------------------------------------------------
# workspace files
# ---------------------------------------------------------------------------


class Workspace:
    def __init__(self):
        self.field = Field(13)
        self.window = Window()
        self.algebras: dict[str, PresentedAlgebra] = {}
        self.modules: dict[str, object] = {}
        self.automorphisms: dict[str, GradedAutomorphism] = {}
        self.sections = []  # (kind, name, dict) in file order, for round-trips

    def algebra(self, name: str) -> PresentedAlgebra:
        if name not in self.algebras:
            raise UnknownReference(f"unknown algebra {name!r}")
        return self.algebras[name]

    def module(self, name: str):
        if name not in self.modules:
            raise UnknownReference(f"unknown module {name!r}")
        return self.modules[name]

    def automorphism(self, name: str) -> GradedAutomorphism:
        if name not in self.automorphisms:
            raise UnknownReference(f"unknown automorphism {name!r}")
        return self.automorphisms[name]


def _parse_sections(text: str):
    sections = []
    cur = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        s = line.strip()
        if s.startswith("["):
            if not s.endswith("]"):
                raise ParseError("unterminated section header", line=lineno,
                                 column=raw.index("[") + 1)
            head = s[1:-1].split()
            if not head or head[0] not in ("field", "algebra", "module", "automorphism", "window"):
                raise ParseError(f"unknown section {s!r}", line=lineno, column=1)
            if head[0] in ("field", "window"):
                if len(head) != 1:
                    raise ParseError(f"section {head[0]} takes no name", line=lineno, column=1)
                cur = (head[0], None, {}, lineno)
            else:
                if len(head) != 2:
                    raise ParseError(f"section {head[0]} needs exactly one name",
                                     line=lineno, column=1)
                cur = (head[0], head[1], {}, lineno)
            sections.append(cur)
            continue
        if cur is None:
            raise ParseError("key outside any section", line=lineno, column=1)
        if "=" not in line:
            raise ParseError("expected 'key = value'", line=lineno, column=len(line))
        key, _, val = line.partition("=")
        key = key.strip()
        val = val.strip()
        if val.startswith('"'):
            if not val.endswith('"') or len(val) < 2:
                raise ParseError("unterminated string value", line=lineno,
                                 column=line.index('"') + 1)
            value = val[1:-1]
        else:
            try:
                value = int(val)
            except ValueError:
                raise ParseError(f"expected integer or quoted string, got {val!r}",
                                 line=lineno, column=line.index(val) + 1)
        cur[2][key] = value
    return sections


def _names(v: str):
    return [s.strip() for s in str(v).split(",") if s.strip()]


def _ints(v):
    if isinstance(v, int):
        return [v]
    return [int(s) for s in _names(v)]


def _exprs(v: str):
    return [s.strip() for s in str(v).split(";") if s.strip()]


def parse_workspace(text: str, max_deg: int = DEFAULT_MAX_DEG) -> Workspace:
    ws = Workspace()
    ws.sections = _parse_sections(text)
    pres_by_name = {}
    for kind, name, kv, lineno in ws.sections:
        if kind == "field":
            ws.field = Field.parse(str(kv.get("name", kv.get("p", "GF(13)"))))
        elif kind == "window":
            lo, hi = (ws.window.internal_lo, ws.window.internal_hi)
            if "internal" in kv:
                lo, hi = _ints(kv["internal"])
            ws.window = Window(
                internal_lo=lo, internal_hi=hi,
                homological_max=int(kv.get("homological_max", ws.window.homological_max)),
                algebra_degree_cap=int(kv.get("cap", ws.window.algebra_degree_cap)),
            )
    for kind, name, kv, lineno in ws.sections:
        if kind == "algebra":
            if "base" in kv:
                base = str(kv["base"])
                if base not in ws.algebras:
                    raise UnknownReference(f"algebra {name!r}: unknown base {base!r}")
                b = ws.algebras[base]
                extra = tuple(parse_poly(e, b.gens, ws.field)
                              for e in _exprs(kv.get("extra_relations", "")))
                ws.algebras[name] = quotient_algebra(b, extra, max_deg)
                pres_by_name[name] = ws.algebras[name].presentation
                continue
            gnames = tuple(_names(kv.get("generators", "")))
            if not gnames:
                raise ParseError(f"algebra {name!r} needs generators", line=lineno, column=1)
            degrees = tuple(_ints(kv.get("degrees", ", ".join("1" for _ in gnames))))
            gens = Gens(gnames, degrees)
            order = MonomialOrder(gens, tuple(range(len(gens))))
            rels = tuple(parse_poly(e, gens, ws.field)
                         for e in _exprs(kv.get("relations", "")))
            pres = Presentation(ws.field, gens, rels, order)
            pres_by_name[name] = pres
            ws.algebras[name] = build_presented_algebra(pres, max_deg)
        elif kind == "module":
            mkind = str(kv.get("kind", "cyclic"))
            of = str(kv.get("of", ""))
            if mkind == "cyclic":
                alg = ws.algebra(of)
                gens = [parse_poly(e, alg.gens, ws.field)
                        for e in _exprs(kv.get("generators", ""))]
                ws.modules[name] = cyclic_module(alg, gens, max_deg)
            elif mkind == "free":
                alg = ws.algebra(of)
                shifts = _ints(kv.get("shifts", "0"))
                ws.modules[name] = free_graded_module(alg, shifts, min(0, *shifts), max_deg)
            elif mkind == "sum":
                parts = [ws.module(m) for m in _names(of)]
                ws.modules[name] = direct_sum(parts)
            else:
                raise ParseError(f"unknown module kind {mkind!r}", line=lineno, column=1)
        elif kind == "automorphism":
            alg = ws.algebra(str(kv.get("of", "")))
            images = [parse_poly(e, alg.gens, ws.field)
                      for e in _exprs(kv.get("images", ""))]
            ws.automorphisms[name] = GradedAutomorphism(alg, images)
    return ws


def serialize_workspace(ws: Workspace) -> str:
    out = []
    for kind, name, kv, _ in ws.sections:
        out.append(f"[{kind}]" if name is None else f"[{kind} {name}]")
        for k, v in kv.items():
            out.append(f"{k} = {v}" if isinstance(v, int) else f'{k} = "{v}"')
        out.append("")
    return "\n".join(out)


# ---------------------------------------------------------------------------
# rational-function parsing for --match (single variable t, integer coeffs)
# ---------------------------------------------------------------------------


def _poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _poly_neg(a):
    return [-c for c in a]


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


class _RatParser:
    """num/den pairs of integer polynomials in t; grammar: + - * / ^ ( ) int t."""

    def __init__(self, text: str):
        self.text = text
        self.i = 0

    def _skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self):
        self._skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def parse(self):
        v = self.expr()
        if self.peek():
            raise ParseError(f"trailing input in series expression", column=self.i + 1)
        return v

    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.peek()
            self.i += 1
            w = self.term()
            if op == "-":
                w = (_poly_neg(w[0]), w[1])
            v = (_poly_add(_poly_mul(v[0], w[1]), _poly_mul(w[0], v[1])),
                 _poly_mul(v[1], w[1]))
        return v

    def term(self):
        v = self.factor()
        while self.peek() in ("*", "/"):
            op = self.peek()
            self.i += 1
            w = self.factor()
            if op == "*":
                v = (_poly_mul(v[0], w[0]), _poly_mul(v[1], w[1]))
            else:
                v = (_poly_mul(v[0], w[1]), _poly_mul(v[1], w[0]))
        return v

    def factor(self):
        v = self.atom()
        while self.peek() == "^":
            self.i += 1
            ch = self.peek()
            j = self.i
            while j < len(self.text) and self.text[j].isdigit():
                j += 1
            if j == self.i:
                raise ParseError("expected integer exponent", column=self.i + 1)
            e = int(self.text[self.i : j])
            self.i = j
            num, den = [1], [1]
            for _ in range(e):
                num = _poly_mul(num, v[0])
                den = _poly_mul(den, v[1])
            v = (num, den)
        return v

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.i += 1
            v = self.expr()
            if self.peek() != ")":
                raise ParseError("expected ')'", column=self.i + 1)
            self.i += 1
            return v
        if ch == "-":
            self.i += 1
            v = self.atom()
            return (_poly_neg(v[0]), v[1])
        if ch == "t":
            self.i += 1
            return ([0, 1], [1])
        if ch.isdigit():
            j = self.i
            while j < len(self.text) and self.text[j].isdigit():
                j += 1
            v = int(self.text[self.i : j])
            self.i = j
            return ([v], [1])
        raise ParseError(f"unexpected character {ch!r} in series expression",
                         column=self.i + 1)


def parse_rational(text: str):
    return _RatParser(text).parse()


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------

_VERDICT_CODE = {"pass": 0, "fail": 1, "inconclusive": 2}


def _worst(checks):
    code = 0
    for c in checks:
        code = max(code, _VERDICT_CODE.get(c["verdict"], 3))
    return code


def make_report(command: str, inputs: dict, window: Window, checks: list,
                elapsed: float | None = None) -> dict:
    rep = {
        "command": command,
        "inputs": inputs,
        "window": window.tag(),
        "checks": checks,
        "verdict": ["pass", "fail", "inconclusive"][min(_worst(checks), 2)],
    }
    if elapsed is not None:
        rep["time_s"] = round(elapsed, 3)
    return rep


def _check(name: str, ok, evidence) -> dict:
    if isinstance(ok, str):
        verdict = ok
    else:
        verdict = "pass" if ok else "fail"
    return {"check": name, "verdict": verdict, "evidence": evidence}


def _emit(report: dict, args) -> int:
    blob = json.dumps(report, indent=2, default=str)
    print(blob)
    if getattr(args, "json", None):
        with open(args.json, "w") as fh:
            fh.write(blob + "\n")
    return _worst(report["checks"]) if report["checks"] else 0


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _load_workspace(args) -> Workspace:
    if getattr(args, "workspace", None):
        with open(args.workspace) as fh:
            text = fh.read()
        ws = parse_workspace(text, max_deg=args.max_deg)
    else:
        ws = Workspace()
    if getattr(args, "field", None):
        ws.field = Field.parse(args.field)
    if getattr(args, "window", None):
        lo, hi, hmax, cap = _ints(args.window)
        ws.window = Window(lo, hi, hmax, cap)
    return ws


def cmd_gb(args) -> int:
    ws = _load_workspace(args)
    alg = ws.algebra(args.name)
    elems = alg.gb.elements
    checks = [_check("groebner-complete",
                     alg.valid_through >= args.max_deg,
                     {"complete_through": alg.valid_through})]
    rep = make_report("gb", {"algebra": args.name}, ws.window, checks)
    rep["basis"] = [str(g.poly) for g in elems] if hasattr(elems[0], "poly") else [str(g) for g in elems]
    rep["dims"] = [alg.dim(d) for d in range(0, min(args.max_deg, alg.valid_through) + 1)]
    return _emit(rep, args)


def cmd_hilbert(args) -> int:
    ws = _load_workspace(args)
    alg = ws.algebra(args.name)
    D = min(args.max_deg, alg.valid_through)
    series = hilbert_series(alg, D)
    checks = []
    if args.match:
        num, den = parse_rational(args.match)
        ok = match_rational(series, num, den)
        checks.append(_check("series-match", ok,
                             {"coeffs": list(series.coeffs), "expression": args.match}))
    rep = make_report("hilbert", {"algebra": args.name, "max_deg": D}, ws.window, checks)
    rep["coeffs"] = list(series.coeffs)
    return _emit(rep, args)


def cmd_hom(args) -> int:
    ws = _load_workspace(args)
    M, N = ws.module(args.M), ws.module(args.N)
    hs = homology.hom_space(M, N, args.s, ws.window)
    rep = make_report("hom", {"M": args.M, "N": args.N, "s": args.s}, ws.window, [])
    rep["dim"] = hs.dim
    return _emit(rep, args)


def cmd_ext(args) -> int:
    ws = _load_workspace(args)
    M, N = ws.module(args.M), ws.module(args.N)
    dims = homology.ext_graded_dims(M, N, args.i, ws.window)
    rep = make_report("ext", {"M": args.M, "N": args.N, "i": args.i}, ws.window, [])
    rep["dims"] = {str(s): d for s, d in sorted(dims.items())}
    return _emit(rep, args)


def cmd_mcm(args) -> int:
    ws = _load_workspace(args)
    M = ws.module(args.M)
    ok, detail = homology.is_mcm(M, ws.window)
    rep = make_report("mcm", {"M": args.M}, ws.window,
                      [_check("ext-vanishing", ok, detail["ext"])])
    return _emit(rep, args)


def cmd_indec(args) -> int:
    ws = _load_workspace(args)
    ok = homology.is_indecomposable(ws.module(args.M), ws.window)
    rep = make_report("indec", {"M": args.M}, ws.window,
                      [_check("endomorphism-local", ok, {})])
    return _emit(rep, args)


def cmd_iso(args) -> int:
    ws = _load_workspace(args)
    M, N = ws.module(args.M), ws.module(args.N)
    if args.shift:
        N = shift_module(N, args.shift)
    r = homology.are_isomorphic_graded(M, N, ws.window, trials=args.trials, seed=args.seed)
    verdict = {"isomorphic": "pass", "non-isomorphic": "fail", "not-found": "inconclusive"}[r.status]
    rep = make_report("iso", {"M": args.M, "N": args.N, "shift": args.shift}, ws.window,
                      [_check("isomorphism", verdict,
                              {"status": r.status, "certified": r.certified,
                               "witness": list(r.witness) if r.witness else None,
                               "detail": r.detail})])
    return _emit(rep, args)


def cmd_cluster(args) -> int:
    ws = _load_workspace(args)
    X = ws.module(args.X)
    cands = [(n, ws.module(n)) for n in _names(args.candidates)]
    rep0 = homology.check_cluster_tilting(X, args.n, cands, ws.window)
    rep = make_report("cluster", {"X": args.X, "n": args.n}, ws.window,
                      [_check("cluster-tilting", rep0["verdict"], rep0)])
    return _emit(rep, args)


def _build_endo(ws: Workspace, name: str):
    return endo_mod.endomorphism_algebra(ws.module(name), ws.window)


def cmd_endo(args) -> int:
    ws = _load_workspace(args)
    B = _build_endo(ws, args.X)
    dims = {str(d): B.algebra.dim(d)
            for d in range(ws.window.internal_lo, ws.window.algebra_degree_cap + 1)}
    checks = [_check("nonnegative", endo_mod.check_nonnegative(B),
                     {d: v for d, v in dims.items() if int(d) < 0})]
    if args.match:
        num, den = parse_rational(args.match)
        from .algebra import HilbertSeries

        series = HilbertSeries(tuple(B.algebra.dim(d)
                                     for d in range(0, ws.window.algebra_degree_cap + 1)))
        checks.append(_check("series-match", match_rational(series, num, den),
                             {"coeffs": list(series.coeffs), "expression": args.match}))
    rep = make_report("endo", {"X": args.X}, ws.window, checks)
    rep["dims"] = dims
    return _emit(rep, args)


def cmd_quiver(args) -> int:
    ws = _load_workspace(args)
    B = _build_endo(ws, args.X)
    B0 = endo_mod.degree_zero_algebra(B)
    rad, idems = endo_mod.radical_and_idempotents(B0)
    Q = endo_mod.quiver_of(B0)
    rep = make_report("quiver", {"X": args.X}, ws.window, [])
    rep["degree_zero_dim"] = B0.n
    rep["radical_dim"] = int(rad.shape[1])
    rep["idempotents"] = len(idems)
    rep["quiver"] = Q.to_json()
    return _emit(rep, args)


def cmd_koszul_dual(args) -> int:
    ws = _load_workspace(args)
    alg = ws.algebra(args.name)
    dual = koszul.quadratic_dual(alg.presentation)
    dalg = build_presented_algebra(dual, args.max_deg)
    n = len(alg.gens)
    rep = make_report("koszul-dual", {"algebra": args.name}, ws.window,
                      [_check("rank-complement",
                              len(alg.presentation.relations) + len(dual.relations) == n * n,
                              {"dim_R_plus_dim_Rperp": len(alg.presentation.relations) + len(dual.relations),
                               "n_squared": n * n})])
    rep["dual_relations"] = [str(r) for r in dual.relations]
    rep["dual_dims"] = [dalg.dim(d) for d in range(0, min(args.max_deg, dalg.valid_through) + 1)]
    return _emit(rep, args)


def cmd_clifford(args) -> int:
    ws = _load_workspace(args)
    alg = ws.algebra(args.name)
    dual = build_presented_algebra(koszul.quadratic_dual(alg.presentation), args.max_deg)
    w = parse_poly(args.central, dual.gens, ws.field)
    C, detail = koszul.clifford_algebra(dual, w, ws.window.algebra_degree_cap + 2)
    blocks = None
    checks = [_check("stabilized", True, detail)]
    if koszul.is_commutative(C):
        blocks = koszul.commutative_semisimple_decompose(C)
        checks.append(_check("split-semisimple", all(b == 1 for b in blocks),
                             {"blocks": blocks, "isomorphic_to": f"k^{len(blocks)}"
                              if all(b == 1 for b in blocks) else "product of larger blocks"}))
    rep = make_report("clifford", {"algebra": args.name, "central": args.central},
                      ws.window, checks)
    rep["dim"] = C.n
    return _emit(rep, args)


def cmd_points(args) -> int:
    ws = _load_workspace(args)
    alg = ws.algebra(args.name)
    polys = [parse_poly(e, alg.gens, ws.field) for e in _exprs(args.polys)]
    pts = koszul.enumerate_projective_points(polys, alg.gens, ws.field)
    rep = make_report("points", {"algebra": args.name, "polys": args.polys}, ws.window, [])
    rep["count"] = len(pts)
    rep["points"] = [list(p) for p in pts]
    return _emit(rep, args)


def cmd_asgorenstein(args) -> int:
    ws = _load_workspace(args)
    alg = ws.algebra(args.name)
    if ws.window.homological_max < args.d:
        rep = make_report("asgorenstein", {"algebra": args.name, "d": args.d, "ell": args.ell},
                          ws.window,
                          [_check("gorenstein", "inconclusive",
                                  {"reason": f"window homological_max {ws.window.homological_max} "
                                             f"cannot reach Ext^{args.d}"})])
        return _emit(rep, args)
    detail = endo_mod.as_gorenstein_check(alg, args.d, args.ell, ws.window)
    rep = make_report("asgorenstein", {"algebra": args.name, "d": args.d, "ell": args.ell},
                      ws.window, [_check("gorenstein", detail["verdict"], detail["sides"])])
    return _emit(rep, args)


def cmd_asregular(args) -> int:
    ws = _load_workspace(args)
    if ws.window.homological_max < args.d:
        rep = make_report("asregular", {"X": args.X, "d": args.d, "ell": args.ell}, ws.window,
                          [_check("as-regular-over-degree-zero", "inconclusive",
                                  {"reason": f"window homological_max {ws.window.homological_max} "
                                             f"cannot reach Ext^{args.d}"})])
        return _emit(rep, args)
    B = _build_endo(ws, args.X)
    detail = endo_mod.as_regular_over_R_check(B, args.d, args.ell, ws.window)
    rep = make_report("asregular", {"X": args.X, "d": args.d, "ell": args.ell}, ws.window,
                      [_check("as-regular-over-degree-zero", detail["verdict"], detail)])
    return _emit(rep, args)


def cmd_eval_iso(args) -> int:
    ws = _load_workspace(args)
    X, M = ws.module(args.X), ws.module(args.M)
    detail = homology.eval_iso_check(X, M, ws.window)
    rep = make_report("eval-iso", {"X": args.X, "M": args.M}, ws.window,
                      [_check("evaluation-bijective", detail["verdict"], detail["degrees"])])
    return _emit(rep, args)


def cmd_nu_stable(args) -> int:
    ws = _load_workspace(args)
    M = ws.module(args.M)
    sigma = ws.automorphism(args.sigma)
    r = homology.nu_stability_check(M, sigma, ws.window, trials=args.trials, seed=args.seed)
    verdict = {"isomorphic": "pass", "non-isomorphic": "fail", "not-found": "inconclusive"}[r.status]
    rep = make_report("nu-stable", {"M": args.M, "sigma": args.sigma}, ws.window,
                      [_check("twist-isomorphic", verdict,
                              {"status": r.status, "certified": r.certified, "detail": r.detail})])
    return _emit(rep, args)


# ---------------------------------------------------------------------------
# the end-to-end example pipeline
# ---------------------------------------------------------------------------

EXAMPLE_WORKSPACE = """\
[field]
name = "GF(13)"

[algebra S]
generators = "x, y, z"
degrees = "1, 1, 1"
relations = "x*y + y*x - z^2; x*z + z*x; y*z + z*y"

[algebra A]
base = "S"
extra_relations = "x^2 + y^2"

[module AF]
kind = "free"
of = "A"
shifts = "0"

[module X1]
kind = "cyclic"
of = "A"
generators = "x - y + z"

[module X2]
kind = "cyclic"
of = "A"
generators = "x - y - z"

[module X3]
kind = "cyclic"
of = "A"
generators = "x + y + 5*z"

[module X4]
kind = "cyclic"
of = "A"
generators = "x + y - 5*z"

[module X]
kind = "sum"
of = "AF, X1, X2, X3, X4"
"""


def example_workspace(p: int = 13, max_deg: int = DEFAULT_MAX_DEG,
                      window: Window | None = None) -> Workspace:
    field = Field(p)
    i4 = root_of_unity(field, 4)  # the fixture needs a primitive 4th root
    text = EXAMPLE_WORKSPACE.replace('"GF(13)"', f'"GF({p})"').replace("5*z", f"{i4}*z")
    ws = parse_workspace(text, max_deg=max_deg)
    if window is not None:
        ws.window = window
    return ws


def verify_example(ws: Workspace, seed: int = 0) -> dict:
    window = ws.window
    field = ws.field
    S, A = ws.algebra("S"), ws.algebra("A")
    checks = []

    # (1) Hilbert series of S and A
    hs = hilbert_series(S, min(8, S.valid_through))
    ha = hilbert_series(A, min(8, A.valid_through))
    ok1 = match_rational(hs, [1], _poly_mul(_poly_mul([1, -1], [1, -1]), [1, -1]))
    ok1 = ok1 and match_rational(ha, [1, 1], _poly_mul([1, -1], [1, -1]))
    checks.append(_check("hilbert-series", ok1,
                         {"S": list(hs.coeffs), "A": list(ha.coeffs)}))

    # (2) the quadric is central and regular in S
    f = parse_poly("x^2 + y^2", S.gens, field)
    ok2 = is_central(S, f) and is_regular_element(S, f, min(6, S.valid_through - 2))
    checks.append(_check("central-regular-quadric", ok2, {"element": "x^2 + y^2"}))

    # (3) A is AS-Gorenstein of dimension 2, parameter 1
    if window.homological_max < 2:
        checks.append(_check("as-gorenstein", "inconclusive",
                             {"reason": "homological_max too small for Ext^2"}))
    else:
        g = endo_mod.as_gorenstein_check(A, 2, 1, window)
        checks.append(_check("as-gorenstein", g["verdict"], g["sides"]))

    # (4) quadratic dual and the Clifford-type algebra C(A) = k^4
    dual = build_presented_algebra(koszul.quadratic_dual(A.presentation), 10)
    w = parse_poly("x^2", dual.gens, field)
    C, cdetail = koszul.clifford_algebra(dual, w, 10)
    blocks = (koszul.commutative_semisimple_decompose(C)
              if koszul.is_commutative(C) else None)
    ok4 = C.n == 4 and blocks is not None and blocks == [1, 1, 1, 1]
    checks.append(_check("clifford-k4", ok4,
                         {"dim": C.n, "blocks": blocks,
                          "dual_dims": [dual.dim(d) for d in range(5)]}))

    # (5) four points on the quadric's point scheme
    pts = koszul.enumerate_projective_points(
        [parse_poly("x*y + z^2", A.gens, field), parse_poly("x^2 - y^2", A.gens, field)],
        A.gens, field)
    checks.append(_check("point-count", len(pts) == 4,
                         {"count": len(pts), "points": [list(p) for p in pts]}))

    # (6) X1..X4 are MCM, indecomposable, pairwise non-isomorphic
    names = ["X1", "X2", "X3", "X4"]
    mods = {n: ws.module(n) for n in names}
    ok6 = True
    pair_evidence = {}
    for n in names:
        if not homology.is_mcm(mods[n], window)[0]:
            ok6 = False
            pair_evidence[n + ":mcm"] = False
        if not homology.is_indecomposable(mods[n], window):
            ok6 = False
            pair_evidence[n + ":indec"] = False
    for a in range(len(names)):
        for b in range(len(names)):
            if a == b:
                continue
            for s in range(-3, 4):
                r = homology.are_isomorphic_graded(
                    mods[names[a]], shift_module(mods[names[b]], s), window, seed=seed)
                if not (r.status == "non-isomorphic" and r.certified):
                    ok6 = False
                    pair_evidence[f"{names[a]}~{names[b]}({s})"] = r.status
    checks.append(_check("mcm-basic-summands", ok6, pair_evidence or {"pairs": "all certified distinct"}))

    # (7)-(8) B = End(X): nonnegative and the right Hilbert series
    X = ws.module("X")
    B = endo_mod.endomorphism_algebra(X, window)
    checks.append(_check("endo-nonnegative", endo_mod.check_nonnegative(B),
                         {str(d): B.algebra.dim(d) for d in range(window.internal_lo, 0)}))
    from .algebra import HilbertSeries

    hb = HilbertSeries(tuple(B.algebra.dim(d)
                             for d in range(0, window.algebra_degree_cap + 1)))
    ok8 = match_rational(hb, [9, 9], _poly_mul([1, -1], [1, -1]))
    checks.append(_check("endo-hilbert-series", ok8, {"coeffs": list(hb.coeffs)}))

    # (9) B0: dimension 9, radical of dim 4 squaring to zero, quiver 4 -> 1
    B0 = endo_mod.degree_zero_algebra(B)
    rad, idems = endo_mod.radical_and_idempotents(B0)
    rad2_zero = all(
        not B0.mul(rad[:, a], rad[:, b]).any()
        for a in range(rad.shape[1]) for b in range(rad.shape[1])
    )
    Q = endo_mod.quiver_of(B0)
    sink_form = (len(Q.vertices) == 5 and len(Q.arrows) == 4
                 and len({s for s, _, _ in Q.arrows}) == 4
                 and len({t for _, t, _ in Q.arrows}) == 1
                 and all(m == 1 for _, _, m in Q.arrows)
                 and all(s != t for s, t, _ in Q.arrows))
    ok9 = B0.n == 9 and rad.shape[1] == 4 and rad2_zero and len(idems) == 5 and sink_form
    checks.append(_check("degree-zero-structure", ok9,
                         {"dim": B0.n, "radical_dim": int(rad.shape[1]),
                          "radical_squares_to_zero": rad2_zero,
                          "idempotents": len(idems), "quiver": Q.to_json()}))

    # (10) B is AS-regular over B0 of dimension 2, parameter 1
    if window.homological_max < 2:
        checks.append(_check("as-regular-over-degree-zero", "inconclusive",
                             {"reason": "homological_max too small for Ext^2"}))
    else:
        reg = endo_mod.as_regular_over_R_check(B, 2, 1, window)
        checks.append(_check("as-regular-over-degree-zero", reg["verdict"],
                             {"ext": reg["ext"], "terminates_at_d": reg["terminates_at_d"]}))

    # (11) evaluation isomorphism for A, X1, k
    wd = Window(0, 4, window.homological_max, window.algebra_degree_cap)
    ok11 = True
    ev_evidence = {}
    k = cyclic_module(A, [parse_poly(g, A.gens, field) for g in ("x", "y", "z")],
                      DEFAULT_MAX_DEG)
    for n, mod in (("A", ws.module("AF")), ("X1", ws.module("X1")), ("k", k)):
        r = homology.eval_iso_check(X, mod, wd)
        ev_evidence[n] = r["verdict"]
        ok11 = ok11 and r["verdict"]
    checks.append(_check("evaluation-isomorphism", ok11, ev_evidence))

    return make_report("verify-example", {"p": field.p, "seed": seed}, window, checks)


def cmd_verify_example(args) -> int:
    t0 = time.monotonic()
    window = None
    if args.window:
        lo, hi, hmax, cap = _ints(args.window)
        window = Window(lo, hi, hmax, cap)
    ws = example_workspace(p=args.p, max_deg=args.max_deg, window=window)
    rep = verify_example(ws, seed=args.seed)
    if args.timing:
        rep["time_s"] = round(time.monotonic() - t0, 3)
    return _emit(rep, args)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def _add_common(p, workspace=True):
    if workspace:
        p.add_argument("--workspace", "-w", help="path to a .nws workspace file")
    p.add_argument("--field", help='override field, e.g. "GF(13)" or "QQ"')
    p.add_argument("--max-deg", type=int, default=DEFAULT_MAX_DEG,
                   help="truncation degree for algebra construction")
    p.add_argument("--window", help='window override "lo,hi,hmax,cap"')
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", help="also write the JSON report to this file")
    p.add_argument("--timing", action="store_true",
                   help="include wall-clock time in the report (breaks byte-identity)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ncg",
        description="graded noncommutative algebra workbench (exact, truncated)")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("gb", help="Groebner basis of an algebra")
    p.add_argument("name")
    _add_common(p)
    p.set_defaults(fn=cmd_gb)

    p = sub.add_parser("hilbert", help="Hilbert series, optionally matched to a rational form")
    p.add_argument("name")
    p.add_argument("--match", help='rational expression such as "(1+t)/(1-t)^2"')
    _add_common(p)
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("hom", help="dim Hom(M, N(s))")
    p.add_argument("M")
    p.add_argument("N")
    p.add_argument("s", type=int)
    _add_common(p)
    p.set_defaults(fn=cmd_hom)

    p = sub.add_parser("ext", help="graded dims of Ext^i(M, N)")
    p.add_argument("M")
    p.add_argument("N")
    p.add_argument("i", type=int)
    _add_common(p)
    p.set_defaults(fn=cmd_ext)

    p = sub.add_parser("mcm", help="maximal Cohen-Macaulay test")
    p.add_argument("M")
    _add_common(p)
    p.set_defaults(fn=cmd_mcm)

    p = sub.add_parser("indec", help="indecomposability via local endomorphism ring")
    p.add_argument("M")
    _add_common(p)
    p.set_defaults(fn=cmd_indec)

    p = sub.add_parser("iso", help="graded isomorphism search")
    p.add_argument("M")
    p.add_argument("N")
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--trials", type=int, default=64)
    _add_common(p)
    p.set_defaults(fn=cmd_iso)

    p = sub.add_parser("cluster", help="cluster-tilting verification")
    p.add_argument("X")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--candidates", default="")
    _add_common(p)
    p.set_defaults(fn=cmd_cluster)

    p = sub.add_parser("endo", help="graded endomorphism algebra dims")
    p.add_argument("X")
    p.add_argument("--match", help="rational expression for the Hilbert series")
    _add_common(p)
    p.set_defaults(fn=cmd_endo)

    p = sub.add_parser("quiver", help="Gabriel quiver of End(X)_0")
    p.add_argument("X")
    _add_common(p)
    p.set_defaults(fn=cmd_quiver)

    p = sub.add_parser("koszul-dual", help="quadratic dual presentation")
    p.add_argument("name")
    _add_common(p)
    p.set_defaults(fn=cmd_koszul_dual)

    p = sub.add_parser("clifford", help="Clifford-type algebra of the dual")
    p.add_argument("name")
    p.add_argument("--central", required=True, help='central degree-2 element, e.g. "x^2"')
    _add_common(p)
    p.set_defaults(fn=cmd_clifford)

    p = sub.add_parser("points", help="projective point enumeration")
    p.add_argument("name", help="algebra whose variables are used")
    p.add_argument("polys", help='semicolon-separated polynomials, e.g. "x*y + z^2; x^2 - y^2"')
    _add_common(p)
    p.set_defaults(fn=cmd_points)

    p = sub.add_parser("asgorenstein", help="AS-Gorenstein test for a connected algebra")
    p.add_argument("name")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_asgorenstein)

    p = sub.add_parser("asregular", help="AS-regularity of End(X) over its degree-0 part")
    p.add_argument("X")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_asregular)

    p = sub.add_parser("eval-iso", help="evaluation-map isomorphism check")
    p.add_argument("X")
    p.add_argument("M")
    _add_common(p)
    p.set_defaults(fn=cmd_eval_iso)

    p = sub.add_parser("nu-stable", help="twist-stability under an automorphism")
    p.add_argument("M")
    p.add_argument("sigma")
    p.add_argument("--trials", type=int, default=64)
    _add_common(p)
    p.set_defaults(fn=cmd_nu_stable)

    p = sub.add_parser("verify-example", help="run the built-in end-to-end example")
    p.add_argument("--p", type=int, default=13, help="prime for the fixture field")
    _add_common(p, workspace=False)
    p.set_defaults(fn=cmd_verify_example)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except NcgError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}, indent=2))
        return 3
    except OSError as exc:
        print(json.dumps({"error": "OSError", "message": str(exc)}, indent=2))
        return 3


if __name__ == "__main__":
    sys.exit(main())
