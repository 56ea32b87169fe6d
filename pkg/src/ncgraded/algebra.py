"""Graded algebras as queryable oracles.

Two backends share one interface: PresentedAlgebra (Groebner-backed, basis
= normal words) and TabulatedAlgebra (per-degree structure constants, used
for endomorphism algebras that have no known presentation).  Homological
code upstream only ever sees the oracle interface.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DegreeBeyondTruncation
from .freealg import Gens, NcPoly
from .gbasis import Presentation, TruncatedGB, truncated_groebner
from .scalars import Field


class AlgebraOracle:
    """Interface: dim(d), basis_labels(d), mult_tensor(d1, d2), unit."""

    field: Field
    valid_through: int

    def dim(self, d: int) -> int:
        raise NotImplementedError

    def basis_labels(self, d: int):
        raise NotImplementedError

    def mult_tensor(self, d1: int, d2: int) -> np.ndarray:
        """Shape (dim(d1), dim(d2), dim(d1+d2)): coordinates of basis products."""
        raise NotImplementedError

    @property
    def unit(self) -> np.ndarray:
        raise NotImplementedError

    def _check_degree(self, d: int):
        if d > self.valid_through:
            raise DegreeBeyondTruncation(
                f"degree {d} beyond validity bound {self.valid_through}"
            )

    @property
    def is_connected(self) -> bool:
        return self.dim(0) == 1

    # -- coordinate helpers ------------------------------------------------

    def mult_vec(self, d1: int, v1: np.ndarray, d2: int, v2: np.ndarray) -> np.ndarray:
        """Product of coordinate vectors, as coordinates in degree d1+d2."""
        t = self.mult_tensor(d1, d2)
        out = np.tensordot(np.tensordot(v1, t, axes=(0, 0)), v2, axes=(0, 0))
        if self.field.is_prime_field:
            out %= self.field.p
        return out

    def left_mult_matrix(self, d1: int, v1: np.ndarray, d2: int) -> np.ndarray:
        """Matrix of (v1 . -): alg_{d2} -> alg_{d1+d2}, columns indexed by basis of d2."""
        t = self.mult_tensor(d1, d2)
        m = np.tensordot(v1, t, axes=(0, 0)).T  # (dim12, dim2)
        if self.field.is_prime_field:
            m %= self.field.p
        return m

    def right_mult_matrix(self, d2: int, v2: np.ndarray, d1: int) -> np.ndarray:
        """Matrix of (- . v2): alg_{d1} -> alg_{d1+d2}."""
        t = self.mult_tensor(d1, d2)
        m = np.tensordot(t, v2, axes=(1, 0)).T  # (dim12, dim1)
        if self.field.is_prime_field:
            m %= self.field.p
        return m


class PresentedAlgebra(AlgebraOracle):
    """Quotient of a free algebra by homogeneous relations, with normal-word
    bases through the truncation degree.  Basis of each piece = normal words
    sorted descending by the monomial order (fixed so matrices reproduce
    across runs)."""

    def __init__(self, pres: Presentation, D: int, gb: TruncatedGB | None = None):
        self.presentation = pres
        self.field = pres.field
        self.gens = pres.gens
        self.order = pres.order
        self.gb = gb if gb is not None else truncated_groebner(pres, D)
        self.valid_through = self.gb.complete_through
        self._basis: dict[int, list] = {}
        self._index: dict[int, dict] = {}
        self._mult: dict[tuple, np.ndarray] = {}

    def basis_words(self, d: int) -> list:
        if d < 0:
            return []
        if d not in self._basis:
            ws = self.gb.normal_words(d)
            ws = sorted(ws, key=self.order.key, reverse=True)
            self._basis[d] = ws
            self._index[d] = {w: i for i, w in enumerate(ws)}
        return self._basis[d]

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        self._check_degree(d)
        return len(self.basis_words(d))

    def basis_labels(self, d: int):
        return [self.gens.word_str(w) for w in self.basis_words(d)]

    @property
    def unit(self) -> np.ndarray:
        v = linalg.zeros(self.field, 1, 1)[0]
        v[0] = self.field.one
        return v

    def poly_to_vec(self, d: int, f: NcPoly) -> np.ndarray:
        """Coordinates of NF(f) in the degree-d basis (f homogeneous of degree d)."""
        nf = self.gb.normal_form(f)
        self.basis_words(d)
        v = linalg.zeros(self.field, 1, len(self._basis[d]))[0]
        for w, c in nf.terms.items():
            v[self._index[d][w]] = c
        return v

    def vec_to_poly(self, d: int, v: np.ndarray) -> NcPoly:
        ws = self.basis_words(d)
        return NcPoly(self.gens, self.field, {w: v[i] for i, w in enumerate(ws)})

    def mult_tensor(self, d1: int, d2: int) -> np.ndarray:
        self._check_degree(d1 + d2)
        key = (d1, d2)
        if key not in self._mult:
            b1, b2 = self.basis_words(d1), self.basis_words(d2)
            b12 = self.basis_words(d1 + d2)
            idx = self._index[d1 + d2]
            t = linalg.zeros(self.field, len(b1) * len(b2), len(b12)).reshape(
                len(b1), len(b2), len(b12)
            )
            for i, u in enumerate(b1):
                for j, v in enumerate(b2):
                    nf = self.gb.normal_form(
                        NcPoly.word(self.gens, self.field, u + v)
                    )
                    for w, c in nf.terms.items():
                        t[i, j, idx[w]] = c
            self._mult[key] = t
        return self._mult[key]


class TabulatedAlgebra(AlgebraOracle):
    """Algebra given by per-degree dimensions, labels, and structure tensors."""

    def __init__(self, field: Field, dims: dict, tensors: dict, unit: np.ndarray,
                 valid_through: int, labels: dict | None = None, valid_from: int = 0):
        self.field = field
        self._dims = dict(dims)
        self._tensors = dict(tensors)
        self._unit = unit
        self.valid_through = valid_through
        self.valid_from = valid_from
        self._labels = labels or {}

    def dim(self, d: int) -> int:
        self._check_degree(d)
        return self._dims.get(d, 0)

    def basis_labels(self, d: int):
        return self._labels.get(d, [f"b{d}_{i}" for i in range(self.dim(d))])

    @property
    def unit(self) -> np.ndarray:
        return self._unit

    def mult_tensor(self, d1: int, d2: int) -> np.ndarray:
        self._check_degree(d1 + d2)
        key = (d1, d2)
        if key not in self._tensors:
            t = linalg.zeros(self.field, self.dim(d1) * self.dim(d2), self.dim(d1 + d2))
            self._tensors[key] = t.reshape(self.dim(d1), self.dim(d2), self.dim(d1 + d2))
        return self._tensors[key]


# ---------------------------------------------------------------------------
# Hilbert series
# ---------------------------------------------------------------------------


@dataclass
class HilbertSeries:
    coeffs: tuple
    numerator: tuple | None = None
    denominator: tuple | None = None

    def __post_init__(self):
        self.coeffs = tuple(int(c) for c in self.coeffs)
        if any(c < 0 for c in self.coeffs):
            raise ValueError("negative dimension in Hilbert series")


def hilbert_series(alg: AlgebraOracle, D: int) -> HilbertSeries:
    if D > alg.valid_through:
        raise DegreeBeyondTruncation(f"D={D} beyond validity {alg.valid_through}")
    return HilbertSeries(tuple(alg.dim(d) for d in range(D + 1)))


def expand_rational(num, den, D: int) -> list:
    """Power-series coefficients of num/den through degree D, by exact long
    division with integer/rational arithmetic.  den[0] must be a unit."""
    from fractions import Fraction

    num = list(num) + [0] * (D + 1 - len(num))
    den = list(den)
    if den[0] == 0:
        raise ValueError("denominator has zero constant term")
    out = []
    for k in range(D + 1):
        acc = Fraction(num[k])
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= Fraction(den[j]) * out[k - j]
        out.append(acc / Fraction(den[0]))
    return out


def match_rational(series: HilbertSeries, num, den) -> bool:
    """True iff the expansion of num/den agrees with every stored coefficient."""
    exp = expand_rational(num, den, len(series.coeffs) - 1)
    if all(e == c for e, c in zip(exp, series.coeffs)):
        series.numerator = tuple(num)
        series.denominator = tuple(den)
        return True
    return False


# ---------------------------------------------------------------------------
# Element tests and presentation surgery
# ---------------------------------------------------------------------------


def build_presented_algebra(pres: Presentation, D: int) -> PresentedAlgebra:
    return PresentedAlgebra(pres, D)


def is_central(alg: PresentedAlgebra, f: NcPoly) -> bool:
    """NF(f g - g f) = 0 for every generator g."""
    d = f.homogeneous_degree() if not f.is_zero() else 0
    alg._check_degree(d + max(alg.gens.degrees))
    for i in range(len(alg.gens)):
        g = NcPoly.gen(alg.gens, alg.field, i)
        if not alg.gb.normal_form(f * g - g * f).is_zero():
            return False
    return True


def is_regular_element(alg: PresentedAlgebra, f: NcPoly, window: int) -> bool:
    """Left and right multiplication by f injective on pieces 0..window."""
    if f.is_zero():
        return False
    df = f.homogeneous_degree()
    alg._check_degree(df + window)
    fv = alg.poly_to_vec(df, f)
    for d in range(window + 1):
        n = alg.dim(d)
        if n == 0:
            continue
        lm = alg.left_mult_matrix(df, fv, d)
        rm = alg.right_mult_matrix(df, fv, d)
        if linalg.rank(alg.field, lm) < n or linalg.rank(alg.field, rm) < n:
            return False
    return True


def opposite_presentation(pres: Presentation) -> Presentation:
    """Same generators, every relation word reversed."""
    rels = []
    for r in pres.relations:
        rels.append(NcPoly(pres.gens, pres.field,
                           {tuple(reversed(w)): c for w, c in r.terms.items()}))
    return Presentation(pres.field, pres.gens, tuple(rels), pres.order)


def quotient_algebra(alg: PresentedAlgebra, extra, D: int) -> PresentedAlgebra:
    return PresentedAlgebra(alg.presentation.with_extra_relations(extra), D)
