"""Words and polynomials of the free algebra k<x_1,...,x_n>.

A Word is a tuple of generator indices (empty tuple = 1).  An NcPoly is a
term map Word -> nonzero coefficient over a fixed Gens context; words
concatenate and never commute.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FieldMismatch, NonHomogeneous, ParseError
from .scalars import Field

Word = tuple  # tuple of generator indices


@dataclass(frozen=True)
class Gens:
    """Named generators with positive degrees."""

    names: tuple
    degrees: tuple

    def __post_init__(self):
        if len(self.names) != len(self.degrees):
            raise ValueError("names and degrees must have equal length")
        if any(d < 1 for d in self.degrees):
            raise ValueError("generator degrees must be positive")
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be distinct")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def word_degree(self, w: Word) -> int:
        return sum(self.degrees[i] for i in w)

    def word_str(self, w: Word) -> str:
        if not w:
            return "1"
        parts = []
        i = 0
        while i < len(w):
            j = i
            while j < len(w) and w[j] == w[i]:
                j += 1
            name = self.names[w[i]]
            parts.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        return "*".join(parts)


@dataclass(frozen=True)
class MonomialOrder:
    """Degree-lexicographic order; ``rank[i]`` is the precedence key of
    generator i (smaller rank = smaller generator)."""

    gens: Gens
    rank: tuple

    @staticmethod
    def default(gens: Gens) -> "MonomialOrder":
        return MonomialOrder(gens, tuple(range(len(gens))))

    def key(self, w: Word):
        return (self.gens.word_degree(w), tuple(self.rank[i] for i in w))

    def compare(self, u: Word, v: Word) -> int:
        ku, kv = self.key(u), self.key(v)
        return -1 if ku < kv else (0 if ku == kv else 1)


def compare_words(order: MonomialOrder, u: Word, v: Word) -> int:
    """-1 / 0 / +1 for u < v, u = v, u > v in deglex."""
    return order.compare(u, v)


class NcPoly:
    """Finite map Word -> nonzero coefficient over (gens, field)."""

    __slots__ = ("gens", "field", "terms")

    def __init__(self, gens: Gens, field: Field, terms=None):
        self.gens = gens
        self.field = field
        t = {}
        if terms:
            for w, c in dict(terms).items():
                c = field(c)
                if not field.is_zero(c):
                    t[tuple(w)] = c
        self.terms = t

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero(gens: Gens, field: Field) -> "NcPoly":
        return NcPoly(gens, field)

    @staticmethod
    def one(gens: Gens, field: Field) -> "NcPoly":
        return NcPoly(gens, field, {(): field.one})

    @staticmethod
    def gen(gens: Gens, field: Field, i: int) -> "NcPoly":
        return NcPoly(gens, field, {(i,): field.one})

    @staticmethod
    def word(gens: Gens, field: Field, w: Word, coeff=1) -> "NcPoly":
        return NcPoly(gens, field, {tuple(w): coeff})

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self):
        """Max term degree; None for the zero polynomial."""
        if not self.terms:
            return None
        return max(self.gens.word_degree(w) for w in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {self.gens.word_degree(w) for w in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self):
        if not self.is_homogeneous():
            raise NonHomogeneous(f"{self} is not homogeneous")
        return self.degree()

    # -- arithmetic --------------------------------------------------------
    def _check(self, other: "NcPoly"):
        if self.field != other.field or self.gens != other.gens:
            raise FieldMismatch("operands live over different fields/generators")

    def __add__(self, other: "NcPoly") -> "NcPoly":
        self._check(other)
        f = self.field
        t = dict(self.terms)
        for w, c in other.terms.items():
            t[w] = f.add(t.get(w, f.zero), c)
        return NcPoly(self.gens, f, t)

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return self + (-other)

    def __neg__(self) -> "NcPoly":
        f = self.field
        return NcPoly(self.gens, f, {w: f.neg(c) for w, c in self.terms.items()})

    def __mul__(self, other: "NcPoly") -> "NcPoly":
        self._check(other)
        f = self.field
        t = {}
        for u, a in self.terms.items():
            for v, b in other.terms.items():
                w = u + v
                t[w] = f.add(t.get(w, f.zero), f.mul(a, b))
        return NcPoly(self.gens, f, t)

    def scale(self, c) -> "NcPoly":
        f = self.field
        c = f(c)
        return NcPoly(self.gens, f, {w: f.mul(a, c) for w, a in self.terms.items()})

    def __eq__(self, other):
        return (
            isinstance(other, NcPoly)
            and self.gens == other.gens
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.gens, self.field, frozenset(self.terms.items())))

    # -- order-dependent views --------------------------------------------
    def sorted_terms(self, order: MonomialOrder):
        return sorted(self.terms.items(), key=lambda wc: order.key(wc[0]), reverse=True)

    def leading_word(self, order: MonomialOrder) -> Word:
        return max(self.terms, key=order.key)

    def monic(self, order: MonomialOrder) -> "NcPoly":
        lc = self.terms[self.leading_word(order)]
        return self.scale(self.field.inv(lc))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (self.gens.word_degree(w), w)):
            c = self.terms[w]
            cs = str(c)
            parts.append(cs if not w else (f"{cs}*{self.gens.word_str(w)}" if cs != "1" else self.gens.word_str(w)))
        return " + ".join(parts)


def poly_add(f: NcPoly, g: NcPoly) -> NcPoly:
    return f + g


def poly_mul(f: NcPoly, g: NcPoly) -> NcPoly:
    return f * g


# ---------------------------------------------------------------------------
# Expression grammar: integers, generator names, + - * ^ and parentheses.
# Juxtaposition is not multiplication; no commutation is assumed.
# ---------------------------------------------------------------------------

_TOKEN_CHARS = set("+-*^()")


def _tokenize(text: str):
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _TOKEN_CHARS:
            toks.append((ch, i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("int", i, int(text[i:j])))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("name", i, text[i:j]))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", column=i)
    toks.append(("end", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, gens: Gens, field: Field):
        self.text = text
        self.gens = gens
        self.field = field
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def fail(self, msg):
        tok = self.peek()
        raise ParseError(f"{msg} (near offset {tok[1]} in {self.text!r})", column=tok[1])

    def parse(self) -> NcPoly:
        p = self.expr()
        if self.peek()[0] != "end":
            self.fail("trailing input")
        return p

    def expr(self) -> NcPoly:
        sign = 1
        while self.peek()[0] in ("+", "-"):
            if self.next()[0] == "-":
                sign = -sign
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> NcPoly:
        p = self.power()
        while self.peek()[0] == "*":
            self.next()
            p = p * self.power()
        return p

    def power(self) -> NcPoly:
        p = self.atom()
        while self.peek()[0] == "^":
            self.next()
            tok = self.next()
            if tok[0] != "int":
                self.fail("expected nonnegative integer exponent")
            n = tok[2]
            q = NcPoly.one(self.gens, self.field)
            for _ in range(n):
                q = q * p
            p = q
        return p

    def atom(self) -> NcPoly:
        tok = self.next()
        if tok[0] == "int":
            return NcPoly(self.gens, self.field, {(): tok[2]})
        if tok[0] == "name":
            if tok[2] not in self.gens.names:
                raise ParseError(f"unknown generator {tok[2]!r}", column=tok[1])
            return NcPoly.gen(self.gens, self.field, self.gens.index(tok[2]))
        if tok[0] == "(":
            p = self.expr()
            if self.next()[0] != ")":
                self.fail("expected ')'")
            return p
        if tok[0] == "-":
            return -self.atom()
        self.fail("expected integer, generator, or '('")


def parse_poly(text: str, gens: Gens, field: Field) -> NcPoly:
    return _Parser(text, gens, field).parse()
