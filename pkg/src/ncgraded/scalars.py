"""Exact base fields: prime fields GF(p) and the rationals.

Field elements are plain Python values (int for GF(p), Fraction for QQ);
the Field object knows how to normalize and combine them.  Nothing in the
package ever touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import NoSuchRoot, UnsupportedField


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class Field:
    """GF(p) when ``p`` is set, the rationals when ``p`` is None."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    def __call__(self, v):
        """Canonicalize an int/Fraction into this field."""
        if self.p is not None:
            return int(v) % self.p
        return Fraction(v)

    @property
    def zero(self):
        return 0 if self.p is not None else Fraction(0)

    @property
    def one(self):
        return 1 if self.p is not None else Fraction(1)

    def add(self, a, b):
        return (a + b) % self.p if self.p is not None else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.p is not None else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.p is not None else a * b

    def neg(self, a):
        return (-a) % self.p if self.p is not None else -a

    def inv(self, a):
        if self.p is not None:
            a %= self.p
            if a == 0:
                raise ZeroDivisionError("inverse of 0")
            return pow(a, -1, self.p)
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / Fraction(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return (a % self.p == 0) if self.p is not None else a == 0

    def __str__(self):
        return f"GF({self.p})" if self.p is not None else "QQ"

    @staticmethod
    def parse(text: str) -> "Field":
        text = text.strip()
        if text == "QQ":
            return Field()
        if text.startswith("GF(") and text.endswith(")"):
            return Field(int(text[3:-1]))
        raise ValueError(f"cannot parse field {text!r}; expected 'GF(p)' or 'QQ'")


GF = Field
QQ = Field()


def element_order(field: Field, a: int) -> int:
    """Multiplicative order of a nonzero element of GF(p)."""
    assert field.p is not None
    x = a % field.p
    n = 1
    y = x
    while y != 1:
        y = (y * x) % field.p
        n += 1
    return n


def root_of_unity(field: Field, n: int):
    """An element of multiplicative order exactly ``n``, by exhaustive search.

    Over the rationals only n = 1, 2 are possible.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if not field.is_prime_field:
        if n == 1:
            return Fraction(1)
        if n == 2:
            return Fraction(-1)
        raise UnsupportedField(f"no primitive {n}th root of unity in QQ")
    p = field.p
    if (p - 1) % n != 0:
        raise NoSuchRoot(f"{n} does not divide {p} - 1")
    for a in range(1, p):
        if element_order(field, a) == n:
            return a
    raise NoSuchRoot(f"no element of order {n} in GF({p})")  # pragma: no cover
