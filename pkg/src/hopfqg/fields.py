"""Exact coefficient fields: arbitrary-precision rationals and prime fields GF(p).

Scalars are plain Python values (``fractions.Fraction`` over Q, canonical
residues ``0..p-1`` over GF(p)); a field object supplies the arithmetic.
Equality of scalars is exact everywhere, never approximate.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction


class FieldError(ValueError):
    """Bad field tag, composite modulus, or unparsable coefficient."""


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_INT_RE = re.compile(r"^[+-]?\d+$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Rationals:
    """The field Q. Fractions stay reduced with positive denominator by construction."""

    @property
    def tag(self) -> str:
        return "Q"

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def is_zero(self, x) -> bool:
        return x == 0

    def add(self, x, y):
        return x + y

    def sub(self, x, y):
        return x - y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def div(self, x, y):
        if y == 0:
            raise FieldError("division by zero")
        return x / y

    def parse(self, text: str) -> Fraction:
        if not _RATIONAL_RE.match(text):
            raise FieldError(f"not a rational coefficient: {text!r}")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise FieldError(f"zero denominator in coefficient: {text!r}") from None

    def format(self, x) -> str:
        return str(x)


@dataclass(frozen=True)
class PrimeField:
    """The prime field GF(p). Scalars are ints reduced mod p."""

    p: int

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise FieldError(f"modulus {self.p} is not prime")

    @property
    def tag(self) -> str:
        return f"GF:{self.p}"

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def from_int(self, n: int) -> int:
        return n % self.p

    def is_zero(self, x) -> bool:
        return x % self.p == 0

    def add(self, x, y):
        return (x + y) % self.p

    def sub(self, x, y):
        return (x - y) % self.p

    def mul(self, x, y):
        return (x * y) % self.p

    def neg(self, x):
        return (-x) % self.p

    def div(self, x, y):
        if y % self.p == 0:
            raise FieldError("division by zero")
        return (x * pow(y, -1, self.p)) % self.p

    def parse(self, text: str) -> int:
        if not _INT_RE.match(text):
            raise FieldError(f"not a GF({self.p}) coefficient: {text!r}")
        return int(text) % self.p

    def format(self, x) -> str:
        return str(x % self.p)


FieldSpec = Rationals | PrimeField

QQ = Rationals()


def field_from_tag(tag: str) -> FieldSpec:
    """Parse a field tag: ``"Q"`` or ``"GF:p"`` with p prime."""
    if tag == "Q":
        return QQ
    if tag.startswith("GF:"):
        body = tag[3:]
        if not body.isdigit():
            raise FieldError(f"bad field tag: {tag!r}")
        return PrimeField(int(body))
    raise FieldError(f"bad field tag: {tag!r}")
