"""Exact scalar arithmetic over QQ and over prime fields GF(p).

Scalars carry their field and every binary operation checks field equality,
so structure-constant tensors can never silently mix fields.  Rational values
are `fractions.Fraction` (always reduced, positive denominator); prime-field
values are canonical residues in [0, p).
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .errors import DivisionByZero, FieldMismatch, NoSuchRoot


class FieldKind(Enum):
    RATIONAL = "rational"
    PRIME = "prime"


def is_prime(n: int) -> bool:
    """Trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    d = 5
    while d * d <= n:
        if n % d == 0 or n % (d + 2) == 0:
            return False
        d += 6
    return True


@dataclass(frozen=True)
class FieldSpec:
    kind: FieldKind
    p: int = 0  # only meaningful for PRIME

    def __post_init__(self):
        if self.kind is FieldKind.PRIME and not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @staticmethod
    def rational() -> "FieldSpec":
        return FieldSpec(FieldKind.RATIONAL)

    @staticmethod
    def prime(p: int) -> "FieldSpec":
        return FieldSpec(FieldKind.PRIME, p)

    @property
    def characteristic(self) -> int:
        return self.p if self.kind is FieldKind.PRIME else 0

    def __str__(self):
        return f"GF({self.p})" if self.kind is FieldKind.PRIME else "QQ"


QQ = FieldSpec.rational()

ScalarLike = Union["Scalar", int, Fraction]


class Scalar:
    """An exact field element: a Fraction over QQ, a residue over GF(p)."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value):
        self.field = field
        if field.kind is FieldKind.PRIME:
            self.value = int(value) % field.p
        else:
            self.value = Fraction(value)

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(field: FieldSpec) -> "Scalar":
        return Scalar(field, 0)

    @staticmethod
    def one(field: FieldSpec) -> "Scalar":
        return Scalar(field, 1)

    @staticmethod
    def parse(field: FieldSpec, text: str) -> "Scalar":
        """Parse the textual syntax used by all file formats ("a" or "a/b")."""
        text = text.strip()
        if field.kind is FieldKind.PRIME:
            if "/" in text:
                num, den = text.split("/", 1)
                return Scalar(field, int(num)) / Scalar(field, int(den))
            return Scalar(field, int(text))
        return Scalar(field, Fraction(text))

    # -- helpers ------------------------------------------------------

    def _coerce(self, other: ScalarLike) -> "Scalar":
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, (int, Fraction)):
            return Scalar(self.field, other)
        return NotImplemented  # type: ignore[return-value]

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        return Scalar(self.field, self.value + other.value)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        return Scalar(self.field, self.value - other.value)

    def __rsub__(self, other: ScalarLike) -> "Scalar":
        return self._coerce(other) - self

    def __mul__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        return Scalar(self.field, self.value * other.value)

    __rmul__ = __mul__

    def __truediv__(self, other: ScalarLike) -> "Scalar":
        other = self._coerce(other)
        return self * other.inverse()

    def __rtruediv__(self, other: ScalarLike) -> "Scalar":
        return self._coerce(other) / self

    def __neg__(self) -> "Scalar":
        return Scalar(self.field, -self.value)

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        if self.field.kind is FieldKind.PRIME:
            return Scalar(self.field, pow(self.value, n, self.field.p))
        return Scalar(self.field, self.value ** n)

    def inverse(self) -> "Scalar":
        if not self:
            raise DivisionByZero("scalar inverse of 0")
        if self.field.kind is FieldKind.PRIME:
            return Scalar(self.field, pow(self.value, self.field.p - 2, self.field.p))
        return Scalar(self.field, 1 / self.value)

    # -- comparisons / misc --------------------------------------------

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Scalar):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self == Scalar(self.field, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.field}, {self.value})"

    def multiplicative_order(self) -> int:
        """Exact order in the multiplicative group; raises on 0."""
        if not self:
            raise DivisionByZero("0 has no multiplicative order")
        acc = self
        n = 1
        one = Scalar.one(self.field)
        limit = self.field.p if self.field.kind is FieldKind.PRIME else None
        while acc != one:
            acc = acc * self
            n += 1
            if limit is not None and n > limit:
                raise AssertionError("order search exceeded field size")
            if limit is None and n > 2:
                raise NoSuchRoot(f"{self} has infinite multiplicative order over QQ")
        return n


def as_scalar(field: FieldSpec, value: ScalarLike) -> Scalar:
    if isinstance(value, Scalar):
        if value.field != field:
            raise FieldMismatch(f"{field} vs {value.field}")
        return value
    return Scalar(field, value)


def _factorize(n: int) -> list[int]:
    """Distinct prime factors of n by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def smallest_generator(p: int) -> int:
    """Smallest generator of GF(p)^x."""
    if p == 2:
        return 1
    order = p - 1
    factors = _factorize(order)
    for g in range(2, p):
        if all(pow(g, order // q, p) != 1 for q in factors):
            return g
    raise AssertionError("no generator found; p not prime?")


def find_root_of_unity(field: FieldSpec, n: int) -> Scalar:
    """A scalar of exact multiplicative order n, deterministically chosen.

    Over QQ only n in {1, 2} is possible.  Over GF(p) the element returned is
    g^((p-1)/n) for the smallest generator g of GF(p)^x, and exists iff
    n | p - 1.
    """
    if n < 1:
        raise ValueError("order must be >= 1")
    if field.kind is FieldKind.RATIONAL:
        if n == 1:
            return Scalar.one(field)
        if n == 2:
            return Scalar(field, -1)
        raise NoSuchRoot(f"QQ has no primitive {n}-th root of unity")
    p = field.p
    if (p - 1) % n != 0:
        raise NoSuchRoot(f"{n} does not divide {p} - 1")
    g = smallest_generator(p)
    return Scalar(field, pow(g, (p - 1) // n, p))
