"""Exact scalar fields: the rationals and prime fields GF(p).

Rational scalars are :class:`fractions.Fraction`; prime-field scalars are
:class:`Residue` values that carry their modulus, so mixing fields is caught
at the operation that does it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union


class FieldError(ValueError):
    """Raised for field-tag mismatches and invalid field data."""


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True, order=True)
class Residue:
    """An element of GF(p), stored as its representative in [0, p-1]."""

    value: int
    p: int

    def __post_init__(self):
        if not 0 <= self.value < self.p:
            object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> Residue:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise FieldError(f"field mismatch: GF({self.p}) vs GF({other.p})")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Residue(other % self.p, self.p)
        raise FieldError(f"field mismatch: GF({self.p}) vs {type(other).__name__}")

    def __add__(self, other):
        o = self._coerce(other)
        return Residue((self.value + o.value) % self.p, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return Residue((self.value - o.value) % self.p, self.p)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        return Residue((self.value * o.value) % self.p, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue((-self.value) % self.p, self.p)

    def inverse(self) -> Residue:
        if self.value == 0:
            raise ZeroDivisionError(f"0 has no inverse in GF({self.p})")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


Scalar = Union[Fraction, Residue]


class Field:
    """Common interface of :class:`Rationals` and :class:`PrimeField`."""

    characteristic: int = 0

    def __call__(self, x) -> Scalar:
        raise NotImplementedError

    def zero(self) -> Scalar:
        return self(0)

    def one(self) -> Scalar:
        return self(1)

    def contains(self, x) -> bool:
        raise NotImplementedError

    def parse(self, text: str) -> Scalar:
        raise NotImplementedError

    def format(self, x: Scalar) -> str:
        raise NotImplementedError

    def to_json(self):
        raise NotImplementedError

    def _check(self, *xs):
        for x in xs:
            if not self.contains(x):
                raise FieldError(f"{x!r} is not an element of {self}")

    def add(self, a, b):
        self._check(a, b)
        return a + b

    def sub(self, a, b):
        self._check(a, b)
        return a - b

    def mul(self, a, b):
        self._check(a, b)
        return a * b

    def neg(self, a):
        self._check(a)
        return -a

    def inv(self, a):
        self._check(a)
        if not a:
            raise ZeroDivisionError("inversion of zero")
        return 1 / a if isinstance(a, Fraction) else a.inverse()


class Rationals(Field):
    characteristic = 0

    def __call__(self, x) -> Fraction:
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Residue):
            raise FieldError("cannot coerce a GF(p) residue into Q")
        return Fraction(x)

    def contains(self, x) -> bool:
        return isinstance(x, Fraction)

    def parse(self, text: str) -> Fraction:
        text = str(text).strip()
        try:
            if "/" in text:
                n, d = text.split("/")
                if int(d) <= 0:
                    raise FieldError(f"denominator must be positive in {text!r}")
                return Fraction(int(n), int(d))
            return Fraction(int(text))
        except ValueError as exc:
            raise FieldError(f"malformed rational scalar {text!r}") from exc

    def format(self, x) -> str:
        x = Fraction(x)
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    def to_json(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField(Field):
    def __init__(self, p: int):
        if not is_prime(int(p)):
            raise FieldError(f"{p} is not prime")
        self.p = int(p)
        self.characteristic = self.p

    def __call__(self, x) -> Residue:
        if isinstance(x, Residue):
            if x.p != self.p:
                raise FieldError(f"field mismatch: GF({self.p}) vs GF({x.p})")
            return x
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, Fraction):
            return Residue(x.numerator, self.p) / Residue(x.denominator, self.p)
        return Residue(int(x) % self.p, self.p)

    def contains(self, x) -> bool:
        return isinstance(x, Residue) and x.p == self.p

    def parse(self, text: str) -> Residue:
        text = str(text).strip()
        try:
            v = int(text)
        except ValueError as exc:
            raise FieldError(f"malformed GF({self.p}) scalar {text!r}") from exc
        if not 0 <= v < self.p:
            raise FieldError(f"residue {v} outside [0, {self.p - 1}]")
        return Residue(v, self.p)

    def format(self, x) -> str:
        return str(self(x).value)

    def to_json(self):
        return {"GFp": self.p}

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_json(obj) -> Field:
    if obj == "Q":
        return QQ
    if isinstance(obj, dict) and set(obj) == {"GFp"}:
        return PrimeField(int(obj["GFp"]))
    raise FieldError(f"unknown field tag {obj!r}")


def scalar_add(a: Scalar, b: Scalar) -> Scalar:
    return _field_of(a, b).add(a, b)


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return _field_of(a, b).mul(a, b)


def scalar_inv(a: Scalar) -> Scalar:
    return _field_of(a).inv(a)


def _field_of(*xs) -> Field:
    tags = set()
    for x in xs:
        if isinstance(x, Fraction):
            tags.add(0)
        elif isinstance(x, Residue):
            tags.add(x.p)
        else:
            raise FieldError(f"{x!r} is not a Scalar")
    if len(tags) != 1:
        raise FieldError(f"field-tag mismatch among {xs!r}")
    (tag,) = tags
    return QQ if tag == 0 else PrimeField(tag)
