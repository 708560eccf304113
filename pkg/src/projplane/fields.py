"""Exact field arithmetic: the rationals and prime fields GF(p).

Rationals are carried by :class:`fractions.Fraction`, which already keeps
values in lowest terms with a positive denominator.  Prime field elements
are :class:`PrimeFieldElement` instances bound to a :class:`PrimeField`.

Both field descriptors expose the same small surface (``zero``, ``one``,
``__call__``, ``parse``, ``random``, ``name``), so code above this layer
never needs to know which field it is working in.
"""

from __future__ import annotations

import functools
import math
import random
import re
from fractions import Fraction
from typing import Iterator, Optional, Union

from .errors import FieldMismatch, InversionOfZero, NotPrime, ParseError

MAX_MODULUS = 2**31

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def is_prime(n: int) -> bool:
    """Deterministic trial division up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


# ---------------------------------------------------------------------------
# rationals


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return a + b


def rat_sub(a: Fraction, b: Fraction) -> Fraction:
    return a - b


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def rat_div(a: Fraction, b: Fraction) -> Fraction:
    if b == 0:
        raise InversionOfZero("division by zero rational")
    return a / b


class RationalField:
    """The field of rational numbers, elements are ``Fraction``."""

    name = "rational"
    characteristic = 0
    zero = Fraction(0)
    one = Fraction(1)

    def __call__(self, value) -> Fraction:
        if isinstance(value, PrimeFieldElement):
            raise FieldMismatch(f"cannot read {value!r} as a rational")
        if isinstance(value, str):
            return self.parse(value)
        return Fraction(value)

    def parse(self, text: str) -> Fraction:
        m = _RATIONAL_RE.match(text)
        if not m:
            raise ParseError(f"not a rational number: {text!r}")
        num, den = m.group(1), m.group(2)
        if den is not None and int(den) == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den) if den else 1)

    def format(self, a: Fraction) -> str:
        return str(a)

    def random(self, rng: random.Random, bound: int = 10) -> Fraction:
        """Numerator uniform in [-bound, bound], denominator in [1, bound]."""
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))

    def contains(self, a) -> bool:
        return isinstance(a, (Fraction, int))

    def elements(self) -> Optional[Iterator[Fraction]]:
        return None

    def __repr__(self) -> str:
        return "RationalField()"


RATIONAL = RationalField()


# ---------------------------------------------------------------------------
# prime fields


class PrimeField:
    """The residue field Z/pZ for a prime p < 2**31.

    Use :func:`make_prime_field` rather than the constructor so descriptors
    are shared.
    """

    def __init__(self, p: int):
        if not isinstance(p, int) or p < 2 or not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if p >= MAX_MODULUS:
            raise ValueError(f"modulus {p} too large (limit 2**31)")
        self.p = p
        self.name = f"gf:{p}"
        self.characteristic = p
        self.zero = PrimeFieldElement(0, self)
        self.one = PrimeFieldElement(1, self)

    def __call__(self, value) -> "PrimeFieldElement":
        if isinstance(value, PrimeFieldElement):
            if value.field.p != self.p:
                raise FieldMismatch(f"{value!r} is not in GF({self.p})")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise InversionOfZero(f"{value} has no image in GF({self.p})")
            return PrimeFieldElement(value.numerator, self) / PrimeFieldElement(
                value.denominator, self
            )
        return PrimeFieldElement(int(value), self)

    def parse(self, text: str) -> "PrimeFieldElement":
        text = text.strip()
        if not re.fullmatch(r"[+-]?\d+", text):
            raise ParseError(f"not a residue: {text!r}")
        return PrimeFieldElement(int(text), self)

    def format(self, a: "PrimeFieldElement") -> str:
        return str(a.value)

    def random(self, rng: random.Random, bound: int = 0) -> "PrimeFieldElement":
        return PrimeFieldElement(rng.randrange(self.p), self)

    def contains(self, a) -> bool:
        return isinstance(a, PrimeFieldElement) and a.field.p == self.p

    def elements(self) -> Iterator["PrimeFieldElement"]:
        return (PrimeFieldElement(i, self) for i in range(self.p))

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("gf", self.p))

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"


@functools.lru_cache(maxsize=None)
def make_prime_field(p: int) -> PrimeField:
    return PrimeField(p)


class PrimeFieldElement:
    """Residue ``value`` modulo ``field.p``; immutable.

    Plain ints mix freely (they are images of the integers in every field);
    mixing with another modulus or with a Fraction raises FieldMismatch.
    """

    __slots__ = ("value", "field")

    def __init__(self, value: int, field: PrimeField):
        _set_field(self, field)
        _set_value(self, value % field.p)

    def __setattr__(self, name, value):
        raise AttributeError("PrimeFieldElement is immutable")

    def _coerce(self, other) -> Optional[int]:
        if isinstance(other, PrimeFieldElement):
            if other.field.p != self.field.p:
                raise FieldMismatch(
                    f"GF({self.field.p}) element combined with GF({other.field.p}) element"
                )
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatch(f"GF({self.field.p}) element combined with a rational")
        return None

    def __add__(self, other):
        if type(other) is PrimeFieldElement and other.field is self.field:
            return _make((self.value + other.value) % self.field.p, self.field)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value + o, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is PrimeFieldElement and other.field is self.field:
            return _make((self.value - other.value) % self.field.p, self.field)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value - o, self.field)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(o - self.value, self.field)

    def __mul__(self, other):
        if type(other) is PrimeFieldElement and other.field is self.field:
            return _make(self.value * other.value % self.field.p, self.field)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.value * o, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.field)

    def __pos__(self):
        return self

    def inverse(self) -> "PrimeFieldElement":
        if self.value == 0:
            raise InversionOfZero(f"0 has no inverse in GF({self.field.p})")
        return PrimeFieldElement(_inv_mod(self.value, self.field.p), self.field)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * PrimeFieldElement(o, self.field).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(o, self.field) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeFieldElement(pow(self.value, e, self.field.p), self.field)

    def __eq__(self, other) -> bool:
        if isinstance(other, PrimeFieldElement):
            return self.field.p == other.field.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"GF{self.field.p}({self.value})"

    def __str__(self) -> str:
        return str(self.value)


_set_value = PrimeFieldElement.value.__set__
_set_field = PrimeFieldElement.field.__set__


def _make(value: int, field: PrimeField) -> PrimeFieldElement:
    # value already reduced
    e = object.__new__(PrimeFieldElement)
    _set_field(e, field)
    _set_value(e, value)
    return e


def _inv_mod(a: int, p: int) -> int:
    # extended Euclid
    old_r, r = a % p, p
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    if old_r != 1:
        raise InversionOfZero(f"{a} is not invertible modulo {p}")
    return old_s % p


# ---------------------------------------------------------------------------
# uniform surface

Field = Union[RationalField, PrimeField]


def field_inv(a):
    """Multiplicative inverse of a nonzero element of either field."""
    if isinstance(a, PrimeFieldElement):
        return a.inverse()
    if a == 0:
        raise InversionOfZero("0 has no inverse")
    return 1 / Fraction(a)


def field_of(a) -> Field:
    if isinstance(a, PrimeFieldElement):
        return a.field
    if isinstance(a, (Fraction, int)):
        return RATIONAL
    raise FieldMismatch(f"{a!r} is not a field element")


def parse_field(selector: str) -> Field:
    """Parse a field selector: ``rational`` or ``gf:<p>``."""
    s = selector.strip().lower()
    if s in ("rational", "q"):
        return RATIONAL
    m = re.fullmatch(r"gf:(\d+)", s)
    if not m:
        raise ParseError(f"unknown field selector {selector!r}")
    return make_prime_field(int(m.group(1)))
