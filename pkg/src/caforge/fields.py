"""Exact coefficient fields: the rationals and prime fields F_p.

Elements are plain Python values: ``Fraction`` for the rationals and ``int``
in ``range(p)`` for F_p.  A field object knows how to combine them; the
elements themselves carry no back-reference.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

MAX_PRIME = 2**31


def is_prime(n: int) -> bool:
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


class CoeffField:
    """Common interface; see :class:`Rationals` and :class:`PrimeField`."""

    characteristic: int

    def __call__(self, value):
        return self.convert(value)

    def convert(self, value):
        raise NotImplementedError

    def from_int(self, n: int):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    def format(self, a) -> str:
        raise NotImplementedError


class Rationals(CoeffField):
    characteristic = 0
    name = "QQ"

    def convert(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        raise TypeError(f"cannot convert {value!r} to a rational")

    def from_int(self, n: int) -> Fraction:
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def format(self, a) -> str:
        a = Fraction(a)
        if a.denominator == 1:
            return str(a.numerator)
        return f"{a.numerator}/{a.denominator}"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(CoeffField):
    def __init__(self, p: int):
        if not (isinstance(p, int) and 2 <= p < MAX_PRIME and is_prime(p)):
            raise ValueError(f"modulus {p!r} is not a prime below 2^31")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def convert(self, value) -> int:
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ValueError(f"{value} is not representable in GF({self.p})")
            return value.numerator * pow(den, -1, self.p) % self.p
        if isinstance(value, str):
            return self.convert(Fraction(value))
        raise TypeError(f"cannot convert {value!r} to GF({self.p})")

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def elements(self):
        return range(self.p)

    def format(self, a) -> str:
        return str(a % self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


QQ = Rationals()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_spec(spec: str | int | None) -> CoeffField:
    """Parse ``"QQ"``, ``"Q"``, ``"7"`` or ``"GF(7)"`` into a field."""
    if spec is None:
        return QQ
    if isinstance(spec, int):
        return GF(spec)
    s = spec.strip().upper()
    if s in ("QQ", "Q", "RATIONALS"):
        return QQ
    if s.startswith("GF(") and s.endswith(")"):
        s = s[3:-1]
    elif s.startswith("F") and s[1:].isdigit():
        s = s[1:]
    if s.isdigit():
        return GF(int(s))
    raise ValueError(f"unknown field {spec!r}")
