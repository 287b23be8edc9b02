"""Exact coefficient fields: the rationals and prime fields."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["Field", "RationalField", "PrimeField", "QQ", "GF", "DEFAULT_PRIME"]

# largest prime below 2**31; comfortably above the 2**20 floor for cross-checks
DEFAULT_PRIME = 2147483647


class Field:
    """Base class for coefficient fields.

    Elements are plain Python objects: :class:`fractions.Fraction` for the
    rationals and ``int`` residues in ``[0, p)`` for prime fields, so the
    usual arithmetic operators work on them directly. After ``+``, ``-``
    or ``*`` on prime-field residues call :meth:`norm`.
    """

    characteristic: int = 0

    def __call__(self, value):
        raise NotImplementedError

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)

    def norm(self, value):
        return value

    def inv(self, value):
        raise NotImplementedError

    def div(self, a, b):
        return self.norm(a * self.inv(b))

    def pow(self, value, exponent: int):
        if exponent < 0:
            return self.pow(self.inv(value), -exponent)
        return self.norm(value**exponent)

    def is_zero(self, value) -> bool:
        return value == 0


class RationalField(Field):
    characteristic = 0

    def __call__(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, Rational)):
            return Fraction(value)
        if isinstance(value, str):
            return Fraction(value.strip())
        raise TypeError(f"cannot convert {value!r} to a rational number")

    def inv(self, value):
        if value == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return 1 / Fraction(value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField(Field):
    """The field with ``p`` elements, ``p`` an odd prime."""

    def __init__(self, p: int):
        if p < 3 or not _is_probable_prime(p):
            raise ValueError(f"{p} is not an odd prime")
        self.characteristic = p

    def __call__(self, value) -> int:
        p = self.characteristic
        if isinstance(value, bool):
            value = int(value)
        if isinstance(value, int):
            return value % p
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, (Fraction, Rational)):
            num, den = value.numerator, value.denominator
            if den % p == 0:
                raise ZeroDivisionError(f"denominator {den} vanishes mod {p}")
            return num * pow(den, -1, p) % p
        raise TypeError(f"cannot convert {value!r} to GF({p})")

    def norm(self, value):
        return value % self.characteristic

    def inv(self, value):
        p = self.characteristic
        if value % p == 0:
            raise ZeroDivisionError(f"division by zero in GF({p})")
        return pow(value, -1, p)

    def pow(self, value, exponent: int):
        return pow(value, exponent, self.characteristic)

    def is_zero(self, value) -> bool:
        return value % self.characteristic == 0

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.characteristic == self.characteristic

    def __hash__(self):
        return hash(("GF", self.characteristic))

    def __repr__(self):
        return f"GF({self.characteristic})"


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


QQ = RationalField()


def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)
