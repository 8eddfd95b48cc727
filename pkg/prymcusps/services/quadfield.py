"""Exact arithmetic in the real quadratic field Q(sqrt D).

Elements are a + b*sqrt(D) with rational a, b. Signs and comparisons are
decided exactly from the coefficients, never through floating point.
"""

import math
import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Union

from prymcusps.errors import (
    DiscriminantMismatchError,
    InadmissibleLambdaError,
    InvalidDiscriminantError,
)

RationalLike = Union[int, Fraction]

_EXACT_PATTERN = re.compile(
    r"^\s*(-?\d+(?:/\d+)?)\s*\+\s*(-?\d+(?:/\d+)?)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*$"
)


@lru_cache(maxsize=4096)
def validate_discriminant(D: int) -> int:
    """
    Check that D is a real quadratic discriminant.

    Args:
        D: Candidate discriminant

    Returns:
        D unchanged

    Raises:
        InvalidDiscriminantError: D is not a positive integer, is not 0 or 1
            mod 4, or is a perfect square
    """
    if isinstance(D, bool) or not isinstance(D, int):
        raise InvalidDiscriminantError(D, "must be an integer")
    if D <= 0:
        raise InvalidDiscriminantError(D, "must be positive")
    if D % 4 not in (0, 1):
        raise InvalidDiscriminantError(D, "must be congruent to 0 or 1 mod 4")
    root = math.isqrt(D)
    if root * root == D:
        raise InvalidDiscriminantError(D, "must not be a perfect square")
    return D


def _sign_of(a: Fraction, b: Fraction, D: int) -> int:
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: the larger of a^2 and b^2 D wins; they never tie
    return sa if a * a > b * b * D else sb


class QuadElem:
    """An element a + b*sqrt(D) of Q(sqrt D)."""

    __slots__ = ("_a", "_b", "_D")

    def __init__(self, a: RationalLike, b: RationalLike, D: int):
        validate_discriminant(D)
        for part in (a, b):
            if not isinstance(part, Rational) or isinstance(part, bool):
                raise TypeError(f"coefficients must be int or Fraction, got {type(part).__name__}")
        self._a = Fraction(a)
        self._b = Fraction(b)
        self._D = D

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, D: int) -> "QuadElem":
        obj = object.__new__(cls)
        obj._a = a
        obj._b = b
        obj._D = D
        return obj

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def D(self) -> int:
        return self._D

    @property
    def is_rational(self) -> bool:
        return self._b == 0

    def _coerce(self, other: object) -> "QuadElem":
        if isinstance(other, QuadElem):
            if other._D != self._D:
                raise DiscriminantMismatchError(self._D, other._D)
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return QuadElem._raw(Fraction(other), Fraction(0), self._D)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadElem._raw(self._a + other._a, self._b + other._b, self._D)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadElem._raw(self._a - other._a, self._b - other._b, self._D)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self._a, self._b, other._a, other._b
        return QuadElem._raw(a * c + b * d * self._D, a * d + b * c, self._D)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self) -> "QuadElem":
        return QuadElem._raw(-self._a, -self._b, self._D)

    def __pos__(self) -> "QuadElem":
        return self

    def __abs__(self) -> "QuadElem":
        return -self if self.sign() < 0 else self

    def conj(self) -> "QuadElem":
        """Galois conjugate a - b*sqrt(D)."""
        return QuadElem._raw(self._a, -self._b, self._D)

    def norm(self) -> Fraction:
        """Field norm x * conj(x) = a^2 - b^2 D."""
        return self._a * self._a - self._b * self._b * self._D

    def trace(self) -> Fraction:
        """Field trace x + conj(x) = 2a."""
        return 2 * self._a

    def inverse(self) -> "QuadElem":
        """
        Multiplicative inverse conj(x) / norm(x).

        Raises:
            ZeroDivisionError: x is zero
        """
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt D)")
        return QuadElem._raw(self._a / n, -self._b / n, self._D)

    def sign(self) -> int:
        """Exact sign of the real number a + b*sqrt(D): -1, 0 or +1."""
        return _sign_of(self._a, self._b, self._D)

    def __bool__(self) -> bool:
        return self._a != 0 or self._b != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, QuadElem):
            return self._D == other._D and self._a == other._a and self._b == other._b
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self._b == 0 and self._a == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._D))

    def __lt__(self, other) -> bool:
        diff = self - other
        return diff.sign() < 0 if diff is not NotImplemented else NotImplemented

    def __le__(self, other) -> bool:
        diff = self - other
        return diff.sign() <= 0 if diff is not NotImplemented else NotImplemented

    def __gt__(self, other) -> bool:
        diff = self - other
        return diff.sign() > 0 if diff is not NotImplemented else NotImplemented

    def __ge__(self, other) -> bool:
        diff = self - other
        return diff.sign() >= 0 if diff is not NotImplemented else NotImplemented

    def __float__(self) -> float:
        return float(self._a) + float(self._b) * math.sqrt(self._D)

    def evaluate(self, ctx):
        """
        Decimal value in an mpmath context.

        Args:
            ctx: mpmath context (``mpmath.mp`` or a fresh ``MPContext``)

        Returns:
            ctx.mpf approximation at the context's working precision
        """
        a = ctx.mpf(self._a.numerator) / self._a.denominator
        b = ctx.mpf(self._b.numerator) / self._b.denominator
        return a + b * ctx.sqrt(self._D)

    def __str__(self) -> str:
        return f"{self._a} + {self._b}*sqrt({self._D})"

    def __repr__(self) -> str:
        return f"QuadElem({self._a!s}, {self._b!s}, {self._D})"

    @classmethod
    def parse(cls, text: str) -> "QuadElem":
        """
        Parse the exact form "a + b*sqrt(D)" written by ``str``.

        Raises:
            ValueError: text is not in the exact form
        """
        match = _EXACT_PATTERN.match(text)
        if match is None:
            raise ValueError(f"not an exact quadratic number: {text!r}")
        a, b, D = match.groups()
        return cls(Fraction(a), Fraction(b), int(D))


def make(a: RationalLike, b: RationalLike, D: int) -> QuadElem:
    """Build a + b*sqrt(D) after validating D."""
    return QuadElem(a, b, D)


def add(x: QuadElem, y: QuadElem) -> QuadElem:
    return x + y


def sub(x: QuadElem, y: QuadElem) -> QuadElem:
    return x - y


def mul(x: QuadElem, y: QuadElem) -> QuadElem:
    return x * y


def neg(x: QuadElem) -> QuadElem:
    return -x


def inv(x: QuadElem) -> QuadElem:
    return x.inverse()


def conj(x: QuadElem) -> QuadElem:
    return x.conj()


def sign(x: QuadElem) -> int:
    return x.sign()


def norm(x: QuadElem) -> Fraction:
    return x.norm()


def trace(x: QuadElem) -> Fraction:
    return x.trace()


def sqrt_d(D: int) -> QuadElem:
    """The element sqrt(D) itself."""
    return QuadElem(0, 1, D)


def lambda_of(e: int, D: int) -> QuadElem:
    """
    The short cylinder width lambda = (e + sqrt D)/2.

    Args:
        e: Integer with e^2 < D and e = D mod 2
        D: Discriminant

    Returns:
        lambda, which satisfies lambda^2 = e*lambda + (D - e^2)/4

    Raises:
        InadmissibleLambdaError: e^2 >= D or parity mismatch
    """
    validate_discriminant(D)
    if e * e >= D or (D - e) % 2 != 0:
        raise InadmissibleLambdaError(e, D)
    return QuadElem._raw(Fraction(e, 2), Fraction(1, 2), D)


def order_generator(D: int) -> QuadElem:
    """Generator T = (D mod 2 + sqrt D)/2 of the order O_D = Z[T]."""
    validate_discriminant(D)
    return QuadElem._raw(Fraction(D % 2, 2), Fraction(1, 2), D)
