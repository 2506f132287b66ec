"""Exact scalars of a real quadratic field

Elements a + b*sqrt(d) of Q(sqrt(d)) with rational a, b.
"""

import math
from fractions import Fraction
from numbers import Rational
from typing import Tuple, Union

from rigidcover.utils.exceptions import FieldError

ScalarLike = Union['FieldScalar', int, Fraction]


def is_squarefree(d: int) -> bool:
    """Check that d has no square factor other than 1

    Args:
        d: Positive integer

    Returns:
        True if d is square-free
    """
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


class FieldScalar:
    """Element a + b*sqrt(d) of Q(sqrt(d))

    d = 1 encodes plain rationals: b is folded into a and stays 0.
    A d = 1 scalar coerces into any field; two scalars with different
    d > 1 do not interoperate.

    Instances are immutable and hashable.
    """

    __slots__ = ('_a', '_b', '_d')

    def __init__(self, a: Union[int, Fraction] = 0, b: Union[int, Fraction] = 0, d: int = 1):
        if not isinstance(d, int) or not is_squarefree(d):
            raise FieldError(f'Discriminant must be a square-free positive integer, got {d!r}')
        a = Fraction(a)
        b = Fraction(b)
        if d == 1:
            a, b = a + b, Fraction(0)
        self._a = a
        self._b = b
        self._d = d

    @property
    def a(self) -> Fraction:
        return self._a

    @property
    def b(self) -> Fraction:
        return self._b

    @property
    def d(self) -> int:
        return self._d

    @classmethod
    def from_parts(cls, a_num: int, a_den: int, b_num: int, b_den: int, d: int) -> 'FieldScalar':
        """Build a scalar from the four integers of the file formats

        Raises:
            ZeroDivisionError: A denominator is zero
        """
        return cls(Fraction(a_num, a_den), Fraction(b_num, b_den), d)

    def to_parts(self) -> Tuple[int, int, int, int]:
        """Return (a_num, a_den, b_num, b_den) in lowest terms"""
        return (self._a.numerator, self._a.denominator,
                self._b.numerator, self._b.denominator)

    def is_rational(self) -> bool:
        return self._b == 0

    def is_zero(self) -> bool:
        return self._a == 0 and self._b == 0

    def _common(self, other: ScalarLike) -> Tuple['FieldScalar', int]:
        """Coerce other into this field

        Returns:
            (other as FieldScalar, discriminant of the result)

        Raises:
            FieldError: Discriminant mismatch
        """
        if isinstance(other, FieldScalar):
            if other._d == self._d or other._d == 1:
                return other, self._d
            if self._d == 1:
                return other, other._d
            raise FieldError(f'Discriminant mismatch: {self._d} vs {other._d}')
        if isinstance(other, (int, Rational)):
            return FieldScalar(Fraction(other), 0, 1), self._d
        raise TypeError(f'Cannot combine FieldScalar with {type(other).__name__}')

    def __add__(self, other: ScalarLike) -> 'FieldScalar':
        try:
            other, d = self._common(other)
        except TypeError:
            return NotImplemented
        return FieldScalar(self._a + other._a, self._b + other._b, d)

    __radd__ = __add__

    def __neg__(self) -> 'FieldScalar':
        return FieldScalar(-self._a, -self._b, self._d)

    def __sub__(self, other: ScalarLike) -> 'FieldScalar':
        try:
            other, d = self._common(other)
        except TypeError:
            return NotImplemented
        return FieldScalar(self._a - other._a, self._b - other._b, d)

    def __rsub__(self, other: ScalarLike) -> 'FieldScalar':
        return (-self) + other

    def __mul__(self, other: ScalarLike) -> 'FieldScalar':
        try:
            other, d = self._common(other)
        except TypeError:
            return NotImplemented
        a = self._a * other._a + d * self._b * other._b
        b = self._a * other._b + self._b * other._a
        return FieldScalar(a, b, d)

    __rmul__ = __mul__

    def conjugate(self) -> 'FieldScalar':
        """Galois conjugate a - b*sqrt(d)"""
        return FieldScalar(self._a, -self._b, self._d)

    def norm(self) -> Fraction:
        """Field norm a^2 - d*b^2 (rational)"""
        return self._a * self._a - self._d * self._b * self._b

    def inverse(self) -> 'FieldScalar':
        """Multiplicative inverse

        Raises:
            ZeroDivisionError: Scalar is zero
        """
        if self.is_zero():
            raise ZeroDivisionError('FieldScalar division by zero')
        n = self.norm()
        # norm vanishes only at zero since d is not a perfect square (or b == 0)
        return FieldScalar(self._a / n, -self._b / n, self._d)

    def __truediv__(self, other: ScalarLike) -> 'FieldScalar':
        try:
            other, _ = self._common(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: ScalarLike) -> 'FieldScalar':
        return self.inverse() * other

    def sign(self) -> int:
        """Exact sign of the real embedding (-1, 0 or 1)"""
        a, b = self._a, self._b
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0:
            return sa
        if sa == 0 or sa == sb:
            return sb
        # opposite signs: compare a^2 with d*b^2
        return sa if a * a > self._d * b * b else sb

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (FieldScalar, int, Rational)):
            return NotImplemented
        other, _ = self._common(other)
        return self._a == other._a and self._b == other._b

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._d))

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __float__(self) -> float:
        if self._b == 0:
            return float(self._a)
        return float(self._a) + float(self._b) * math.sqrt(self._d)

    def __repr__(self) -> str:
        return f'FieldScalar({self._a}, {self._b}, d={self._d})'

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        return f'{self._a}{"+" if self._b > 0 else "-"}{abs(self._b)}*sqrt({self._d})'


def field_zero(d: int = 1) -> FieldScalar:
    return FieldScalar(0, 0, d)


def field_one(d: int = 1) -> FieldScalar:
    return FieldScalar(1, 0, d)


def as_scalar(value: ScalarLike, d: int = 1) -> FieldScalar:
    """Coerce an int, Fraction or FieldScalar into Q(sqrt(d))

    Raises:
        FieldError: value belongs to a different field
    """
    if isinstance(value, FieldScalar):
        if value.d not in (1, d):
            raise FieldError(f'Discriminant mismatch: {value.d} vs {d}')
        return FieldScalar(value.a, value.b, d) if value.d != d else value
    return FieldScalar(Fraction(value), 0, d)
