"""Exact arithmetic in the Gaussian rationals Q(i)."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

__all__ = ["GaussianRational", "I", "ONE", "ZERO", "as_gr", "gr_arith"]


class GaussianRational:
    """Complex number ``re + i*im`` with rational parts.

    Instances are immutable. Plain ``int`` and ``Fraction`` operands are
    promoted automatically, so ``GaussianRational(1, 1) * 2`` works.

    >>> (1 + I) * (1 - I)
    GaussianRational(2)
    """

    __slots__ = ("_re", "_im")

    def __init__(self, re=0, im=0):
        # Fraction normalizes to lowest terms with positive denominator.
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    # arithmetic

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self._re + other._re, self._im + other._im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return GaussianRational(self._re - other._re, self._im - other._im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self._re, self._im, other._re, other._im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        norm = other._re * other._re + other._im * other._im
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        num = self * other.conjugate()
        return GaussianRational(num._re / norm, num._im / norm)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __neg__(self):
        return GaussianRational(-self._re, -self._im)

    def __pos__(self):
        return self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return ONE / self**-n
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self._re, -self._im)

    def norm2(self) -> Fraction:
        """Squared modulus, exact."""
        return self._re * self._re + self._im * self._im

    # comparison / hashing

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self._re == other._re and self._im == other._im

    def __hash__(self):
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __bool__(self):
        return bool(self._re) or bool(self._im)

    def is_real(self) -> bool:
        return self._im == 0

    def __complex__(self):
        return complex(float(self._re), float(self._im))

    def __repr__(self):
        if self._im == 0:
            return f"GaussianRational({self._re})"
        return f"GaussianRational({self._re}, {self._im})"

    def __str__(self):
        if self._im == 0:
            return str(self._re)
        if self._re == 0:
            return _imag_str(self._im)
        sign = "-" if self._im < 0 else "+"
        return f"{self._re} {sign} {_imag_str(abs(self._im))}"


def _imag_str(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}*i"


def _coerce(value):
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Rational)):
        return GaussianRational(value)
    return NotImplemented


def as_gr(value) -> GaussianRational:
    """Promote an int, Fraction or GaussianRational; reject floats."""
    out = _coerce(value)
    if out is NotImplemented:
        raise TypeError(f"cannot use {type(value).__name__} as an exact coefficient")
    return out


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def gr_arith(op: str, a, b=None) -> GaussianRational:
    """Dispatch one field operation by name.

    ``op`` is one of ``add``, ``sub``, ``mul``, ``div``, ``neg``, ``conj``.
    Division by zero raises :class:`ZeroDivisionError`.
    """
    a = as_gr(a)
    if op == "neg":
        return -a
    if op == "conj":
        return a.conjugate()
    if b is None:
        raise TypeError(f"operation {op!r} needs two operands")
    b = as_gr(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
