"""Sparse term storage shared by symbol and operator polynomials."""

from __future__ import annotations

from .errors import DimensionMismatch, IndexOutOfRange
from .gaussian import ONE, as_gr


def zeros(n):
    return (0,) * n


def unit(j, dim):
    return tuple(int(i == j - 1) for i in range(dim))


def check_index(j, dim):
    if not 1 <= j <= dim:
        raise IndexOutOfRange(f"index {j} out of range for dim={dim}")


def term_order_key(key):
    """Graded-lex key on ``(xexp, kexp)``; sort with ``reverse=True`` to print."""
    xexp, kexp = key
    return (sum(xexp) + sum(kexp), xexp, kexp)


class TermPoly:
    """Map ``(xexp, kexp) -> coeff`` over Q(i) in canonical form.

    Zero coefficients are never stored, so equality is a comparison of the
    term maps. A polynomial with only a constant term combines with
    polynomials of any dimension. Subclasses define multiplication.
    """

    __slots__ = ("dim", "terms")
    _momentum = "?"

    def __init__(self, dim: int, terms=None):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        clean = {}
        for (xexp, kexp), c in (terms or {}).items():
            xexp, kexp = tuple(xexp), tuple(kexp)
            if len(xexp) != dim or len(kexp) != dim:
                raise DimensionMismatch(f"exponent {xexp, kexp} does not match dim={dim}")
            if min(xexp + kexp, default=0) < 0:
                raise ValueError("negative exponent")
            c = as_gr(c)
            if c:
                key = (xexp, kexp)
                total = clean.get(key, 0) + c
                if total:
                    clean[key] = total
                else:
                    clean.pop(key, None)
        self.terms = clean

    @classmethod
    def _raw(cls, dim, terms):
        # trusted path: terms already canonical
        obj = cls.__new__(cls)
        obj.dim = dim
        obj.terms = terms
        return obj

    @classmethod
    def constant(cls, c, dim: int = 1):
        return cls(dim, {(zeros(dim), zeros(dim)): c})

    @classmethod
    def monomial(cls, xexp, kexp, coeff=1):
        xexp, kexp = tuple(xexp), tuple(kexp)
        return cls(len(xexp), {(xexp, kexp): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(a) and not any(b) for a, b in self.terms)

    def constant_term(self):
        return self.terms.get((zeros(self.dim), zeros(self.dim)), as_gr(0))

    def degree(self) -> int:
        return max((sum(a) + sum(b) for a, b in self.terms), default=0)

    def x_degree(self) -> int:
        return max((sum(a) for a, _ in self.terms), default=0)

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.terms.values())

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: term_order_key(kv[0]), reverse=True)

    def with_dim(self, dim: int):
        """Re-embed a constant into dimension ``dim``."""
        if dim == self.dim:
            return self
        if not self.is_constant():
            raise DimensionMismatch(f"cannot move a dim={self.dim} polynomial to dim={dim}")
        return type(self).constant(self.constant_term(), dim)

    def _align(self, other):
        cls = type(self)
        if not isinstance(other, TermPoly):
            try:
                other = cls.constant(as_gr(other), self.dim)
            except TypeError:
                return self, NotImplemented
        elif type(other) is not cls:
            return self, NotImplemented
        if other.dim == self.dim:
            return self, other
        if other.is_constant():
            return self, other.with_dim(self.dim)
        if self.is_constant():
            return self.with_dim(other.dim), other
        raise DimensionMismatch(f"dimensions {self.dim} and {other.dim} differ")

    def __add__(self, other):
        a, b = self._align(other)
        if b is NotImplemented:
            return b
        terms = dict(a.terms)
        for k, c in b.terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return a._raw(a.dim, terms)

    __radd__ = __add__

    def __neg__(self):
        return self._raw(self.dim, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        a, b = self._align(other)
        if b is NotImplemented:
            return b
        return a + (-b)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = as_gr(c)
        if not c:
            return self._raw(self.dim, {})
        return self._raw(self.dim, {k: v * c for k, v in self.terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = type(self).constant(ONE, self.dim)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if isinstance(other, TermPoly):
            if type(other) is not type(self):
                return False
            try:
                a, b = self._align(other)
            except DimensionMismatch:
                return False
            return a.terms == b.terms
        try:
            c = as_gr(other)
        except TypeError:
            return NotImplemented
        return self == type(self).constant(c, self.dim)

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_term())
        return hash((self.dim, frozenset(self.terms.items())))

    def __str__(self):
        from .printing import format_poly

        return format_poly(self.sorted_terms(), self.dim, momentum=self._momentum)

    def __repr__(self):
        return f"{type(self).__name__}(dim={self.dim}, {self})"
