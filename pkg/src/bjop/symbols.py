"""Commutative polynomial symbols a(x, xi) and the Poisson bracket."""

from __future__ import annotations

from ._base import TermPoly, check_index, unit, zeros
from .gaussian import as_gr

__all__ = ["SymbolPoly", "poisson_bracket", "sym_arith", "sym_partial"]


class SymbolPoly(TermPoly):
    """Polynomial in ``x_1..x_n, xi_1..xi_n`` with coefficients in Q(i).

    >>> x, xi = SymbolPoly.x(), SymbolPoly.xi()
    >>> print((x + xi) * (x - xi))
    x^2 - xi^2
    """

    __slots__ = ()
    _momentum = "xi"

    @classmethod
    def x(cls, j: int = 1, dim: int = 1) -> SymbolPoly:
        check_index(j, dim)
        return cls._raw(dim, {(unit(j, dim), zeros(dim)): as_gr(1)})

    @classmethod
    def xi(cls, j: int = 1, dim: int = 1) -> SymbolPoly:
        check_index(j, dim)
        return cls._raw(dim, {(zeros(dim), unit(j, dim)): as_gr(1)})

    def conjugate(self) -> SymbolPoly:
        return self._raw(self.dim, {k: c.conjugate() for k, c in self.terms.items()})

    def __mul__(self, other):
        a, b = self._align(other)
        if b is NotImplemented:
            return b
        terms = {}
        for (xa, ka), ca in a.terms.items():
            for (xb, kb), cb in b.terms.items():
                key = (
                    tuple(p + q for p, q in zip(xa, xb)),
                    tuple(p + q for p, q in zip(ka, kb)),
                )
                terms[key] = terms.get(key, 0) + ca * cb
        return SymbolPoly(a.dim, terms)

    __rmul__ = __mul__


def sym_arith(op: str, a: SymbolPoly, b) -> SymbolPoly:
    """Named dispatch for ``add``, ``sub``, ``mul`` and ``scale``."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "scale":
        return a.scale(b)
    raise ValueError(f"unknown operation {op!r}")


def sym_partial(a: SymbolPoly, var: str, j: int = 1) -> SymbolPoly:
    """Formal partial derivative with respect to ``x_j`` or ``xi_j`` (1-based)."""
    check_index(j, a.dim)
    if var not in ("x", "xi"):
        raise ValueError(f"unknown variable {var!r}")
    idx = j - 1
    terms = {}
    for (xexp, kexp), c in a.terms.items():
        exps = list(xexp if var == "x" else kexp)
        e = exps[idx]
        if e == 0:
            continue
        exps[idx] = e - 1
        key = (tuple(exps), kexp) if var == "x" else (xexp, tuple(exps))
        terms[key] = terms.get(key, 0) + c * e
    return SymbolPoly(a.dim, terms)


def poisson_bracket(a: SymbolPoly, b: SymbolPoly) -> SymbolPoly:
    """``{a, b} = sum_j da/dx_j * db/dxi_j - db/dx_j * da/dxi_j``."""
    a, b = a._align(b)
    if b is NotImplemented:
        raise TypeError("poisson_bracket needs two SymbolPoly operands")
    out = SymbolPoly(a.dim)
    for j in range(1, a.dim + 1):
        out = out + sym_partial(a, "x", j) * sym_partial(b, "xi", j)
        out = out - sym_partial(b, "x", j) * sym_partial(a, "xi", j)
    return out
