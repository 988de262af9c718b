"""Normal-ordered operator polynomials in x and D = -i d/dx.

Every :class:`OpPoly` is kept as ``sum c * x^alpha D^beta`` with all
position factors to the left. Products are reduced with the closed form

    D^b x^a = sum_j C(b, j) a!/(a-j)! (-i)^j x^(a-j) D^(b-j)

applied coordinate by coordinate (distinct coordinates commute).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import comb

from ._base import TermPoly, check_index, unit, zeros
from .errors import DimensionMismatch
from .gaussian import ONE, ZERO, GaussianRational, as_gr

__all__ = [
    "OpPoly",
    "op_apply_poly",
    "op_commutator",
    "op_mul",
    "op_scale_add",
]

_MINUS_I_POW = (ONE, GaussianRational(0, -1), GaussianRational(-1), GaussianRational(0, 1))


@lru_cache(maxsize=4096)
def _reorder(b: int, a: int):
    """Normal-ordered expansion of ``D^b x^a`` as ``((j, coeff), ...)``.

    The term with index ``j`` is ``coeff * x^(a-j) D^(b-j)``.
    """
    out = []
    falling = 1
    for j in range(min(a, b) + 1):
        if j:
            falling *= a - j + 1
        out.append((j, _MINUS_I_POW[j % 4] * (comb(b, j) * falling)))
    return tuple(out)


class OpPoly(TermPoly):
    """Operator polynomial ``sum c_{alpha,beta} x^alpha D^beta`` in normal order.

    >>> x, D = OpPoly.x(), OpPoly.D()
    >>> print(D * x)
    x*D - i
    """

    __slots__ = ()
    _momentum = "D"

    @classmethod
    def x(cls, j: int = 1, dim: int = 1) -> OpPoly:
        check_index(j, dim)
        return cls._raw(dim, {(unit(j, dim), zeros(dim)): ONE})

    @classmethod
    def D(cls, j: int = 1, dim: int = 1) -> OpPoly:
        check_index(j, dim)
        return cls._raw(dim, {(zeros(dim), unit(j, dim)): ONE})

    def __mul__(self, other):
        a, b = self._align(other)
        if b is NotImplemented:
            return b
        n = a.dim
        terms = {}
        for (xa, da), ca in a.terms.items():
            for (xb, db), cb in b.terms.items():
                c0 = ca * cb
                per_coord = [_reorder(da[k], xb[k]) for k in range(n)]
                for choice in product(*per_coord):
                    c = c0
                    for _, cj in choice:
                        if cj is not ONE:
                            c = c * cj
                    key = (
                        tuple(xa[k] + xb[k] - choice[k][0] for k in range(n)),
                        tuple(da[k] + db[k] - choice[k][0] for k in range(n)),
                    )
                    s = terms.get(key, ZERO) + c
                    if s:
                        terms[key] = s
                    else:
                        terms.pop(key, None)
        return OpPoly._raw(n, terms)

    def __rmul__(self, other):
        # scalar * OpPoly; operator * operator goes through __mul__
        return self.scale(other)

    def adjoint(self) -> OpPoly:
        """Formal adjoint for ``(u|v) = int u conj(v) dx``.

        Each word ``c x^a D^b`` maps to ``conj(c) D^b x^a``, renormal-ordered.
        """
        n = self.dim
        out = OpPoly(n)
        for (xa, db), c in self.terms.items():
            word = OpPoly._raw(n, {(zeros(n), db): c.conjugate()}) * OpPoly._raw(
                n, {(xa, zeros(n)): ONE}
            )
            out = out + word
        return out


def op_mul(A: OpPoly, B: OpPoly) -> OpPoly:
    _same_dim(A, B)
    return A * B


def op_commutator(A: OpPoly, B: OpPoly) -> OpPoly:
    """``[A, B] = AB - BA`` in normal order."""
    _same_dim(A, B)
    return A * B - B * A


def op_scale_add(op: str, A: OpPoly, B) -> OpPoly:
    """Named dispatch for ``add``, ``sub`` and ``scale``."""
    if op == "scale":
        return A.scale(B)
    _same_dim(A, B)
    if op == "add":
        return A + B
    if op == "sub":
        return A - B
    raise ValueError(f"unknown operation {op!r}")


def _same_dim(A, B):
    if isinstance(B, OpPoly) and A.dim != B.dim and not (A.is_constant() or B.is_constant()):
        raise DimensionMismatch(f"dimensions {A.dim} and {B.dim} differ")


# Independent oracle: realizes x as multiplication and D as -i d/dx on
# coefficient lists. Shares nothing with the reordering rule above.


def _trim(coeffs):
    while coeffs and not coeffs[-1]:
        coeffs.pop()
    return coeffs


def _deriv(coeffs):
    return [c * k for k, c in enumerate(coeffs)][1:]


def op_apply_poly(A: OpPoly, u):
    """Apply a 1-D operator to a polynomial ``u = sum u[k] x^k``.

    ``u`` is a sequence of exact coefficients, lowest power first; the result
    has the same layout with trailing zeros removed.
    """
    if A.dim != 1:
        raise DimensionMismatch("op_apply_poly is defined for dim=1 only")
    u = [as_gr(c) for c in u]
    minus_i = GaussianRational(0, -1)
    out = []
    for ((alpha,), (beta,)), c in A.terms.items():
        v = list(u)
        for _ in range(beta):
            v = [minus_i * d for d in _deriv(v)]
        v = [ZERO] * alpha + [c * d for d in v]
        if len(out) < len(v):
            out.extend([ZERO] * (len(v) - len(out)))
        for k, d in enumerate(v):
            out[k] = out[k] + d
    return _trim(out)
