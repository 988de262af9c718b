"""Shubin-tau, Weyl and Born-Jordan quantization of polynomial symbols.

Convention: ``Op_tau`` has kernel built from ``a((1 - tau) x + tau y, xi)``,
so ``tau = 0`` puts every x to the left of D. For a 1-D monomial

    Op_tau(x^r xi^s) = sum_k C(r, k) (1 - tau)^k tau^(r - k) x^k D^s x^(r - k).

Born-Jordan is the average of ``Op_tau`` over ``tau`` in [0, 1], computed by
expanding in powers of tau and integrating each power exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .gaussian import GaussianRational, as_gr
from .operators import OpPoly, op_commutator
from .symbols import SymbolPoly

__all__ = [
    "QuantizationRule",
    "TauPoly",
    "bj_monomial_sum",
    "bj_via_commutator",
    "quantize",
    "quantize_bj",
    "quantize_tau",
    "quantize_weyl",
    "tau_expansion",
]


@dataclass(frozen=True)
class QuantizationRule:
    """One of ``weyl``, ``tau`` (with a rational ``tau``) or ``bj``."""

    kind: str
    tau: Fraction | None = None

    def __post_init__(self):
        if self.kind not in ("weyl", "tau", "bj"):
            raise ValueError(f"unknown rule kind {self.kind!r}")
        if self.kind == "tau":
            if self.tau is None:
                raise ValueError("tau rule needs a tau value")
            object.__setattr__(self, "tau", Fraction(self.tau))

    @classmethod
    def weyl(cls):
        return cls("weyl")

    @classmethod
    def born_jordan(cls):
        return cls("bj")

    @classmethod
    def shubin(cls, tau):
        return cls("tau", Fraction(tau))

    @classmethod
    def parse(cls, text: str) -> QuantizationRule:
        """Read ``bj``, ``weyl`` or ``tau=<p/q>``."""
        text = text.strip().lower()
        if text in ("bj", "born-jordan", "bornjordan"):
            return cls.born_jordan()
        if text == "weyl":
            return cls.weyl()
        if text.startswith("tau="):
            try:
                return cls.shubin(Fraction(text[4:]))
            except (ValueError, ZeroDivisionError):
                pass
        raise ValueError(f"unrecognized rule {text!r}")

    def effective_tau(self):
        """Tau value for Shubin rules (Weyl is 1/2); ``None`` for Born-Jordan."""
        if self.kind == "weyl":
            return Fraction(1, 2)
        return self.tau

    def __str__(self):
        return f"tau={self.tau}" if self.kind == "tau" else self.kind


class TauPoly:
    """Polynomial in a formal ``tau`` whose coefficients are operators.

    ``coeffs[m]`` is the operator multiplying ``tau^m``.
    """

    __slots__ = ("dim", "coeffs")

    def __init__(self, dim: int, coeffs=None):
        self.dim = dim
        self.coeffs = {m: op for m, op in (coeffs or {}).items() if not op.is_zero()}

    @classmethod
    def constant(cls, op: OpPoly) -> TauPoly:
        return cls(op.dim, {0: op})

    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def __add__(self, other: TauPoly) -> TauPoly:
        out = dict(self.coeffs)
        for m, op in other.coeffs.items():
            out[m] = out[m] + op if m in out else op
        return TauPoly(self.dim, out)

    def __mul__(self, other: TauPoly) -> TauPoly:
        out = {}
        for m1, a in self.coeffs.items():
            for m2, b in other.coeffs.items():
                prod = a * b
                out[m1 + m2] = out[m1 + m2] + prod if m1 + m2 in out else prod
        return TauPoly(self.dim, out)

    def scale(self, c) -> TauPoly:
        return TauPoly(self.dim, {m: op.scale(c) for m, op in self.coeffs.items()})

    def evaluate(self, tau) -> OpPoly:
        tau = as_gr(Fraction(tau) if not isinstance(tau, GaussianRational) else tau)
        out = OpPoly(self.dim)
        for m, op in self.coeffs.items():
            out = out + op.scale(tau**m)
        return out

    def integrate(self) -> OpPoly:
        """Exact integral over ``tau`` in [0, 1]."""
        out = OpPoly(self.dim)
        for m, op in self.coeffs.items():
            out = out + op.scale(Fraction(1, m + 1))
        return out

    def mirror(self) -> TauPoly:
        """Substitute ``tau -> 1 - tau``."""
        out = {}
        for m, op in self.coeffs.items():
            for i in range(m + 1):
                c = comb(m, i) * (-1) ** i
                term = op.scale(c)
                out[i] = out[i] + term if i in out else term
        return TauPoly(self.dim, out)


def _coordinate_expansion(r: int, s: int, j: int, dim: int) -> TauPoly:
    """Tau expansion of ``x_j^r xi_j^s`` in one coordinate."""
    xj, Dj = OpPoly.x(j, dim), OpPoly.D(j, dim)
    Ds = Dj**s
    out = TauPoly(dim)
    for k in range(r + 1):
        word = (xj**k) * Ds * (xj ** (r - k))
        # C(r,k) (1 - tau)^k tau^(r-k) = sum_i C(r,k) C(k,i) (-1)^i tau^(i + r - k)
        coeffs = {}
        for i in range(k + 1):
            c = comb(r, k) * comb(k, i) * (-1) ** i
            coeffs[i + r - k] = word.scale(c)
        out = out + TauPoly(dim, coeffs)
    return out


def tau_expansion(a: SymbolPoly) -> TauPoly:
    """``Op_tau(a)`` as a polynomial in the formal variable ``tau``.

    In several dimensions the same ``tau`` is used for every coordinate.
    """
    n = a.dim
    total = TauPoly(n)
    for (xexp, kexp), c in a.sorted_terms():
        piece = TauPoly.constant(OpPoly.constant(c, n))
        for j in range(n):
            if xexp[j] or kexp[j]:
                piece = piece * _coordinate_expansion(xexp[j], kexp[j], j + 1, n)
        total = total + piece
    return total


def quantize_tau(a: SymbolPoly, tau) -> OpPoly:
    """Shubin ``tau``-quantization with exact rational ``tau``."""
    return tau_expansion(a).evaluate(Fraction(tau))


def quantize_weyl(a: SymbolPoly) -> OpPoly:
    return quantize_tau(a, Fraction(1, 2))


def quantize_bj(a: SymbolPoly) -> OpPoly:
    """Born-Jordan quantization: ``Op_tau(a)`` averaged over ``tau`` in [0, 1]."""
    return tau_expansion(a).integrate()


def quantize(a: SymbolPoly, rule: QuantizationRule) -> OpPoly:
    if rule.kind == "bj":
        return quantize_bj(a)
    return quantize_tau(a, rule.effective_tau())


def bj_monomial_sum(r: int, s: int) -> OpPoly:
    """Equal-weight ordering sum ``1/(r+1) sum_k x^k D^s x^(r-k)``."""
    x, D = OpPoly.x(), OpPoly.D()
    Ds = D**s
    out = OpPoly(1)
    for k in range(r + 1):
        out = out + (x**k) * Ds * (x ** (r - k))
    return out.scale(Fraction(1, r + 1))


def bj_via_commutator(r: int, s: int) -> OpPoly:
    """``[x^(r+1), D^(s+1)] / (i (r+1) (s+1))``."""
    x, D = OpPoly.x(), OpPoly.D()
    comm = op_commutator(x ** (r + 1), D ** (s + 1))
    return comm.scale(1 / GaussianRational(0, (r + 1) * (s + 1)))
