"""Exact and grid-level calculus for Weyl, Shubin-tau and Born-Jordan quantization."""

from .gaussian import I, GaussianRational, gr_arith
from .operators import OpPoly, op_apply_poly, op_commutator, op_mul, op_scale_add
from .parser import parse_symbol
from .quantize import (
    QuantizationRule,
    TauPoly,
    bj_via_commutator,
    quantize,
    quantize_bj,
    quantize_tau,
    quantize_weyl,
    tau_expansion,
)
from .symbols import SymbolPoly, poisson_bracket, sym_arith, sym_partial

__version__ = "0.1.0"

__all__ = [
    "GaussianRational",
    "I",
    "OpPoly",
    "QuantizationRule",
    "SymbolPoly",
    "TauPoly",
    "bj_via_commutator",
    "gr_arith",
    "op_apply_poly",
    "op_commutator",
    "op_mul",
    "op_scale_add",
    "parse_symbol",
    "poisson_bracket",
    "quantize",
    "quantize_bj",
    "quantize_tau",
    "quantize_weyl",
    "sym_arith",
    "sym_partial",
    "tau_expansion",
]
