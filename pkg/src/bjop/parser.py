"""Surface syntax for polynomial symbols.

Grammar (whitespace is ignored, multiplication must be explicit)::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := "-" factor | atom ("^" uint)?
    atom   := rational | "i" | var | "(" expr ")"
    var    := "x" index? | "xi" index?        index defaults to 1
    rational := int ("/" uint)?

Unary minus binds looser than ``^``, so ``-x^2`` is ``-(x^2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .gaussian import GaussianRational
from .symbols import SymbolPoly

__all__ = [
    "Imag",
    "Neg",
    "Num",
    "Pow",
    "Product",
    "Sum",
    "Var",
    "lower",
    "parse_expr",
    "parse_symbol",
]


@dataclass(frozen=True)
class Num:
    value: Fraction


@dataclass(frozen=True)
class Imag:
    pass


@dataclass(frozen=True)
class Var:
    kind: str  # "x" or "xi"
    index: int


@dataclass(frozen=True)
class Sum:
    terms: tuple


@dataclass(frozen=True)
class Product:
    factors: tuple


@dataclass(frozen=True)
class Pow:
    base: object
    exponent: int


@dataclass(frozen=True)
class Neg:
    operand: object


_TOKEN = re.compile(r"(?P<num>\d+)|(?P<var>xi|x)(?P<idx>\d+)?|(?P<imag>i)|(?P<op>[-+*/^()])")


def _tokenize(src: str):
    tokens = []
    pos = 0
    while True:
        while pos < len(src) and src[pos].isspace():
            pos += 1
        if pos == len(src):
            break
        m = _TOKEN.match(src, pos)
        if m is None:
            raise ParseError(f"unexpected character {src[pos]!r}", _byte_offset(src, pos))
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num")), pos))
        elif m.group("var") is not None:
            idx = m.group("idx")
            tokens.append(("var", (m.group("var"), int(idx) if idx else 1), pos))
        elif m.group("imag") is not None:
            tokens.append(("imag", None, pos))
        else:
            tokens.append(("op", m.group("op"), pos))
        pos = m.end()
    tokens.append(("end", None, len(src)))
    return tokens


def _byte_offset(src: str, char_pos: int) -> int:
    return len(src[:char_pos].encode())


class _Parser:
    def __init__(self, src: str, dim: int | None):
        self.src = src
        self.dim = dim
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        return ParseError(msg, _byte_offset(self.src, tok[2]))

    def is_op(self, ch):
        kind, val, _ = self.peek()
        return kind == "op" and val == ch

    def parse(self):
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        node = self.expr()
        if self.peek()[0] != "end":
            raise self.error("unexpected token")
        return node

    def expr(self):
        terms = [self.term()]
        while self.is_op("+") or self.is_op("-"):
            op = self.advance()[1]
            t = self.term()
            terms.append(t if op == "+" else Neg(t))
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self):
        factors = [self.factor()]
        while self.is_op("*"):
            self.advance()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Product(tuple(factors))

    def factor(self):
        if self.is_op("-"):
            self.advance()
            return Neg(self.factor())
        base = self.atom()
        if self.is_op("^"):
            self.advance()
            kind, val, _ = self.peek()
            if kind != "num":
                raise self.error("expected a non-negative integer exponent")
            self.advance()
            return Pow(base, val)
        return base

    def atom(self):
        tok = self.peek()
        kind, val, _ = tok
        if kind == "num":
            self.advance()
            if self.is_op("/"):
                self.advance()
                den = self.peek()
                if den[0] != "num":
                    raise self.error("expected an integer denominator")
                if den[1] == 0:
                    raise self.error("zero denominator")
                self.advance()
                return Num(Fraction(val, den[1]))
            return Num(Fraction(val))
        if kind == "imag":
            self.advance()
            return Imag()
        if kind == "var":
            name, idx = val
            if idx < 1 or (self.dim is not None and idx > self.dim):
                raise self.error(f"variable index {idx} out of range for dim={self.dim}")
            self.advance()
            return Var(name, idx)
        if kind == "op" and val == "(":
            self.advance()
            node = self.expr()
            if not self.is_op(")"):
                raise self.error("expected ')'")
            self.advance()
            return node
        if kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected token {val!r}")


def parse_expr(src: str, dim: int | None = 1):
    """Parse ``src`` into an AST; ``dim=None`` skips the index check."""
    return _Parser(src, dim).parse()


def lower(node, dim: int = 1) -> SymbolPoly:
    """Evaluate an AST to a :class:`SymbolPoly` of dimension ``dim``."""
    if isinstance(node, Num):
        return SymbolPoly.constant(node.value, dim)
    if isinstance(node, Imag):
        return SymbolPoly.constant(GaussianRational(0, 1), dim)
    if isinstance(node, Var):
        if node.kind == "x":
            return SymbolPoly.x(node.index, dim)
        return SymbolPoly.xi(node.index, dim)
    if isinstance(node, Sum):
        out = SymbolPoly(dim)
        for t in node.terms:
            out = out + lower(t, dim)
        return out
    if isinstance(node, Product):
        out = SymbolPoly.constant(1, dim)
        for f in node.factors:
            out = out * lower(f, dim)
        return out
    if isinstance(node, Pow):
        return lower(node.base, dim) ** node.exponent
    if isinstance(node, Neg):
        return -lower(node.operand, dim)
    raise TypeError(f"not an AST node: {node!r}")


def parse_symbol(src: str, dim: int = 1) -> SymbolPoly:
    """Parse and lower in one step.

    >>> print(parse_symbol("1/9*(x^3)"))
    1/9*x^3
    """
    return lower(parse_expr(src, dim), dim)
