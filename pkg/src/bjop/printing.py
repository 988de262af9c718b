"""Plain-text rendering of symbol and operator polynomials.

The output uses the same surface syntax the parser accepts (explicit ``*``,
``^`` for powers, ``i`` for the imaginary unit), so printed symbols can be
parsed back.
"""

from fractions import Fraction


def _var(name, j, dim):
    return name if dim == 1 else f"{name}{j + 1}"


def format_monomial(xexp, kexp, dim, momentum="xi"):
    factors = []
    for name, exps in (("x", xexp), (momentum, kexp)):
        for j, e in enumerate(exps):
            if e == 0:
                continue
            v = _var(name, j, dim)
            factors.append(v if e == 1 else f"{v}^{e}")
    return "*".join(factors)


def _imag(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}*i"


def format_term(coeff, mono: str) -> str:
    re, im = coeff.re, coeff.im
    if im == 0:
        c = str(re)
    elif re == 0:
        c = _imag(im)
    else:
        sign = "-" if im < 0 else "+"
        c = f"({re} {sign} {_imag(abs(im))})"
    if not mono:
        return c
    if c == "1":
        return mono
    if c == "-1":
        return "-" + mono
    if c == "-i":
        return "-i*" + mono
    return f"{c}*{mono}"


def format_poly(sorted_terms, dim, momentum="xi") -> str:
    """Join ``[((xexp, kexp), coeff), ...]`` into ``a - b + c`` form."""
    parts = []
    for (xexp, kexp), c in sorted_terms:
        t = format_term(c, format_monomial(xexp, kexp, dim, momentum))
        if not parts:
            parts.append(t)
        elif t.startswith("-"):
            parts.append(" - " + t[1:])
        else:
            parts.append(" + " + t)
    return "".join(parts) or "0"
