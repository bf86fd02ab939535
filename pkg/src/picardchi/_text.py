from __future__ import annotations

from fractions import Fraction
from typing import Iterable


def coeff_str(c: Fraction) -> str:
    # "p/q" in lowest terms with q > 0, or "p" when integral
    return str(Fraction(c))


def join_terms(terms: Iterable[tuple[Fraction, str]]) -> str:
    """Join ``(coefficient, monomial)`` pairs into ``a * m1 - b * m2 ...``.

    An empty monomial string stands for the constant monomial.
    """
    pieces = []
    for c, mono in terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if not mono:
            body = coeff_str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{coeff_str(mag)} * {mono}"
        if not pieces:
            pieces.append(body if sign == "+" else "-" + body)
        else:
            pieces.append(f" {sign} {body}")
    return "".join(pieces) if pieces else "0"


def latex_frac(c: Fraction) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"
