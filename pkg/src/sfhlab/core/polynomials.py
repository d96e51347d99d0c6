# (C) Copyright 2026 sfhlab developers.
#
# This software is licensed under the terms of the Apache Licence Version 2.0
# which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
#

"""Laurent polynomials in ``t`` kept as ``{exponent: coefficient}`` dicts."""

import logging

import sympy

from sfhlab.exceptions import InvariantError

LOG = logging.getLogger(__name__)

T = sympy.Symbol("t")


def clean(counts):
    return {int(e): int(c) for e, c in sorted(counts.items()) if c}


def to_poly(counts):
    """Return ``(low, poly)`` with ``counts == t**low * poly``."""
    counts = clean(counts)
    if not counts:
        return 0, sympy.Poly(0, T)
    low = min(counts)
    return low, sympy.Poly.from_dict({(e - low,): c for e, c in counts.items()}, T)


def from_poly(low, poly):
    return clean({low + monom[0]: int(coeff) for monom, coeff in poly.terms()})


def from_expr(expr):
    """Counts of a Laurent polynomial given as a sympy expression in ``t``."""
    expr = sympy.expand(sympy.cancel(expr))
    num, den = sympy.fraction(sympy.together(expr))
    den = sympy.Poly(den, T)
    if len(den.terms()) != 1:
        raise InvariantError(f"{expr} is not a Laurent polynomial")
    (shift,), coeff = den.terms()[0]
    result = {}
    for (e,), c in sympy.Poly(num, T).terms():
        value = sympy.Rational(c, coeff)
        if not value.is_integer:
            raise InvariantError(f"{expr} has non-integral coefficients")
        result[e - shift] = int(value)
    return clean(result)


def to_expr(counts):
    return sum(c * T**e for e, c in clean(counts).items())


def deconvolve(counts, k, sign=1):
    """Divide by ``(1 + sign * t**-1) ** k`` exactly.

    Raises ``InvariantError`` if the division leaves a remainder.
    """
    counts = clean(counts)
    if k == 0 or not counts:
        return counts
    low, poly = to_poly(counts)
    # (1 + sign/t)^k = t^-k (t + sign)^k
    divisor = sympy.Poly((T + sign) ** k, T)
    quotient, remainder = poly.div(divisor)
    if not remainder.is_zero:
        raise InvariantError(f"{counts} is not divisible by (1{'+' if sign > 0 else '-'}t^-1)^{k}")
    return from_poly(low + k, quotient)


def convolve(counts, k, sign=1):
    counts = clean(counts)
    if k == 0 or not counts:
        return counts
    low, poly = to_poly(counts)
    return from_poly(low - k, poly * sympy.Poly((T + sign) ** k, T))


def normalise(counts):
    """Representative of ``counts`` up to multiplication by ``±t**k``.

    The result is centred (lowest exponent = -highest when the span is even,
    else starting at 0) and has a positive leading coefficient.
    """
    counts = clean(counts)
    if not counts:
        return {}
    low, high = min(counts), max(counts)
    shift = -((low + high) // 2) if (low + high) % 2 == 0 else -low
    sign = 1 if counts[high] > 0 else -1
    return {e + shift: sign * c for e, c in counts.items()}


def equal_up_to_unit(a, b):
    return normalise(a) == normalise(b)


def is_symmetric(counts):
    counts = clean(counts)
    return all(counts.get(-e) == c for e, c in counts.items())


def format_laurent(counts):
    counts = clean(counts)
    if not counts:
        return "0"
    return str(sympy.expand(to_expr(counts)))
