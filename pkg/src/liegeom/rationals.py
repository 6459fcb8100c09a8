"""Exact rational scalars.

Every coefficient in this package is a fractions.Fraction, always stored
reduced with a positive denominator (Fraction guarantees both).  The
helpers here add the error contract and the canonical "p/q" string form
used by documents and reports.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ZeroDenominator

Q = Fraction

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/[+-]?\d+)?$")


def make_rational(numerator, denominator=1):
    """Build a reduced rational, rejecting a zero denominator.

    >>> make_rational(2, 4)
    Fraction(1, 2)
    >>> make_rational(3, -6)
    Fraction(-1, 2)
    """
    if denominator == 0:
        raise ZeroDenominator(f"zero denominator in {numerator}/{denominator}")
    return Fraction(numerator, denominator)


def parse_rational(text):
    """Parse "p" or "p/q" into a Fraction.  Whitespace is not allowed."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    if "/" in text:
        num, den = text.split("/")
        return make_rational(int(num), int(den))
    return Fraction(int(text))


def format_rational(value):
    """Canonical string form: "p" for integers, "p/q" otherwise."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
