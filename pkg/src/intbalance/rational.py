"""Exact rational weights.

All weight arithmetic in this package is exact: whether a value is an
integer must be a decidable question, and the termination argument of the
cycle-elimination loop needs bit-exact equality.  `fractions.Fraction`
already provides canonical-form arbitrary-precision rationals
(gcd(numerator, denominator) == 1, denominator > 0 after every operation),
so it is used directly as the `Rational` type.  Floats are rejected at
every API boundary: a float has already lost the integrality information.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import GraphInputError

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

# Weight grammar: INT | INT "." DIGITS | INT "/" POSINT
# No exponent form, no locale separators.
_WEIGHT_RE = re.compile(r"\A(-?\d+)(?:\.(\d+)|/(\d+))?\Z")


def add(a: Fraction, b: Fraction) -> Fraction:
    """Exact sum, canonical form."""
    return a + b


def sub(a: Fraction, b: Fraction) -> Fraction:
    """Exact difference; may be negative (callers enforce nonnegativity)."""
    return a - b


def floor(a: Fraction) -> int:
    """Greatest integer <= a."""
    return math.floor(a)


def decimal_part(a: Fraction) -> Fraction:
    """a - floor(a), in [0, 1); zero exactly when a is an integer."""
    return a - math.floor(a)


def is_decimal(a: Fraction) -> bool:
    """True iff a is not an integer (denominator != 1 in canonical form)."""
    return a.denominator != 1


def ensure_rational(value) -> Fraction:
    """Accept int or Fraction; reject floats and anything else."""
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise GraphInputError(
            f"weights must be int or Fraction, got {type(value).__name__}; "
            "parse text with parse_weight() for exact values"
        )
    return Fraction(value)


def parse_weight(text: str) -> Fraction:
    """Parse an integer, finite decimal, or p/q literal to an exact rational.

    "2.75" becomes 11/4 with no float round-trip.  Raises GraphInputError
    on malformed text or a zero denominator; sign checks are the caller's.
    """
    m = _WEIGHT_RE.match(text.strip())
    if m is None:
        raise GraphInputError(f"malformed weight {text!r}")
    int_part, dec_digits, denom = m.groups()
    if dec_digits is not None:
        magnitude = Fraction(abs(int(int_part))) + Fraction(
            int(dec_digits), 10 ** len(dec_digits)
        )
        return -magnitude if int_part.startswith("-") else magnitude
    if denom is not None:
        q = int(denom)
        if q == 0:
            raise GraphInputError(f"zero denominator in weight {text!r}")
        return Fraction(int(int_part), q)
    return Fraction(int(int_part))


def format_weight(a: Fraction) -> str:
    """Canonical text form: bare integer, or "p/q" when fractional."""
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"
