"""
Rational numbers for exact computations.

The rational type is ``fractions.Fraction``: arbitrary precision, always
reduced (gcd(|p|, q) = 1, q ≥ 1). This module only adds the "p/q" text
format used by model files and reports.
"""

import re
from fractions import Fraction
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parse an exact rational.

    Args:
        value: An int, a Fraction, or a decimal-free string "p/q" or "p"

    Returns:
        Fraction: The parsed value

    Raises:
        ValueError: On decimals ("0.5"), zero denominators or garbage

    Example:
        parse_rational("-3/6") -> Fraction(-1, 2)
    """
    if isinstance(value, bool):
        raise ValueError(f"not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValueError(f"not a rational: {value!r}")
    match = _RATIONAL_PATTERN.match(value)
    if not match:
        raise ValueError(f"not a decimal-free rational 'p/q': {value!r}")
    numerator, denominator = match.group(1), match.group(2)
    if denominator is not None and int(denominator) == 0:
        raise ValueError(f"zero denominator in {value!r}")
    return Fraction(int(numerator), int(denominator) if denominator else 1)


def format_rational(value: Fraction) -> str:
    """Render as "p/q" (denominator always present)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"
