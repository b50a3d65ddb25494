"""
Exact rational scalars.

Every scalar in the toolkit is a ``fractions.Fraction``. This module owns the
text form used by documents and reports ("p" or "p/q", always reduced) and the
coercion rules for values coming from code (ints, Fractions, strings).
"""

import re
from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction, str]

_RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


class RationalParseError(ValueError):
    """Raised when a rational literal cannot be parsed exactly."""

    def __init__(self, text: str, reason: str):
        self.text = text
        self.reason = reason
        super().__init__(f"Invalid rational literal {text!r}: {reason}")


def parse_rational(text: str) -> Fraction:
    """
    Parse a rational literal of the form "p" or "p/q".

    Args:
        text: The literal, e.g. "3", "-1/2", "4/6"

    Returns:
        Fraction: The value, reduced to lowest terms

    Raises:
        RationalParseError: On malformed text or a zero denominator
    """
    if not isinstance(text, str):
        raise RationalParseError(repr(text), "expected a string literal")

    match = _RATIONAL_PATTERN.match(text)
    if match is None:
        raise RationalParseError(text, "expected 'p' or 'p/q' with integer p, q")

    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise RationalParseError(text, "zero denominator")

    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Canonical text form: "p" for integers, "p/q" otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def to_fraction(value: RationalLike) -> Fraction:
    """
    Coerce an int, Fraction or rational literal to a Fraction.

    Floats are refused.
    """
    if isinstance(value, bool):
        raise TypeError("Booleans are not rational scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"Cannot use {type(value).__name__} as an exact rational")
