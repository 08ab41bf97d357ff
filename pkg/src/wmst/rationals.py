"""Exact rational weight values.

Weights are plain :class:`fractions.Fraction` objects, which already keep
lowest terms and a positive denominator.  This module only adds the parsing
and formatting conventions used by files and the command line: the canonical
serialized form is ``"num/den"``, and inputs may also be integer or decimal
literals (decimals convert exactly via a power-of-ten denominator).
"""

from __future__ import annotations

from fractions import Fraction

from .exceptions import BadParameter


def parse_fraction(text: str | int | Fraction) -> Fraction:
    """Parse ``"a/b"``, an integer literal, or a decimal literal, exactly."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise BadParameter(f"not an exact rational: {text!r}") from exc


def format_fraction(value: Fraction) -> str:
    """Canonical ``num/den`` form (always includes the denominator)."""
    return f"{value.numerator}/{value.denominator}"


def ensure_fraction(value, name: str = "value") -> Fraction:
    """Coerce ints and fraction strings; reject floats (no inexact mode)."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        return parse_fraction(value)
    raise BadParameter(f"{name} must be an exact rational, got {type(value).__name__}")
