"""Exact rational helpers.

Everything numeric in the library is a :class:`fractions.Fraction`.  Decimal
strings are converted by place value, so ``"0.1"`` becomes ``1/10`` and not
the nearest binary double.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import ParseError

INF = math.inf

Rational = Union[int, Fraction]
RatioValue = Union[Fraction, float]  # float only ever holds +inf


def to_fraction(value) -> Fraction:
    """Convert ints, Fractions, decimal or ``p/q`` strings and floats exactly.

    Floats go through their shortest repr, so ``0.1`` maps to ``1/10``.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"non-finite value {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        return parse_rational(value)
    return Fraction(value)


def parse_rational(text: str, line: int | None = None) -> Fraction:
    text = text.strip()
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}", line) from None


def format_rational(value: RatioValue) -> str:
    if isinstance(value, float):
        if value == INF:
            return "inf"
        value = to_fraction(value)
    return str(value)


def format_decimal(value: RatioValue, digits: int = 12) -> str:
    """Decimal rendering with ``digits`` significant digits; ``inf`` for +inf."""
    if isinstance(value, float) and math.isinf(value):
        return "inf"
    return format(float(value), f".{digits}g")


def parse_rational_list(text: str) -> list[Fraction]:
    """Parse ``"0,1,1/2"`` (commas or whitespace) into Fractions."""
    parts = [p for p in text.replace(",", " ").split() if p]
    if not parts:
        raise ParseError("empty rational list")
    return [parse_rational(p) for p in parts]
