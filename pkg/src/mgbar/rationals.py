"""Exact rationals entered and printed as ``p/q`` strings."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

__all__ = ["Q", "format_q", "parse_q"]

_PQ = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_q(text: str) -> Fraction:
    """Parse ``"p/q"`` or an integer; decimals are rejected on purpose."""
    if not isinstance(text, str):
        raise TypeError(f"expected a 'p/q' string, got {type(text).__name__}")
    m = _PQ.match(text)
    if not m:
        raise ValueError(f"not a rational of the form p/q: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den else 1)


def format_q(x) -> str:
    """Canonical reduced form: ``"-3/2"``, ``"0"``, ``"13"``."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def Q(x) -> Fraction:
    """Coerce ints, Fractions and ``p/q`` strings; floats are refused."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_q(x)
    raise TypeError(f"refusing inexact value {x!r}; use a Fraction or 'p/q' string")
