"""Exact rational scalars.

Every number in the library is a :class:`fractions.Fraction`.  The stdlib type
already keeps numerator/denominator reduced with a positive denominator, so
structural equality is value equality.  This module only adds the textual
syntax ``[-]p[/q]`` used by problem files and machine output.
"""

from __future__ import annotations

import re
from fractions import Fraction

Rational = Fraction

_RATIONAL_RE = re.compile(r"([+-]?)(\d+)(?:/(\d+))?")


class RationalParseError(ValueError):
    """Malformed rational literal.  ``position`` is the 0-based offending column."""

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.text = text
        self.position = position


def parse_rational(text: str) -> Fraction:
    """Parse ``[-]p[/q]`` into a reduced :class:`Fraction`.

    >>> parse_rational("-3/6")
    Fraction(-1, 2)
    """
    stripped = text.strip()
    offset = len(text) - len(text.lstrip())
    m = _RATIONAL_RE.fullmatch(stripped)
    if m is None:
        pos = _first_bad_column(stripped)
        raise RationalParseError("malformed rational", text, offset + pos)
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise RationalParseError("zero denominator", text, offset + m.start(3))
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign == "-" else value


def _first_bad_column(s: str) -> int:
    # Walk the grammar by hand just to report where it stops matching.
    i = 0
    if i < len(s) and s[i] in "+-":
        i += 1
    start = i
    while i < len(s) and s[i].isdigit():
        i += 1
    if i == start:
        return i
    if i < len(s) and s[i] == "/":
        i += 1
        start = i
        while i < len(s) and s[i].isdigit():
            i += 1
        if i == start:
            return i
    return i


def render_rational(r: Fraction, always_fraction: bool = False) -> str:
    """Inverse of :func:`parse_rational`.

    Integers print bare unless ``always_fraction`` is set, in which case the
    denominator is always written (``1/1``, ``0/1``).
    """
    r = Fraction(r)
    if r.denominator == 1 and not always_fraction:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and rational strings.  Floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")
