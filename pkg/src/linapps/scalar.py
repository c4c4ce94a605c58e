"""Exact rational scalars.

Scalars are plain :class:`fractions.Fraction` values, which are always stored
reduced with a positive denominator.  This module adds the strict text parser
and the two textual renderings used throughout the package.
"""

import re
from fractions import Fraction
from numbers import Rational

from .errors import ParseError

_DECIMAL = re.compile(r"[+-]?\d+(\.\d+)?")
_RATIO = re.compile(r"([+-]?\d+)/([+-]?\d+)")


def parse_scalar(text: str) -> Fraction:
    """Parse ``"10.1"``, ``"-0.5"`` or ``"2/3"`` into an exact Fraction.

    Decimal strings go straight to a base-10 fraction, so ``"10.1"`` is
    exactly 101/10.  A zero denominator raises ZeroDivisionError.
    """
    s = text.strip()
    if _DECIMAL.fullmatch(s):
        return Fraction(s)
    m = _RATIO.fullmatch(s)
    if m:
        den = int(m.group(2))
        if den == 0:
            raise ZeroDivisionError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), den)
    raise ParseError(f"malformed number {text!r}")


def as_scalar(value):
    """Coerce ints, Fractions and numeric strings to Fraction.

    Floats pass through unchanged: they mark a deliberately approximate value.
    """
    if isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    if isinstance(value, float):
        return value
    raise TypeError(f"cannot use {type(value).__name__} as a scalar")


def format_scalar(x) -> str:
    """Canonical text: ``p/q`` when q != 1, else ``p``.  Floats use repr."""
    if isinstance(x, float):
        return repr(x)
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_decimal(x, places: int = 2) -> str:
    """Decimal rendering rounded half-to-even at ``places`` digits."""
    if places < 0:
        raise ValueError("places must be >= 0")
    if isinstance(x, float):
        x = Fraction(x)
    # Fraction.__round__ rounds half to even
    n = round(Fraction(x) * 10**places)
    sign = "-" if n < 0 else ""
    digits = str(abs(n)).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"
