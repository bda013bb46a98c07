"""
Exact rational parameters and Pochhammer symbols.
"""
import math
import re
from fractions import Fraction
from numbers import Rational

from bergman_core.core.exceptions import IrrationalParameter, SchemaViolation

RATIONAL_PATTERN = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    """
    Parse an exact "a/b" (or integer) string. Decimal notation is refused.
    """
    match = RATIONAL_PATTERN.match(str(text))
    if match is None:
        raise SchemaViolation(
            f"'{text}' is not an exact rational; write it as 'a/b'.",
            details={"value": str(text)},
        )
    numerator, denominator = match.groups()
    if denominator is not None and int(denominator) == 0:
        raise SchemaViolation(f"'{text}' has a zero denominator.", details={"value": str(text)})
    return Fraction(int(numerator), int(denominator or 1))


def as_rational(value, name: str = "value") -> Fraction:
    """
    Coerce ``value`` to a Fraction without rounding.

    Ints, Fractions and "a/b" strings are accepted; floats are refused.
    """
    if isinstance(value, bool):
        raise IrrationalParameter(f"{name} must be rational, got a boolean.")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise IrrationalParameter(
        f"{name} must be an exact rational, got {value!r}.",
        details={"parameter": name, "value": repr(value)},
    )


def format_rational(value: Fraction) -> str:
    """Render a Fraction as "a/b", or "a" when integral."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def pochhammer(x, l: int):
    """
    Rising factorial (x)_l = x(x+1)...(x+l-1).

    The result has the numeric kind of ``x``: Fractions stay exact, floats and
    mpmath numbers stay in their precision.
    """
    if l < 0:
        raise ValueError("Pochhammer length must be non-negative.")
    return math.prod((x + i for i in range(l)), start=x * 0 + 1)


def generalized_binomial(x, v: int):
    """binom(x, v) = x(x-1)...(x-v+1) / v! for any x, exact when x is rational."""
    return pochhammer(x - v + 1, v) / math.factorial(v)


def factorial_ratio(total: int, parts) -> int:
    """Multinomial coefficient total! / prod(part!)."""
    return math.factorial(total) // math.prod(math.factorial(p) for p in parts)
