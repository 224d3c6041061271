"""
Exact Rational Text Utilities

Conversion from gmpy2 mpq values to the "num/den" strings used in JSON
reports. The denominator is always written, so zero is "0/1" and two is
"2/1"; no float ever leaves.
"""

from typing import Dict, Iterable, Union

from gmpy2 import mpq  # type: ignore


def format_rational(value) -> str:
    """
    Format an exact rational as "num/den" in lowest terms.

    Args:
        value: mpq, int or anything mpq() accepts exactly

    Returns:
        String like "-5/12" or "0/1"
    """
    q = mpq(value)
    return f"{q.numerator}/{q.denominator}"


def rational_sum(values: Iterable) -> mpq:
    total = mpq(0)
    for v in values:
        total += v
    return total


def format_charge_map(charges: Dict[str, Union[mpq, int]]) -> Dict[str, str]:
    """Serialize an element -> charge map with every value as a "num/den" string."""
    return {key: format_rational(value) for key, value in charges.items()}


def pretty_rational(value) -> str:
    """Short human form for text reports: integers print without a denominator."""
    q = mpq(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
