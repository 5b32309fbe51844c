"""Exact integer/rational scalars and the binomial family.

Python ``int`` is the arbitrary-precision integer and
:class:`fractions.Fraction` the rational; both are immutable and a
``Fraction`` is always kept in lowest terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

__all__ = [
    "Fraction",
    "binomial",
    "binomial_general",
    "catalan",
    "is_integral",
    "as_rational",
]


def binomial(n: int, k: int) -> int:
    """n choose k, zero when k lies outside 0..n.

    Raises ValueError for n < 0.
    """
    if n < 0:
        raise ValueError(f"binomial: negative upper index {n}")
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def binomial_general(n: int, k: int) -> int:
    """Binomial with arbitrary integer upper index, n(n-1)...(n-k+1)/k!.

    Zero for k < 0. For n < 0 this is (-1)^k * C(k - n - 1, k), the
    coefficient of t^k in (1 + t)^n.
    """
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k) if k <= n else 0
    return (-1) ** k * comb(k - n - 1, k)


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError(f"catalan: negative index {n}")
    return comb(2 * n, n) // (n + 1)


def is_integral(q) -> bool:
    if isinstance(q, int):
        return True
    return Fraction(q).denominator == 1


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction.

    Floats are refused: a float has already lost exactness.
    """
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, Fraction or string")
    return Fraction(value)
