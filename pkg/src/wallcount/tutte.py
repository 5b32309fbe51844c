"""Tutte polynomials of lattice path matroids.

For a boundary path P,

    t(P; z, y) = sum over sigma weakly below P of z^i(sigma) y^e(sigma)

where i(sigma) counts the N steps of sigma that run along an N edge of P
(same lattice edge, not merely the same step index) and e(sigma) counts
the E steps sigma takes before its own first N step. With these readings
appending a step obeys

    t(PN) = z t(P)
    (z - 1) t(PE) = z t(P) + ((z - 1) y - z) t(P; 1, y)

which :func:`verify_append_recursion` checks exactly.
"""

from __future__ import annotations

import os
from collections import defaultdict
from typing import Mapping

from .paths import LatticePath

__all__ = [
    "BivariatePolynomial",
    "tutte_polynomial",
    "verify_append_recursion",
    "max_path_length",
]

DEFAULT_MAX_PATH_LENGTH = 20


def max_path_length() -> int:
    """Path-length guard. WALLCOUNT_MAX_WIDTH, when set, allows paths of twice that width."""
    raw = os.environ.get("WALLCOUNT_MAX_WIDTH")
    return 2 * int(raw) if raw else DEFAULT_MAX_PATH_LENGTH


class BivariatePolynomial:
    """Integer polynomial in z and y, stored as {(z_deg, y_deg): coeff} without zeros."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        self._terms = {e: int(c) for e, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, c: int) -> "BivariatePolynomial":
        return cls({(0, 0): c})

    @classmethod
    def z(cls) -> "BivariatePolynomial":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePolynomial":
        return cls({(0, 1): 1})

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def _coerce(self, other):
        if isinstance(other, BivariatePolynomial):
            return other
        if isinstance(other, int):
            return BivariatePolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return BivariatePolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict = defaultdict(int)
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                out[a1 + a2, b1 + b2] += c1 * c2
        return BivariatePolynomial(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def evaluate(self, z, y):
        return sum(c * z**a * y**b for (a, b), c in self._terms.items())

    def at_z_one(self) -> "BivariatePolynomial":
        """t(1, y) as a polynomial in y alone."""
        out: dict = defaultdict(int)
        for (_, b), c in self._terms.items():
            out[0, b] += c
        return BivariatePolynomial(out)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self._terms.items(), key=lambda t: (-t[0][0], -t[0][1])):
            factors = []
            if c != 1 or (a == 0 and b == 0):
                factors.append(str(c))
            if a:
                factors.append("z" if a == 1 else f"z^{a}")
            if b:
                factors.append("y" if b == 1 else f"y^{b}")
            parts.append("·".join(factors))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"BivariatePolynomial({self})"


def _shift(poly: dict, da: int, db: int) -> dict:
    if not (da or db):
        return poly
    return {(a + da, b + db): c for (a, b), c in poly.items()}


def _accumulate(target: dict, poly: dict) -> None:
    for e, c in poly.items():
        target[e] = target.get(e, 0) + c


def tutte_polynomial(p: LatticePath) -> BivariatePolynomial:
    if len(p) > max_path_length():
        raise ValueError(f"path length {len(p)} exceeds guard {max_path_length()}")
    ceil = p.ceilings()
    floor = p.floors()
    width = len(ceil) - 1
    # state: (x, has taken an N step) -> polynomial; y is the step index minus x
    states: dict = {(0, False): {(0, 0): 1}}
    for j in range(len(p)):
        new: dict = {}
        for (x, seen_n), poly in states.items():
            y = j - x
            if y + 1 <= ceil[x]:
                key = (x, True)
                on_boundary = floor[x] <= y < ceil[x]
                _accumulate(new.setdefault(key, {}), _shift(poly, int(on_boundary), 0))
            if x + 1 <= width:
                key = (x + 1, seen_n)
                _accumulate(new.setdefault(key, {}), _shift(poly, 0, 0 if seen_n else 1))
        states = new
    total: dict = {}
    for (x, _), poly in states.items():
        if x == width:
            _accumulate(total, poly)
    return BivariatePolynomial(total)


def verify_append_recursion(p: LatticePath) -> bool:
    """Check the N- and E-append identities for t at the path p."""
    z, y = BivariatePolynomial.z(), BivariatePolynomial.y()
    t = tutte_polynomial(p)
    t_n = tutte_polynomial(p + LatticePath("N"))
    t_e = tutte_polynomial(p + LatticePath("E"))
    if t_n != z * t:
        return False
    return (z - 1) * t_e == z * t + ((z - 1) * y - z) * t.at_z_one()
