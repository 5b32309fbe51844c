"""Truncated formal power series over the rationals.

A :class:`TruncatedSeries` knows its coefficients of x^0..x^N exactly and
nothing above x^N. Every binary operation truncates to the smaller order of
its operands, so a result never claims a coefficient that one of its inputs
did not determine.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Optional

from .arith import as_rational

__all__ = [
    "TruncatedSeries",
    "NonInvertibleSeriesError",
    "add",
    "sub",
    "mul",
    "div",
    "exp",
    "log",
    "multisect",
]


class NonInvertibleSeriesError(ZeroDivisionError):
    pass


class TruncatedSeries:
    """Coefficients c_0..c_N of a power series, exact up to x^N.

    ``==`` is structural: same order and same coefficients. To compare two
    series only up to the smaller order use :meth:`agrees` or
    :meth:`first_mismatch`.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coefficients: Iterable, order: Optional[int] = None):
        coeffs = [as_rational(c) for c in coefficients]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(coeffs) > order + 1:
            del coeffs[order + 1:]
        else:
            # the caller asserts the missing terms are exactly zero
            coeffs.extend([Fraction(0)] * (order + 1 - len(coeffs)))
        self._coeffs = tuple(coeffs)

    # construction helpers

    @classmethod
    def zero(cls, order: int) -> "TruncatedSeries":
        return cls([], order)

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls([1], order)

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def monomial(cls, degree: int, order: int, coefficient=1) -> "TruncatedSeries":
        if degree > order:
            return cls.zero(order)
        return cls([0] * degree + [coefficient], order)

    @classmethod
    def from_function(cls, f: Callable[[int], object], order: int) -> "TruncatedSeries":
        return cls([f(n) for n in range(order + 1)], order)

    # basic accessors

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coefficients(self) -> tuple:
        return self._coeffs

    def __getitem__(self, n: int) -> Fraction:
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise IndexError(f"coefficient x^{n} is beyond truncation order {self.order}")
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def valuation(self) -> Optional[int]:
        """Index of the first nonzero coefficient, None if all known ones vanish."""
        for i, c in enumerate(self._coeffs):
            if c:
                return i
        return None

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self._coeffs)

    def integers(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("series has non-integer coefficients")
        return [c.numerator for c in self._coeffs]

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot raise truncation order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[: order + 1], order)

    # comparison

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def first_mismatch(self, other: "TruncatedSeries") -> Optional[int]:
        """Lowest index (up to the common order) where the two differ."""
        for i in range(min(self.order, other.order) + 1):
            if self._coeffs[i] != other._coeffs[i]:
                return i
        return None

    def agrees(self, other: "TruncatedSeries") -> bool:
        return self.first_mismatch(other) is None

    # ring operations

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries.constant(other, self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = min(self.order, other.order)
        return TruncatedSeries([self._coeffs[i] + other._coeffs[i] for i in range(n + 1)], n)

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self._coeffs], self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return TruncatedSeries([c * a for a in self._coeffs], self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.order, other.order)
        a, b = self._coeffs, other._coeffs
        out = []
        for i in range(n + 1):
            s = Fraction(0)
            for j in range(i + 1):
                if a[j] and b[i - j]:
                    s += a[j] * b[i - j]
            out.append(s)
        return TruncatedSeries(out, n)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TruncatedSeries":
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = TruncatedSeries.one(self.order)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("division of a series by zero")
            return self * (1 / Fraction(other))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return div(self, other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return div(other, self)

    # shifts

    def shift_down(self, v: int) -> "TruncatedSeries":
        """Divide by x^v; the first v coefficients must vanish."""
        if v < 0:
            raise ValueError("shift must be non-negative")
        if any(self._coeffs[:v]):
            raise NonInvertibleSeriesError(f"series is not divisible by x^{v}")
        if v > self.order:
            raise ValueError(f"shift {v} exceeds truncation order {self.order}")
        return TruncatedSeries(self._coeffs[v:], self.order - v)

    def shift_up(self, v: int) -> "TruncatedSeries":
        """Multiply by x^v (known coefficients move up with the order)."""
        return TruncatedSeries([0] * v + list(self._coeffs), self.order + v)

    # transcendental operations

    def exp(self) -> "TruncatedSeries":
        return exp(self)

    def log(self) -> "TruncatedSeries":
        return log(self)

    def multisect(self, m: int) -> "TruncatedSeries":
        return multisect(self, m)

    # serialization

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coefficients": [
                {"num": str(c.numerator), "den": str(c.denominator)} for c in self._coeffs
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        coeffs = [Fraction(int(c["num"]), int(c["den"])) for c in data["coefficients"]]
        order = int(data["order"])
        if len(coeffs) != order + 1:
            raise ValueError("coefficient count does not match order")
        return cls(coeffs, order)

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self._coeffs):
            if not c:
                continue
            cs = str(c)
            if i == 0:
                terms.append(cs)
            else:
                coef = "" if c == 1 else ("-" if c == -1 else f"{cs}*")
                terms.append(f"{coef}x" + (f"^{i}" if i > 1 else ""))
        body = " + ".join(terms) if terms else "0"
        return f"TruncatedSeries({body} + O(x^{self.order + 1}))"


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a - b


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b


def div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Series quotient a/b.

    If b starts at x^v with v > 0, both operands are first divided by x^v
    (the order drops by v); that needs a to vanish below x^v as well.
    """
    v = b.valuation()
    if v is None:
        raise NonInvertibleSeriesError("divisor vanishes to its truncation order")
    if v:
        if any(a.coefficients[:v]):
            raise NonInvertibleSeriesError(
                "divisor has zero constant term but dividend does not"
            )
        a, b = a.shift_down(v), b.shift_down(v)
    n = min(a.order, b.order)
    ac, bc = a.coefficients, b.coefficients
    inv_b0 = 1 / bc[0]
    out: list[Fraction] = []
    for i in range(n + 1):
        s = ac[i]
        for j in range(1, i + 1):
            if bc[j]:
                s -= bc[j] * out[i - j]
        out.append(s * inv_b0)
    return TruncatedSeries(out, n)


def exp(s: TruncatedSeries) -> TruncatedSeries:
    """exp(s) for s(0) = 0, via n*r_n = sum_{j=1..n} j*s_j*r_{n-j}."""
    if s[0] != 0:
        raise ValueError("exp needs a series with zero constant term")
    c = s.coefficients
    r = [Fraction(1)]
    for n in range(1, s.order + 1):
        acc = Fraction(0)
        for j in range(1, n + 1):
            if c[j]:
                acc += j * c[j] * r[n - j]
        r.append(acc / n)
    return TruncatedSeries(r, s.order)


def log(s: TruncatedSeries) -> TruncatedSeries:
    """log(s) for s(0) = 1, solving s' = s * log(s)' coefficientwise."""
    if s[0] != 1:
        raise ValueError("log needs a series with constant term 1")
    f = s.coefficients
    out = [Fraction(0)]
    for n in range(1, s.order + 1):
        acc = n * f[n]
        for j in range(1, n):
            if out[j] and f[n - j]:
                acc -= j * out[j] * f[n - j]
        out.append(acc / n)
    return TruncatedSeries(out, s.order)


def multisect(s: TruncatedSeries, m: int) -> TruncatedSeries:
    """Series whose x^j coefficient is the x^(m*j) coefficient of s."""
    if m < 1:
        raise ValueError("multisection step must be >= 1")
    return TruncatedSeries(s.coefficients[::m], s.order // m)
