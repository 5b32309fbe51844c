"""Generating functions for the staircase path counts via the kernel roots.

The kernel (w - 1)^l - x w^(k+l) has exactly l roots w_1..w_l that are
fractional power series with w_i(0) = 1. None of them is an ordinary power
series in general, but their symmetric functions are, and those are all we
ever build. The entry point is the closed form for the power sums of the
shifted roots u_i = w_i - 1::

    p_m(u) = m * sum_{n>=1} C(kn + ln, ln - m) x^n / n

Newton's identities turn these into the elementary symmetric series e_j(u),
and expanding prod(1 + t(1 + u_i)) gives e_j(w).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .arith import binomial, binomial_general, catalan
from .paths import f_r_count, q_count
from .series import TruncatedSeries, exp, log, multisect

__all__ = [
    "catalan_series",
    "power_sum_u",
    "RootSymmetrics",
    "build_root_symmetrics",
    "elementary_from_power_sums",
    "power_sums_from_elementary",
    "fr_series",
    "q_series_exp",
    "q_series_roots",
    "f1_series_exp",
    "fbar_series_exp",
    "fbar_series_multisection",
    "fbar_series",
    "CheckResult",
    "identity_suite",
    "binomial_lemma_checks",
    "CrossCheckError",
]


class CrossCheckError(ArithmeticError):
    """Two routes that must agree produced different coefficients."""


def catalan_series(order: int) -> TruncatedSeries:
    return TruncatedSeries([catalan(n) for n in range(order + 1)], order)


def power_sum_u(k: int, ell: int, m: int, order: int) -> TruncatedSeries:
    """p_m(w_1 - 1, ..., w_l - 1) to the given order."""
    if m < 1:
        raise ValueError("power sum index must be >= 1")
    coeffs = [Fraction(0)]
    for n in range(1, order + 1):
        coeffs.append(Fraction(m * binomial(k * n + ell * n, ell * n - m), n))
    return TruncatedSeries(coeffs, order)


def elementary_from_power_sums(p: Sequence[TruncatedSeries], count: int) -> list[TruncatedSeries]:
    """e_0..e_count from p_1..p_count (``p[i]`` is p_i; ``p[0]`` is ignored).

    j e_j = sum_{i=1..j} (-1)^(i-1) e_{j-i} p_i
    """
    order = min(s.order for s in p[1 : count + 1]) if count else 0
    e = [TruncatedSeries.one(order)]
    for j in range(1, count + 1):
        acc = TruncatedSeries.zero(order)
        for i in range(1, j + 1):
            term = e[j - i] * p[i]
            acc = acc + term if i % 2 else acc - term
        e.append(acc / j)
    return e


def power_sums_from_elementary(e: Sequence[TruncatedSeries], count: int) -> list[Optional[TruncatedSeries]]:
    """p_1..p_count from e_0..e_d (e_j = 0 for j > d); index 0 of the result is None.

    p_m = sum_{i=1..m-1} (-1)^(i-1) e_i p_{m-i} + (-1)^(m-1) m e_m
    """
    d = len(e) - 1
    order = min(s.order for s in e)
    p: list[Optional[TruncatedSeries]] = [None]
    for m in range(1, count + 1):
        acc = TruncatedSeries.zero(order)
        if m <= d:
            acc = e[m] * m if m % 2 else -(e[m] * m)
        for i in range(1, min(m - 1, d) + 1):
            term = e[i] * p[m - i]
            acc = acc + term if i % 2 else acc - term
        p.append(acc)
    return p


@dataclass(frozen=True)
class RootSymmetrics:
    """Symmetric-function series of the l power-series kernel roots."""

    k: int
    ell: int
    order: int
    p_u: tuple  # p_u[m] for m = 1..ell; p_u[0] is None
    e_u: tuple  # e_u[0..ell]
    e_w: tuple  # e_w[0..ell]

    def newton_holds(self) -> bool:
        for j in range(1, self.ell + 1):
            rhs = TruncatedSeries.zero(self.order)
            for i in range(1, j + 1):
                term = self.e_u[j - i] * self.p_u[i]
                rhs = rhs + term if i % 2 else rhs - term
            if self.e_u[j] * j != rhs:
                return False
        return True

    def product_one_minus_w(self) -> TruncatedSeries:
        """prod_i (1 - w_i) = sum_j (-1)^j e_j(w)."""
        acc = TruncatedSeries.zero(self.order)
        for j, e in enumerate(self.e_w):
            acc = acc + e if j % 2 == 0 else acc - e
        return acc

    def elementary_one_minus_w(self, j: int) -> TruncatedSeries:
        """e_j(1 - w_1, ..., 1 - w_l) = sum_i (-1)^i C(l - i, j - i) e_i(w)."""
        acc = TruncatedSeries.zero(self.order)
        for i in range(0, j + 1):
            c = (-1) ** i * binomial(self.ell - i, j - i)
            if c:
                acc = acc + self.e_w[i] * c
        return acc


def build_root_symmetrics(k: int, ell: int, order: int) -> RootSymmetrics:
    if k < 1 or ell < 1:
        raise ValueError("k and l must be positive")
    if order < 0:
        raise ValueError("order must be >= 0")
    p_u = [None] + [power_sum_u(k, ell, m, order) for m in range(1, ell + 1)]
    e_u = elementary_from_power_sums(p_u, ell)
    # prod(1 + t w_i) = sum_i e_i(u) t^i (1 + t)^(l - i)
    e_w = []
    for j in range(ell + 1):
        acc = TruncatedSeries.zero(order)
        for i in range(j + 1):
            acc = acc + e_u[i] * binomial(ell - i, j - i)
        e_w.append(acc)
    return RootSymmetrics(k, ell, order, tuple(p_u), tuple(e_u), tuple(e_w))


def _fr_from_symmetrics(sym: RootSymmetrics, r: int) -> TruncatedSeries:
    ell = sym.ell
    acc = TruncatedSeries.zero(sym.order)
    for i in range(r):
        term = sym.e_w[ell - r + 1 + i] * binomial(ell - r + i, i)
        acc = acc + term if i % 2 == 0 else acc - term
    return acc


def fr_series(k: int, ell: int, r: int, order: int) -> TruncatedSeries:
    """F_r(x) = sum_{i<r} (-1)^i C(l - r + i, i) e_{l-r+1+i}(w)."""
    if not 1 <= r <= ell:
        raise ValueError(f"r must lie in 1..{ell}, got {r}")
    return _fr_from_symmetrics(build_root_symmetrics(k, ell, order), r)


def _exp_of_sum(coef: Callable[[int], int], order: int) -> TruncatedSeries:
    s = TruncatedSeries([0] + [Fraction(coef(n), n) for n in range(1, order + 1)], order)
    return exp(s)


def q_series_exp(k: int, ell: int, order: int) -> TruncatedSeries:
    """Q(x) = exp(sum C(kn + ln, ln) x^n / n)."""
    return _exp_of_sum(lambda n: binomial(k * n + ell * n, ell * n), order)


def q_series_roots(k: int, ell: int, order: int) -> TruncatedSeries:
    """Q(x) = (F_l(x) - 1) / x."""
    return (fr_series(k, ell, ell, order + 1) - 1).shift_down(1)


def f1_series_exp(k: int, ell: int, order: int) -> TruncatedSeries:
    """F_1(x) = exp(sum C(kn + ln - 1, ln - 1) x^n / n)."""
    return _exp_of_sum(lambda n: binomial(k * n + ell * n - 1, ell * n - 1), order)


def fbar_series_exp(m: int, order: int) -> TruncatedSeries:
    return f1_series_exp(m, m, order)


def fbar_series_multisection(m: int, order: int) -> TruncatedSeries:
    """prod_{j=1..m} C(xi^j t) with t^m = x, as exp(m * multisect(log C, m))."""
    if m < 1:
        raise ValueError("m must be >= 1")
    log_c = log(catalan_series(m * order))
    return exp(multisect(log_c, m) * m)


def fbar_series(m: int, order: int) -> TruncatedSeries:
    """Generating function of the periodic-wall tableau counts.

    Computed from the exponential formula and from the root-of-unity
    product; raises CrossCheckError if the two disagree.
    """
    a = fbar_series_exp(m, order)
    b = fbar_series_multisection(m, order)
    bad = a.first_mismatch(b)
    if bad is not None:
        raise CrossCheckError(f"fbar_{m}: exp and multisection routes differ at x^{bad}")
    return a


@dataclass
class CheckResult:
    identity: str
    params: dict
    status: str  # "pass", "fail" or "skipped"
    first_mismatch_order: Optional[int] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "status": self.status,
            "first_mismatch_order": self.first_mismatch_order,
        }

    def line(self) -> str:
        ps = ",".join(f"{k}={v}" for k, v in self.params.items())
        tail = ""
        if self.first_mismatch_order is not None:
            tail = f" (first mismatch at x^{self.first_mismatch_order})"
        elif self.detail:
            tail = f" ({self.detail})"
        return f"{self.status.upper():7} {self.identity} [{ps}]{tail}"


def _compare(name: str, params: dict, *series: TruncatedSeries) -> CheckResult:
    first = None
    for other in series[1:]:
        bad = series[0].first_mismatch(other)
        if bad is not None and (first is None or bad < first):
            first = bad
    return CheckResult(name, params, "pass" if first is None else "fail", first)


def _count_series(fn: Callable[[int], int], order: int) -> TruncatedSeries:
    return TruncatedSeries([fn(n) for n in range(order + 1)], order)


def _reciprocal_power_sums_all_roots(k: int, ell: int, order: int, count: int):
    """p_m(1/w_1, ..., 1/w_{k+l}) for m = 1..count.

    The reciprocals are the roots of v^k (1 - v)^l - x, whose leading
    coefficient (-1)^l is a unit.
    """
    d = k + ell
    coeffs = [TruncatedSeries.zero(order) for _ in range(d + 1)]
    for j in range(ell + 1):
        coeffs[k + j] = TruncatedSeries.constant((-1) ** j * binomial(ell, j), order)
    coeffs[0] = coeffs[0] - TruncatedSeries.monomial(1, order)
    lead = coeffs[d]
    e = [coeffs[d - j] / lead * (-1) ** j for j in range(d + 1)]
    return power_sums_from_elementary(e, count)


def _reciprocal_power_sums_small_roots(sym: RootSymmetrics, count: int):
    """p_m(1/w_1, ..., 1/w_l) using e_j(1/w) = e_{l-j}(w) / e_l(w)."""
    ell = sym.ell
    e = [sym.e_w[ell - j] / sym.e_w[ell] for j in range(ell + 1)]
    return power_sums_from_elementary(e, count)


def _conjugate_power_sum_closed(k: int, ell: int, m: int, order: int) -> TruncatedSeries:
    coeffs = [Fraction(0)]
    for n in range(1, order + 1):
        if k * n < m or k * n + ell * n < m + 1:
            coeffs.append(Fraction(0))
        else:
            coeffs.append(Fraction(m * binomial(ell * n + k * n - m - 1, k * n - m), n))
    return TruncatedSeries(coeffs, order)


def identity_suite(
    k: int, ell: int, order: int, m_max: Optional[int] = None, with_counts: bool = True
) -> list[CheckResult]:
    """Coefficientwise checks of the closed forms built from the kernel roots.

    q-identity:       Q from the exponential formula = (F_l - 1)/x = -prod(1 - w_i)/x
    f1-product:       exponential F_1 = e_l(w)
    f2-form:          (1 - l + sum 1/w_j) prod w_j = e_{l-1} - (l-1) e_l = F_2
    f_{l-1}-form:     1 + (l - 1 - sum 1/(1 - w_i)) prod(1 - w_i) = F_{l-1}
    conjugate-sums:   p_m(1/w_{l+1}, ..., 1/w_{l+k}) against its binomial series

    With ``with_counts`` the F_r forms are also compared with the path DP.
    """
    params = {"k": k, "l": ell, "order": order}
    sym = build_root_symmetrics(k, ell, order + 1)
    results = []

    q_exp = q_series_exp(k, ell, order)
    q_roots = (_fr_from_symmetrics(sym, ell) - 1).shift_down(1)
    q_prod = (-sym.product_one_minus_w()).shift_down(1)
    series = [q_exp, q_roots, q_prod]
    if with_counts:
        series.append(_count_series(lambda n: q_count(k, ell, n), order))
    results.append(_compare("q-identity", params, *series))

    sym_n = build_root_symmetrics(k, ell, order)
    f1 = [f1_series_exp(k, ell, order), sym_n.e_w[ell], _fr_from_symmetrics(sym_n, 1)]
    if with_counts:
        f1.append(_count_series(lambda n: f_r_count(k, ell, 1, n), order))
    results.append(_compare("f1-product", params, *f1))

    if ell >= 2:
        f2_form = sym_n.e_w[ell - 1] - sym_n.e_w[ell] * (ell - 1)
        f2 = [f2_form, _fr_from_symmetrics(sym_n, 2)]
        if with_counts:
            f2.append(_count_series(lambda n: f_r_count(k, ell, 2, n), order))
        results.append(_compare("f2-form", params, *f2))

        # sum_j prod_{i != j}(1 - w_i) = e_{l-1}(1 - w)
        fl1_form = (
            1
            + sym_n.product_one_minus_w() * (ell - 1)
            - sym_n.elementary_one_minus_w(ell - 1)
        )
        fl1 = [fl1_form, _fr_from_symmetrics(sym_n, ell - 1)]
        if with_counts:
            fl1.append(_count_series(lambda n: f_r_count(k, ell, ell - 1, n), order))
        results.append(_compare("f_{l-1}-form", params, *fl1))
    else:
        for name in ("f2-form", "f_{l-1}-form"):
            results.append(CheckResult(name, params, "skipped", detail="needs l >= 2"))

    if m_max is None:
        m_max = k + ell + 2
    all_roots = _reciprocal_power_sums_all_roots(k, ell, order, m_max)
    small_roots = _reciprocal_power_sums_small_roots(sym_n, m_max)
    first = None
    for m in range(1, m_max + 1):
        lhs = all_roots[m] - small_roots[m]
        bad = lhs.first_mismatch(_conjugate_power_sum_closed(k, ell, m, order))
        if bad is not None and (first is None or bad < first):
            first = bad
    results.append(
        CheckResult(
            "conjugate-sums",
            dict(params, m_max=m_max),
            "pass" if first is None else "fail",
            first,
        )
    )
    return results


def _lemma_alternating(ell: int, r: int, j: int) -> bool:
    lhs = sum(
        (-1) ** (j + r + m + 1) * binomial_general(ell - j, r - 1 - m - j)
        for m in range(r - j)
    )
    return lhs == (-1) ** (r - j - 1) * binomial_general(ell - j - 1, r - j - 1)


def _lemma_weighted(ell: int, r: int, j: int, i: int) -> bool:
    lhs = sum(
        (-1) ** (r + m + i + j)
        * binomial_general(ell - j, r - 1 - m - j)
        * binomial_general(m + ell, i + ell)
        for m in range(i, r - j)
    )
    return lhs == (-1) ** (i - 1) * binomial_general(r - 1, i + j)


def _lemma_weighted_base(ell: int, r: int, j: int) -> bool:
    lhs = sum(
        (-1) ** (j + r + m)
        * binomial_general(ell - j, r - 1 - m - j)
        * binomial_general(m + ell, ell)
        for m in range(r - j)
    )
    return lhs == -binomial_general(r - 1, j)


def binomial_lemma_checks(bound: int) -> list[CheckResult]:
    """Exhaust the three finite binomial sums over 0 <= l, 1 <= r <= bound,
    0 <= j <= l with j < r (and 0 <= i <= r - 1 - j for the weighted one).

    Binomials use the general upper-index convention, which the j = l
    boundary needs (C(-1, t) = (-1)^t).
    """
    tallies = {
        "alternating-sum": [0, None],
        "weighted-alternating-sum": [0, None],
        "weighted-alternating-sum-i0": [0, None],
    }

    def record(name, ok, args):
        tallies[name][0] += 1
        if not ok and tallies[name][1] is None:
            tallies[name][1] = args

    for ell in range(0, bound + 1):
        for r in range(1, bound + 1):
            for j in range(0, min(ell, r - 1) + 1):
                record("alternating-sum", _lemma_alternating(ell, r, j), (ell, r, j))
                record("weighted-alternating-sum-i0", _lemma_weighted_base(ell, r, j), (ell, r, j))
                for i in range(0, r - j):
                    record("weighted-alternating-sum", _lemma_weighted(ell, r, j, i), (ell, r, j, i))

    out = []
    for name, (count, failure) in tallies.items():
        detail = f"{count} tuples" if failure is None else f"fails at {failure}"
        out.append(
            CheckResult(name, {"bound": bound}, "pass" if failure is None else "fail", None, detail)
        )
    return out
