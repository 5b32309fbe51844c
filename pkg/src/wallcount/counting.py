"""Closed-form counts: determinants and the first-touch recursion."""

from __future__ import annotations

from typing import Sequence

from .arith import binomial

__all__ = [
    "determinant",
    "kreweras_matrix",
    "kreweras_count",
    "fbar_partition",
    "fbar_determinant",
    "recursion_tables",
    "recursion_fbar",
]


def determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    Every division in the elimination is exact, so intermediates stay
    integral.
    """
    n = len(matrix)
    if n == 0:
        raise ValueError("matrix must have dimension >= 1")
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix must be square")
    a = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _check_dominates(upper: Sequence[int], lower: Sequence[int]) -> None:
    if len(upper) != len(lower):
        raise ValueError("partitions must have equal length")
    if any(b > a for a, b in zip(upper, lower)):
        raise ValueError(f"lower {tuple(lower)} is not below upper {tuple(upper)}")


def _binom0(n: int, k: int) -> int:
    # zero for a negative upper index as well
    return binomial(n, k) if n >= 0 else 0


def kreweras_matrix(upper: Sequence[int], lower: Sequence[int]) -> list[list[int]]:
    n = len(upper)
    return [
        [_binom0(upper[i] - lower[j] + 1, j - i + 1) for j in range(n)] for i in range(n)
    ]


def kreweras_count(upper: Sequence[int], lower: Sequence[int]) -> int:
    """Number of reverse partitions nu with lower <= nu <= upper."""
    upper, lower = tuple(upper), tuple(lower)
    _check_dominates(upper, lower)
    if not upper:
        return 1
    return determinant(kreweras_matrix(upper, lower))


def fbar_partition(m: int, n: int) -> list[int]:
    """Parts a_1..a_{nm-1}: m copies of h*m for h < n, then m-1 copies of m*n."""
    a = []
    for h in range(1, n):
        a.extend([h * m] * m)
    a.extend([m * n] * (m - 1))
    return a


def fbar_determinant(m: int, n: int) -> int:
    if m < 1 or n < 0:
        raise ValueError("need m >= 1 and n >= 0")
    if n == 0:
        return 1
    a = fbar_partition(m, n)
    if not a:
        return 1
    size = len(a)
    return determinant([[binomial(a[i] + 1, j - i + 1) for j in range(size)] for i in range(size)])


def recursion_tables(m: int, n: int) -> dict[tuple[int, int], int]:
    """g_t(i) for 1 <= t <= m, 1 <= i <= n, filled bottom-up in i."""
    g: dict[tuple[int, int], int] = {}
    for t in range(1, m + 1):
        g[t, 1] = binomial(m + t - 1, m)
    for i in range(2, n + 1):
        for t in range(1, m + 1):
            total = binomial(2 * m * i - m + t - 1, m * i)
            for j in range(1, i):
                d = i - j
                for r in range(1, m + 1):
                    total -= g[r, j] * binomial(2 * m * d + t - r - 1, m * d - 1)
            g[t, i] = total
    return g


def _fbar_from_tables(g: dict, m: int, n: int) -> int:
    total = binomial(2 * m * n - 1, m * n)
    for i in range(1, n):
        d = n - i
        for t in range(1, m + 1):
            total -= g[t, i] * binomial(2 * m * d + m - t - 1, m * d - 1)
    return total


def recursion_fbar(m: int, n: int) -> int:
    """fbar_m(n) from the first-touch inclusion-exclusion (m >= 2).

    Also checks g_m(i) = fbar_m(i) for every i <= n.
    """
    if m < 2:
        raise ValueError("the recursion needs m >= 2")
    if n < 1:
        raise ValueError("the recursion needs n >= 1")
    g = recursion_tables(m, n)
    for i in range(1, n + 1):
        f = _fbar_from_tables(g, m, i)
        if g[m, i] != f:
            raise ArithmeticError(f"g_m({i}) = {g[m, i]} disagrees with fbar = {f}")
    return f
