import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from wallcount.arith import binomial, catalan
from wallcount.counting import (
    determinant,
    fbar_determinant,
    fbar_partition,
    kreweras_count,
    recursion_fbar,
    recursion_tables,
)
from wallcount.paths import fbar_count


def cofactor_det(a):
    if len(a) == 1:
        return a[0][0]
    return sum(
        (-1) ** j * a[0][j] * cofactor_det([row[:j] + row[j + 1 :] for row in a[1:]])
        for j in range(len(a))
    )


def weakly_increasing(n, top):
    return [p for p in product(range(top + 1), repeat=n) if list(p) == sorted(p)]


def brute_between(upper, lower):
    ranges = [range(b, a + 1) for a, b in zip(upper, lower)]
    return sum(1 for nu in product(*ranges) if list(nu) == sorted(nu))


def test_determinant_examples():
    assert determinant([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 1
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[0, 1], [1, 0]]) == -1
    assert determinant([[1, 2], [2, 4]]) == 0
    a = fbar_partition(3, 2)
    assert a == [3, 3, 3, 6, 6]
    assert determinant([[binomial(a[i] + 1, j - i + 1) for j in range(5)] for i in range(5)]) == 281


def test_determinant_errors():
    with pytest.raises(ValueError):
        determinant([])
    with pytest.raises(ValueError):
        determinant([[1, 2]])


@given(st.lists(st.integers(-9, 9), min_size=16, max_size=16))
def test_determinant_vs_cofactor(entries):
    a = [entries[i : i + 4] for i in range(0, 16, 4)]
    assert determinant(a) == cofactor_det(a)


def test_determinant_sparse_random():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 5)
        a = [[rng.choice([0, 0, 0, 1, -2, 5]) for _ in range(n)] for _ in range(n)]
        assert determinant(a) == cofactor_det(a)


def test_kreweras_examples():
    assert kreweras_count((1, 3, 4), (1, 3, 4)) == 1
    assert kreweras_count((1,), (0,)) == 2
    assert kreweras_count((2, 2), (0, 0)) == 6
    with pytest.raises(ValueError):
        kreweras_count((0, 1), (1, 1))


@pytest.mark.parametrize("n", range(1, 4))
def test_kreweras_vs_brute_small(n):
    parts = weakly_increasing(n, 4)
    for upper in parts:
        for lower in parts:
            if all(b <= a for a, b in zip(upper, lower)):
                assert kreweras_count(upper, lower) == brute_between(upper, lower)


def test_fbar_determinant_examples():
    assert fbar_determinant(3, 2) == 281
    assert fbar_determinant(2, 1) == 3
    for n in range(0, 7):
        assert fbar_determinant(1, n) == catalan(n)


def test_recursion_examples():
    g = recursion_tables(3, 1)
    assert (g[1, 1], g[2, 1], g[3, 1]) == (1, 4, 10)
    assert recursion_fbar(3, 2) == 281
    assert recursion_fbar(2, 2) == fbar_determinant(2, 2) == fbar_count(2, 2)
    with pytest.raises(ValueError):
        recursion_fbar(1, 2)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_recursion_tables_closing(m):
    g = recursion_tables(m, 4)
    for i in range(1, 5):
        assert g[m, i] == fbar_count(m, i) == fbar_determinant(m, i)


@pytest.mark.parametrize("m,n", [(m, n) for m in (1, 2, 3) for n in (1, 2, 3)] + [(4, 2)])
def test_determinant_matches_dp(m, n):
    assert fbar_determinant(m, n) == fbar_count(m, n)
