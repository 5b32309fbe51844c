import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wallcount.arith import as_rational, binomial, binomial_general, catalan, is_integral


def test_binomial_examples():
    assert binomial(3, 1) == 3
    assert binomial(4, -1) == 0
    assert binomial(11, 5) == math.factorial(11) // (math.factorial(5) * math.factorial(6))
    assert binomial(11, 5) == 462
    assert binomial(4, 7) == 0


def test_binomial_rejects_negative_top():
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_pascal():
    for n in range(1, 61):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


def test_catalan():
    assert catalan(0) == 1
    assert catalan(3) == binomial(6, 3) // 4 == 5
    assert catalan(5) == binomial(10, 5) // 6 == 42
    for n in range(61):
        assert catalan(n) * (n + 1) == binomial(2 * n, n)
    with pytest.raises(ValueError):
        catalan(-1)


@given(st.integers(-30, 30), st.integers(-5, 30))
def test_binomial_general_pascal(n, k):
    # C(n, k) = C(n-1, k-1) + C(n-1, k) holds for every integer n, k >= 1
    if k >= 1:
        assert binomial_general(n, k) == binomial_general(n - 1, k - 1) + binomial_general(n - 1, k)
    if n >= 0:
        assert binomial_general(n, k) == binomial(n, k)


def test_binomial_general_minus_one():
    assert [binomial_general(-1, t) for t in range(5)] == [1, -1, 1, -1, 1]


def test_rationals():
    assert is_integral(Fraction(6, 3))
    assert not is_integral(Fraction(1, 2))
    assert as_rational(3) == Fraction(3)
    q = as_rational(Fraction(4, -6))
    assert (q.numerator, q.denominator) == (-2, 3)
    with pytest.raises(TypeError):
        as_rational(0.5)
