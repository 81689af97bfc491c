# padic-degrees, GPL-3.0 license
import math

import pytest

from utils.digits import (binomial_valuation, ceil_pow2, digit_sum, digit_sum_prefix, digit_sum_window,
                          disjoint_expansion, factorial_valuation, hyperfactorial_valuation, integer_valuation, is_pow2)
from utils.general import DomainError


@pytest.mark.parametrize('n, s', [(0, 0), (10, 2), (12, 2), (255, 8), (2 ** 200 + 1, 2)])
def test_digit_sum(n, s):
    assert digit_sum(n) == s


def test_digit_sum_recursion():
    for m in range(2000):
        assert digit_sum(2 * m) == digit_sum(m)
        assert digit_sum(2 * m + 1) == digit_sum(m) + 1


def test_reflection():
    for e in range(13):
        for k in range(2 ** e):
            assert digit_sum(2 ** e - 1 - k) == e - digit_sum(k)


@pytest.mark.parametrize('a, S', [(0, 0), (1, 0), (4, 4), (9, 13), (12, 20), (19, 37), (23, 48), (256, 1024)])
def test_digit_sum_prefix(a, S):
    assert digit_sum_prefix(a) == S


def test_digit_sum_prefix_naive():
    total = 0
    for a in range(10 ** 4 + 1):
        assert digit_sum_prefix(a) == total
        total += bin(a).count('1')


def test_digit_sum_prefix_halving():
    S = digit_sum_prefix
    for p in range(10 ** 4 + 1):
        assert S(2 * p) == 2 * S(p) + p
        assert S(2 * p + 1) == S(p + 1) + S(p) + p


def test_digit_sum_prefix_large():
    # S(2^e) = e 2^(e-1); S(2^e + 2^f) = S(2^e) + S(2^f) + 2^f for f < e
    digit_sum_prefix.cache_clear()
    e, f = 2000, 1000
    assert digit_sum_prefix(2 ** e + 2 ** f) == e * 2 ** (e - 1) + f * 2 ** (f - 1) + 2 ** f
    digit_sum_prefix.cache_clear()
    assert digit_sum_prefix(2 ** 600) == 600 * 2 ** 599
    assert digit_sum_prefix(2 ** 4000 - 1) == 4000 * 2 ** 3999 - 4000  # S(2^e) - s(2^e - 1)


def test_digit_sum_prefix_rejects():
    with pytest.raises(DomainError):
        digit_sum_prefix(-1)


@pytest.mark.parametrize('n, v', [(0, 0), (4, 3), (100, 97)])
def test_factorial_valuation(n, v):
    assert factorial_valuation(n) == v


def test_legendre():
    f = 1
    for n in range(2001):
        f *= max(n, 1)
        assert factorial_valuation(n) == integer_valuation(f)


@pytest.mark.parametrize('b, c, disjoint', [(5, 2, True), (3, 1, False), (0, 0, True), (1024, 0, True), (6, 12, False)])
def test_disjoint_expansion(b, c, disjoint):
    assert disjoint_expansion(b, c) == disjoint


def test_subadditivity():
    for b in range(513):
        for c in range(0, 513, 3):
            assert digit_sum(b + c) <= digit_sum(b) + digit_sum(c)
            assert (digit_sum(b + c) == digit_sum(b) + digit_sum(c)) == disjoint_expansion(b, c)


def test_window_inequalities():
    S = digit_sum_prefix
    for l in range(129):
        for p in range(129):
            w = digit_sum_window(l, p)
            assert w == sum(digit_sum(j) for j in range(l, l + p))
            assert w >= (p + S(p) if l >= p else l + S(p))
            assert w >= S(p)
            assert (w == S(p)) == (p == 0 or l == 0)


@pytest.mark.parametrize('x, v', [(1, 0), (24, 3), (2 ** 10, 10), (288, 5), (3 * 2 ** 500, 500)])
def test_integer_valuation(x, v):
    assert integer_valuation(x) == v


@pytest.mark.parametrize('x', [0, -8])
def test_integer_valuation_rejects(x):
    with pytest.raises(DomainError, match='undefined'):
        integer_valuation(x)


def test_binomial_valuation():
    for b in range(40):
        for c in range(40):
            assert binomial_valuation(b, c) == integer_valuation(math.comb(b + c, b))


def test_hyperfactorial_valuation():
    h = 1
    for a in range(1, 50):
        assert hyperfactorial_valuation(a) == integer_valuation(h)
        h *= math.factorial(a)  # H(a + 1)


def test_ceil_pow2():
    assert [ceil_pow2(x) for x in range(1, 10)] == [1, 2, 4, 4, 8, 8, 8, 8, 16]
    for q in range(1, 300):
        assert ceil_pow2(2 * q) == 2 * ceil_pow2(q)
        assert is_pow2(ceil_pow2(q)) and ceil_pow2(q) >= q > ceil_pow2(q) // 2
    with pytest.raises(DomainError):
        ceil_pow2(0)
