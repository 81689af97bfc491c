# padic-degrees, GPL-3.0 license
"""
Binary digit sums and 2-adic valuation kernels

Usage:
    from utils.digits import digit_sum, digit_sum_prefix, factorial_valuation

    digit_sum(10)  # 2
    digit_sum_prefix(23)  # 48, sum of digit_sum(i) for i < 23
    factorial_valuation(100)  # 97, trailing zeros of 100! in base 2
"""

from functools import lru_cache

from utils.general import DomainError


def digit_sum(n):
    """Return s(n), the number of 1-bits of n.

    >>> digit_sum(0), digit_sum(10), digit_sum(12)
    (0, 2, 2)
    """
    return n.bit_count()  # word-wise popcount on arbitrary precision ints


@lru_cache(maxsize=4096)
def digit_sum_prefix(a):
    """Return S(a), the sum of digit_sum(i) over 0 <= i < a, by the halving recursion.

    S(2p) = 2S(p) + p and S(2p + 1) = S(p + 1) + S(p) + p. The pair (S(p), S(p + 1)) is carried down the bits of a
    from the most significant one, so the cost is O(log a) steps at constant stack depth.

    >>> digit_sum_prefix(4), digit_sum_prefix(23)
    (4, 48)
    """
    if a < 0:
        raise DomainError(f'digit_sum_prefix requires a >= 0, got a={a}')
    p, s0, s1 = 0, 0, 0  # s0 = S(p), s1 = S(p + 1)
    for k in range(a.bit_length() - 1, -1, -1):
        mid = s1 + s0 + p  # S(2p + 1)
        if (a >> k) & 1:
            p, s0, s1 = 2 * p + 1, mid, 2 * s1 + p + 1
        else:
            p, s0, s1 = 2 * p, 2 * s0 + p, mid
    return s0


def digit_sum_window(l, p):
    # Return sum of digit_sum(j) for l <= j < l + p
    return digit_sum_prefix(l + p) - digit_sum_prefix(l)


def factorial_valuation(n):
    """Return nu_2(n!) = n - s(n) (Legendre), without computing n!.

    >>> factorial_valuation(4), factorial_valuation(100)
    (3, 97)
    """
    return n - digit_sum(n)


def hyperfactorial_valuation(a):
    # Return nu_2(0! 1! ... (a-1)!) = a(a-1)/2 - S(a)
    return a * (a - 1) // 2 - digit_sum_prefix(a)


def binomial_valuation(b, c):
    # Return nu_2(C(b+c, b)), the number of carries adding b and c in base 2
    return digit_sum(b) + digit_sum(c) - digit_sum(b + c)


def disjoint_expansion(b, c):
    """Return True if b and c share no 1-bit, equivalently s(b + c) = s(b) + s(c).

    >>> disjoint_expansion(5, 2), disjoint_expansion(3, 1), disjoint_expansion(7, 0)
    (True, False, True)
    """
    return b & c == 0


def integer_valuation(x):
    """Return nu_2(x), the number of trailing zero bits of x >= 1.

    >>> integer_valuation(24), integer_valuation(1 << 10)
    (3, 10)
    """
    if x <= 0:
        raise DomainError(f'valuation of {x} is undefined, expected a positive integer')
    return (x & -x).bit_length() - 1


def ceil_pow2(x):
    """Return 2^ceil(log2 x) for x >= 1.

    >>> [ceil_pow2(x) for x in (1, 2, 3, 39, 46, 64)]
    [1, 2, 4, 64, 64, 64]
    """
    if x < 1:
        raise DomainError(f'ceil_pow2 expects x >= 1, got {x}')
    return 1 << (x - 1).bit_length()


def is_pow2(x):
    # True for 1, 2, 4, 8, ...
    return x > 0 and x & (x - 1) == 0


def log2_exact(x):
    # log2 of a power of two
    assert is_pow2(x), f'{x} is not a power of two'
    return x.bit_length() - 1
