# padic-degrees, GPL-3.0 license
"""
Theta degrees theta_{q,n} = delta_{n-q,n}: exact values, 2-adic valuations, parity and interval structure

theta_{q,n} = prod_{j<q} C(n+j, q-j) / C(2j+1, j) is the degree of the variety of symmetric n x n matrices of rank
at most n-q. Valuations come from digit-sum prefixes and never touch big integers; the exact path is the oracle.

Usage:
    from utils.theta import theta_valuation, nu_sequence, interval_report

    theta_valuation(39, 45)  # 5
    nu_sequence(46, 20)  # [0, 4, 2, 5, 6, 10, ...]
    interval_report(46, 0, 'opening').center_value  # 19
"""

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, NamedTuple, Optional, Tuple

from utils.digits import (ceil_pow2, digit_sum, digit_sum_prefix, factorial_valuation, integer_valuation, is_pow2,
                          log2_exact)
from utils.general import DomainError, InexactDivisionError


class ThetaQuery(NamedTuple):
    q: int  # number of product factors
    n: int  # matrix order


class ValuationPath(str, Enum):
    DIGIT_SUM_FORMULA = 'digit_sum_formula'
    EXACT_PRODUCT = 'exact_product'
    CLOSED_FORM_PARITY = 'closed_form_parity'


class IntervalKind(str, Enum):
    OPENING = 'opening'  # [cQ, (c+1)Q - q]
    CLOSING = 'closing'  # [(c+1)Q - q, (c+1)Q]


@dataclass
class ValuationReport:
    valuation: int
    parity_odd: bool
    exact_value: Optional[int] = None
    path: ValuationPath = ValuationPath.DIGIT_SUM_FORMULA

    def __post_init__(self):
        assert self.parity_odd == (self.valuation == 0), f'parity {self.parity_odd} disagrees with {self.valuation}'
        if self.exact_value is not None:
            assert integer_valuation(self.exact_value) == self.valuation, 'exact value disagrees with valuation'


@dataclass
class IntervalReport:
    q: int
    c: int
    kind: IntervalKind
    Q: int  # 2^ceil(log2 q)
    start: int
    end: int
    center_indices: List[int]
    center_value: int  # closed form
    endpoint_values: Tuple[int, int]
    symmetry_ok: bool
    lower_bound_ok: bool
    upper_bound_ok: bool
    center_ok: bool  # closed form equals the sequence maximum, attained at every center index
    degenerate: bool = False
    values: List[int] = field(default_factory=list, repr=False)

    @property
    def ok(self):
        return (self.endpoint_values == (0, 0) and self.symmetry_ok and self.lower_bound_ok and self.upper_bound_ok and
                self.center_ok)


class IntervalBounds(NamedTuple):
    start: int  # cQ, zero
    middle: int  # (c+1)Q - q, zero
    end: int  # (c+1)Q, zero


def theta_exact(q, n):
    """Return theta_{q,n} exactly; 1 for q = 0 and 0 for q > n.

    >>> theta_exact(2, 4), theta_exact(1, 6), theta_exact(7, 7), theta_exact(5, 3)
    (10, 6, 1, 0)
    """
    if q > n:
        return 0
    num, den = 1, 1
    for j in range(q):
        num *= math.comb(n + j, q - j)
        den *= math.comb(2 * j + 1, j)
    theta, r = divmod(num, den)
    if r:
        raise InexactDivisionError(f'theta_{{{q},{n}}} numerator not divisible by denominator')
    return theta


def theta_column(n):
    """Return [theta_{0,n}, ..., theta_{n,n}] by the downward ratio from theta_{n,n} = 1.

    theta_{q,n} = theta_{q+1,n} * 2^q (2q+1)!! / prod_{j=0}^{q} (n - q + 2j), every division exact.

    >>> theta_column(4)
    [1, 4, 10, 8, 1]
    """
    column, dens = [0] * (n + 1), [0] * (n + 1)
    column[n] = 1
    odd_factorial = math.prod(range(1, 2 * n, 2))  # (2q+1)!! at q = n - 1
    for q in range(n - 1, -1, -1):
        if q >= n - 2:
            dens[q] = math.prod(range(n - q, n + q + 1, 2))
        else:
            dens[q] = dens[q + 2] // ((n - q - 2) * (n + q + 2))  # drop both ends of the q + 2 product
        if q < n - 1:
            odd_factorial //= 2 * q + 3
        column[q], r = divmod((column[q + 1] << q) * odd_factorial, dens[q])
        if r:
            raise InexactDivisionError(f'theta ratio at q={q}, n={n} is not integral')
    return column


def delta_exact(k, n):
    # delta_{k,n} = theta_{n-k,n}
    if not 0 <= k <= n:
        raise DomainError(f'delta_{{k,n}} requires 0 <= k <= n, got k={k}, n={n}')
    return theta_exact(n - k, n)


def _check_theta(q, n):
    if q < 0 or n < 0:
        raise DomainError(f'theta_{{q,n}} requires q, n >= 0, got q={q}, n={n}')
    if q > n:
        raise DomainError(f'theta_{{{q},{n}}} is zero for q > n; valuation undefined')


def theta_valuation(q, n):
    """Return nu_2(theta_{q,n}) for n >= q from digit-sum prefixes.

    n - q = 2p: -p + S(n) - S(n-p) - S(p). n - q odd: nu_2(theta_{q+1,n}) + q.

    >>> theta_valuation(2, 4), theta_valuation(39, 45), theta_valuation(5, 5)
    (1, 5, 0)
    """
    _check_theta(q, n)
    if (n - q) % 2:
        return theta_valuation(q + 1, n) + q
    p = (n - q) // 2
    v = -p + digit_sum_prefix(n) - digit_sum_prefix(n - p) - digit_sum_prefix(p)
    assert v >= 0, f'negative valuation {v} for theta_{{{q},{n}}}'
    return v


def theta_valuation_factorial(q, n):
    # nu_2(theta_{q,n}) = (n-1-p)p - sum_{k=1}^{p} (nu_2((n-k)!) - nu_2((k-1)!)) for n - q = 2p, Legendre only
    _check_theta(q, n)
    if (n - q) % 2:
        return theta_valuation_factorial(q + 1, n) + q
    p = (n - q) // 2
    return (n - 1 - p) * p - sum(factorial_valuation(n - k) - factorial_valuation(k - 1) for k in range(1, p + 1))


def theta_step_valuation(q, n):
    # nu_2(theta_{q,n}) from nu_2(theta_{q+1,n}) by the general ratio recursion, n >= q + 1
    if n < q + 1:
        raise DomainError(f'ratio recursion requires n >= q + 1, got q={q}, n={n}')
    return theta_valuation(q + 1, n) + q - sum(integer_valuation(n - q + 2 * j) for j in range(q + 1))


def theta_is_odd(q, n):
    """Return True if theta_{q,n} is odd: n >= q and n = +-q mod 2^ceil(log2 2q). No valuation is computed.

    >>> theta_is_odd(13, 13), theta_is_odd(2, 4), theta_is_odd(39, 89), theta_is_odd(40, 39)
    (True, False, True, False)
    """
    if q < 1 or n < 1:
        raise DomainError(f'parity criterion requires q, n >= 1, got q={q}, n={n}')
    if n < q:
        return False  # theta_{q,n} = 0
    m = ceil_pow2(2 * q)  # 2 for q = 1: n odd
    return (n - q) % m == 0 or (n + q) % m == 0


def delta_valuation(k, n, exact=False):
    """Return the ValuationReport of delta_{k,n} = theta_{n-k,n}, with the exact value if requested.

    >>> delta_valuation(2, 4, exact=True).exact_value
    10
    """
    if not 0 <= k <= n:
        raise DomainError(f'delta_{{k,n}} requires 0 <= k <= n, got k={k}, n={n}')
    v = theta_valuation(n - k, n)
    return ValuationReport(valuation=v, parity_odd=v == 0, exact_value=theta_exact(n - k, n) if exact else None)


def nu_sequence(q, i_max):
    """Return [nu_2(theta_{q,q+2i}) for i = 0..i_max].

    >>> nu_sequence(46, 9)
    [0, 4, 2, 5, 6, 10, 10, 13, 14, 19]
    """
    if q < 1:
        raise DomainError(f'nu_sequence requires q >= 1, got q={q}')
    return [theta_valuation(q, q + 2 * i) for i in range(i_max + 1)]


def interval_bounds(q, c):
    # Zero positions cQ, (c+1)Q - q, (c+1)Q of the sequence i -> nu_2(theta_{q,q+2i})
    Q = ceil_pow2(q)
    return IntervalBounds(c * Q, (c + 1) * Q - q, (c + 1) * Q)


def _centers(q, c, kind, Q):
    # Return (center indices, closed-form center value)
    dc = digit_sum(c) - digit_sum(c + 1) + 1  # carry term of the closing intervals
    if q % 2 == 0:
        if kind == IntervalKind.OPENING:
            h = (Q - q) // 2
            return [c * Q + h], h * log2_exact(Q // 2) - 2 * digit_sum_prefix(h)
        h = q // 2
        return [(c + 1) * Q - h], h * log2_exact(Q) - 2 * digit_sum_prefix(h) + h * dc
    if kind == IntervalKind.OPENING:
        h = (Q - q - 1) // 2
        return [c * Q + h, c * Q + h + 1], h * log2_exact(Q // 2) - 2 * digit_sum_prefix(h) - digit_sum(h)
    h = (q - 1) // 2
    return [(c + 1) * Q - h - 1, (c + 1) * Q - h], \
        h * log2_exact(Q) - 2 * digit_sum_prefix(h) - digit_sum(h) + h * dc


def interval_report(q, c, kind):
    """Analyse one opening or closing interval of i -> nu_2(theta_{q,q+2i}) with Q = 2^ceil(log2 q).

    Checks zero endpoints, mirror symmetry, the closed-form center value and, on the half from the zero endpoint
    to the nearest center, value >= distance to that endpoint and value <= center value - distance to the center.
    For q a power of two the opening interval is the single point cQ and is reported degenerate.

    >>> r = interval_report(46, 0, 'opening')
    >>> r.center_indices, r.center_value, r.ok
    ([9], 19, True)
    """
    if q < 1 or c < 0:
        raise DomainError(f'interval analysis requires q >= 1 and c >= 0, got q={q}, c={c}')
    kind = IntervalKind(kind)
    Q = ceil_pow2(q)
    b = interval_bounds(q, c)
    start, end = (b.start, b.middle) if kind == IntervalKind.OPENING else (b.middle, b.end)
    values = [theta_valuation(q, q + 2 * i) for i in range(start, end + 1)]
    endpoints = (values[0], values[-1])

    if start == end:  # q = Q, opening interval collapses to a point
        return IntervalReport(q, c, kind, Q, start, end, [start], values[0], endpoints, True, True, True, True,
                              degenerate=True, values=values)

    centers, center_value = _centers(q, c, kind, Q)
    nu = dict(zip(range(start, end + 1), values))
    symmetry_ok = values == values[::-1]
    center_ok = all(nu[i] == center_value for i in centers) and max(values) == center_value
    if kind == IntervalKind.OPENING:
        half = range(start, centers[0] + 1)
        lower_ok = all(nu[i] >= i - start for i in half)
        upper_ok = all(nu[i] <= center_value - (centers[0] - i) for i in half)
    else:
        half = range(centers[-1], end + 1)  # measured from the right center
        lower_ok = all(nu[i] >= end - i for i in half)
        upper_ok = all(nu[i] <= center_value - (i - centers[-1]) for i in half)
    return IntervalReport(q, c, kind, Q, start, end, centers, center_value, endpoints, symmetry_ok, lower_ok, upper_ok,
                          center_ok, values=values)


def valuation_one_sites(q, c):
    """Return the sorted indices i in [cQ, (c+1)Q] with nu_2(theta_{q,q+2i}) = 1, from the closed form.

    Sites sit next to a zero endpoint. For q a power of two >= 2 with c even: cQ+1 and (c+1)Q-1. For odd q:
    cQ+1 and (c+1)Q-q-1 when q = 2^M + 2^m - 1 with 0 < m < M (opening interval), and (c+1)Q-q+1 and (c+1)Q-1
    when c is even and q - 2 has log2(Q) - 1 one bits, i.e. q = Q + 1 - 2^j (closing interval).

    >>> valuation_one_sites(39, 0), valuation_one_sites(4, 0), valuation_one_sites(46, 0), valuation_one_sites(5, 0)
    ([1, 24], [1, 3], [], [1, 2, 4, 7])
    """
    if q < 1 or c < 0:
        raise DomainError(f'valuation-1 sites require q >= 1 and c >= 0, got q={q}, c={c}')
    Q = ceil_pow2(q)
    sites = set()
    if q % 2 == 0:
        if Q == q and c % 2 == 0:
            sites |= {c * Q + 1, (c + 1) * Q - 1}
        return sorted(sites)
    r = q + 1 - Q // 2  # 2^m when q = 2^M + 2^m - 1, Q = 2^(M+1)
    if is_pow2(r) and 2 <= r < Q // 2:
        sites |= {c * Q + 1, (c + 1) * Q - q - 1}
    if q >= 3 and c % 2 == 0 and digit_sum(q - 2) == log2_exact(Q) - 1:
        sites |= {(c + 1) * Q - q + 1, (c + 1) * Q - 1}
    return sorted(sites)
