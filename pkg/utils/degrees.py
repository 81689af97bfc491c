# padic-degrees, GPL-3.0 license
"""
Degrees of determinantal varieties: rectangular gamma_{k,m,n}, symmetric delta_{k,n}, skew-symmetric epsilon_{2p,n}

Usage:
    from utils.degrees import DegreeQuery, Family, epsilon_is_odd, subspace_thresholds

    epsilon_is_odd(2, 6)  # True, epsilon_{4,6} = 3
    subspace_thresholds(DegreeQuery(Family.SYMMETRIC, 4, n=6))  # codim 3, complex_dim 4, real_dim 4
"""

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

from utils.boxes import BoxDims, box_count_exact, box_is_odd, gamma_valuation
from utils.digits import ceil_pow2
from utils.general import DomainError, InexactDivisionError
from utils.theta import delta_exact, theta_exact, theta_is_odd, theta_valuation


class Family(str, Enum):
    RECTANGULAR = 'rectangular'  # m x n matrices of rank <= k
    SYMMETRIC = 'symmetric'  # symmetric n x n matrices of rank <= k
    SKEW = 'skew'  # skew-symmetric n x n matrices of rank <= 2p


@dataclass(frozen=True)
class DegreeQuery:
    family: Family
    k_or_p: int  # rank bound k, or p for rank bound 2p
    m: Optional[int] = None  # rows, rectangular only
    n: int = 0

    def __post_init__(self):
        object.__setattr__(self, 'family', Family(self.family))
        k, m, n = self.k_or_p, self.m, self.n
        if self.family == Family.RECTANGULAR:
            if m is None or not 1 <= k <= min(m, n):
                raise DomainError(f'rectangular query requires 1 <= k <= min(m, n), got k={k}, m={m}, n={n}')
        elif m is not None:
            raise DomainError(f'{self.family.value} query takes no m, got m={m}')
        elif self.family == Family.SYMMETRIC and not 1 <= k <= n:
            raise DomainError(f'symmetric query requires 1 <= k <= n, got k={k}, n={n}')
        elif self.family == Family.SKEW:
            _check_skew(k, n)


class SubspaceThresholds(NamedTuple):
    complex_dim: int
    real_dim: Optional[int]  # None when the parity is even, no claim
    codim: int


def _check_skew(p, n, strict=False):
    if n < 2 or not 1 <= p <= n // 2:
        raise DomainError(f'skew degree requires n >= 2 and 1 <= p <= n // 2, got p={p}, n={n}')
    if strict and (n < 4 or p == n // 2):
        raise DomainError(f'skew parity criterion requires n >= 4 and p < n // 2, got p={p}, n={n}')


def gamma_exact(k, m, n):
    """Return gamma_{k,m,n} = B(n-k, m-k, k), cross-checked against the rank-degree product formula.

    >>> gamma_exact(1, 2, 2), gamma_exact(2, 4, 4), gamma_exact(3, 3, 5)
    (2, 20, 1)
    """
    if not 1 <= k <= min(m, n):
        raise DomainError(f'gamma_{{k,m,n}} requires 1 <= k <= min(m, n), got k={k}, m={m}, n={n}')
    gamma = box_count_exact(BoxDims(n - k, m - k, k))
    assert gamma == gamma_product(k, m, n), f'box and product formulas disagree for gamma_{{{k},{m},{n}}}'
    return gamma


def gamma_product(k, m, n):
    # prod_{j=0}^{n-k-1} (m+j)! j! / ((k+j)! (m-k+j)!)
    f = math.factorial
    num = math.prod(f(m + j) * f(j) for j in range(n - k))
    den = math.prod(f(k + j) * f(m - k + j) for j in range(n - k))
    gamma, r = divmod(num, den)
    if r:
        raise InexactDivisionError(f'gamma_{{{k},{m},{n}}} product is not integral')
    return gamma


def epsilon_exact(p, n):
    """Return epsilon_{2p,n} = theta_{n-2p-1,n} / 2^(n-2p-1); 1 for the degenerate p = n // 2.

    >>> epsilon_exact(1, 4), epsilon_exact(2, 6), epsilon_exact(3, 6)
    (2, 3, 1)
    """
    _check_skew(p, n)
    if p == n // 2:
        return 1
    e = n - 2 * p - 1
    eps, r = divmod(theta_exact(e, n), 1 << e)
    if r:
        raise InexactDivisionError(f'2^{e} does not divide theta_{{{e},{n}}}')
    return eps


def epsilon_valuation(p, n):
    """Return nu_2(epsilon_{2p,n}) = nu_2(theta_{n-2p,n}); 0 for the degenerate p = n // 2.

    >>> epsilon_valuation(1, 4), epsilon_valuation(2, 6), epsilon_valuation(1, 6)
    (1, 0, 1)
    """
    _check_skew(p, n)
    if p == n // 2:
        return 0
    return theta_valuation(n - 2 * p, n)


def epsilon_is_odd(p, n):
    """Return True if epsilon_{2p,n} is odd: 2^ceil(log2(n-2p)) divides p or n-p. Requires p < n // 2.

    >>> epsilon_is_odd(2, 6), epsilon_is_odd(1, 4), epsilon_is_odd(4, 10)
    (True, False, True)
    """
    _check_skew(p, n, strict=True)
    m = ceil_pow2(n - 2 * p)
    return p % m == 0 or (n - p) % m == 0


def family_is_odd(query):
    # Parity predicate of the query's family, closed form where one exists
    k, m, n = query.k_or_p, query.m, query.n
    if query.family == Family.RECTANGULAR:
        return box_is_odd(BoxDims(n - k, m - k, k))
    if query.family == Family.SYMMETRIC:
        return k == n or theta_is_odd(n - k, n)
    return epsilon_valuation(k, n) == 0 if k == n // 2 else epsilon_is_odd(k, n)


def degree_exact(query):
    # Exact degree of the query's variety
    k, m, n = query.k_or_p, query.m, query.n
    if query.family == Family.RECTANGULAR:
        return gamma_exact(k, m, n)
    if query.family == Family.SYMMETRIC:
        return delta_exact(k, n)
    return epsilon_exact(k, n)


def degree_valuation(query):
    # 2-adic valuation of the query's degree, digit-sum formulas only
    k, m, n = query.k_or_p, query.m, query.n
    if query.family == Family.RECTANGULAR:
        return gamma_valuation(k, m, n)
    if query.family == Family.SYMMETRIC:
        return theta_valuation(n - k, n)
    return epsilon_valuation(k, n)


def subspace_thresholds(query):
    """Return SubspaceThresholds(complex_dim, real_dim, codim) of the query's variety.

    Any complex_dim-dimensional subspace meets the complex variety; real_dim is reported only when the degree is odd.

    >>> subspace_thresholds(DegreeQuery(Family.SYMMETRIC, 4, n=6))
    SubspaceThresholds(complex_dim=4, real_dim=4, codim=3)
    >>> subspace_thresholds(DegreeQuery(Family.SKEW, 2, n=6))
    SubspaceThresholds(complex_dim=2, real_dim=2, codim=1)
    """
    k, m, n = query.k_or_p, query.m, query.n
    if query.family == Family.RECTANGULAR:
        codim = (m - k) * (n - k)
    elif query.family == Family.SYMMETRIC:
        codim = math.comb(n - k + 1, 2)
    else:
        codim = math.comb(n - 2 * k, 2)
    return SubspaceThresholds(codim + 1, codim + 1 if family_is_odd(query) else None, codim)
