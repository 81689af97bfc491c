# padic-degrees, GPL-3.0 license
import math

import pytest

from utils.boxes import BoxDims, box_count_product
from utils.degrees import (DegreeQuery, Family, SubspaceThresholds, degree_exact, degree_valuation, epsilon_exact,
                           epsilon_is_odd, epsilon_valuation, family_is_odd, gamma_exact, gamma_product,
                           subspace_thresholds)
from utils.digits import integer_valuation
from utils.general import DomainError
from utils.theta import theta_column


@pytest.mark.parametrize('k, m, n, gamma', [(1, 2, 2, 2), (2, 4, 4, 20), (3, 3, 5, 1), (1, 3, 3, 6), (2, 3, 3, 3),
                                            (1, 2, 3, 3)])
def test_gamma_exact(k, m, n, gamma):
    assert gamma_exact(k, m, n) == gamma


def test_gamma_forms_agree():
    for m in range(1, 21):
        for n in range(1, 21):
            for k in range(1, min(m, n) + 1):
                g = gamma_product(k, m, n)
                assert g == box_count_product(BoxDims(n - k, m - k, k))
                assert g == gamma_product(k, n, m)  # transpose


def test_gamma_determinant_hypersurface():
    # k = n - 1 <= m - 1: maximal minors vanish, degree C(m, n - 1)
    for m in range(2, 15):
        for n in range(2, m + 1):
            assert gamma_exact(n - 1, m, n) == math.comb(m, n - 1)


def test_gamma_rejects():
    with pytest.raises(DomainError):
        gamma_exact(0, 3, 3)
    with pytest.raises(DomainError):
        gamma_exact(4, 3, 5)


@pytest.mark.parametrize('p, n, eps, v', [(1, 4, 2, 1), (2, 6, 3, 0), (3, 6, 1, 0), (1, 6, 14, 1), (1, 2, 1, 0),
                                          (2, 4, 1, 0)])
def test_epsilon(p, n, eps, v):
    assert epsilon_exact(p, n) == eps
    assert epsilon_valuation(p, n) == v == integer_valuation(eps)


def test_epsilon_parity_sweep():
    for n in range(4, 201):
        column = theta_column(n)
        for p in range(1, n // 2):
            e = n - 2 * p - 1
            assert column[e] % (1 << e) == 0, (p, n)
            assert epsilon_is_odd(p, n) == ((column[e] >> e) % 2 == 1), (p, n)
            assert epsilon_valuation(p, n) == integer_valuation(column[e] >> e), (p, n)


def test_epsilon_below_half():
    # p = (n - 2) / 2: odd exactly for n = 2 mod 4
    for n in range(6, 203, 2):
        assert epsilon_is_odd((n - 2) // 2, n) == (n % 4 == 2)


def test_epsilon_rejects():
    with pytest.raises(DomainError):
        epsilon_exact(4, 7)
    with pytest.raises(DomainError):
        epsilon_valuation(0, 6)
    with pytest.raises(DomainError, match='p < n // 2'):
        epsilon_is_odd(3, 6)  # degenerate
    with pytest.raises(DomainError):
        epsilon_is_odd(1, 3)


def test_degree_query_validation():
    assert DegreeQuery('skew', 2, n=6).family is Family.SKEW
    with pytest.raises(DomainError):
        DegreeQuery(Family.RECTANGULAR, 1, n=3)  # no m
    with pytest.raises(DomainError):
        DegreeQuery(Family.RECTANGULAR, 4, 3, 5)
    with pytest.raises(DomainError):
        DegreeQuery(Family.SYMMETRIC, 2, 3, 4)  # m given
    with pytest.raises(DomainError):
        DegreeQuery(Family.SYMMETRIC, 5, n=4)
    with pytest.raises(DomainError):
        DegreeQuery(Family.SKEW, 4, n=7)
    with pytest.raises(ValueError):
        DegreeQuery('hermitian', 1, n=2)


@pytest.mark.parametrize('query, exact, v', [
    (DegreeQuery(Family.RECTANGULAR, 2, 4, 4), 20, 2),
    (DegreeQuery(Family.SYMMETRIC, 2, n=4), 10, 1),
    (DegreeQuery(Family.SYMMETRIC, 4, n=4), 1, 0),
    (DegreeQuery(Family.SKEW, 2, n=6), 3, 0),
    (DegreeQuery(Family.SKEW, 3, n=6), 1, 0)])
def test_degree_dispatch(query, exact, v):
    assert degree_exact(query) == exact
    assert degree_valuation(query) == v
    assert family_is_odd(query) == (exact % 2 == 1)


def test_family_is_odd_sweep():
    for n in range(1, 17):
        for m in range(1, 17):
            for k in range(1, min(m, n) + 1):
                q = DegreeQuery(Family.RECTANGULAR, k, m, n)
                assert family_is_odd(q) == (degree_exact(q) % 2 == 1), (k, m, n)
        for k in range(1, n + 1):
            q = DegreeQuery(Family.SYMMETRIC, k, n=n)
            assert family_is_odd(q) == (degree_exact(q) % 2 == 1), (k, n)
        for p in range(1, n // 2 + 1):
            q = DegreeQuery(Family.SKEW, p, n=n)
            assert family_is_odd(q) == (degree_exact(q) % 2 == 1), (p, n)


@pytest.mark.parametrize('query, thresholds', [
    (DegreeQuery(Family.SYMMETRIC, 4, n=6), (4, 4, 3)),
    (DegreeQuery(Family.SKEW, 2, n=6), (2, 2, 1)),
    (DegreeQuery(Family.SKEW, 1, n=4), (2, None, 1)),
    (DegreeQuery(Family.SKEW, 3, n=6), (1, 1, 0)),
    (DegreeQuery(Family.RECTANGULAR, 1, 2, 2), (2, None, 1)),
    (DegreeQuery(Family.RECTANGULAR, 1, 2, 3), (3, 3, 2))])
def test_subspace_thresholds(query, thresholds):
    t = subspace_thresholds(query)
    assert isinstance(t, SubspaceThresholds)
    assert t == thresholds
