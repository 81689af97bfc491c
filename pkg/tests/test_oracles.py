# padic-degrees, GPL-3.0 license
import itertools
from fractions import Fraction

import numpy as np
import pytest
import sympy

from utils.boxes import BoxDims, box_count_exact
from utils.general import DomainError, GuardError
from utils.oracles import (RationalMatrix, canonical_skew_form, plane_partition_count, random_skew_matrix,
                           rational_determinant, skew_congruence_reduce, valuation_by_trailing_zeros)


def to_sympy(M):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in M.entries])


def test_enumeration_small_boxes():
    for d in itertools.product(range(6), repeat=3):
        assert plane_partition_count(d) == box_count_exact(BoxDims(*d)), d


@pytest.mark.parametrize('d, count', [((2, 3, 5), 1176), ((6, 6, 1), 924), ((1, 9, 8), 24310), ((3, 3, 3), 980)])
def test_enumeration_examples(d, count):
    assert plane_partition_count(BoxDims(*d)) == count == box_count_exact(BoxDims(*d))


def test_enumeration_permutation_invariance():
    for p in itertools.permutations((2, 3, 4)):
        assert plane_partition_count(p) == box_count_exact(BoxDims(2, 3, 4))


def test_enumeration_guards():
    with pytest.raises(GuardError, match='formula path'):
        plane_partition_count((7, 6, 1))
    with pytest.raises(GuardError):
        plane_partition_count((2, 2, 9))
    assert plane_partition_count((2, 2, 9), max_height=9) == box_count_exact(BoxDims(2, 2, 9))
    with pytest.raises(DomainError):
        plane_partition_count((1, -1, 1))


def test_valuation_by_trailing_zeros():
    assert [valuation_by_trailing_zeros(x) for x in (1, 10, 20, 288, 2 ** 200 * 3)] == [0, 1, 2, 5, 200]
    with pytest.raises(DomainError):
        valuation_by_trailing_zeros(0)


def test_rational_matrix():
    A = RationalMatrix.from_rows([[1, 2], [3, 4]])
    assert (A @ RationalMatrix.identity(2)).entries == A.entries
    assert A.transpose().entries == [[1, 3], [2, 4]]
    assert (A @ A).entries == [[7, 10], [15, 22]]
    assert rational_determinant(A) == -2
    assert not A.is_skew()
    assert RationalMatrix.from_rows([[0, Fraction(1, 2)], [Fraction(-1, 2), 0]]).is_skew()


def test_canonical_form():
    C = canonical_skew_form(5, 4)
    assert C.is_skew()
    assert C.entries[0][1] == C.entries[2][3] == 1 and C.entries[1][0] == C.entries[3][2] == -1
    assert sum(x != 0 for row in C.entries for x in row) == 4
    with pytest.raises(AssertionError):
        canonical_skew_form(3, 3)


def test_reduce_zero_matrix():
    T, rank = skew_congruence_reduce(RationalMatrix.zeros(5))
    assert rank == 0
    assert T.entries == RationalMatrix.identity(5).entries


def test_reduce_canonical_block():
    T, rank = skew_congruence_reduce(RationalMatrix.from_rows([[0, 1], [-1, 0]]))
    assert rank == 2
    assert T.entries == RationalMatrix.identity(2).entries


def test_reduce_needs_swap():
    A = RationalMatrix.from_rows([[0, 0, 0, 0], [0, 0, 0, 2], [0, 0, 0, 0], [0, -2, 0, 0]])
    T, rank = skew_congruence_reduce(A)
    assert rank == 2
    assert (T @ A @ T.transpose()).entries == canonical_skew_form(4, 2).entries
    assert rational_determinant(T) != 0


def test_reduce_random():
    rng = np.random.default_rng(0)
    for trial in range(200):
        order = int(rng.integers(1, 7))
        A = random_skew_matrix(order, rng, rank_deficient=trial % 3 == 0)
        assert A.is_skew()
        T, rank = skew_congruence_reduce(A)
        assert (T @ A @ T.transpose()).entries == canonical_skew_form(order, rank).entries
        assert rational_determinant(T) != 0
        assert rank == to_sympy(A).rank()


def test_rational_determinant_sympy():
    rng = np.random.default_rng(1)
    for _ in range(50):
        order = int(rng.integers(1, 6))
        M = RationalMatrix([[Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4))) for _ in range(order)]
                            for _ in range(order)])
        det = sympy.Rational(to_sympy(M).det())
        assert rational_determinant(M) == Fraction(int(det.p), int(det.q))
    assert rational_determinant(random_skew_matrix(5, rng)) == 0  # odd order


def test_reduce_rejects():
    with pytest.raises(DomainError):
        skew_congruence_reduce(RationalMatrix.from_rows([[0, 1], [1, 0]]))
    with pytest.raises(DomainError):
        skew_congruence_reduce(RationalMatrix.from_rows([[0, 1, 2], [-1, 0, 0]]))
