# padic-degrees, GPL-3.0 license
"""
Independent oracles: plane partition enumeration and exact congruence reduction of skew-symmetric matrices

Usage:
    from utils.oracles import RationalMatrix, plane_partition_count, skew_congruence_reduce

    plane_partition_count(BoxDims(2, 2, 2))  # 20
    T, rank = skew_congruence_reduce(RationalMatrix.from_rows([[0, 3], [-3, 0]]))  # rank 2
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import List, NamedTuple

import numpy as np

from utils.boxes import BoxDims
from utils.digits import integer_valuation
from utils.general import DomainError, GuardError

valuation_by_trailing_zeros = integer_valuation  # nu_2 of an exact value


def plane_partition_count(d, max_cells=36, max_height=8):
    """Count a x b arrays with entries in [0, c], weakly decreasing along rows and columns.

    Depth-first over cells in row-major order with per-cell bound min(above, left), memoized on the last row profile.

    >>> plane_partition_count(BoxDims(1, 1, 1)), plane_partition_count(BoxDims(2, 2, 2)), plane_partition_count((3, 2, 0))
    (2, 20, 1)
    """
    a, b, c = BoxDims(*d)
    if min(a, b, c) < 0:
        raise DomainError(f'box sides must be >= 0, got {BoxDims(a, b, c)}')
    if 0 in (a, b, c):
        return 1  # only the empty or zero array
    if a * b > max_cells or c > max_height:
        raise GuardError(f'enumeration of {BoxDims(a, b, c)} exceeds a*b <= {max_cells}, c <= {max_height}, '
                         f'use formula path')
    w = min(a, b)  # row length, transpose is a bijection
    cells = a * b

    @lru_cache(maxsize=None)
    def count(i, profile):
        # profile[j] is the latest value in column j
        if i == cells:
            return 1
        j = i % w
        bound = min(profile[j], profile[j - 1] if j else c)
        return sum(count(i + 1, profile[:j] + (v,) + profile[j + 1:]) for v in range(bound + 1))

    return count(0, (c,) * w)


@dataclass
class RationalMatrix:
    entries: List[List[Fraction]]

    @property
    def order(self):
        return len(self.entries)

    @classmethod
    def from_rows(cls, rows):
        return cls([[Fraction(x) for x in row] for row in rows])

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, n):
        return cls([[Fraction(0)] * n for _ in range(n)])

    def copy(self):
        return RationalMatrix([row[:] for row in self.entries])

    def transpose(self):
        return RationalMatrix([list(col) for col in zip(*self.entries)])

    def __matmul__(self, other):
        cols = list(zip(*other.entries))
        return RationalMatrix([[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols]
                               for row in self.entries])

    def is_skew(self):
        n = self.order
        return all(len(row) == n for row in self.entries) and \
            all(self.entries[i][j] == -self.entries[j][i] for i in range(n) for j in range(i, n))


class SkewReduction(NamedTuple):
    T: RationalMatrix  # invertible, T A T^t canonical
    rank: int


def canonical_skew_form(order, rank):
    # Block diagonal S2 + ... + S2 + 0 with S2 = [[0, 1], [-1, 0]]
    assert rank % 2 == 0 and rank <= order, f'invalid rank {rank} for order {order}'
    C = RationalMatrix.zeros(order)
    for k in range(0, rank, 2):
        C.entries[k][k + 1], C.entries[k + 1][k] = Fraction(1), Fraction(-1)
    return C


def skew_congruence_reduce(A):
    """Return SkewReduction(T, rank) with T A T^t = S2 + ... + S2 + 0 exactly over the rationals.

    Pivot is the first nonzero entry above the diagonal, row-major, of the unreduced block. It is moved to (k, k+1),
    index k+1 is scaled by 1/b so the block is S2, and the pivot rows and columns are cleared by adding multiples of
    indices k and k+1. Each operation is applied to rows and columns of the working matrix and to rows of T.

    >>> T, rank = skew_congruence_reduce(RationalMatrix.from_rows([[0, 3], [-3, 0]]))
    >>> rank, T.entries
    (2, [[Fraction(1, 1), Fraction(0, 1)], [Fraction(0, 1), Fraction(1, 3)]])
    """
    if not A.is_skew():
        raise DomainError('congruence reduction requires a square skew-symmetric matrix')
    n = A.order
    M = A.copy().entries
    T = RationalMatrix.identity(n).entries

    def swap(i, j):
        if i != j:
            M[i], M[j] = M[j], M[i]
            for row in M:
                row[i], row[j] = row[j], row[i]
            T[i], T[j] = T[j], T[i]

    def scale(i, f):
        M[i] = [x * f for x in M[i]]
        for row in M:
            row[i] *= f
        T[i] = [x * f for x in T[i]]

    def add_multiple(s, t, f):
        # index t += f * index s
        M[t] = [x + f * y for x, y in zip(M[t], M[s])]
        for row in M:
            row[t] += f * row[s]
        T[t] = [x + f * y for x, y in zip(T[t], T[s])]

    k = 0
    while k + 1 < n:
        pivot = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if M[i][j]), None)
        if pivot is None:
            break
        i, j = pivot
        swap(k, i)
        swap(k + 1, j)
        scale(k + 1, 1 / M[k][k + 1])
        for t in range(k + 2, n):
            x, y = M[k][t], M[k + 1][t]
            if y:
                add_multiple(k, t, y)
            if x:
                add_multiple(k + 1, t, -x)
        k += 2

    result = SkewReduction(RationalMatrix(T), k)
    assert M == canonical_skew_form(n, k).entries, 'congruence reduction did not reach the canonical form'
    return result


def rational_determinant(M):
    """Return det(M) exactly by fraction Gaussian elimination.

    >>> rational_determinant(RationalMatrix.from_rows([[0, 1], [-1, 0]]))
    Fraction(1, 1)
    """
    a = M.copy().entries
    n, det = len(a), Fraction(1)
    for c in range(n):
        r = next((r for r in range(c, n) if a[r][c]), None)
        if r is None:
            return Fraction(0)
        if r != c:
            a[c], a[r] = a[r], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return det


def random_skew_matrix(order, rng: np.random.Generator, max_num=5, max_den=4, rank_deficient=False):
    # Skew-symmetric matrix with small rational entries, some indices zeroed when rank_deficient
    A = RationalMatrix.zeros(order)
    for i in range(order):
        for j in range(i + 1, order):
            x = Fraction(int(rng.integers(-max_num, max_num + 1)), int(rng.integers(1, max_den + 1)))
            A.entries[i][j], A.entries[j][i] = x, -x
    if rank_deficient and order:
        for i in rng.choice(order, size=int(rng.integers(1, order + 1)), replace=False):
            for j in range(order):
                A.entries[i][j] = A.entries[j][i] = Fraction(0)
    return A
