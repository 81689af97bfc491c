# padic-degrees, GPL-3.0 license
"""
Plane partition box counts B(a,b,c): exact values, 2-adic valuations and parity certificates

B(a,b,c) = H(a)H(b)H(c)H(a+b+c) / (H(a+b)H(b+c)H(c+a)) with H(n) = 0! 1! ... (n-1)!. B is symmetric in (a,b,c)
and gamma_{k,m,n} = B(n-k, m-k, k).

Usage:
    from utils.boxes import BoxDims, box_valuation, box_parity_trace

    box_valuation(BoxDims(2, 2, 2))  # 2
    print(box_parity_trace(BoxDims(1, 2, 4)).to_text())
"""

import math
import threading
from dataclasses import dataclass, field
from enum import Enum
from typing import List, NamedTuple, Optional

from utils.digits import digit_sum_prefix, is_pow2
from utils.digits import disjoint_expansion as disjoint
from utils.general import DomainError, InexactDivisionError


class BoxDims(NamedTuple):
    a: int
    b: int
    c: int

    def __str__(self):
        return f'({self.a},{self.b},{self.c})'

    def sorted(self):
        return BoxDims(*sorted(self))


class TraceRule(str, Enum):
    ALL_EVEN = 'all_even'  # B(2a,2b,2c) ~ B(a,b,c)
    ONE_ODD = 'one_odd'  # B(2a+1,2b,2c) ~ B(a,b,c) B(a+1,b,c)
    TWO_ODD = 'two_odd'  # B(2a,2b+1,2c+1) ~ B(a,b+1,c) B(a,b,c+1)
    ALL_ODD_TERMINAL = 'all_odd_terminal'  # B(2a+1,2b+1,2c+1) is even
    BASE_CASE = 'base_case'  # a zero side, B = 1


@dataclass
class TraceStep:
    dims_in: BoxDims
    rule: TraceRule
    children: List[BoxDims] = field(default_factory=list)
    pruned: bool = False  # second child not visited because the first is even

    def to_text(self):
        s = f'{self.dims_in} {self.rule.value}'
        if self.children:
            s += ' -> ' + ', '.join(str(x) for x in self.children)
        return s + (' pruned' if self.pruned else '')

    def to_dict(self):
        return {
            'dims_in': list(self.dims_in),
            'rule': self.rule.value,
            'children': [list(x) for x in self.children],
            'pruned': self.pruned}


@dataclass
class ReductionTrace:
    steps: List[TraceStep]
    verdict: bool  # True if B(a,b,c) is odd

    def to_text(self):
        return '\n'.join(s.to_text() for s in self.steps)

    def to_dict(self):
        return {'steps': [s.to_dict() for s in self.steps], 'verdict': 'odd' if self.verdict else 'even'}

    @property
    def depth(self):
        return _depth(self.steps)


def _depth(steps):
    # Longest root-to-leaf chain of a preorder trace
    depth, stack = 0, []  # stack of remaining child counts on the current path
    for step in steps:
        while stack and stack[-1] == 0:
            stack.pop()
        if stack:
            stack[-1] -= 1
        visited = 0 if step.rule in (TraceRule.BASE_CASE, TraceRule.ALL_ODD_TERMINAL) else \
            len(step.children) - step.pruned
        stack.append(visited)
        depth = max(depth, len(stack))
    return depth


_H = [1, 1]  # H(0), H(1)
_H_LOCK = threading.Lock()


def hyperfactorial(n):
    """Return H(n) = 0! 1! ... (n-1)!.

    >>> hyperfactorial(0), hyperfactorial(3), hyperfactorial(5)
    (1, 2, 288)
    """
    if n < 0:
        raise DomainError(f'hyperfactorial requires n >= 0, got {n}')
    with _H_LOCK:
        while len(_H) <= n:
            k = len(_H)
            _H.append(_H[-1] * math.factorial(k - 1))
        return _H[n]


def _check_dims(d):
    d = BoxDims(*d)
    if min(d) < 0:
        raise DomainError(f'box sides must be >= 0, got {d}')
    return d


def box_count_exact(d):
    """Return B(a,b,c) from hyperfactorials by one exact division; 1 if any side is zero.

    >>> box_count_exact(BoxDims(1, 1, 1)), box_count_exact(BoxDims(1, 3, 2)), box_count_exact(BoxDims(2, 2, 2))
    (2, 10, 20)
    """
    a, b, c = _check_dims(d)
    if 0 in (a, b, c):
        return 1
    num = hyperfactorial(a) * hyperfactorial(b) * hyperfactorial(c) * hyperfactorial(a + b + c)
    den = hyperfactorial(a + b) * hyperfactorial(b + c) * hyperfactorial(c + a)
    count, r = divmod(num, den)
    if r:
        raise InexactDivisionError(f'B{BoxDims(a, b, c)} hyperfactorial quotient is not integral')
    return count


def box_count_product(d):
    # B(a,b,c) = prod_{i=1}^{a} (b+c+i-1)! (i-1)! / ((b+i-1)! (c+i-1)!)
    a, b, c = _check_dims(d)
    f = math.factorial
    num = math.prod(f(b + c + i - 1) * f(i - 1) for i in range(1, a + 1))
    den = math.prod(f(b + i - 1) * f(c + i - 1) for i in range(1, a + 1))
    count, r = divmod(num, den)
    if r:
        raise InexactDivisionError(f'B{BoxDims(a, b, c)} factorial product is not integral')
    return count


def box_valuation(d):
    """Return nu_2(B(a,b,c)) = S(a+b) + S(b+c) + S(a+c) - S(a+b+c) - S(a) - S(b) - S(c).

    >>> box_valuation(BoxDims(1, 1, 1)), box_valuation(BoxDims(2, 2, 2)), box_valuation(BoxDims(7, 9, 0))
    (1, 2, 0)
    """
    a, b, c = _check_dims(d)
    S = digit_sum_prefix
    v = S(a + b) + S(b + c) + S(a + c) - S(a + b + c) - S(a) - S(b) - S(c)
    assert v >= 0, f'negative valuation {v} for B{BoxDims(a, b, c)}'
    return v


def _reduce(d):
    # Return (rule, children) of one halving step, sides reordered as (even, odd, odd) or (odd, even, even)
    if 0 in d:
        return TraceRule.BASE_CASE, []
    odd = [x for x in d if x % 2]
    even = [x for x in d if x % 2 == 0]
    if len(odd) == 3:
        return TraceRule.ALL_ODD_TERMINAL, []
    if not odd:
        return TraceRule.ALL_EVEN, [BoxDims(*(x // 2 for x in d))]
    if len(odd) == 2:
        x, y, z = even[0] // 2, odd[0] // 2, odd[1] // 2
        return TraceRule.TWO_ODD, [BoxDims(x, y + 1, z), BoxDims(x, y, z + 1)]
    x, y, z = odd[0] // 2, even[0] // 2, even[1] // 2
    return TraceRule.ONE_ODD, [BoxDims(x, y, z), BoxDims(x + 1, y, z)]


def box_parity_trace(d):
    """Return the ReductionTrace certifying the parity of B(a,b,c) by repeated halving.

    Steps are listed in preorder, left child before right. When the left child is even the right child is skipped and
    the step is marked pruned.

    >>> print(box_parity_trace(BoxDims(2, 2, 2)).to_text())
    (2,2,2) all_even -> (1,1,1)
    (1,1,1) all_odd_terminal
    """
    steps, path = [], []  # path: [step, number of children entered] from the root to the current box
    dims = _check_dims(d)
    while True:
        rule, children = _reduce(dims)
        step = TraceStep(dims, rule, children)
        steps.append(step)
        if rule == TraceRule.ALL_ODD_TERMINAL:
            for parent, entered in path:
                parent.pruned = entered < len(parent.children)
            return ReductionTrace(steps, False)
        if children:
            path.append([step, 0])
        while path and path[-1][1] == len(path[-1][0].children):
            path.pop()
        if not path:
            return ReductionTrace(steps, True)
        dims = path[-1][0].children[path[-1][1]]
        path[-1][1] += 1


def _is_odd(d):
    # B is odd iff no box reachable by halving is all-odd; one level at a time, the frontier stays a handful of boxes
    frontier = {d}
    while frontier:
        level = set()
        for dims in frontier:
            rule, children = _reduce(dims)
            if rule == TraceRule.ALL_ODD_TERMINAL:
                return False
            level.update(x.sorted() for x in children)
        frontier = level
    return True


def box_is_odd(d):
    """Return True if B(a,b,c) is odd, halving level by level without a trace.

    >>> box_is_odd(BoxDims(1, 2, 4)), box_is_odd(BoxDims(3, 5, 7))
    (True, False)
    """
    return _is_odd(_check_dims(d).sorted())


def box_small_a_parity(d):
    """Return the closed-form parity of B(a,b,c) with a = min side in {1, 2, 3} or a power of two, else None.

    For a = 2^q >= 4 the residues of the other sides mod a must be (0, 0), (0, 1) or (1, 1) in some order.

    >>> box_small_a_parity(BoxDims(1, 2, 4)), box_small_a_parity(BoxDims(2, 2, 5)), box_small_a_parity(BoxDims(3, 4, 4))
    (True, False, False)
    >>> box_small_a_parity(BoxDims(5, 6, 7)) is None
    True
    """
    a, b, c = _check_dims(d).sorted()
    if a == 1:
        return disjoint(b, c)
    if a == 2:
        if b % 2 == c % 2 == 0:
            return disjoint(b, c)
        if b % 2 == c % 2 == 1:
            return disjoint(b, c + 1) and disjoint(b + 1, c)
        e, o = (b, c) if b % 2 == 0 else (c, b)
        return disjoint(e, o) and disjoint(e, o + 1)
    if a == 3:
        if b % 2 == c % 2 == 1:
            return False
        if b % 2 == c % 2 == 0:
            x, y = (b, c) if b % 4 == 0 else (c, b)  # x = 0 mod 4 if either is
            if x % 4 == 2:
                return False  # both 2 mod 4
            if y % 4 == 0:
                return disjoint(x, y)
            return disjoint(x, y) and disjoint(x, y + 2)
        e, o = (b, c) if b % 2 == 0 else (c, b)
        if e % 4 == 0:
            return disjoint(e, o) and disjoint(e, o + 1)
        return disjoint(e, o + 1) and disjoint(e + 2, o)
    if a >= 4 and is_pow2(a):
        rb, rc = b % a, c % a
        if rb == rc == 0:
            return disjoint(b, c)
        if {rb, rc} == {0, 1}:
            x, y = (b, c) if rb == 0 else (c, b)  # x = 0, y = 1 mod a
            return disjoint(x, y) and disjoint(x, y + a - 1)
        if rb == rc == 1:
            return (disjoint(b + 1, c) and disjoint(b, c + 1) and disjoint(b + a - 1, c) and
                    disjoint(b, c + a - 1))
    return None


def gamma_valuation(k, m, n):
    # nu_2(gamma_{k,m,n}) = nu_2(B(n-k, m-k, k))
    if not 1 <= k <= min(m, n):
        raise DomainError(f'gamma_{{k,m,n}} requires 1 <= k <= min(m, n), got k={k}, m={m}, n={n}')
    return box_valuation(BoxDims(n - k, m - k, k))


def gamma_odd_case_check(k, m, n) -> Optional[bool]:
    """Return True if (k, m, n) matches one of the listed sufficient conditions for gamma_{k,m,n} odd, else None.

    None carries no parity information.

    >>> gamma_odd_case_check(1, 3, 2), gamma_odd_case_check(3, 6, 4)
    (True, None)
    """
    if not 1 <= k < n <= m:
        raise DomainError(f'case list requires 1 <= k < n <= m, got k={k}, m={m}, n={n}')
    D = disjoint
    cases = []
    if k == n - 1:
        cases.append(D(m - n + 1, n - 1))
    if k == n - 2 and k >= 2:
        if n % 2 == 0 and m % 2 == 0:
            cases.append(D(n - 2, m - n + 2))
        if n % 2 == 0 and m % 2 == 1:
            cases.append(D(n - 2, m - n + 2) and D(n - 2, m - n + 3))
        if n % 2 == 1 and m % 2 == 0:
            cases.append(D(n - 2, m - n + 3) and D(n - 1, m - n + 2))
    if k == n - 3 and k >= 3:
        if (n - 3) % 4 == 0 and m % 4 == 0:
            cases.append(D(n - 3, m - n + 3))
        if (n - 3) % 4 == 0 and (m + 2) % 4 == 0:
            cases.append(D(n - 3, m - n + 3) and D(n - 3, m - n + 5))
        if (n - 1) % 4 == 0 and (m + 2) % 4 == 0:
            cases.append(D(n - 3, m - n + 3) and D(n - 1, m - n + 3))
        # (n - 1) % 4 == 0 and m % 4 == 0 never matches: both box sides are 2 mod 4 and the count is even
        if (n - 3) % 4 == 0 and m % 2 == 1:
            cases.append(D(n - 3, m - n + 3) and D(n - 3, m - n + 4))
        if (n - 1) % 4 == 0 and m % 2 == 1:
            cases.append(D(n - 3, m - n + 4) and D(n - 1, m - n + 3))
        if (m - n + 3) % 4 == 0 and n % 2 == 0:
            cases.append(D(n - 3, m - n + 3) and D(n - 2, m - n + 3))
        if (m - n + 5) % 4 == 0 and n % 2 == 0:
            cases.append(D(n - 2, m - n + 3) and D(n - 3, m - n + 5))
    a = n - k
    if is_pow2(a):
        if k % a == 0 and m % a == 0:
            cases.append(D(k, m - k))
        if k % a == 0 and (m - 1) % a == 0:
            cases.append(D(k, m - k) and D(k, m - k + a - 1))
        if 2 * a < n and (k - 1) % a == 0 and (m - 1) % a == 0:
            cases.append(D(k, m - k) and D(k + a - 1, m - k))
        if 2 * a < n and (k - 1) % a == 0 and (m - 2) % a == 0:
            cases.append(D(k + 1, m - k) and D(k, m - k + 1) and D(k + a - 1, m - k) and D(k, m - k + a - 1))
    return True if any(cases) else None
