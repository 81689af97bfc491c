# padic-degrees, GPL-3.0 license
"""
Verify the closed forms against exact arithmetic and the independent oracles

Usage:
    $ python verify.py --suite all
    $ python verify.py --suite digit --bound 1000
    $ python verify.py --suite theta --bound 200
    $ python verify.py --suite box --bound 32
    $ python verify.py --suite halving --bound 64

Suites: digit, theta, interval, valuation_one, epsilon, box, halving, skew, all.
Prints one table row per suite (checks, passed, failed, first counterexample).
Exit codes: 0 all pass, 1 any failure, 2 usage, 3 domain or guard violation.
"""

import argparse
import itertools
import math
import sys
from pathlib import Path

import numpy as np
import pandas as pd
from tqdm import tqdm

FILE = Path(__file__).resolve()
ROOT = FILE.parents[0]  # padic-degrees root directory
if str(ROOT) not in sys.path:
    sys.path.append(str(ROOT))  # add ROOT to PATH

from utils import check_setup
from utils.boxes import (BoxDims, box_count_exact, box_is_odd, box_parity_trace, box_small_a_parity, box_valuation,
                         gamma_odd_case_check, hyperfactorial)
from utils.callbacks import Callbacks
from utils.degrees import epsilon_exact, epsilon_is_odd, epsilon_valuation, gamma_exact
from utils.digits import (binomial_valuation, ceil_pow2, digit_sum, digit_sum_prefix, digit_sum_window,
                          disjoint_expansion, factorial_valuation, hyperfactorial_valuation, integer_valuation)
from utils.general import LOGGER, SEQUENCES, DomainError, Profile, colorstr, load_guards, print_args, yaml_load
from utils.oracles import (canonical_skew_form, plane_partition_count, random_skew_matrix, rational_determinant,
                           skew_congruence_reduce)
from utils.theta import (IntervalKind, interval_report, nu_sequence, theta_column, theta_exact, theta_is_odd,
                         theta_step_valuation, theta_valuation, theta_valuation_factorial, valuation_one_sites)

SUITE_NAMES = ('digit', 'theta', 'interval', 'valuation_one', 'epsilon', 'box', 'halving', 'skew')


def digit_suite(bound, **kwargs):
    # Digit sums, prefix sums, Legendre, carries, subadditivity and window inequalities
    for n in range(bound + 1):
        s = digit_sum(n)
        yield f's({n})', s == bin(n).count('1') and digit_sum(2 * n) == s and digit_sum(2 * n + 1) == s + 1
    for e in range(17):
        m = (1 << e) - 1
        yield f'reflection e={e}', all(digit_sum(m - k) == e - digit_sum(k) for k in range(m + 1))
    total = 0
    for a in range(10 * bound + 1):
        yield f'S({a})', digit_sum_prefix(a) == total
        total += digit_sum(a)
    S = digit_sum_prefix
    for p in range(5 * bound + 1):
        yield f'S halving p={p}', S(2 * p) == 2 * S(p) + p and S(2 * p + 1) == S(p + 1) + S(p) + p
    f = 1
    for n in range(min(2 * bound, 2000) + 1):
        f *= max(n, 1)
        yield f'nu_2({n}!)', factorial_valuation(n) == integer_valuation(f)
    r = min(bound, 512)
    for b in range(r + 1):
        yield f'subadditivity b={b}', all(
            digit_sum(b + c) <= digit_sum(b) + digit_sum(c) and
            (digit_sum(b + c) == digit_sum(b) + digit_sum(c)) == disjoint_expansion(b, c) for c in range(r + 1))
    r = min(bound, 256)
    for l, p in itertools.product(range(r + 1), repeat=2):
        w = digit_sum_window(l, p)
        ok = w >= S(p) and (w == S(p)) == (p == 0 or l == 0)
        ok &= w >= p + S(p) if l >= p else w >= l + S(p)
        yield f'window l={l}, p={p}', ok
    for b, c in itertools.product(range(65), repeat=2):
        yield f'carries b={b}, c={c}', binomial_valuation(b, c) == integer_valuation(math.comb(b + c, b))
    for a in range(1, 65):
        yield f'nu_2(H({a}))', hyperfactorial_valuation(a) == integer_valuation(hyperfactorial(a))


def theta_suite(bound, **kwargs):
    # Exact vs formula, parity criterion, odd-difference law, ratio recursion, reference sequences
    for n in range(1, bound + 1):
        column = theta_column(n)
        for q in range(1, n + 1):
            v = theta_valuation(q, n)
            ok = v == integer_valuation(column[q]) and theta_is_odd(q, n) == (v == 0)
            ok &= theta_valuation_factorial(q, n) == v
            if (n - q) % 2:
                ok &= v == theta_valuation(q + 1, n) + q and v >= q
            if n <= 80 and q < n:
                ok &= theta_step_valuation(q, n) == v
            if n <= 40:
                ok &= theta_exact(q, n) == column[q]
            yield f'theta q={q}, n={n}', ok
    for q, seq in yaml_load(SEQUENCES).items():
        got = nu_sequence(q, len(seq) - 1)
        yield f'reference sequence q={q}', np.array_equal(np.array(got), np.array(seq))


def interval_suite(bound, **kwargs):
    # Interval endpoints, symmetry, bounds and closed-form centers for q <= bound, c <= 3
    for q, c, kind in itertools.product(range(1, bound + 1), range(4), IntervalKind):
        yield f'interval q={q}, c={c}, {kind.value}', interval_report(q, c, kind).ok


def valuation_one_suite(bound, **kwargs):
    # Closed-form valuation-1 sites against a direct scan
    for q, c in itertools.product(range(1, bound + 1), range(4)):
        Q = ceil_pow2(q)
        scan = [i for i in range(c * Q, (c + 1) * Q + 1) if theta_valuation(q, q + 2 * i) == 1]
        yield f'valuation-1 sites q={q}, c={c}', valuation_one_sites(q, c) == scan


def epsilon_suite(bound, **kwargs):
    # Skew degrees: parity criterion, exact division, valuation through theta
    for n in range(4, bound + 1):
        column = theta_column(n)
        for p in range(1, n // 2):
            e = n - 2 * p - 1
            eps, r = divmod(column[e], 1 << e)
            ok = r == 0 and eps % 2 == epsilon_is_odd(p, n) and integer_valuation(eps) == epsilon_valuation(p, n)
            if n <= 60:
                ok &= epsilon_exact(p, n) == eps
            yield f'epsilon p={p}, n={n}', ok
        if n % 4 == 2:
            yield f'singular pencil n={n}', epsilon_is_odd((n - 2) // 2, n)


def box_suite(bound, guards=None, **kwargs):
    # Box counts: formula vs exact, traces, enumeration oracle, closed forms, gamma bridge
    guards = guards or load_guards()
    for a in range(bound + 1):
        for b in range(a, bound + 1):
            for c in range(b, bound + 1):
                d = BoxDims(a, b, c)
                x, v, t = box_count_exact(d), box_valuation(d), box_parity_trace(d)
                ok = v == integer_valuation(x) and t.verdict == (x % 2 == 1) and t.verdict == box_is_odd(d)
                ok &= t.depth <= max(d).bit_length() + 1
                yield f'B{d}', ok
    kw = dict(max_cells=guards['enum_max_cells'], max_height=guards['enum_max_height'])
    for d in itertools.chain(itertools.product(range(6), repeat=3), [(2, 3, 6), (6, 6, 1)]):
        yield f'enumeration {d}', plane_partition_count(d, **kw) == box_count_exact(d)
    for a in 1, 2, 3, 4, 8, 16:
        for b in range(a, 4 * bound + 1):
            for c in range(b, 4 * bound + 1):
                closed = box_small_a_parity(BoxDims(a, b, c))
                if closed is not None:
                    yield f'closed form ({a},{b},{c})', closed == box_is_odd(BoxDims(a, b, c))
    r = min(bound, 24)
    for m, n in itertools.product(range(1, r + 1), repeat=2):
        for k in range(1, min(m, n)):
            odd = gamma_exact(k, m, n) % 2 == 1
            ok = odd == box_parity_trace(BoxDims(n - k, m - k, k)).verdict
            if n <= m:
                ok &= gamma_odd_case_check(k, m, n) is None or odd
            yield f'gamma k={k}, m={m}, n={n}', ok


def halving_suite(bound, **kwargs):
    # Valuation halving identities and permutation symmetry of valuations and trace verdicts, sides <= bound
    S, nu = digit_sum, lambda *d: box_valuation(BoxDims(*d))
    for a, b, c in itertools.product(range(bound + 1), repeat=3):
        ok = nu(2 * a, 2 * b, 2 * c) == 2 * nu(a, b, c)
        ok &= nu(2 * a, 2 * b + 1, 2 * c + 1) == nu(a, b + 1, c) + nu(a, b, c + 1)
        ok &= nu(2 * a + 1, 2 * b, 2 * c) == nu(a, b, c) + nu(a + 1, b, c)
        ok &= nu(2 * a + 1, 2 * b + 1, 2 * c + 1) == nu(a, b + 1, c + 1) + nu(a + 1, b, c) + S(b + c) - S(b + c + 1) + 2
        yield f'halving identities ({a},{b},{c})', ok
    for d in itertools.combinations_with_replacement(range(bound + 1), 3):
        perms = set(itertools.permutations(d))
        ok = len({nu(*x) for x in perms}) == 1
        ok &= len({box_parity_trace(BoxDims(*x)).verdict for x in perms}) == 1
        yield f'symmetry {d}', ok


def skew_suite(bound, seed=0, **kwargs):
    # Randomized exact congruence reductions of skew-symmetric matrices, order <= 8
    rng = np.random.default_rng(seed)
    for t in range(bound):
        order = int(rng.integers(1, 9))
        A = random_skew_matrix(order, rng, rank_deficient=t % 3 == 0)
        T, rank = skew_congruence_reduce(A)
        ok = rank % 2 == 0 and rational_determinant(T) != 0
        ok &= T @ A @ T.transpose() == canonical_skew_form(order, rank)
        yield f'skew matrix #{t} order={order}', ok


SUITES = {
    'digit': digit_suite,
    'theta': theta_suite,
    'interval': interval_suite,
    'valuation_one': valuation_one_suite,
    'epsilon': epsilon_suite,
    'box': box_suite,
    'halving': halving_suite,
    'skew': skew_suite}


def run_suite(name, bound, callbacks=None, **kwargs):
    # Return report row for one suite
    callbacks = callbacks or Callbacks()
    callbacks.run('on_suite_start', name, bound)
    checks, failed, first = 0, 0, ''
    with Profile(f'{colorstr("verify: ")}{name} suite'):
        for label, ok in SUITES[name](bound, **kwargs):
            checks += 1
            if not ok:
                failed += 1
                if not first:
                    first = label
                    callbacks.run('on_check_fail', name, label)
    row = dict(suite=name, bound=bound, checks=checks, passed=checks - failed, failed=failed,
               first_counterexample=first or '-')
    callbacks.run('on_suite_end', row)
    return row


def run(
        suite='all',  # suite name or all
        bound=None,  # scan bound, default per suite from data/guards.yaml
        seed=0,  # skew suite random seed
        guards=None,  # guard override YAML
        callbacks=None,  # Callbacks instance
        stream=None,  # report stream, default stdout
):
    check_setup()
    guards = load_guards(guards)
    callbacks = callbacks or Callbacks()
    callbacks.register_action('on_check_fail', 'log', lambda s, label: LOGGER.warning(f'{s}: FAILED {label}'))
    names = SUITE_NAMES if suite == 'all' else (suite,)
    defaults = {**guards['verify'], 'valuation_one': guards['verify']['interval']}
    callbacks.run('on_verify_start', names)
    rows = []
    for name in tqdm(names, desc=colorstr('verify: '), file=sys.stderr):
        b = bound if bound is not None else defaults[name]
        if b < 0:
            raise DomainError(f'--bound must be >= 0, got {b}')
        rows.append(run_suite(name, b, callbacks, seed=seed, guards=guards))
    report = pd.DataFrame(rows)
    print(report.to_string(index=False), file=stream or sys.stdout)
    ok = bool((report['failed'] == 0).all())
    callbacks.run('on_verify_end', report, ok)
    LOGGER.info(f'verify: {"all suites passed" if ok else colorstr("red", "bold", "failures found")}')
    return report, ok


def parse_opt(argv=None):
    parser = argparse.ArgumentParser(description='verify closed forms against exact arithmetic and oracles')
    parser.add_argument('--suite', type=str, choices=SUITE_NAMES + ('all',), default='all', help='suite to run')
    parser.add_argument('--bound', type=int, default=None, help='scan bound override, default from guards')
    parser.add_argument('--seed', type=int, default=0, help='random seed of the skew suite')
    parser.add_argument('--guards', type=str, default=None, help='guard override YAML, i.e. my_guards.yaml')
    opt = parser.parse_args(argv)
    print_args(vars(opt))
    return opt


def main(opt):
    try:
        _, ok = run(**vars(opt))
    except DomainError as e:
        LOGGER.error(f'verify: {e}')
        return 3
    return 0 if ok else 1


if __name__ == "__main__":
    opt = parse_opt()
    sys.exit(main(opt))
