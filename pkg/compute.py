# padic-degrees, GPL-3.0 license
"""
Compute one degree record: 2-adic valuation, parity and optionally the exact value

Usage:
    $ python compute.py theta --q 39 --n 45 --format json
    $ python compute.py delta --k 2 --n 4 --exact
    $ python compute.py epsilon --p 2 --n 6
    $ python compute.py gamma --k 2 --m 4 --n 4 --exact
    $ python compute.py box --a 2 --b 2 --c 2 --exact --trace

Exit codes: 0 ok, 2 usage, 3 domain or guard violation.
"""

import argparse
import sys
from pathlib import Path

FILE = Path(__file__).resolve()
ROOT = FILE.parents[0]  # padic-degrees root directory
if str(ROOT) not in sys.path:
    sys.path.append(str(ROOT))  # add ROOT to PATH

from utils.boxes import BoxDims, box_count_exact, box_parity_trace, box_valuation, gamma_valuation
from utils.degrees import epsilon_exact, epsilon_valuation, gamma_exact
from utils.digits import integer_valuation
from utils.general import LOGGER, DomainError, check_guard, load_guards, print_args
from utils.records import RecordWriter, exact_str, timestamp
from utils.theta import delta_exact, theta_exact, theta_valuation

TARGETS = {
    'theta': ('q', 'n'),
    'delta': ('k', 'n'),
    'epsilon': ('p', 'n'),
    'gamma': ('k', 'm', 'n'),
    'box': ('a', 'b', 'c')}


def valuation_and_exact(target, args, exact=False, guards=None):
    # Return (valuation, exact value or None) of one target, exact values checked against the guards
    if target == 'theta':
        q, n = args
        v, size, key, evaluate = theta_valuation(q, n), n, 'exact_theta_max_n', lambda: theta_exact(q, n)
    elif target == 'delta':
        k, n = args
        if not 0 <= k <= n:
            raise DomainError(f'delta_{{k,n}} requires 0 <= k <= n, got k={k}, n={n}')
        v, size, key, evaluate = theta_valuation(n - k, n), n, 'exact_theta_max_n', lambda: delta_exact(k, n)
    elif target == 'epsilon':
        p, n = args
        v, size, key, evaluate = epsilon_valuation(p, n), n, 'exact_theta_max_n', lambda: epsilon_exact(p, n)
        if p == n // 2:
            LOGGER.warning(f'epsilon: p={p} = n // 2 is degenerate, degree 1 by convention')
    elif target == 'gamma':
        k, m, n = args
        v, size, key, evaluate = gamma_valuation(k, m, n), m + n - k, 'exact_box_max_sum', lambda: gamma_exact(k, m, n)
    else:
        d = BoxDims(*args)
        v, size, key, evaluate = box_valuation(d), sum(d), 'exact_box_max_sum', lambda: box_count_exact(d)
    if not exact:
        return v, None
    check_guard(size, guards, key, f'{target} size')
    x = evaluate()
    assert integer_valuation(x) == v, f'{target}{args}: exact value disagrees with valuation {v}'
    return v, x


def run(
        target='theta',  # theta, delta, epsilon, gamma or box
        q=None,  # theta factors
        n=None,  # matrix order / columns
        k=None,  # rank bound
        m=None,  # rows
        p=None,  # half skew rank
        a=None,  # box sides
        b=None,
        c=None,
        exact=False,  # include exact value as decimal string
        trace=False,  # include reduction trace (box only)
        format='json',  # json or csv
        guards=None,  # guard override YAML
        timestamps=False,  # append UTC timestamp
        stream=None,  # output stream, default stdout
):
    values = dict(q=q, n=n, k=k, m=m, p=p, a=a, b=b, c=c)
    names = TARGETS[target]
    args = tuple(values[x] for x in names)
    if any(x < 0 for x in args):
        raise DomainError(f'{target}: parameters must be >= 0, got {dict(zip(names, args))}')
    v, x = valuation_and_exact(target, args, exact, load_guards(guards))

    record = dict(zip(names, args))
    record.update(valuation=v, odd=v == 0)
    if x is not None:
        record['exact'] = exact_str(x)
    if trace and target == 'box':
        t = box_parity_trace(BoxDims(*args))
        assert t.verdict == (v == 0), f'trace verdict disagrees with valuation {v}'
        record['trace'] = t.to_dict() if format == 'json' else t.to_text().replace('\n', '; ')
    elif trace:
        LOGGER.warning(f'compute: --trace applies to box only, ignored for {target}')
    if timestamps:
        record['timestamp'] = timestamp()
    RecordWriter(stream or sys.stdout, format).write(record)
    return record


def parse_opt(argv=None):
    parser = argparse.ArgumentParser(description='compute one degree record')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--exact', action='store_true', help='include exact value as a decimal string')
    common.add_argument('--format', type=str, choices=('json', 'csv'), default='json', help='output format')
    common.add_argument('--guards', type=str, default=None, help='guard override YAML, i.e. my_guards.yaml')
    common.add_argument('--timestamps', action='store_true', help='append a UTC timestamp field')
    sub = parser.add_subparsers(dest='target', required=True)
    for target, names in TARGETS.items():
        s = sub.add_parser(target, parents=[common], help=f'{target} record ({", ".join(names)})')
        for x in names:
            s.add_argument(f'--{x}', type=int, required=True, help=f'{x} (integer >= 0)')
        if target == 'box':
            s.add_argument('--trace', action='store_true', help='include the parity reduction trace')
    opt = parser.parse_args(argv)
    print_args(vars(opt))
    return opt


def main(opt):
    try:
        run(**vars(opt))
    except DomainError as e:
        LOGGER.error(f'compute: {e}')
        return 3
    return 0


if __name__ == "__main__":
    opt = parse_opt()
    sys.exit(main(opt))
