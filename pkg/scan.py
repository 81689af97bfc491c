# padic-degrees, GPL-3.0 license
"""
Scan valuation landscapes over inclusive parameter ranges lo:hi[:step], one row per tuple in row-major order

Usage:
    $ python scan.py theta --q 39 --i 0:199 --format csv
    $ python scan.py epsilon --n 6:50:4 --p-below-half 1
    $ python scan.py gamma --k 1:6 --m 1:12 --n 1:12 --format json
    $ python scan.py box --a 1:4 --b 1:4 --c 1:4 --exact --parallelism 4

Row order does not depend on --parallelism. Tuples outside a family's domain are skipped.
Exit codes: 0 ok, 2 usage, 3 domain or guard violation.
"""

import argparse
import itertools
import sys
from multiprocessing.pool import ThreadPool
from pathlib import Path

FILE = Path(__file__).resolve()
ROOT = FILE.parents[0]  # padic-degrees root directory
if str(ROOT) not in sys.path:
    sys.path.append(str(ROOT))  # add ROOT to PATH

from utils.boxes import BoxDims, box_count_exact, box_valuation, gamma_valuation
from utils.degrees import epsilon_exact, epsilon_is_odd, epsilon_valuation, gamma_exact
from utils.general import LOGGER, THREADS, DomainError, Profile, check_guard, colorstr, load_guards, print_args, \
    resolve_workers
from utils.records import COLUMNS, RecordWriter, exact_str, timestamp
from utils.theta import ThetaQuery, theta_exact, theta_valuation

PARAMS = {
    'theta': ('q', 'i'),
    'epsilon': ('n', 'p'),  # n outer, p inner
    'gamma': ('k', 'm', 'n'),
    'box': ('a', 'b', 'c')}


def parse_range(s):
    """Parse an inclusive range 'lo:hi[:step]' or a single integer.

    >>> list(parse_range('0:6:2')), list(parse_range('5'))
    ([0, 2, 4, 6], [5])
    """
    try:
        parts = [int(x) for x in str(s).split(':')]
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range '{s}', expected lo:hi[:step]")
    if len(parts) == 1:
        parts = parts * 2
    if len(parts) not in (2, 3) or (len(parts) == 3 and parts[2] < 1) or parts[0] > parts[1]:
        raise argparse.ArgumentTypeError(f"invalid range '{s}', expected lo <= hi and step >= 1")
    lo, hi, step = parts if len(parts) == 3 else (*parts, 1)
    return range(lo, hi + 1, step)


def scan_tuples(target, ranges, p_below_half=None):
    # Yield (tuple, in_domain) in row-major order over the ranges
    if target == 'theta':
        for q, i in itertools.product(ranges['q'], ranges['i']):
            yield (q, i), q >= 0 and i >= 0
    elif target == 'epsilon':
        for n in ranges['n']:
            ps = [n // 2 - p_below_half] if p_below_half is not None else ranges['p']
            for p in ps:
                yield (p, n), n >= 2 and 1 <= p <= n // 2
    elif target == 'gamma':
        for k, m, n in itertools.product(ranges['k'], ranges['m'], ranges['n']):
            yield (k, m, n), 1 <= k <= min(m, n)
    else:
        for d in itertools.product(ranges['a'], ranges['b'], ranges['c']):
            yield d, min(d) >= 0


def exact_size(target, t):
    # (guard key, size) of the exact evaluation of one tuple
    if target == 'theta':
        q, i = t
        return 'exact_theta_max_n', q + 2 * i
    if target == 'epsilon':
        return 'exact_theta_max_n', t[1]
    if target == 'gamma':
        k, m, n = t
        return 'exact_box_max_sum', m + n - k
    return 'exact_box_max_sum', sum(t)


def scan_row(target, t, exact=False):
    # One output record, keys as COLUMNS[target]
    if target == 'theta':
        q, i = t
        query = ThetaQuery(q, q + 2 * i)
        row = dict(q=q, i=i, n=query.n, valuation=theta_valuation(*query))
        x = theta_exact(*query) if exact else None
    elif target == 'epsilon':
        p, n = t
        v = epsilon_valuation(p, n)
        odd = epsilon_is_odd(p, n) if n >= 4 and p < n // 2 else v == 0
        assert odd == (v == 0), f'epsilon parity criterion disagrees with valuation at p={p}, n={n}'
        row = dict(p=p, n=n, valuation=v, odd=odd)
        x = epsilon_exact(p, n) if exact else None
    elif target == 'gamma':
        k, m, n = t
        v = gamma_valuation(k, m, n)
        row = dict(k=k, m=m, n=n, valuation=v, odd=v == 0)
        x = gamma_exact(k, m, n) if exact else None
    else:
        d = BoxDims(*t)
        v = box_valuation(d)
        row = dict(a=d.a, b=d.b, c=d.c, valuation=v, odd=v == 0)
        x = box_count_exact(d) if exact else None
    if x is not None:
        row['exact'] = exact_str(x)
    return row


def run(
        target='theta',  # theta, epsilon, gamma or box
        q=None,  # ranges, lo:hi[:step]
        i=None,
        n=None,
        p=None,
        k=None,
        m=None,
        a=None,
        b=None,
        c=None,
        p_below_half=None,  # epsilon: p = n // 2 - K instead of --p
        exact=False,  # append exact value column
        format='csv',  # csv or json
        parallelism=THREADS,  # worker threads, 0 = auto
        guards=None,  # guard override YAML
        timestamps=False,  # append UTC timestamp column
        chunksize=64,  # tuples per worker task
        stream=None,  # output stream, default stdout
):
    values = dict(q=q, i=i, n=n, p=p, k=k, m=m, a=a, b=b, c=c)
    ranges = {x: values[x] for x in PARAMS[target]}
    if target == 'epsilon' and p_below_half is not None:
        ranges.pop('p')
    missing = [x for x, r in ranges.items() if r is None]
    if missing:
        raise DomainError(f'{target} scan requires ranges for {", ".join("--" + x for x in missing)}')

    skipped = 0

    def in_domain():
        # Tuples of the domain in row-major order, the rest counted as skipped
        nonlocal skipped
        for t, ok in scan_tuples(target, ranges, p_below_half):
            if ok:
                yield t
            else:
                skipped += 1

    if exact:  # separate pass, so a guard violation stops the scan before any row is written
        key, size = max((exact_size(target, t) for t in in_domain()), key=lambda x: x[1], default=(None, 0))
        if key:
            check_guard(size, load_guards(guards), key, f'{target} scan size')
        skipped = 0

    columns = COLUMNS[target] + (['exact'] if exact else []) + (['timestamp'] if timestamps else [])
    writer = RecordWriter(stream or sys.stdout, format, columns)
    workers = resolve_workers(parallelism)
    tuples = in_domain()
    with Profile(f'{colorstr("scan: ")}{target}, {workers} workers'), ThreadPool(workers) as pool:
        while True:
            batch = list(itertools.islice(tuples, chunksize * workers * 16))  # bounded queue, rows stream out
            if not batch:
                break
            for row in pool.imap(lambda t: scan_row(target, t, exact), batch, chunksize):  # ordered
                if timestamps:
                    row['timestamp'] = timestamp()
                writer.write(row)
    writer.header()  # empty scans still carry the CSV header
    if skipped:
        LOGGER.info(f'{colorstr("scan: ")}{skipped} tuples outside the {target} domain skipped')
    LOGGER.info(f'{colorstr("scan: ")}{writer.n} rows written')
    return writer.n


def parse_opt(argv=None):
    parser = argparse.ArgumentParser(description='scan valuation landscapes')
    parser.add_argument('target', type=str, choices=tuple(PARAMS), help='quantity to scan')
    for x in 'q', 'i', 'n', 'p', 'k', 'm', 'a', 'b', 'c':
        parser.add_argument(f'--{x}', type=parse_range, default=None, help=f'{x} range lo:hi[:step], inclusive')
    parser.add_argument('--p-below-half', type=int, default=None, help='epsilon: only p = n // 2 - K')
    parser.add_argument('--exact', action='store_true', help='append exact values as decimal strings')
    parser.add_argument('--format', type=str, choices=('csv', 'json'), default='csv', help='csv or json lines')
    parser.add_argument('--parallelism', type=int, default=THREADS, help='worker threads, 0 = auto')
    parser.add_argument('--guards', type=str, default=None, help='guard override YAML, i.e. my_guards.yaml')
    parser.add_argument('--timestamps', action='store_true', help='append a UTC timestamp column')
    opt = parser.parse_args(argv)
    print_args(vars(opt))
    return opt


def main(opt):
    try:
        run(**vars(opt))
    except DomainError as e:
        LOGGER.error(f'scan: {e}')
        return 3
    return 0


if __name__ == "__main__":
    opt = parse_opt()
    sys.exit(main(opt))
