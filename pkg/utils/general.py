# padic-degrees, GPL-3.0 license
"""
General utils
"""

import contextlib
import inspect
import logging
import os
import time
from pathlib import Path
from typing import Optional

import numpy as np
import pandas as pd
import yaml

# Settings
FILE = Path(__file__).resolve()
ROOT = FILE.parents[1]  # padic-degrees root directory
NUM_THREADS = min(8, max(1, os.cpu_count() - 1))  # number of scan worker threads when --parallelism 0
THREADS = int(os.getenv('PADIC_DEGREES_THREADS', 0))  # default --parallelism, 0 = auto
VERBOSE = str(os.getenv('PADIC_DEGREES_VERBOSE', True)).lower() == 'true'  # global verbose mode
GUARDS = ROOT / 'data' / 'guards.yaml'  # default tractability guards
SEQUENCES = ROOT / 'data' / 'sequences.yaml'  # reference valuation sequences

np.set_printoptions(linewidth=320)
pd.options.display.max_columns = 10
pd.options.display.width = 320


class DomainError(ValueError):
    # A mathematical precondition is violated, i.e. q > n for a valuation query
    pass


class GuardError(DomainError):
    # A tractability guard is exceeded, i.e. an exact evaluation with n above exact_theta_max_n
    pass


class InexactDivisionError(ArithmeticError):
    # An exact division left a remainder; the formulas are integral so this is always an arithmetic bug
    pass


def set_logging(name=None, verbose=VERBOSE):
    # Sets level and returns logger
    level = logging.INFO if verbose else logging.WARNING
    log = logging.getLogger(name)
    log.setLevel(level)
    handler = logging.StreamHandler()  # stderr, stdout carries records only
    handler.setFormatter(logging.Formatter("%(message)s"))
    handler.setLevel(level)
    log.addHandler(handler)


set_logging('padic')  # run before defining LOGGER
LOGGER = logging.getLogger('padic')  # define globally (used in compute.py, scan.py, verify.py, etc.)


class Profile(contextlib.ContextDecorator):
    # Usage: @Profile() decorator or 'with Profile(): ...' context manager, elapsed seconds in self.dt
    def __init__(self, name=''):
        self.name = name
        self.dt = 0.0

    def __enter__(self):
        self.start = time.time()
        return self

    def __exit__(self, type, value, traceback):
        self.dt = time.time() - self.start
        if self.name:
            LOGGER.info(f'{self.name}: {self.dt:.3f}s')


def print_args(args: Optional[dict] = None, show_file=True, show_fcn=False):
    # Print function arguments (optional args dict)
    x = inspect.currentframe().f_back  # previous frame
    file, _, fcn, _, _ = inspect.getframeinfo(x)
    if args is None:  # get args automatically
        args, _, _, frm = inspect.getargvalues(x)
        args = {k: v for k, v in frm.items() if k in args}
    s = (f'{Path(file).stem}: ' if show_file else '') + (f'{fcn}: ' if show_fcn else '')
    LOGGER.info(colorstr(s) + ', '.join(f'{k}={v}' for k, v in args.items()))


def colorstr(*input):
    # Colors a string https://en.wikipedia.org/wiki/ANSI_escape_code, i.e.  colorstr('blue', 'hello world')
    *args, string = input if len(input) > 1 else ('blue', 'bold', input[0])  # color arguments, string
    colors = {
        'black': '\033[30m',  # basic colors
        'red': '\033[31m',
        'green': '\033[32m',
        'yellow': '\033[33m',
        'blue': '\033[34m',
        'magenta': '\033[35m',
        'cyan': '\033[36m',
        'white': '\033[37m',
        'end': '\033[0m',  # misc
        'bold': '\033[1m',
        'underline': '\033[4m'}
    return ''.join(colors[x] for x in args) + f'{string}' + colors['end']


def check_file(file, suffix=('.yaml', '.yml')):
    # Return path of an existing file, searching data/ for bare names, checking suffix
    file = Path(file)
    if suffix and file.suffix.lower() not in suffix:
        raise DomainError(f'{file} acceptable suffix is {suffix}')
    if file.is_file():
        return file
    if (ROOT / 'data' / file.name).is_file():
        return ROOT / 'data' / file.name
    raise DomainError(f'File not found: {file}')


def yaml_load(file=GUARDS):
    # Single-line safe yaml loading
    with open(check_file(file), errors='ignore') as f:
        return yaml.safe_load(f) or {}


def load_guards(file=None):
    # Return guard dict: data/guards.yaml defaults, updated by an optional user YAML
    guards = yaml_load(GUARDS)
    if file:
        user = yaml_load(file)
        for k, v in user.items():
            if k not in guards:
                raise DomainError(f"unknown guard '{k}' in {file}, valid guards are {list(guards)}")
            if isinstance(v, dict):
                guards[k] = {**guards[k], **v}  # merge verify: bounds
            else:
                guards[k] = v
    return guards


def check_guard(value, guards, key, what=''):
    # Raise GuardError if value exceeds guards[key]
    limit = guards[key]
    if value > limit:
        raise GuardError(f'{what or key} = {value} exceeds guard {key}={limit}, '
                         f'raise it with --guards FILE or use the formula path')
    return value


def resolve_workers(parallelism=THREADS):
    # Return worker count for a --parallelism value, 0 = auto
    if parallelism < 0:
        raise DomainError(f'--parallelism must be >= 0, got {parallelism}')
    return parallelism or NUM_THREADS
