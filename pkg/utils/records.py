# padic-degrees, GPL-3.0 license
"""
Canonical record serialization for compute.py and scan.py

JSON lines: compact separators, keys in insertion order, exact values as decimal strings.
CSV: comma separated, mandatory header row, LF line endings, booleans as true/false.
"""

import csv
import json
from datetime import datetime, timezone

COLUMNS = {
    'theta': ['q', 'i', 'n', 'valuation'],
    'epsilon': ['p', 'n', 'valuation', 'odd'],
    'gamma': ['k', 'm', 'n', 'valuation', 'odd'],
    'box': ['a', 'b', 'c', 'valuation', 'odd']}  # scan columns, exact and timestamp appended on request
FORMATS = ('csv', 'json')


def dumps_record(record):
    """Return the canonical JSON text of a record.

    >>> dumps_record({'q': 39, 'n': 45, 'valuation': 5, 'odd': False})
    '{"q":39,"n":45,"valuation":5,"odd":false}'
    """
    return json.dumps(record, separators=(',', ':'), ensure_ascii=False)


def loads_record(s):
    return json.loads(s)


def exact_str(x):
    # Exact values travel as decimal strings
    return str(int(x))


def timestamp():
    return datetime.now(timezone.utc).isoformat(timespec='seconds')


def _csv_value(v):
    if isinstance(v, bool):
        return 'true' if v else 'false'
    if isinstance(v, (dict, list)):
        return dumps_record(v)
    return v


class RecordWriter:
    # Writes records to a text stream as CSV (header on first record) or JSON lines

    def __init__(self, stream, fmt='json', columns=None):
        assert fmt in FORMATS, f"format '{fmt}' not in {FORMATS}"
        self.stream = stream
        self.fmt = fmt
        self.columns = columns  # CSV header, taken from the first record if None
        self.writer = csv.writer(stream, lineterminator='\n') if fmt == 'csv' else None
        self.n = 0  # records written

    def write(self, record):
        if self.fmt == 'json':
            self.stream.write(dumps_record(record) + '\n')
        else:
            if self.n == 0:
                self.columns = self.columns or list(record)
                self.writer.writerow(self.columns)
            self.writer.writerow([_csv_value(record.get(k, '')) for k in self.columns])
        self.n += 1

    def header(self):
        # Emit the CSV header of an empty scan
        if self.fmt == 'csv' and self.n == 0 and self.columns:
            self.writer.writerow(self.columns)
