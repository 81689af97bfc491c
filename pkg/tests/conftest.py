# padic-degrees, GPL-3.0 license
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]  # padic-degrees root directory
if str(ROOT) not in sys.path:
    sys.path.append(str(ROOT))  # add ROOT to PATH

from utils.general import SEQUENCES, yaml_load


@pytest.fixture(scope='session')
def sequences():
    # Reference valuation sequences {q: [nu_2(theta_{q,q+2i}) for i = 0..200]}
    return yaml_load(SEQUENCES)
