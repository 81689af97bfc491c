# padic-degrees, GPL-3.0 license
"""
utils/initialization
"""


def check_setup(verbose=True):
    # Check Python version and log library versions
    import platform
    import sys

    import numpy as np
    import pandas as pd
    import yaml

    from utils.general import LOGGER

    assert sys.version_info >= (3, 10), f'Python>=3.10 is required for int.bit_count(), found {platform.python_version()}'
    s = f'Python-{platform.python_version()} numpy-{np.__version__} pandas-{pd.__version__} PyYAML-{yaml.__version__}'
    if verbose:
        LOGGER.info(f'Setup complete ✅ ({s})')
    return s
