import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running oracle checks (set RSBF_RUN_SLOW=1)")


def pytest_collection_modifyitems(config, items):
    if os.getenv("RSBF_RUN_SLOW") == "1":
        return
    skip_slow = pytest.mark.skip(reason="set RSBF_RUN_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)
