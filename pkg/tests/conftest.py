import random
import sys

import pytest

from linfield.expr import parse_ratfunc
from linfield.oracle import GenParams


def rf(src, n=2):
    return parse_ratfunc(src, n)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def small_params():
    return GenParams(n=2, max_degree=3, max_terms=3)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
