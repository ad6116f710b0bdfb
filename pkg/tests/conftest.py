from functools import lru_cache

import pytest
from hypothesis import HealthCheck, settings

from dahakit.daha import Daha
from dahakit.extweyl import ExtendedAffineWeylGroup
from dahakit.rootsys import build_root_datum

settings.register_profile("dahakit", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("dahakit")

SMALL = [("A", 1), ("A", 2), ("B", 2), ("C", 2), ("G", 2)]
FLAVORS = ["sc", "adjoint"]

ACCEPTANCE_LINES: list[str] = []


@lru_cache(maxsize=None)
def datum(letter, n, flavor="sc"):
    return build_root_datum(letter, n, flavor)


@lru_cache(maxsize=None)
def group(letter, n, flavor="sc"):
    return ExtendedAffineWeylGroup(datum(letter, n, flavor))


@lru_cache(maxsize=None)
def algebra(letter, n, flavor="sc"):
    return Daha(group(letter, n, flavor))


@pytest.fixture(params=[(l, n, f) for l, n in SMALL for f in FLAVORS], ids=lambda p: f"{p[0]}{p[1]}-{p[2]}")
def small(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
