from functools import lru_cache
from pathlib import Path

import pytest

from fullerene5 import nanotube, nanotube_decomposition
from fullerene5.formats import read_planar_code

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


@lru_cache(maxsize=None)
def tube(r):
    return nanotube(r)


@lru_cache(maxsize=None)
def decomposition(r):
    return nanotube_decomposition(tube(r))


@lru_cache(maxsize=None)
def c60():
    (g,) = read_planar_code((DATA / "c60.pc").read_bytes())
    return g


@pytest.fixture
def c60_graph():
    return c60()


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    results = getattr(module, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
