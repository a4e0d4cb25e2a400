import random
from pathlib import Path

import pytest

from chanassign.instance import Instance, SimpleGraph, random_instance

DATA = Path(__file__).parent / "data"


def random_family(count, seed=0, sizes=(2, 3, 4, 5), max_weight=3):
    """Seeded instances with uniform weights in ``0..max_weight``."""
    rng = random.Random(seed)
    return [random_instance(rng.choice(sizes), max_weight, seed=rng.random())
            for _ in range(count)]


def path_graph(n):
    return SimpleGraph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle_graph(n):
    return SimpleGraph(n, frozenset((i, (i + 1) % n) for i in range(n)))


@pytest.fixture
def two():
    return Instance.from_pairs(2, {(0, 1): 2})


@pytest.fixture
def tri2():
    return Instance.from_pairs(3, {(0, 1): 2, (1, 2): 2, (0, 2): 2})


@pytest.fixture
def tri1():
    return Instance.from_pairs(3, {(0, 1): 1, (1, 2): 1, (0, 2): 1})


@pytest.fixture
def c5():
    return Instance.from_pairs(5, {(i, (i + 1) % 5): 1 for i in range(5)})


# acceptance criteria report -------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    if report.when == "call" or report.failed:
        prev = _criteria.get(number, (title, "PASS"))[1]
        status = "FAIL" if report.failed or prev == "FAIL" else "PASS"
        _criteria[number] = (title, status)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, status = _criteria[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {title}")
