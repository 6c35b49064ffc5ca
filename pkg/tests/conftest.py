import numpy as np
import pytest

from kronrep.exactlin import Field
from kronrep.testfamily import ringel_e

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion exercised by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    number, title = marker.args
    failed = report.failed or (report.when == "call" and report.outcome != "passed" and not report.skipped)
    prev = _CRITERIA.get(number, (title, True))
    if report.when == "call" or failed:
        _CRITERIA[number] = (title, prev[1] and not failed)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d} [{'PASS' if ok else 'FAIL'}] {title}")


@pytest.fixture
def F5():
    return Field.prime(5)


@pytest.fixture
def F3():
    return Field.prime(3)


@pytest.fixture
def E5(F5):
    return ringel_e(F5)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
