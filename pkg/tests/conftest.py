import numpy as np
import pytest

from ppt_minors import bell_state


@pytest.fixture
def phi_plus():
    return bell_state("phi+")


@pytest.fixture
def phi_plus_pt():
    """Hand-derived partial transpose of |phi+><phi+|."""
    m = np.zeros((4, 4))
    m[0, 0] = m[3, 3] = m[1, 2] = m[2, 1] = 0.5
    return m


@pytest.fixture
def rng():
    return np.random.default_rng(20261015)


# acceptance bookkeeping: one PASS/FAIL line per criterion at session end
_CRITERIA = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None or report.when not in ("setup", "call"):
        return
    number, title = mark.args
    if report.when == "call" or report.failed:
        _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, verdict = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:>2} {verdict}  {title}")
