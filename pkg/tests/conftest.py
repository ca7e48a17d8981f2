import sys

import pytest

from plane_reconfig.geometry import PointSet, convex_point_set

SQUARE = [(0, 0), (2, 0), (2, 2), (0, 2)]
# (1,1) would sit on both diagonals; a scaled square with an off-diagonal
# interior point keeps the same order type without collinear triples
SQUARE_INNER = [(0, 0), (20, 0), (20, 20), (0, 20), (10, 9)]
TRIANGLE = [(0, 0), (5, 0), (1, 4)]
SIX = [(0, 0), (17, 3), (11, 14), (5, 9), (20, 20), (8, 2)]


CRITERIA = range(1, 12)
_outcomes: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running checks")
    config.addinivalue_line("markers", "criterion(n): acceptance criterion checked by this test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n = mark.args[0]
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _outcomes[n] = "PASS" if rep.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    details = getattr(sys.modules.get("test_acceptance"), "DETAILS", {})
    terminalreporter.section("acceptance criteria")
    for n in CRITERIA:
        status = _outcomes.get(n, "NOT RUN")
        terminalreporter.write_line(f"criterion {n:>2}: {status} {details.get(n, '')}".rstrip())


@pytest.fixture
def square():
    return PointSet(SQUARE)


@pytest.fixture
def square_inner():
    return PointSet(SQUARE_INNER)


@pytest.fixture
def triangle():
    return PointSet(TRIANGLE)


@pytest.fixture
def six():
    return PointSet(SIX)


@pytest.fixture(params=[4, 5, 6])
def convex(request):
    return convex_point_set(request.param)
