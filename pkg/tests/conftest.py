import sys
from importlib import resources
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gangulate.convex import load_instance
from gangulate.placement import load_graph

FIXTURES = resources.files("gangulate") / "fixtures"

_criteria = {}


def fixture_path(name: str) -> Path:
    return Path(str(FIXTURES / name))


@pytest.fixture
def instance_fixture():
    return lambda name: load_instance(fixture_path(name))


@pytest.fixture
def graph_fixture():
    return lambda name: load_graph(fixture_path(name))


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            _criteria[item.nodeid] = (mark.args[0], item.name)


def pytest_runtest_logreport(report):
    key = _criteria.get(report.nodeid)
    if key is None:
        return
    if report.when == "call" or report.failed:
        num, name = key
        prev = _criteria.setdefault(("result", num), [])
        prev.append((name, report.outcome))


def pytest_terminal_summary(terminalreporter):
    nums = sorted({v[0] for k, v in _criteria.items() if not (isinstance(k, tuple) and k[0] == "result")})
    if not nums:
        return
    terminalreporter.section("acceptance criteria")
    for num in nums:
        runs = _criteria.get(("result", num), [])
        if not runs:
            status = "NOT RUN"
        elif all(outcome == "passed" for _, outcome in runs):
            status = "PASS"
        else:
            status = "FAIL"
        names = ", ".join(name for name, _ in runs)
        terminalreporter.write_line(f"criterion {num:2d}: {status}  ({names})")
