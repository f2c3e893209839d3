import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dirsig.params import ParamSet, generate_params  # noqa: E402

_criteria: dict[int, list[str]] = {}


@pytest.fixture(scope="session")
def toy() -> ParamSet:
    return ParamSet(23, 11, 6)


@pytest.fixture(scope="session")
def mid() -> ParamSet:
    """128-bit p with a 64-bit q, generated once from a fixed seed."""
    return generate_params(128, 64, random.Random(64))


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = next((m for m in report.keywords if m == "criterion"), None)
    if marker is None:
        return
    number = getattr(report, "criterion_number", None)
    if number is not None:
        _criteria.setdefault(number, []).append(report.outcome)


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        report.criterion_number = mark.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        outcomes = _criteria[number]
        status = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status} ({len(outcomes)} checks)")
