import functools
from pathlib import Path

import pytest

from cookmodel.builder import load

FIXTURES = Path(__file__).resolve().parents[1] / "src" / "cookmodel" / "fixtures"

MINIMAL = """\
[[source]]
name = "hydro"
energy_mwh = 1000
primary_factor = 1
emission_factor = 0

[[appliance]]
name = "induction_stove"
carrier = "electricity"
monthly_final_kwh = 96
count = 10

[demographics]
population = 37
households = 10

[tariff]
production_cost_per_kwh = 0.1
block = 80, 0.0
block = inf, 0.092
"""


def fixture_path(name: str) -> Path:
    return FIXTURES / f"{name}.scn"


@pytest.fixture(scope="session")
def baseline():
    return load_fixture("baseline-2014")


@pytest.fixture(scope="session")
def bau():
    return load_fixture("bau-2022")


@pytest.fixture(scope="session")
def np2022():
    return load_fixture("np-2022")


# acceptance reporting: one PASS/FAIL line per criterion in the terminal summary

_criteria: dict[int, tuple[str, bool]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and report.passed:
        return
    number, title = marker.args
    ok = _criteria.get(number, (title, True))[1] and report.passed
    _criteria[number] = (title, ok)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {number}: {title}")


def load_fixture(name: str):
    return _cached_fixture(name)


@functools.cache
def _cached_fixture(name: str):
    return load(fixture_path(name))[0]
