import pathlib
from importlib import resources

import pytest

from vizsmith.datasets import Dataset, load_dataset

FIXTURES = pathlib.Path(__file__).parent / "fixtures"


def load_packaged_dataset(name: str) -> Dataset:
    payload = (resources.files("vizsmith.data") / f"{name}.csv").read_bytes()
    return load_dataset(payload, "csv", name=name)


@pytest.fixture(scope="session")
def iris() -> Dataset:
    return load_packaged_dataset("iris")


@pytest.fixture(scope="session")
def cars() -> Dataset:
    return load_packaged_dataset("cars")


@pytest.fixture(scope="session")
def svg_fixture_dir() -> pathlib.Path:
    return FIXTURES / "svg"


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = []
    for outcome, label in (("passed", "PASS"), ("failed", "FAIL"), ("error", "FAIL")):
        for report in terminalreporter.stats.get(outcome, []):
            if "test_acceptance" in report.nodeid and report.when == "call":
                name = report.nodeid.split("::")[-1]
                lines.append(f"{label}  {name}")
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: s.split()[-1]):
            terminalreporter.write_line(line)
