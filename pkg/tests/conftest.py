import sys
import pytest

from isospec.groups import enumerate_j1, load_generator_file
from isospec.groups.j1 import default_data_path


@pytest.fixture(scope="session")
def j1_enumeration():
    return enumerate_j1()


@pytest.fixture(scope="session")
def j1_generators():
    return load_generator_file(default_data_path())


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(module, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
