import sys

import pytest

from multone.catalog import build_example


@pytest.fixture(scope="session")
def tetra():
    return build_example("binary-tetrahedral")


@pytest.fixture(scope="session")
def octa():
    return build_example("binary-octahedral")


@pytest.fixture(scope="session")
def g216():
    return build_example("G216")


def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in list(sys.modules.items()) if name.endswith("test_acceptance")), None)
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
