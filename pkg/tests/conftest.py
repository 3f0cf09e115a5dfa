import pytest
from hypothesis import settings

from twinlab.gfield import field_new
from twinlab.treetwin import TreeConfig
from twinlab.fuchsian import FuchsianConfig

settings.register_profile("twinlab", deadline=None, max_examples=60)
settings.load_profile("twinlab")


@pytest.fixture(scope="session")
def F2():
    return field_new(2)


@pytest.fixture(scope="session")
def F3():
    return field_new(3)


@pytest.fixture(scope="session")
def tree23(F2, F3):
    return TreeConfig(F2, F3)


@pytest.fixture(scope="session")
def tree22(F2):
    return TreeConfig(F2, F2)


@pytest.fixture(scope="session")
def fuchs23232(F2, F3):
    return FuchsianConfig(5, [F2, F3, F2, F3, F2])


@pytest.fixture
def acceptance(request):
    "record(criterion, passed, detail) -> one PASS/FAIL line in the terminal summary"
    store = request.config.__dict__.setdefault("_acceptance_lines", [])

    def record(n, passed, detail):
        store.append((n, "PASS" if passed else "FAIL", detail))
        return passed
    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for n, status, detail in sorted(lines, key=lambda x: (x[0], x[1] == "PASS")):
        terminalreporter.write_line("criterion %-3s %s  %s" % (n, status, detail))
