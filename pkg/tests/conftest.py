import pytest

from replicaplace.io import load_config


@pytest.fixture(scope="session")
def canonical():
    return load_config()


@pytest.fixture(scope="session")
def net(canonical):
    return canonical.network


ACCEPTANCE_RESULTS: dict[int, tuple[str, str]] = {}


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    number, title = marker.args
    status = "PASS" if call.excinfo is None else "FAIL"
    ACCEPTANCE_RESULTS[number] = (status, title)


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_RESULTS):
        status, title = ACCEPTANCE_RESULTS[number]
        terminalreporter.write_line(f"[{status}] {number:>2}. {title}")
