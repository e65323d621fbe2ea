import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

_LINES = pytest.StashKey[dict]()


def pytest_configure(config):
    config.stash[_LINES] = {}


@pytest.fixture
def criterion(request):
    """``criterion(n, ok, detail)`` records one acceptance line and fails the test if not ok."""
    def record(n, ok, detail):
        line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
        request.config.stash[_LINES][n] = line
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash[_LINES]
    if lines:
        terminalreporter.section("acceptance criteria")
        for n in sorted(lines):
            terminalreporter.write_line(lines[n])
