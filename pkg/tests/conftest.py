import time

import pytest


def pytest_configure(config):
    config._acceptance_lines = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line; the test body runs inside the context manager."""
    lines = request.config._acceptance_lines

    class _Recorder:
        def __init__(self):
            self.name = None

        def __call__(self, name):
            self.name = name
            return self

        def __enter__(self):
            self.start = time.perf_counter()
            return self

        def __exit__(self, exc_type, exc, tb):
            elapsed = time.perf_counter() - self.start
            status = "PASS" if exc_type is None else "FAIL"
            lines.append(f"{status}  {self.name}  [{elapsed:.2f}s]")
            return False

    return _Recorder()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = getattr(config, "_acceptance_lines", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
