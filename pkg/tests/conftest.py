import time
from contextlib import contextmanager

import pytest

_LINES = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_LINES] = []


@pytest.fixture
def criterion(request):
    """Context manager that times a block and records one PASS/FAIL line for it."""
    lines = request.config.stash[_LINES]

    @contextmanager
    def run(number, title, limit=None):
        start = time.perf_counter()
        ok = False
        try:
            yield
            ok = True
        finally:
            elapsed = time.perf_counter() - start
            if ok and limit is not None and elapsed > limit:
                ok = False
            status = "PASS" if ok else "FAIL"
            line = f"criterion {number:>2} {status}  {title} [{elapsed:.1f}s]"
            print(line)
            lines.append(line)
        assert limit is None or elapsed <= limit, f"took {elapsed:.1f}s, limit {limit}s"

    return run


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash[_LINES]
    if lines:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
