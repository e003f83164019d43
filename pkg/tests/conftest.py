import functools

import pytest

from franklin.lebesgue import projection_norm
from franklin.splines import KnotConfig

ACCEPTANCE_LINES: list[str] = []


@functools.lru_cache(maxsize=None)
def _norm(N, nu):
    return projection_norm(KnotConfig.from_N(N, nu))


@pytest.fixture(scope="session")
def norm_of():
    """Cached projection_norm keyed by (N, nu); the large sweeps share it."""
    return _norm


@pytest.fixture
def record():
    def _record(number, title, ok, detail=""):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return ok

    return _record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
