import sys
from contextlib import contextmanager
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_CRITERIA: dict[int, str] = {}


@pytest.fixture
def criterion():
    """Context manager that records one PASS/FAIL line for an acceptance criterion."""

    @contextmanager
    def record(number: int, title: str):
        try:
            yield
        except BaseException as exc:
            line = f"FAIL criterion {number}: {title} ({type(exc).__name__})"
            _CRITERIA[number] = line
            print(line)
            raise
        line = f"PASS criterion {number}: {title}"
        _CRITERIA[number] = line
        print(line)

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for number in sorted(_CRITERIA):
            terminalreporter.write_line(_CRITERIA[number])
