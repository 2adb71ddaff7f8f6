import contextlib

import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record the outcome of one acceptance criterion for the summary."""

    @contextlib.contextmanager
    def record(label):
        try:
            yield
        except BaseException:
            _ACCEPTANCE.append(("FAIL", label))
            raise
        _ACCEPTANCE.append(("PASS", label))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for status, label in _ACCEPTANCE:
        terminalreporter.write_line(f"[{status}] {label}")
