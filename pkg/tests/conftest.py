import contextlib

import pytest

_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion's outcome for the terminal summary."""

    @contextlib.contextmanager
    def record(label):
        try:
            yield
        except BaseException as exc:
            _ACCEPTANCE.append((label, False, f"{type(exc).__name__}: {str(exc).splitlines()[0] if str(exc) else ''}"))
            raise
        _ACCEPTANCE.append((label, True, ""))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in _ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {label}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
