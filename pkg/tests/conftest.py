import pytest

_ACCEPTANCE = {}


@pytest.fixture
def criterion():
    """Record the verdict of an acceptance criterion; the summary prints one line each."""

    def record(number, text, ok):
        _ACCEPTANCE[number] = (text, bool(ok))
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} {text}")
        assert ok, f"criterion {number} failed: {text}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        text, ok = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} {text}")
