import pytest

# criterion number -> (passed, title, detail), filled by test_acceptance
CRITERIA: dict[int, tuple[bool, str, str]] = {}


@pytest.fixture
def record():
    def _record(number: int, title: str, passed: bool, detail: str = "") -> None:
        CRITERIA[number] = (bool(passed), title, detail)
    return _record


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        passed, title, detail = CRITERIA[n]
        line = f"{'PASS' if passed else 'FAIL'}  {n}. {title}"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
