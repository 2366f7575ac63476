import pytest

ACCEPTANCE: dict[int, tuple[str, str]] = {}


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance criterion for the end-of-run summary."""

    def record(number: int, title: str):
        ACCEPTANCE[number] = ("FAIL", title)
        return lambda detail="": ACCEPTANCE.__setitem__(number, ("PASS", f"{title} {detail}".strip()))

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        status, text = ACCEPTANCE[number]
        terminalreporter.write_line(f"{status} criterion {number}: {text}")
