import pytest

ACCEPTANCE: dict = {}


@pytest.fixture
def acceptance():
    def record(number: int, status: str, detail: str):
        ACCEPTANCE[number] = (status, detail)
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        status, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {status}  {detail}")
