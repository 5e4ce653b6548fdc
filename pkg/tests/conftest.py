import pytest

ACCEPTANCE = {}


def record(number, title, passed, detail):
    """Store one acceptance verdict; printed in the terminal summary."""
    ACCEPTANCE[number] = (title, passed, detail)
    print(f"criterion {number} [{'PASS' if passed else 'FAIL'}] {title}: {detail}")


@pytest.fixture
def acceptance():
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(
            f"{'PASS' if passed else 'FAIL'}  {number}. {title} -- {detail}")
