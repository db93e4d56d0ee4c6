import pytest

ACCEPTANCE: dict[str, str] = {}


@pytest.fixture
def acceptance():
    """Record the outcome of one acceptance criterion for the summary."""

    class Recorder:
        def __call__(self, name):
            ACCEPTANCE[name] = "FAIL"
            return self

        def passed(self, name):
            ACCEPTANCE[name] = "PASS"

        def skipped(self, name):
            ACCEPTANCE[name] = "SKIP"

    return Recorder()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"{ACCEPTANCE[name]:4}  {name}")
