from _util import CRITERION_LINES


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance lines after capture so they survive -q runs."""
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(CRITERION_LINES):
            terminalreporter.write_line(line)
