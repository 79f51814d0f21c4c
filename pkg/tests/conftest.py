"""Print the acceptance criteria table at the end of a pytest run."""


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS, summary_lines
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in summary_lines():
        terminalreporter.write_line(line)
