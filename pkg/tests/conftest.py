"""Prints one PASS/FAIL line per acceptance criterion after the run."""

ACCEPTANCE_FILE = "test_acceptance.py"
_results = {}


def pytest_runtest_logreport(report):
    if ACCEPTANCE_FILE not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _results[report.nodeid] = report.passed


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, passed in sorted(_results.items(), key=lambda kv: _order(kv[0])):
        name = nodeid.split("::")[-1]
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}")


def _order(nodeid):
    name = nodeid.split("::")[-1]
    parts = name.split("_")
    return int(parts[1]) if len(parts) > 1 and parts[1].isdigit() else 99
