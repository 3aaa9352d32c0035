_acceptance_results = []


def pytest_runtest_logreport(report):
    # collect one outcome per acceptance criterion
    if report.when != "call" or "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    outcome = "PASS" if report.passed else ("SKIP" if report.skipped else "FAIL")
    _acceptance_results.append((name, outcome))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_line("")
    for name, outcome in _acceptance_results:
        terminalreporter.write_line(f"acceptance {name}: {outcome}")
