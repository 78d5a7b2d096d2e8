"""Collects acceptance verdicts so they print once, after the test run."""

_ACCEPTANCE = []


def record_acceptance(name, ok):
    _ACCEPTANCE.append((name, ok))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok in _ACCEPTANCE:
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {name}: {verdict}")
