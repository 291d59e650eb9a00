ACCEPTANCE_RESULTS: list[tuple[str, str, bool]] = []


def record_acceptance(criterion: str, description: str, passed: bool) -> None:
    ACCEPTANCE_RESULTS.append((criterion, description, passed))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, description, passed in ACCEPTANCE_RESULTS:
        word = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"[{word}] {criterion}: {description}")
