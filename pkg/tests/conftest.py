import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """Record one pass/fail line for an acceptance criterion."""
    def record(number, title):
        request.node.acceptance = (number, title)
    yield record
    info = getattr(request.node, "acceptance", None)
    if info is not None:
        report = getattr(request.node, "rep_call", None)
        status = "PASS" if report is not None and report.passed else "FAIL"
        ACCEPTANCE_LINES.append((info[0], f"[{status}] criterion {info[0]}: {info[1]}"))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
