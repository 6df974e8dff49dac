from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


_LINES = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py::test_criterion_" in report.nodeid:
        n = int(report.nodeid.split("test_criterion_")[1].split("_")[0])
        _LINES[n] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    from test_acceptance import RESULTS

    terminalreporter.section("acceptance criteria")
    for n in sorted(_LINES):
        summary = RESULTS.get(n, (None, "did not complete"))[1]
        terminalreporter.write_line(f"criterion {n}: {_LINES[n]} - {summary}")
