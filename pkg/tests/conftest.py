_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number n")


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m is not None:
            item.user_properties.append(("criterion", m.args[0]))


def pytest_runtest_logreport(report):
    n = dict(report.user_properties).get("criterion")
    if n is None or not (report.when == "call" or report.failed):
        return
    if _CRITERIA.get(n, ("PASS",))[0] == "PASS":
        _CRITERIA[n] = ("PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    from test_acceptance import TITLES

    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        status, duration = _CRITERIA[n]
        terminalreporter.write_line(f"criterion {n} ({TITLES[n]}): {status} [{duration:.2f}s]")
