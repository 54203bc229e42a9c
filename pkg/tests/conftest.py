import pytest

_acceptance_lines: list[str] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call":
        return
    verdict = "PASS" if rep.passed else "FAIL"
    detail = getattr(item.function, "__doc__", "") or item.name
    _acceptance_lines.append(f"[{verdict}] criterion {marker.args[0]}: {detail.strip().splitlines()[0]}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_acceptance_lines, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
