"""Shared pytest wiring: collects one summary line per acceptance criterion."""

import pytest

ACCEPTANCE_LINES: list[str] = []


def record(criterion: int, details: str) -> None:
    ACCEPTANCE_LINES.append(f"ACCEPTANCE {criterion}: PASS ({details})")


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(n): numbered end-to-end acceptance criterion"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is not None and rep.when == "call" and rep.failed:
        ACCEPTANCE_LINES.append(f"ACCEPTANCE {marker.args[0]}: FAIL")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(
            ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))
        ):
            terminalreporter.write_line(line)
