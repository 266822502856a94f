import re

import pytest
from khfri.bench import embedded_corpus

_acceptance: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.outcome != "passed":
        _acceptance[report.nodeid] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(_acceptance.items(), key=lambda kv: int(re.search(r"criterion_(\d+)", kv[0]).group(1))):
        name = nodeid.split("::")[-1]
        num, label = re.match(r"test_criterion_(\d+)_(.*)", name).groups()
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num} {label.replace('_', ' ')}: {verdict}")


@pytest.fixture(scope="session")
def corpus():
    return {c.id: c for c in embedded_corpus()}

