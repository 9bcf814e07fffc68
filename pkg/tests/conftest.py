from __future__ import annotations

import os

from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

_CRITERIA: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _CRITERIA[name] = "PASS" if report.outcome == "passed" else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict in sorted(_CRITERIA.items(), key=lambda kv: _order(kv[0])):
        terminalreporter.write_line(f"{verdict}  {name}")


def _order(name: str):
    # test_criterion_09c_... -> (9, "c")
    parts = name.split("_")
    tag = parts[2] if len(parts) > 2 else ""
    digits = "".join(ch for ch in tag if ch.isdigit())
    return (int(digits) if digits else 99, tag)
