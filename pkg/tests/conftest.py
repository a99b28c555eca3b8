from __future__ import annotations

import pytest

from k3scroll.brill_noether import enumerate_admissible


def grid(g_max: int = 30, r_max: int = 5):
    return [
        (t.g, t.r, t.d)
        for g in range(3, g_max + 1)
        for t in enumerate_admissible(g, r_max)
    ]


@pytest.fixture(scope="session")
def full_grid():
    return grid()


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed"):
        for rep in terminalreporter.stats.get(outcome, []):
            if rep.when != "call" or "test_acceptance.py::test_criterion_" not in rep.nodeid:
                continue
            name = rep.nodeid.split("::test_criterion_")[1]
            lines.append((name, "PASS" if outcome == "passed" else "FAIL"))
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for name, status in sorted(lines):
        number, _, label = name.partition("_")
        terminalreporter.write_line(f"{status}  criterion {int(number):2d}  {label}")
