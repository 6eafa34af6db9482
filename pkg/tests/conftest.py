"""Suite-wide wiring: the acceptance summary block.

Acceptance tests append one line per criterion; the hook prints them
after the normal pytest summary so every run ends with an explicit
per-criterion PASS/FAIL list.
"""

from __future__ import annotations

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config) -> None:
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
