"""Shared pytest plumbing: a visible pass/fail line per acceptance criterion."""

from __future__ import annotations

ACCEPTANCE_LINES: list[tuple[int, str]] = []


def record_criterion(number: int, title: str, ok: bool, detail: str = "") -> None:
    mark = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    ACCEPTANCE_LINES.append((number, f"{mark} criterion {number:2d}: {title}{suffix}"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for _, line in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(line)
