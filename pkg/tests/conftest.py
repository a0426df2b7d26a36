from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion():
    """Record one acceptance criterion outcome for the terminal summary."""

    class _Recorder:
        def __call__(self, name: str, passed: bool, detail: str = "") -> None:
            _ACCEPTANCE.append((name, passed, detail))
            print(f"[{'PASS' if passed else 'FAIL'}] {name} {detail}")
            assert passed, f"{name}: {detail}"

    return _Recorder()


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in _ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}  {detail}")
