"""Shared fixtures and the acceptance summary printed after the run."""
from collections import OrderedDict

import pytest

_RESULTS = OrderedDict()


class AcceptanceRecorder:
    """Collects sub-check outcomes keyed by criterion id."""

    def record(self, criterion, title, passed, detail):
        entry = _RESULTS.setdefault(criterion, {"title": title, "checks": []})
        entry["checks"].append((bool(passed), detail))
        return passed


@pytest.fixture(scope="session")
def acceptance():
    return AcceptanceRecorder()


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for key in sorted(_RESULTS, key=lambda k: int(k[1:])):
        entry = _RESULTS[key]
        ok = all(p for p, _ in entry["checks"])
        detail = "; ".join(("" if p else "[FAIL] ") + d for p, d in entry["checks"])
        tr.write_line(f"{key} {'PASS' if ok else 'FAIL'} {entry['title']}: {detail}")
