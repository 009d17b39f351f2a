from __future__ import annotations

import pytest

from tuttelab.catalog import catalog


def small_catalog(limit: int):
    return [e for e in catalog() if e.size <= limit]


@pytest.fixture(scope="session")
def catalog_upto14():
    return [(e.id, e.matroid()) for e in small_catalog(14)]


def pytest_terminal_summary(terminalreporter):
    """One line per acceptance criterion, whatever the verbosity."""
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid or rep.when not in ("call", "setup"):
                continue
            n = int(nodeid.split("test_criterion_")[1][:2])
            if outcome != "passed" or n not in results:
                results[n] = "PASS" if outcome == "passed" else "FAIL"
    if not results:
        return
    try:
        from test_acceptance import DETAILS
    except ImportError:
        DETAILS = {}
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        detail = DETAILS.get(n, "")
        terminalreporter.write_line(f"criterion {n:2d}: {results[n]}" + (f"  ({detail})" if detail else ""))
