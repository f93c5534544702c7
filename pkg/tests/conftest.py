"""Shared fixtures for the test suite.

The full-size suite context (identity order 400, scan order 40000, families
through k=2) is expensive, so it is built once per session and shared by the
acceptance tests.  Those tests record one verdict line per criterion; the
terminal-summary hook prints the lines after the run, since pytest captures
stdout of passing tests.
"""

import time

import pytest

from qcong import CATALOGUE, build_suite_context

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def flagship():
    """(context, build timings) at the published-run orders."""
    timings = {}
    ctx = build_suite_context(400, 40000, 2, timings=timings)
    return ctx, timings


@pytest.fixture(scope="session")
def flagship_reports(flagship):
    """claim_id -> (reports, wall seconds) for every catalogue entry, run
    once against the full-size context."""
    ctx, _ = flagship
    out = {}
    for entry in CATALOGUE:
        start = time.perf_counter()
        reports = entry.run(ctx)
        out[entry.claim_id] = (reports, time.perf_counter() - start)
    return out


@pytest.fixture
def record_criterion():
    return ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
