"""Shared fixtures plus the acceptance summary hook.

Tests marked ``@pytest.mark.acceptance(num, label)`` feed a one-line
PASS/FAIL summary per criterion printed at the end of the run.
"""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from biclique_lab.bicliques import biclique_graph
from biclique_lab.graphs import enumerate_connected_graphs

_ACCEPTANCE_RESULTS: dict[tuple[int, str], list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line(
        "markers", "acceptance(num, label): acceptance-criterion test, summarised at exit"
    )


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when != "call":
        return
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    key = (marker.args[0], marker.args[1])
    _ACCEPTANCE_RESULTS.setdefault(key, []).append(report.outcome)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE_RESULTS:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for (num, label), outcomes in sorted(_ACCEPTANCE_RESULTS.items()):
        verdict = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {num} ({label}): {verdict}")


@pytest.fixture(scope="session")
def kb_cache():
    """(graph, KB, family) for every connected class, keyed by order."""
    cache: dict[int, list] = {}

    def get(n: int):
        if n not in cache:
            rows = []
            for g in enumerate_connected_graphs(n):
                kb, family = biclique_graph(g)
                rows.append((g, kb, family))
            cache[n] = rows
        return cache[n]

    return get
