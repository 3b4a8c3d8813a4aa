"""Shared fixtures: named example ideals and seeded random corpora."""

from __future__ import annotations

import pytest

from mvdecomp import BenchSpec, minimalize, random_ideal
from mvdecomp.errors import FeasibilityError


@pytest.fixture(scope="session")
def three_corners():
    return minimalize([(3, 0, 0), (2, 1, 0), (1, 0, 1), (0, 3, 0), (0, 0, 3)], 3)


@pytest.fixture(scope="session")
def seven_components():
    return minimalize(
        [
            (3, 5, 1),
            (0, 5, 4),
            (0, 3, 5),
            (1, 1, 5),
            (2, 0, 5),
            (4, 0, 3),
            (4, 2, 2),
            (4, 4, 1),
        ],
        3,
    )


@pytest.fixture(scope="session")
def pruned_tree_ideal():
    return minimalize([(2, 3, 0, 0), (0, 3, 1, 1), (0, 1, 0, 2), (0, 0, 3, 2)], 4)


@pytest.fixture(scope="session")
def edge_ideal():
    return minimalize([(1, 1, 0), (0, 1, 1)], 3)


def _build_corpus(count, seed_base, shapes):
    ideals = []
    seed = 0
    while len(ideals) < count:
        n, gens, max_exp = shapes(seed)
        try:
            ideals.append(
                random_ideal(
                    BenchSpec(vars=n, gens=gens, max_exp=max_exp, seed=seed_base + seed)
                )
            )
        except FeasibilityError:
            pass
        seed += 1
    return tuple(ideals)


@pytest.fixture(scope="session")
def corpus_small():
    """200 seeded ideals with 2-4 variables, at most 8 generators,
    exponents at most 4."""

    def shapes(seed):
        n = 2 + seed % 3
        gens = 3 + seed % 6
        if n == 2:
            gens = min(gens, 4)
        return n, gens, 2 + seed % 3

    return _build_corpus(200, 1000, shapes)


@pytest.fixture(scope="session")
def corpus_n5():
    """50 seeded ideals in 5 variables."""

    def shapes(seed):
        return 5, 4 + seed % 5, 2 + seed % 3

    return _build_corpus(50, 5000, shapes)


_CRITERIA = {
    1: "end-to-end decomposition golden run under one second",
    2: "maximal corners and closed-corner membership golden run",
    3: "locally and globally free direction golden run",
    4: "splitting-tree first level, prune reasons, empty top homology",
    5: "simplicial vs brute-force homology on the random corpus",
    6: "Betti bound sandwich and relevant-node coverage",
    7: "decomposition, cover, Hilbert, and dimension oracles",
    8: "output invariance across pruning, strategy, and threads",
    9: "large generic ideal decomposes fast and verifies",
}


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            nodeid = getattr(report, "nodeid", "")
            if "test_acceptance.py::test_criterion_" in nodeid:
                tail = nodeid.split("test_criterion_", 1)[1]
                number = int(tail.split("_", 1)[0])
                ok = status == "passed"
                outcomes[number] = outcomes.get(number, True) and ok
    if not outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        if number not in outcomes:
            continue
        verdict = "PASS" if outcomes[number] else "FAIL"
        terminalreporter.write_line(
            f"criterion {number}: {verdict} - {_CRITERIA[number]}"
        )
