from __future__ import annotations

import json

import pytest

from dependarc.graph import cycle_graph
from dependarc.harness import (
    EXIT_INEXACT,
    EXIT_OK,
    EXIT_VIOLATION,
    INEXACT,
    VERIFIED,
    VIOLATED,
    Claim,
    SuiteResult,
    family_grid,
    graph_artifact,
    suite_bounds,
    suite_facts,
    suite_t3,
    suite_t6,
    suite_t7,
)
from dependarc.search import Budget


def strip_timing(res):
    doc = res.to_dict()
    doc.pop("timing")
    return json.dumps(doc, sort_keys=True)


def test_violation_requires_counterexample():
    res = SuiteResult("x", {})
    with pytest.raises(ValueError):
        res.add(Claim("i", "c", VIOLATED))
    res.add(Claim("i", "c", VIOLATED, {}, graph_artifact(cycle_graph(3))))
    assert res.exit_code == EXIT_VIOLATION


def test_exit_codes():
    res = SuiteResult("x", {})
    res.add(Claim("a", "c", VERIFIED))
    assert res.exit_code == EXIT_OK
    res.add(Claim("b", "c", INEXACT))
    assert res.exit_code == EXIT_INEXACT


def test_claims_sorted_canonically():
    res = SuiteResult("x", {})
    res.add(Claim("b", "c", VERIFIED))
    res.add(Claim("a", "c", VERIFIED))
    assert [c["instance"] for c in res.to_dict()["claims"]] == ["a", "b"]


def test_family_grid_covers_parameters():
    grid = family_grid(10)
    assert len(grid) >= 10
    assert {p for p, *_ in grid} | {q for _, q, *_ in grid} >= {2, 3, 4}
    assert {length for *_, length, _ in grid} == {3, 5}


@pytest.mark.parametrize("suite, kw", [
    (suite_facts, {"exhaustive": 4}),
    (suite_t3, {"exhaustive": 4}),
    (suite_t6, {"exhaustive": 3, "ms": [1]}),
    (suite_t7, {"instances": 3, "ms": [1, 2]}),
    (suite_bounds, {"exhaustive": 4}),
])
def test_small_suites_deterministic(suite, kw):
    a, b = suite(**kw), suite(**kw)
    assert a.exit_code == EXIT_OK
    assert strip_timing(a) == strip_timing(b)


def test_budget_marks_inexact_not_verified():
    res = suite_facts(exhaustive=5, budget=Budget(max_nodes=3))
    statuses = {c.status for c in res.claims}
    assert VIOLATED not in statuses
    assert INEXACT in statuses
