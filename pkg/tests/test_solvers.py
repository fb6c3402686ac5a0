from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from dependarc.census import connected_graphs, random_tree
from dependarc.graph import (
    build_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
)
from dependarc.mycielski import mycielski
from dependarc.orientation import dependent_arcs, orient
from dependarc.search import Budget, BudgetExceeded, Meter, OrientationSearch
from dependarc.solvers import (
    ParamReport,
    at_most_dependent,
    bridges,
    c_upper_bounds,
    check_fact_chain,
    chi,
    cover_excision_number,
    d_max,
    d_min,
    d_min_without_apex,
    e_k,
    girth_report,
    is_cover,
    verify_fact_chain,
)
from test_graph import graphs

# brute-force values from tests/oracles.py, frozen
FROZEN = {
    "K3": (complete_graph(3), dict(dmin=1, dmax=1, c=1, e2=2, e3=3)),
    "K4": (complete_graph(4), dict(dmin=3, dmax=3, c=2, e2=4, e3=5)),
    "K5": (complete_graph(5), dict(dmin=6, dmax=6, c=4, e2=6, e3=8)),
    "C4": (cycle_graph(4), dict(dmin=0, dmax=1, c=0, e2=4, e3=4)),
    "C5": (cycle_graph(5), dict(dmin=0, dmax=1, c=0, e2=4, e3=5)),
    "C6": (cycle_graph(6), dict(dmin=0, dmax=1, c=0, e2=6, e3=6)),
    "K23": (complete_bipartite_graph(2, 3), dict(dmin=0, dmax=2, c=0, e2=6, e3=6)),
    "P4": (path_graph(4), dict(dmin=0, dmax=0, c=0, e2=3, e3=3)),
}


def cert_orientation(g, rep):
    return orient(g, [tuple(a) for a in rep.certificate["orientation"]])


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_frozen_values(name):
    g, want = FROZEN[name]
    assert d_min(g).value == want["dmin"]
    assert d_max(g, witness=True).value == want["dmax"]
    assert cover_excision_number(g).value == want["c"]
    assert e_k(g, 2).value == want["e2"]
    assert e_k(g, 3).value == want["e3"]
    assert is_cover(g).value == (want["dmin"] == 0)


def test_d_min_certificate_revalidates():
    g = complete_graph(3)
    rep = d_min(g)
    assert rep.exact and rep.value == 1
    d = cert_orientation(g, rep)
    assert len(dependent_arcs(d)) == 1


def test_grotzsch():
    g, _ = mycielski(cycle_graph(5), 1)
    dm = d_min(g)
    cn = cover_excision_number(g)
    assert (dm.value, dm.exact, cn.value, cn.exact) == (1, True, 1, True)
    assert len(dependent_arcs(cert_orientation(g, dm))) == 1
    rest = g.delete_edges([tuple(e) for e in cn.certificate["deleted"]])
    assert is_cover(rest).value


def test_petersen_cover_fast_path():
    rep = is_cover(petersen_graph())
    assert rep.value is True and rep.certificate["route"] == "chromatic_below_girth"
    slow = is_cover(petersen_graph(), fast_paths=False)
    assert slow.value is True and slow.certificate["route"] == "search"


@pytest.mark.parametrize("n, m", [(3, 1), (4, 1), (5, 1), (6, 1), (4, 2), (5, 2)])
def test_mycielski_cycle_cover(n, m):
    h, _ = mycielski(cycle_graph(n), m)
    assert is_cover(h, fast_paths=False).value == (n % 2 == 0)


def test_disconnected_graphs_sum_components():
    g = build_graph(7, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (5, 6), (3, 6), (3, 5)])
    assert d_min(g).value == 1 + 1
    assert cover_excision_number(g).value == 2
    assert d_max(g).value == g.m - g.n + 2


def test_budget_gives_bracket():
    h, _ = mycielski(cycle_graph(5), 1)
    rep = d_min(h, Budget(max_nodes=5))
    assert not rep.exact
    assert rep.lower <= 1 <= rep.upper
    doc = json.loads(rep.to_json())
    assert doc["exact"] is False and "lower" in doc


def test_budget_from_env(monkeypatch):
    monkeypatch.setenv(Budget.ENV, "nodes=123,seconds=4")
    b = Budget.from_env()
    assert (b.max_nodes, b.max_seconds) == (123, 4.0)
    assert b.override(max_nodes=7).max_nodes == 7
    monkeypatch.setenv(Budget.ENV, "bogus=1")
    with pytest.raises(ValueError):
        Budget.from_env()


def test_meter_raises():
    m = Meter(Budget(max_nodes=2))
    m.tick()
    m.tick()
    with pytest.raises(BudgetExceeded):
        m.tick()


def test_at_most_dependent():
    g = complete_graph(4)
    ok, d, _ = at_most_dependent(g, 3)
    assert ok and len(dependent_arcs(d)) <= 3
    ok, d, _ = at_most_dependent(g, 2)
    assert ok is False and d is None


def test_bridges():
    g = build_graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    mask = bridges(g)
    assert {g.edges[k] for k in range(g.m) if mask >> k & 1} == {(2, 3), (3, 4)}


def test_chi_and_girth_reports():
    assert chi(petersen_graph()).value == 3
    assert girth_report(path_graph(3)).to_dict()["value"] == "inf"


def test_e_k_certificate():
    g, _ = mycielski(cycle_graph(5), 1)
    rep = e_k(g, 3)
    col = rep.certificate["coloring"]
    assert rep.value == sum(col[a] != col[b] for a, b in g.edges) == 19
    assert e_k(g, 4).value == g.m  # 4-colourable
    with pytest.raises(ValueError):
        e_k(g, 0)


def test_bounds_gated_on_triangles():
    bounds, omitted = c_upper_bounds(complete_graph(4))
    assert {b.name for b in bounds} == {"girth_ek"}
    assert {o["name"] for o in omitted} >= {"bipartite_split", "mycielski_base_edges"}
    g, mp = mycielski(cycle_graph(5), 1)
    names = {b.name for b in c_upper_bounds(g)[0]}
    assert names == {"girth_ek", "bipartite_split", "mycielski_base_edges", "mycielski_base_cut"}
    assert all(b.value >= 1 for b in c_upper_bounds(g, mp)[0])


def test_mycielski_of_triangle_omits_base_cut():
    g, _ = mycielski(complete_graph(3), 1)
    names = {o["name"] for o in c_upper_bounds(g)[1]}
    assert "mycielski_base_cut" in names and "bipartite_split" in names


def test_c_dmin_relation_checker():
    assert check_fact_chain(1, 1) == []
    assert check_fact_chain(2, 1)
    assert check_fact_chain(1, 2)
    assert check_fact_chain(0, 1)
    assert verify_fact_chain(complete_graph(4)).violations == []


def test_d_min_without_apex():
    rep = d_min_without_apex(cycle_graph(5))
    assert rep.exact and rep.value == 0
    assert d_min_without_apex(complete_graph(3)).value >= d_min(complete_graph(3)).value


def test_report_serialisation():
    rep = ParamReport("girth", float("inf"))
    assert json.loads(rep.to_json())["value"] == "inf"


def test_search_rejects_nothing_on_tree():
    g = random_tree(8, random.Random(1))
    found = OrientationSearch(g, Meter(None)).run(0)
    assert found is not None and found[2] == 0


def test_small_census_against_oracles():
    for g in connected_graphs(5):
        assert d_min(g).value == oracles.d_min(g), g
        assert cover_excision_number(g).value == oracles.c(g), g
        assert d_max(g).value == oracles.d_max(g), g


@settings(max_examples=50, deadline=None)
@given(graphs(max_n=6))
def test_d_min_matches_oracle(g):
    rep = d_min(g)
    assert rep.exact
    assert rep.value == oracles.d_min(g)
    assert len(dependent_arcs(cert_orientation(g, rep))) == rep.value


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=5))
def test_c_matches_oracle(g):
    rep = cover_excision_number(g)
    assert rep.value == oracles.c(g)
    assert rep.value <= d_min(g).value


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6), st.integers(1, 4))
def test_e_k_matches_oracle(g, k):
    assert e_k(g, k).value == oracles.e_k(g, k)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_cover_fast_paths_agree_with_search(g):
    fast, slow = is_cover(g), is_cover(g, fast_paths=False)
    assert fast.value == slow.value == oracles.is_cover(g)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_d_max_formula_matches_enumeration(g):
    rep = d_max(g, witness=True)
    assert rep.value == rep.certificate["search_value"] == oracles.d_max(g)


@settings(max_examples=30, deadline=None)
@given(graphs(max_n=6))
def test_upper_bounds_are_sound(g):
    c = cover_excision_number(g).value
    for b in c_upper_bounds(g)[0]:
        assert b.value >= c, b
