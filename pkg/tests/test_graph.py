from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from dependarc.census import connected_graphs, connected_graphs_by_edges
from dependarc.graph import (
    Cycle,
    GraphError,
    bipartition,
    build_graph,
    chromatic_number,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    enumerate_cycles,
    generate,
    girth,
    is_bipartite,
    is_independent,
    is_proper_coloring,
    is_triangle_free,
    k_coloring,
    path_graph,
    petersen_graph,
    shortest_cycle,
)


@st.composite
def graphs(draw, max_n=7):
    n = draw(st.integers(1, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return build_graph(n, chosen)


def test_edges_are_normalised():
    g = build_graph(3, [(2, 0), (1, 0)])
    assert g.edges == ((0, 1), (0, 2))
    assert g.index_of(2, 0) == 1


@pytest.mark.parametrize("n, edges", [(2, [(0, 0)]), (2, [(0, 2)]), (-1, [])])
def test_bad_graphs_rejected(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_petersen_counts():
    g = petersen_graph()
    assert (g.n, g.m, girth(g)) == (10, 15, 5)
    assert all(g.degree(v) == 3 for v in range(10))


def test_generate_table():
    assert generate("cycle", 5) == cycle_graph(5)
    assert generate("bipartite", 2, 3).m == 6
    with pytest.raises(GraphError):
        generate("wheel", 5)


@pytest.mark.parametrize("g, expected", [
    (complete_graph(4), 7), (cycle_graph(6), 1), (complete_bipartite_graph(2, 3), 3), (path_graph(5), 0),
])
def test_cycle_counts(g, expected):
    cycles = list(enumerate_cycles(g))
    assert len(cycles) == expected
    for c in cycles:
        c.check(g)


def test_cycle_length_cap():
    assert sorted(len(c) for c in enumerate_cycles(complete_graph(4), length_cap=3)) == [3, 3, 3, 3]


def test_cycle_check_rejects_non_cycles():
    with pytest.raises(GraphError):
        Cycle((0, 1, 2)).check(path_graph(3))
    with pytest.raises(GraphError):
        Cycle((0, 1)).check(complete_graph(3))


def test_bipartition_and_girth():
    x, y = bipartition(cycle_graph(6))
    assert x | y == frozenset(range(6)) and not x & y
    assert bipartition(cycle_graph(5)) is None
    assert girth(path_graph(4)) == float("inf")
    assert shortest_cycle(path_graph(4)) is None
    assert is_triangle_free(cycle_graph(4)) and not is_triangle_free(complete_graph(3))


def test_independent():
    g = cycle_graph(5)
    assert is_independent(g, {0, 2})
    assert not is_independent(g, {0, 1})


@pytest.mark.parametrize("g, chi", [
    (complete_graph(4), 4), (cycle_graph(5), 3), (cycle_graph(6), 2), (petersen_graph(), 3), (build_graph(3, []), 1),
])
def test_chromatic_number(g, chi):
    k, col = chromatic_number(g)
    assert k == chi
    assert is_proper_coloring(g, col) and len(set(col)) <= k
    assert k_coloring(g, chi - 1) is None if chi > 1 else True


def test_census_sizes():
    # connected graphs up to isomorphism on 1..6 vertices: 1, 1, 2, 6, 21, 112
    assert sum(1 for _ in connected_graphs(6)) == 143
    by_edges = connected_graphs_by_edges(8)
    counts = [sum(1 for g in by_edges if g.m == k) for k in range(1, 9)]
    assert counts == [1, 1, 3, 5, 12, 30, 79, 227]


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_girth_matches_networkx(g):
    assert girth(g) == oracles.girth(g)
    c = shortest_cycle(g)
    if c is not None:
        c.check(g)
        assert len(c) == girth(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=6))
def test_cycle_enumeration_matches_networkx(g):
    cycles = list(enumerate_cycles(g))
    assert len(cycles) == oracles.simple_cycle_count(g)
    assert len({frozenset(c.arcs()) | frozenset(c.reversed().arcs()) for c in cycles}) == len(cycles)


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=6))
def test_chromatic_matches_brute_force(g):
    assert chromatic_number(g)[0] == oracles.chromatic(g)
    assert is_bipartite(g) == (oracles.chromatic(g) <= 2)


@settings(max_examples=40, deadline=None)
@given(graphs())
def test_components_partition_vertices(g):
    comps = g.components()
    assert sorted(v for c in comps for v in c) == list(range(g.n))
    assert g.is_connected() == (len(comps) <= 1)
