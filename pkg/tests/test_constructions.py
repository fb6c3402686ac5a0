from __future__ import annotations

import random

import pytest
from hypothesis import given, settings, strategies as st

from dependarc.census import random_triangle_free_graph
from dependarc.constructions import (
    InstanceError,
    Theorem7Instance,
    c5_isomorphism,
    lemma11_select,
    lemma13_select,
    theorem7_family,
    theorem7_orient,
)
from dependarc.graph import build_graph, complete_graph, cycle_graph, is_independent, path_graph
from dependarc.mycielski import mycielski, verify_embedding
from dependarc.orientation import dependent_arcs, dependent_arcs_by_cycles
from dependarc.harness import family_grid


def test_minimal_family_is_c5():
    inst = theorem7_family(2, 2, 1, 3)
    perm = c5_isomorphism(inst.graph)
    assert perm is not None
    assert all(inst.graph.has_edge(perm[k], perm[(k + 1) % 5]) for k in range(5))


def test_family_rejects_full_yprime():
    with pytest.raises(InstanceError):
        theorem7_family(2, 2, 2, 3)


@pytest.mark.parametrize("args", [(1, 3, 1, 3), (3, 3, 1, 4), (2, 2, 1, 5), (3, 3, 0, 3)])
def test_family_rejects_bad_parameters(args):
    with pytest.raises(InstanceError):
        theorem7_family(*args)


def test_family_is_seeded():
    assert theorem7_family(4, 4, 2, 5, seed=3).graph == theorem7_family(4, 4, 2, 5, seed=3).graph


def test_validation_catches_wrong_roles():
    g = cycle_graph(5)
    with pytest.raises(InstanceError):
        Theorem7Instance(g, 0, frozenset({2, 4}), frozenset({1, 3}), 1).validate()
    with pytest.raises(InstanceError):
        Theorem7Instance(path_graph(4), 0, frozenset({1}), frozenset({2, 3}), 1).validate()


def test_c5_instance_orientation():
    g = cycle_graph(5)
    inst = Theorem7Instance(g, 0, frozenset({1, 3}), frozenset({2, 4}), 1)
    inst.validate()
    d, mp, special = theorem7_orient(inst)
    assert special == (mp.vertex_of(1, 1), mp.apex)
    assert dependent_arcs(d) == {special} == dependent_arcs_by_cycles(d)


@pytest.mark.parametrize("p, q, yp, length, seed", family_grid(10))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_unique_dependent_arc(p, q, yp, length, seed, m):
    inst = theorem7_family(p, q, yp, length, seed=seed, m=m)
    d, mp, special = theorem7_orient(inst)
    assert d.acyclic
    assert dependent_arcs(d) == {(mp.vertex_of(m, inst.v_prime), mp.apex)} == {special}


def test_two_edge_selection_outside_base():
    g = cycle_graph(5)
    h, mp = mycielski(g, 1)
    e1 = (mp.vertex_of(0, 0), mp.vertex_of(1, 1))
    e2 = (mp.vertex_of(0, 2), mp.vertex_of(1, 3))
    sel = lemma11_select(g, e1, e2)
    assert sel.case == "none_in_base" and sel.S == frozenset()


def test_two_edge_selection_both_in_base():
    g = cycle_graph(5)
    sel = lemma11_select(g, (0, 1), (2, 3))
    assert is_independent(g, sel.S)
    assert verify_embedding(g, sel.target, sel.sigma)


def test_two_edge_selection_rejects_bad_input():
    g = cycle_graph(5)
    _, mp = mycielski(g, 1)
    with pytest.raises(InstanceError):
        lemma11_select(g, (0, 1), (0, 1))
    with pytest.raises(InstanceError):
        lemma11_select(g, (0, 1), (mp.vertex_of(1, 0), mp.apex))
    with pytest.raises(InstanceError):
        lemma11_select(complete_graph(3), (0, 1), (1, 2))


@pytest.mark.parametrize("es, case", [
    ([(0, 1), (0, 3), (0, 5)], "case1_star"),
    ([(1, 0), (0, 3), (3, 2)], "case2_path"),
    ([(1, 0), (0, 3), (4, 5)], "case3_path_and_edge"),
    ([(0, 1), (2, 3), (4, 5)], "case4_matching"),
])
def test_three_edge_selection_cases(es, case):
    # K_{3,3} on {0,2,4} x {1,3,5} plus a pendant edge
    g = build_graph(7, [(0, 1), (0, 3), (0, 5), (2, 1), (2, 3), (2, 5), (4, 1), (4, 3), (4, 5), (5, 6)])
    sel = lemma13_select(g, *es)
    assert sel.case == case
    assert is_independent(g, sel.S)
    assert verify_embedding(g, sel.target, sel.sigma)


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 8), st.integers(0, 10**6), st.data())
def test_two_edge_selection_random(n, seed, data):
    g = random_triangle_free_graph(n, random.Random(seed))
    h, mp = mycielski(g, 1)
    pool = [e for e in h.edges if mp.apex not in e]
    if len(pool) < 2 or g.m < 2:
        return
    e1, e2 = data.draw(st.lists(st.sampled_from(pool), min_size=2, max_size=2, unique=True))
    sel = lemma11_select(g, e1, e2)
    assert is_independent(g, sel.S)
    assert verify_embedding(g, sel.target, sel.sigma)
    assert not sel.target.has_edge(*e1) and not sel.target.has_edge(*e2)


@settings(max_examples=60, deadline=None)
@given(st.integers(4, 8), st.integers(0, 10**6), st.data())
def test_three_edge_selection_random(n, seed, data):
    g = random_triangle_free_graph(n, random.Random(seed))
    if g.m < 3:
        return
    es = data.draw(st.lists(st.sampled_from(list(g.edges)), min_size=3, max_size=3, unique=True))
    sel = lemma13_select(g, *es)
    assert is_independent(g, sel.S)
    assert verify_embedding(g, sel.target, sel.sigma)
