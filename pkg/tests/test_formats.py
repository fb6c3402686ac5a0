from __future__ import annotations

import pytest
from hypothesis import given, settings

from dependarc import formats
from dependarc.constructions import theorem7_family
from dependarc.formats import FormatError
from dependarc.graph import Apex, GraphError, Level, cycle_graph
from dependarc.mycielski import mycielski
from dependarc.orientation import from_order, orient
from test_graph import graphs


def test_round_trip_with_labels_and_roles():
    h, _ = mycielski(cycle_graph(5), 1)
    text = formats.dumps(h, roles={"v": [0], "X": [1, 3]}, comment="two\nlines")
    gf = formats.loads(text)
    assert gf.graph == h
    assert gf.graph.labels == h.labels
    assert gf.roles == {"v": [0], "X": [1, 3]}
    assert isinstance(gf.graph.label(10), Apex) and gf.graph.label(6) == Level(1, 1)


def test_orientation_markers():
    gf = formats.loads("3 2\n0 1 >\n2 1 <\n")
    assert set(gf.orientation.arcs) == {(0, 1), (1, 2)}


def test_family_file_round_trip():
    inst = theorem7_family(3, 3, 1, 5, seed=7)
    text = formats.dumps(inst.graph, roles={"v": [inst.v], "v_prime": [inst.v_prime]})
    assert formats.loads(text).graph == inst.graph


@pytest.mark.parametrize("text", [
    "",
    "3\n",
    "3 2\n0 1\n",
    "3 1\n0 x\n",
    "3 2\n0 1 >\n1 2\n",
    "3 2\n0 1\n1 0\n",
    "3 1\n0 1 ?\n",
    "3 1\n0 1\njunk\n",
    "2 1\n0 1\nlabels\n0 (0,0)\n",
    "2 1\n0 1\nlabels\n0 zz\n1 u\n",
    "2 1\n0 5\n",
])
def test_malformed_inputs(text):
    with pytest.raises(GraphError):
        formats.loads(text)


def test_format_error_is_a_graph_error():
    with pytest.raises(FormatError):
        formats.loads("x y\n")


def test_comments_ignored():
    gf = formats.loads("# header\n2 1 # n m\n0 1 # edge\n")
    assert gf.graph.m == 1


def test_dot_output():
    g = cycle_graph(3)
    assert formats.to_dot(g).startswith("graph G {")
    dot = formats.to_dot(g, orient(g, [(0, 1), (1, 2), (0, 2)]))
    assert "0 -> 2;" in dot and dot.startswith("digraph")


@settings(max_examples=50, deadline=None)
@given(graphs())
def test_round_trip_property(g):
    d = from_order(g, list(reversed(range(g.n))))
    gf = formats.loads(formats.dumps(g, orientation=d))
    assert gf.graph == g
    # edgeless graphs carry no markers, hence no orientation
    assert gf.orientation == (d if g.m else None)
