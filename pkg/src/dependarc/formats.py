"""Text formats.

Edge list::

    # comments start with '#'
    n m
    a b          # undirected edge, 0-based
    a b >        # orientation files: '>' means a -> b, '<' means b -> a
    labels       # optional: one line per vertex, "id i,j" or "id u"
    0 0,0
    roles        # optional: special-vertex instance roles
    v 0
    v_prime 3
    X 1 2 3
    Y 4 5 6
    Yprime 4
    m 1
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, TextIO

from .graph import Apex, Graph, GraphError, Label, Level, build_graph
from .orientation import Orientation, orient


class FormatError(GraphError):
    pass


@dataclass
class GraphFile:
    graph: Graph
    orientation: Orientation | None = None
    roles: dict[str, list[int]] = field(default_factory=dict)


def _lines(text: str) -> Iterable[tuple[int, list[str]]]:
    for num, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield num, body.split()


def parse_label(tok: str) -> Label:
    if tok == "u":
        return Apex()
    tok = tok.strip("()")
    try:
        i, j = (int(x) for x in tok.split(","))
    except ValueError:
        raise FormatError(f"bad label {tok!r}") from None
    return Level(i, j)


def loads(text: str) -> GraphFile:
    lines = list(_lines(text))
    if not lines:
        raise FormatError("empty graph file")
    num, head = lines[0]
    if len(head) != 2:
        raise FormatError(f"line {num}: expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise FormatError(f"line {num}: expected integers 'n m'") from None
    if len(lines) < 1 + m:
        raise FormatError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges, arcs = [], []
    for num, toks in lines[1:1 + m]:
        if len(toks) not in (2, 3):
            raise FormatError(f"line {num}: expected 'a b' or 'a b >'")
        try:
            a, b = int(toks[0]), int(toks[1])
        except ValueError:
            raise FormatError(f"line {num}: vertex ids must be integers") from None
        edges.append((a, b))
        if len(toks) == 3:
            if toks[2] not in "<>":
                raise FormatError(f"line {num}: direction marker must be '>' or '<'")
            arcs.append((a, b) if toks[2] == ">" else (b, a))
    if arcs and len(arcs) != len(edges):
        raise FormatError("either every edge or no edge carries a direction marker")
    if len(set(map(frozenset, edges))) != len(edges):
        raise FormatError("duplicate edge")

    labels: list[Label | None] | None = None
    roles: dict[str, list[int]] = {}
    section = None
    for num, toks in lines[1 + m:]:
        if toks == ["labels"] or toks == ["roles"]:
            section = toks[0]
            if section == "labels":
                labels = [None] * n
            continue
        if section == "labels":
            if len(toks) != 2:
                raise FormatError(f"line {num}: expected 'id label'")
            v = int(toks[0])
            if not 0 <= v < n:
                raise FormatError(f"line {num}: label for unknown vertex {v}")
            labels[v] = parse_label(toks[1])
        elif section == "roles":
            roles[toks[0]] = [int(x) for x in toks[1:]]
        else:
            raise FormatError(f"line {num}: unexpected content after the edge list")
    if labels is not None and any(lab is None for lab in labels):
        raise FormatError("labels section must label every vertex")
    g = build_graph(n, edges, labels)
    d = orient(g, arcs) if arcs else None
    return GraphFile(g, d, roles)


def load(path: str) -> GraphFile:
    with open(path) as fh:
        return loads(fh.read())


def dumps(g: Graph, orientation: Orientation | None = None, roles: dict[str, Iterable[int]] | None = None,
          comment: str | None = None) -> str:
    out = []
    if comment:
        out.extend(f"# {line}" for line in comment.splitlines())
    out.append(f"{g.n} {g.m}")
    for a, b in g.edges:
        if orientation is None:
            out.append(f"{a} {b}")
        else:
            out.append(f"{a} {b} {'>' if orientation.points(a, b) else '<'}")
    if g.labels is not None:
        out.append("labels")
        for v, lab in enumerate(g.labels):
            out.append(f"{v} {'u' if isinstance(lab, Apex) else f'({lab.i},{lab.j})'}")
    if roles:
        out.append("roles")
        for key, vals in roles.items():
            out.append(" ".join([key, *map(str, vals)]))
    return "\n".join(out) + "\n"


def dump(fh: TextIO, g: Graph, **kw) -> None:
    fh.write(dumps(g, **kw))


def to_dot(g: Graph, orientation: Orientation | None = None, name: str = "G") -> str:
    directed = orientation is not None
    out = [f"{'digraph' if directed else 'graph'} {name} {{"]
    for v in range(g.n):
        lab = g.label(v)
        text = str(v) if lab is None else str(lab)
        out.append(f'  {v} [label="{text}"];')
    for a, b in g.edges:
        if directed:
            t, h = (a, b) if orientation.points(a, b) else (b, a)
            out.append(f"  {t} -> {h};")
        else:
            out.append(f"  {a} -- {b};")
    out.append("}")
    return "\n".join(out) + "\n"
