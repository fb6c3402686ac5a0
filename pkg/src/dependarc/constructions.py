"""Constructive arguments made executable.

* a three-step orientation of M_m(G) with a single dependent arc, for
  graphs with a special vertex over a bipartite remainder;
* a seeded generator of such graphs;
* independent-set selections that embed G into M(G) - u with two or three
  edges removed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

from .graph import Graph, GraphError, bipartition, build_graph, is_bipartite, is_independent, is_triangle_free
from .mycielski import MycielskiMap, mycielski, replace_subgraph, verify_embedding
from .orientation import Orientation, dependent_arcs, orient


class InstanceError(GraphError):
    pass


@dataclass(frozen=True)
class Theorem7Instance:
    """A graph with a special vertex ``v`` over a bipartite remainder ``X | Y``.

    ``v_prime`` is the only neighbour of ``v`` in ``X``; ``yprime`` records
    ``N(v) & Y`` for generated instances.
    """

    graph: Graph
    v: int
    X: frozenset[int]
    Y: frozenset[int]
    v_prime: int
    m: int = 1
    yprime: frozenset[int] = field(default=frozenset())

    def validate(self) -> None:
        g = self.graph
        if self.m < 1:
            raise InstanceError("m must be at least 1")
        if not is_triangle_free(g):
            raise InstanceError("graph has a triangle")
        if is_bipartite(g):
            raise InstanceError("graph is bipartite")
        others = frozenset(range(g.n)) - {self.v}
        if self.X & self.Y or self.X | self.Y != others:
            raise InstanceError("X and Y must partition the vertices other than v")
        for a, b in g.edges:
            if self.v in (a, b):
                continue
            if (a in self.X) == (b in self.X):
                raise InstanceError(f"edge ({a}, {b}) lies inside one part")
        rest, ids = g.induced(sorted(others))
        if bipartition(rest) is None:
            raise InstanceError("G - v is not bipartite")
        nbrs = set(g.neighbors(self.v))
        in_x = nbrs & self.X
        if in_x != {self.v_prime}:
            raise InstanceError(f"v must have exactly one neighbour in X, found {sorted(in_x)}")
        if not nbrs & self.Y:
            raise InstanceError("v needs a neighbour in Y")


def theorem7_orient(inst: Theorem7Instance) -> tuple[Orientation, MycielskiMap, tuple[int, int]]:
    """Orientation of M_m(G) whose only dependent arc is ``<m,v'> -> u``.

    Returns the orientation, the Mycielski map, and that arc.
    """
    inst.validate()
    g, v, vp = inst.graph, inst.v, inst.v_prime
    base_arcs = []
    for a, b in g.edges:
        if v == a or v == b:
            w = b if a == v else a
            base_arcs.append((w, v) if w == vp else (v, w))
        else:
            base_arcs.append((a, b) if a in inst.X else (b, a))
    h, mp = mycielski(g, inst.m)
    arcs = list(base_arcs)
    for i in range(1, inst.m + 1):
        for w1, w2 in base_arcs:
            arcs.append((mp.vertex_of(i, w1), mp.vertex_of(i - 1, w2)))
            arcs.append((mp.vertex_of(i - 1, w1), mp.vertex_of(i, w2)))
    arcs.extend((mp.vertex_of(inst.m, w), mp.apex) for w in range(g.n))
    d = orient(h, arcs)
    special = (mp.vertex_of(inst.m, vp), mp.apex)
    if not d.acyclic or dependent_arcs(d) != {special}:
        raise AssertionError("construction did not produce a unique dependent arc")
    return d, mp, special


def theorem7_family(p: int, q: int, yprime_size: int, path_len: int, seed: int = 0, m: int = 1) -> Theorem7Instance:
    """Generate an instance: ``v`` joined to ``v'`` in X and to Y' in Y, plus
    an alternating X/Y path of length ``path_len`` from ``v'`` to some
    ``z`` in Y' that meets Y' only at ``z``.

    Path vertices are fresh; remaining X/Y vertices are attached by one
    seeded random edge each (never between ``v'`` and Y').
    """
    if p < 2 or q < 2:
        raise InstanceError("p and q must be at least 2")
    if not 1 <= yprime_size < q:
        raise InstanceError("Y' must be a nonempty proper subset of Y")
    if path_len < 3 or path_len % 2 == 0:
        raise InstanceError("path length must be odd and at least 3")
    need_x = (path_len + 1) // 2
    need_y = (path_len - 1) // 2
    if need_x > p or need_y > q - yprime_size:
        raise InstanceError(f"path of length {path_len} does not fit in p={p}, q={q}, |Y'|={yprime_size}")
    rng = random.Random(seed)
    v = 0
    xs = list(range(1, p + 1))
    ys = list(range(p + 1, p + q + 1))
    rng.shuffle(xs)
    rng.shuffle(ys)
    vp = xs[0]
    yprime = ys[:yprime_size]
    z = yprime[0]
    y_free = ys[yprime_size:]
    path_x = xs[:need_x]
    path_y = y_free[:need_y] + [z]
    path = [w for pair in zip(path_x, path_y) for w in pair]
    edges = [(v, vp)] + [(v, y) for y in yprime]
    edges += list(zip(path, path[1:]))
    on_path = set(path)
    for x in xs:
        if x not in on_path:
            edges.append((x, rng.choice(ys)))
    for y in ys:
        if y not in on_path and y not in yprime:
            edges.append((y, rng.choice(xs)))
    g = build_graph(p + q + 1, edges)
    inst = Theorem7Instance(g, v, frozenset(xs), frozenset(ys), vp, m, frozenset(yprime))
    inst.validate()
    return inst


# -- edge-deletion embeddings -------------------------------------------------

@dataclass(frozen=True)
class Selection:
    """Independent set ``S`` of G and the embedding of G it induces."""

    S: frozenset[int]
    case: str
    sigma: tuple[int, ...]
    target: Graph


def _selection(g: Graph, mp: MycielskiMap, s, case: str, removed: Sequence[tuple[int, int]]) -> Selection | None:
    s = frozenset(s)
    if not is_independent(g, s):
        return None
    host, _ = mycielski(g, 1)
    target = Graph(host.n, tuple(e for e in host.edges if mp.apex not in e), host.labels).delete_edges(removed)
    _, sigma = replace_subgraph(g, s, mp)
    if not verify_embedding(g, target, sigma):
        return None
    return Selection(s, case, sigma, target)


def _norm(e: tuple[int, int]) -> tuple[int, int]:
    return (e[0], e[1]) if e[0] < e[1] else (e[1], e[0])


def lemma11_select(g: Graph, e1: tuple[int, int], e2: tuple[int, int]) -> Selection:
    """S for two edges of M(G) - u (ids in M(G)).

    When both edges lie in the base graph either one may take the first
    role; both assignments and both endpoint labellings are tried and the
    lowest case (then smallest S) is kept.
    """
    if g.m < 2:
        raise InstanceError("need at least two edges")
    if not is_triangle_free(g):
        raise InstanceError("graph has a triangle")
    h, mp = mycielski(g, 1)
    e1, e2 = _norm(e1), _norm(e2)
    for e in (e1, e2):
        if not h.has_edge(*e) or mp.apex in e:
            raise InstanceError(f"{e} is not an edge of M(G) - u")
    if e1 == e2:
        raise InstanceError("the two edges must differ")
    n = g.n
    in_base = [e for e in (e1, e2) if e[1] < n]
    removed = [e1, e2]
    if not in_base:
        sel = _selection(g, mp, (), "none_in_base", removed)
        assert sel is not None
        return sel

    rank = {"direct": 0, "case1": 1, "case2": 2}
    candidates = []
    roles = [(e1, e2), (e2, e1)]
    for first, second in roles:
        if first[1] >= n:
            continue
        for x1, y1 in (first, first[::-1]):
            moved = mp.vertex_of(1, x1)
            # G' = G - x1 + x1'; is the second edge inside it?
            def in_gprime(w: int) -> bool:
                return w == moved or (w < n and w != x1)
            a, b = second
            if not (in_gprime(a) and in_gprime(b)):
                candidates.append(("direct", frozenset({x1})))
            elif moved not in second:
                for x2 in sorted(second):
                    if x2 != x1 and not g.has_edge(x1, x2):
                        candidates.append(("case1", frozenset({x1, x2})))
                        break
            else:
                candidates.append(("case2", frozenset({y1})))
    candidates.sort(key=lambda c: (rank[c[0]], sorted(c[1])))
    for case, s in candidates:
        sel = _selection(g, mp, s, case, removed)
        if sel is not None:
            return sel
    raise AssertionError(f"no selection embeds G after removing {e1}, {e2}")


def lemma13_select(g: Graph, e1: tuple[int, int], e2: tuple[int, int], e3: tuple[int, int]) -> Selection:
    """S for three base edges, by the shape of the subgraph they span."""
    if g.m < 3:
        raise InstanceError("need at least three edges")
    if not is_triangle_free(g):
        raise InstanceError("graph has a triangle")
    es = [_norm(e) for e in (e1, e2, e3)]
    for e in es:
        if e not in g.edge_index:
            raise InstanceError(f"{e} is not an edge of G")
    if len(set(es)) != 3:
        raise InstanceError("the three edges must differ")
    _, mp = mycielski(g, 1)
    deg: dict[int, int] = {}
    for a, b in es:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
    verts = sorted(deg)
    adj = g.has_edge

    if len(verts) == 4 and max(deg.values()) == 3:
        x = next(w for w in verts if deg[w] == 3)
        return _must(g, mp, {x}, "case1_star", es)
    if len(verts) == 4:
        ends = [w for w in verts if deg[w] == 1]
        chains = []
        for start in ends:
            chain = [start]
            while len(chain) < 4:
                last = chain[-1]
                nxt = next(w for w in verts if w not in chain and _norm((last, w)) in es)
                chain.append(nxt)
            chains.append(frozenset({chain[0], chain[2]}))
        return _must(g, mp, min(chains, key=sorted), "case2_path", es)
    if len(verts) == 5:
        x = next(w for w in verts if deg[w] == 2)
        lone = next(e for e in es if x not in e)
        y = next(w for w in sorted(lone) if not adj(x, w))
        return _must(g, mp, {x, y}, "case3_path_and_edge", es)

    # three pairwise disjoint edges
    (x1, y1), (x2, y2), (x3, y3) = [tuple(e) for e in es]
    if adj(x1, x2):
        x2, y2 = y2, x2
    if adj(x1, x3):
        x3, y3 = y3, x3
    if not adj(x2, x3):
        s = {x1, x2, x3}
    else:
        pick = next((i for i, yi in ((2, y2), (3, y3)) if not adj(x1, yi)), None)
        if pick == 2:
            s = {x1, y2, x3}
        elif pick == 3:
            s = {x1, y3, x2}
        else:
            s = {y1, y2, y3}
    return _must(g, mp, s, "case4_matching", es)


def _must(g: Graph, mp: MycielskiMap, s, case: str, removed) -> Selection:
    sel = _selection(g, mp, s, case, removed)
    if sel is None:
        raise AssertionError(f"{case}: S={sorted(s)} failed to embed G")
    return sel


def c5_isomorphism(g: Graph) -> tuple[int, ...] | None:
    """An explicit map from C_5 (0-1-2-3-4-0) onto ``g`` if one exists."""
    if g.n != 5 or g.m != 5:
        return None
    for perm in permutations(range(5)):
        if all(g.has_edge(perm[k], perm[(k + 1) % 5]) for k in range(5)):
            return perm
    return None
