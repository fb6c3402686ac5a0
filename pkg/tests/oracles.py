"""Brute-force reference implementations, independent of the bitmask code.

Everything here goes through networkx digraphs and plain enumeration so a
shared bug in the library's reachability tables cannot hide.
"""

from __future__ import annotations

from itertools import combinations, product

import networkx as nx

from dependarc.graph import Graph


def digraph(n: int, arcs) -> nx.DiGraph:
    d = nx.DiGraph()
    d.add_nodes_from(range(n))
    d.add_edges_from(arcs)
    return d


def all_orientations(g: Graph):
    """Every orientation of ``g`` as a list of arcs (2^m of them)."""
    for flips in product((False, True), repeat=g.m):
        yield [(b, a) if f else (a, b) for (a, b), f in zip(g.edges, flips)]


def acyclic_orientations(g: Graph):
    for arcs in all_orientations(g):
        if nx.is_directed_acyclic_graph(digraph(g.n, arcs)):
            yield arcs


def dependent(n: int, arcs) -> set[tuple[int, int]]:
    """Arcs x->y with another directed x..y path (walk over the digraph minus the arc)."""
    d = digraph(n, arcs)
    out = set()
    for x, y in arcs:
        d.remove_edge(x, y)
        if nx.has_path(d, x, y):
            out.add((x, y))
        d.add_edge(x, y)
    return out


def d_min(g: Graph) -> int:
    return min(len(dependent(g.n, arcs)) for arcs in acyclic_orientations(g))


def d_max(g: Graph) -> int:
    return max(len(dependent(g.n, arcs)) for arcs in acyclic_orientations(g))


def is_cover(g: Graph) -> bool:
    return any(not dependent(g.n, arcs) for arcs in acyclic_orientations(g))


def c(g: Graph) -> int:
    for size in range(g.m + 1):
        for removed in combinations(g.edges, size):
            if is_cover(g.delete_edges(removed)):
                return size
    raise AssertionError("unreachable: the empty graph is a cover graph")


def e_k(g: Graph, k: int) -> int:
    best = 0
    for col in product(range(k), repeat=g.n):
        best = max(best, sum(col[a] != col[b] for a, b in g.edges))
    return best


def chromatic(g: Graph) -> int:
    for k in range(1, g.n + 1):
        for col in product(range(k), repeat=g.n):
            if all(col[a] != col[b] for a, b in g.edges):
                return k
    return 0


def girth(g: Graph) -> float:
    h = nx.Graph(list(g.edges))
    h.add_nodes_from(range(g.n))
    return nx.girth(h)


def simple_cycle_count(g: Graph) -> int:
    h = nx.Graph(list(g.edges))
    return sum(1 for _ in nx.simple_cycles(h))


def reversal_closure(n: int, arcs) -> set[frozenset]:
    """All orientations reachable by reversing sources, as frozensets of arcs."""
    start = frozenset(arcs)
    seen = {start}
    stack = [start]
    while stack:
        cur = stack.pop()
        indeg = {v: 0 for v in range(n)}
        for _, h in cur:
            indeg[h] += 1
        for v in range(n):
            if indeg[v] == 0 and any(t == v for t, _ in cur):
                nxt = frozenset((h, t) if t == v else (t, h) for t, h in cur)
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
    return seen
