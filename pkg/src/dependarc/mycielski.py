"""Generalized Mycielski graphs M_m(G).

Vertex layout is level-major: copy ``i`` of base vertex ``j`` gets id
``i * n + j`` and the apex comes last, so ``divmod(v, n)`` recovers the label.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .graph import Apex, Graph, GraphError, Level, build_graph, is_independent


@dataclass(frozen=True)
class MycielskiMap:
    base: Graph
    m: int

    @property
    def apex(self) -> int:
        return (self.m + 1) * self.base.n

    def vertex_of(self, i: int, j: int) -> int:
        if not (0 <= i <= self.m and 0 <= j < self.base.n):
            raise GraphError(f"<{i},{j}> is not a vertex of M_{self.m}")
        return i * self.base.n + j

    def label_of(self, v: int) -> Level | Apex:
        if v == self.apex:
            return Apex()
        if not 0 <= v < self.apex:
            raise GraphError(f"vertex {v} out of range")
        i, j = divmod(v, self.base.n)
        return Level(i, j)

    def level(self, v: int) -> int | None:
        return None if v == self.apex else v // self.base.n

    def base_index(self, v: int) -> int | None:
        return None if v == self.apex else v % self.base.n


def mycielski(g: Graph, m: int = 1) -> tuple[Graph, MycielskiMap]:
    if m < 1:
        raise GraphError("the number of levels m must be at least 1")
    n = g.n
    mp = MycielskiMap(g, m)
    edges = list(g.edges)
    for i in range(1, m + 1):
        lo, hi = (i - 1) * n, i * n
        for j, k in g.edges:
            edges.append((lo + j, hi + k))
            edges.append((lo + k, hi + j))
    apex = mp.apex
    edges.extend((m * n + j, apex) for j in range(n))
    labels = [mp.label_of(v) for v in range(apex + 1)]
    return build_graph(apex + 1, edges, labels), mp


def level_zero_edges(mp: MycielskiMap) -> list[tuple[int, int]]:
    return list(mp.base.edges)


def without_apex(h: Graph, mp: MycielskiMap) -> Graph:
    """M_m(G) - u, keeping ids (the apex stays as an isolated vertex)."""
    return Graph(h.n, tuple(e for e in h.edges if mp.apex not in e), h.labels)


def shadow_bipartition(mp: MycielskiMap) -> tuple[frozenset[int], frozenset[int]]:
    """Parts of M_m(G) - E(G): even levels vs odd levels, apex opposite level m."""
    n = mp.base.n
    even = {v for v in range(mp.apex) if (v // n) % 2 == 0}
    odd = set(range(mp.apex)) - even
    (odd if mp.m % 2 == 0 else even).add(mp.apex)
    return frozenset(even), frozenset(odd)


def verify_embedding(h: Graph, target: Graph, mapping: Sequence[int] | Mapping[int, int]) -> bool:
    """True iff ``mapping`` is injective on V(h) and sends edges to edges."""
    try:
        image = [mapping[v] for v in range(h.n)]
    except (KeyError, IndexError):
        return False
    if len(set(image)) != len(image) or any(not 0 <= w < target.n for w in image):
        return False
    return all(target.has_edge(image[a], image[b]) for a, b in h.edges)


def replace_subgraph(g: Graph, s: Iterable[int], mp: MycielskiMap) -> tuple[Graph, tuple[int, ...]]:
    """The subgraph G - S + S' of M(G) and the isomorphism sigma onto it.

    The returned graph lives on the id space of M(G) (vertices outside the
    chosen set are isolated). ``sigma[j]`` is the M(G) id that base vertex
    ``j`` maps to: its level-1 copy if ``j`` is in S, itself otherwise.
    """
    if mp.m != 1 or mp.base != g:
        raise GraphError("replacement needs the Mycielskian M_1 of the same graph")
    s = frozenset(s)
    if not is_independent(g, s):
        raise GraphError(f"{sorted(s)} is not an independent set")
    sigma = tuple(mp.vertex_of(1, j) if j in s else j for j in range(g.n))
    chosen = set(sigma)
    host, _ = mycielski(g, 1)
    sub = Graph(host.n, tuple(e for e in host.edges if e[0] in chosen and e[1] in chosen), host.labels)
    mapped = {tuple(sorted((sigma[a], sigma[b]))) for a, b in g.edges}
    if mapped != set(sub.edges) or not verify_embedding(g, sub, sigma):
        raise AssertionError("replacement map failed to be an isomorphism")
    return sub, sigma
