"""Simple undirected graphs with dense integer vertex ids.

Vertices are ``0..n-1``; edges are stored once as ``(a, b)`` with ``a < b``
in sorted order, so an edge's position in ``Graph.edges`` is a stable index
that the orientation and search code use for bitsets.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

INFINITE = math.inf


class GraphError(ValueError):
    """Raised for malformed graph input or violated preconditions."""


@dataclass(frozen=True, order=True)
class Level:
    """Mycielski label ``<i, j>``: copy ``i`` of base vertex ``j``."""

    i: int
    j: int

    def __str__(self) -> str:
        return f"{self.i},{self.j}"


@dataclass(frozen=True)
class Apex:
    """The single apex vertex ``u`` of a Mycielski graph."""

    def __str__(self) -> str:
        return "u"


Label = Level | Apex


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[Label, ...] | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphError("vertex count must be non-negative")
        norm = set()
        for a, b in self.edges:
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            if not (0 <= a < self.n and 0 <= b < self.n):
                raise GraphError(f"edge ({a}, {b}) out of range for n={self.n}")
            norm.add((a, b) if a < b else (b, a))
        object.__setattr__(self, "edges", tuple(sorted(norm)))
        if self.labels is not None:
            if len(self.labels) != self.n:
                raise GraphError("labels must cover every vertex")
            object.__setattr__(self, "labels", tuple(self.labels))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adj(self) -> tuple[int, ...]:
        """Neighbourhoods as bitmasks."""
        adj = [0] * self.n
        for a, b in self.edges:
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return tuple(adj)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: k for k, e in enumerate(self.edges)}

    def index_of(self, a: int, b: int) -> int:
        try:
            return self.edge_index[(a, b) if a < b else (b, a)]
        except KeyError:
            raise GraphError(f"({a}, {b}) is not an edge") from None

    def has_edge(self, a: int, b: int) -> bool:
        return 0 <= a < self.n and 0 <= b < self.n and bool(self.adj[a] >> b & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def label(self, v: int) -> Label | None:
        return None if self.labels is None else self.labels[v]

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp_mask = reach_mask(self.adj, s)
            seen |= comp_mask
            comps.append(bits(comp_mask))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1

    def delete_edges(self, removed: Iterable[tuple[int, int]]) -> Graph:
        drop = {(a, b) if a < b else (b, a) for a, b in removed}
        for e in drop:
            if e not in self.edge_index:
                raise GraphError(f"{e} is not an edge")
        return Graph(self.n, tuple(e for e in self.edges if e not in drop), self.labels)

    def subgraph_with_edges(self, kept: Iterable[tuple[int, int]]) -> Graph:
        """Spanning subgraph on the same vertex set."""
        kept = list(kept)
        for a, b in kept:
            self.index_of(a, b)
        return Graph(self.n, tuple(kept), self.labels)

    def induced(self, vertices: Sequence[int]) -> tuple[Graph, list[int]]:
        """Induced subgraph relabelled ``0..k-1`` in the given vertex order."""
        pos = {v: k for k, v in enumerate(vertices)}
        if len(pos) != len(vertices):
            raise GraphError("duplicate vertex in induced()")
        es = [(pos[a], pos[b]) for a, b in self.edges if a in pos and b in pos]
        labels = None if self.labels is None else tuple(self.labels[v] for v in vertices)
        return Graph(len(vertices), tuple(es), labels), list(vertices)


@dataclass(frozen=True)
class Cycle:
    """A simple cycle; the vertex order is the positive traversal."""

    vertices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def arcs(self) -> Iterator[tuple[int, int]]:
        vs = self.vertices
        for k in range(len(vs)):
            yield vs[k], vs[(k + 1) % len(vs)]

    def reversed(self) -> Cycle:
        return Cycle(tuple(reversed(self.vertices)))

    def check(self, g: Graph) -> None:
        vs = self.vertices
        if len(vs) < 3 or len(set(vs)) != len(vs):
            raise GraphError(f"{vs} is not a simple cycle")
        for a, b in self.arcs():
            if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
                raise GraphError(f"{vs} is not a cycle of the graph: ({a}, {b}) missing")


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def reach_mask(adj: Sequence[int], s: int) -> int:
    seen = 1 << s
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen


def build_graph(n: int, edge_list: Iterable[tuple[int, int]], labels: Sequence[Label] | None = None) -> Graph:
    return Graph(n, tuple((int(a), int(b)) for a, b in edge_list), None if labels is None else tuple(labels))


# -- generators ---------------------------------------------------------------

def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return build_graph(n, [(k, (k + 1) % n) for k in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs at least 1 vertex")
    return build_graph(n, [(a, b) for a in range(n) for b in range(a + 1, n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs at least 1 vertex")
    return build_graph(n, [(k, k + 1) for k in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(k, (k + 1) % 5) for k in range(5)]
    spokes = [(k, k + 5) for k in range(5)]
    inner = [(5 + k, 5 + (k + 2) % 5) for k in range(5)]
    return build_graph(10, outer + spokes + inner)


def complete_bipartite_graph(p: int, q: int) -> Graph:
    return build_graph(p + q, [(a, p + b) for a in range(p) for b in range(q)])


def generate(kind: str, *args: int) -> Graph:
    """Named generator lookup used by the CLI: ``generate("cycle", 5)``."""
    table = {
        "cycle": cycle_graph,
        "complete": complete_graph,
        "path": path_graph,
        "petersen": petersen_graph,
        "bipartite": complete_bipartite_graph,
    }
    if kind not in table:
        raise GraphError(f"unknown generator {kind!r}; choose from {sorted(table)}")
    try:
        return table[kind](*args)
    except TypeError:
        raise GraphError(f"wrong number of parameters for generator {kind!r}") from None


# -- basic parameters ---------------------------------------------------------

def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A 2-colouring ``(X, Y)`` or None when an odd cycle exists."""
    side = [-1] * g.n
    for s in range(g.n):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if side[w] < 0:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return None
    xs = frozenset(v for v in range(g.n) if side[v] == 0)
    return xs, frozenset(range(g.n)) - xs


def is_bipartite(g: Graph) -> bool:
    return bipartition(g) is not None


def shortest_cycle(g: Graph) -> Cycle | None:
    """A shortest cycle, found by BFS from every vertex."""
    best: tuple[int, ...] | None = None
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if best is not None and 2 * dist[v] + 1 >= len(best):
                break
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    if best is None or dist[v] + dist[w] + 1 < len(best):
                        cand = _join_paths(parent, v, w)
                        if cand is not None and (best is None or len(cand) < len(best)):
                            best = cand
    return None if best is None else Cycle(best)


def _join_paths(parent: dict[int, int], v: int, w: int) -> tuple[int, ...] | None:
    pv, pw = [v], [w]
    while parent[pv[-1]] >= 0:
        pv.append(parent[pv[-1]])
    while parent[pw[-1]] >= 0:
        pw.append(parent[pw[-1]])
    # both end at the BFS root; trim the shared tail down to the meeting point
    while len(pv) > 1 and len(pw) > 1 and pv[-2] == pw[-2]:
        pv.pop()
        pw.pop()
    cyc = pv + pw[-2::-1]
    if len(set(cyc)) != len(cyc) or len(cyc) < 3:
        return None
    return tuple(cyc)


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``INFINITE`` for forests."""
    c = shortest_cycle(g)
    return INFINITE if c is None else len(c)


def is_triangle_free(g: Graph) -> bool:
    adj = g.adj
    return all(not (adj[a] & adj[b]) for a, b in g.edges)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
        mask |= 1 << v
    return all(not (g.adj[v] & mask) for v in bits(mask))


def enumerate_cycles(g: Graph, length_cap: int | None = None) -> Iterator[Cycle]:
    """Every simple cycle exactly once.

    Canonical form: the smallest vertex first, and the second vertex smaller
    than the last one. Vertices inside the cycle are restricted to ids above
    the root, so each cycle is found only from its minimum vertex.
    """
    cap = g.n if length_cap is None else min(length_cap, g.n)
    adj = g.adj
    for root in range(g.n):
        above = ~((1 << (root + 1)) - 1)
        path = [root]
        on_path = 1 << root
        # iterative DFS: stack of candidate-neighbour masks
        stack = [adj[root] & above]
        while stack:
            cand = stack[-1]
            if not cand:
                stack.pop()
                on_path ^= 1 << path.pop()
                continue
            low = cand & -cand
            stack[-1] = cand ^ low
            w = low.bit_length() - 1
            if len(path) >= 2 and adj[w] >> root & 1 and path[1] < w:
                # closing edge w-root exists; emit before extending
                yield Cycle(tuple(path) + (w,))
            if len(path) + 1 < cap:
                path.append(w)
                on_path |= low
                stack.append(adj[w] & above & ~on_path)


def chromatic_number(g: Graph, cap: int = 32) -> tuple[int, tuple[int, ...]]:
    """Exact chromatic number with a witness colouring.

    DSATUR-style backtracking for k = clique bound, k+1, ... until a
    k-colouring exists.
    """
    if g.n > cap:
        raise GraphError(f"chromatic_number: {g.n} vertices exceeds cap {cap}")
    if g.n == 0:
        return 0, ()
    lb = max(1, len(greedy_clique(g)))
    for k in range(lb, g.n + 1):
        col = k_coloring(g, k)
        if col is not None:
            return k, col
    raise AssertionError("unreachable: n colours always suffice")


def greedy_clique(g: Graph) -> list[int]:
    best: list[int] = []
    for s in range(g.n):
        clique = [s]
        cand = g.adj[s]
        while cand:
            v = max(bits(cand), key=lambda x: (g.adj[x] & cand).bit_count())
            clique.append(v)
            cand &= g.adj[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def k_coloring(g: Graph, k: int) -> tuple[int, ...] | None:
    """A proper colouring with colours ``0..k-1``, or None."""
    n = g.n
    col = [-1] * n
    adj = g.adj
    nbr_cols = [0] * n  # bitmask of colours present among coloured neighbours

    def pick() -> int:
        best, key = -1, (-1, -1)
        for v in range(n):
            if col[v] < 0:
                kk = (nbr_cols[v].bit_count(), g.degree(v))
                if kk > key:
                    best, key = v, kk
        return best

    def rec(used: int) -> bool:
        v = pick()
        if v < 0:
            return True
        free = ~nbr_cols[v] & ((1 << min(k, used + 1)) - 1)
        for c in bits(free):
            col[v] = c
            saved = []
            for w in bits(adj[v]):
                if col[w] < 0:
                    saved.append((w, nbr_cols[w]))
                    nbr_cols[w] |= 1 << c
            if rec(max(used, c + 1)):
                return True
            for w, old in saved:
                nbr_cols[w] = old
            col[v] = -1
        return False

    return tuple(col) if rec(0) else None


def is_proper_coloring(g: Graph, coloring: Sequence[int]) -> bool:
    return len(coloring) == g.n and all(coloring[a] != coloring[b] for a, b in g.edges)
