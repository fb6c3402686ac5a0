"""Orientations of a host graph: dependent arcs, source-reversal, flow differences.

An orientation is stored as an integer ``code`` over the host's edge indices:
bit ``k`` clear means edge ``(a, b)`` (``a < b``) is directed ``a -> b``, set
means ``b -> a``. Codes make orientations cheap to hash, compare and snapshot.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .graph import Cycle, Graph, GraphError, bits, enumerate_cycles


class OrientationError(GraphError):
    pass


class SearchCapExceeded(RuntimeError):
    """A bounded procedure hit its iteration or state cap."""


@dataclass(frozen=True)
class Orientation:
    host: Graph
    code: int

    def __post_init__(self) -> None:
        if self.code < 0 or self.code >> self.host.m:
            raise OrientationError("orientation code has bits beyond the edge count")

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple(
            (b, a) if self.code >> k & 1 else (a, b) for k, (a, b) in enumerate(self.host.edges)
        )

    @cached_property
    def out_masks(self) -> tuple[int, ...]:
        out = [0] * self.host.n
        for t, h in self.arcs:
            out[t] |= 1 << h
        return tuple(out)

    @cached_property
    def in_masks(self) -> tuple[int, ...]:
        inn = [0] * self.host.n
        for t, h in self.arcs:
            inn[h] |= 1 << t
        return tuple(inn)

    def points(self, a: int, b: int) -> bool:
        """True iff the edge ``ab`` is directed ``a -> b``."""
        return bool(self.out_masks[a] >> b & 1)

    @cached_property
    def topological_order(self) -> tuple[int, ...] | None:
        indeg = [m.bit_count() for m in self.in_masks]
        queue = deque(v for v in range(self.host.n) if indeg[v] == 0)
        order = []
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in bits(self.out_masks[v]):
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return tuple(order) if len(order) == self.host.n else None

    @property
    def acyclic(self) -> bool:
        return self.topological_order is not None

    @cached_property
    def reach(self) -> tuple[int, ...]:
        """Reachability by directed paths of length >= 1, as bitmasks."""
        order = self.topological_order
        if order is None:
            raise OrientationError("reachability requested on a cyclic orientation")
        reach = [0] * self.host.n
        for v in reversed(order):
            r = 0
            for w in bits(self.out_masks[v]):
                r |= (1 << w) | reach[w]
            reach[v] = r
        return tuple(reach)

    def sources(self) -> list[int]:
        return [v for v in range(self.host.n) if not self.in_masks[v]]

    def sinks(self) -> list[int]:
        return [v for v in range(self.host.n) if not self.out_masks[v]]

    def converse(self) -> Orientation:
        return Orientation(self.host, self.code ^ ((1 << self.host.m) - 1))

    def restrict(self, sub: Graph) -> Orientation:
        """The orientation induced on a spanning subgraph with the same ids."""
        return orient(sub, [(a, b) if self.points(a, b) else (b, a) for a, b in sub.edges])


def orient(g: Graph, directions: Iterable[tuple[int, int]]) -> Orientation:
    """Orientation from an explicit arc list covering every edge once."""
    code = 0
    seen = 0
    for t, h in directions:
        if not g.has_edge(t, h):
            raise OrientationError(f"arc ({t}, {h}) is not an edge of the graph")
        k = g.index_of(t, h)
        if seen >> k & 1:
            raise OrientationError(f"edge ({t}, {h}) directed twice")
        seen |= 1 << k
        if t > h:
            code |= 1 << k
    if seen != (1 << g.m) - 1:
        missing = [g.edges[k] for k in range(g.m) if not seen >> k & 1]
        raise OrientationError(f"edges without a direction: {missing}")
    return Orientation(g, code)


def from_order(g: Graph, rank: Sequence[int]) -> Orientation:
    """Orient every edge from lower to higher ``rank`` (ties by id)."""
    return orient(g, [(a, b) if (rank[a], a) < (rank[b], b) else (b, a) for a, b in g.edges])


def is_acyclic(d: Orientation) -> bool:
    return d.acyclic


def dependent_arcs(d: Orientation) -> frozenset[tuple[int, int]]:
    """Arcs ``x -> y`` with another directed ``x``-``y`` walk (length >= 2).

    For an acyclic orientation such a walk is a path through some other
    out-neighbour ``z`` of ``x``, i.e. ``y`` is reachable from ``z``.
    """
    if not d.acyclic:
        raise OrientationError("dependent arcs are defined for acyclic orientations only")
    reach = d.reach
    out = d.out_masks
    dep = []
    for x in range(d.host.n):
        via = 0
        for z in bits(out[x]):
            via |= reach[z]
        for y in bits(out[x] & via):
            dep.append((x, y))
    return frozenset(dep)


def dependent_count(d: Orientation) -> int:
    return len(dependent_arcs(d))


def dependent_arcs_by_cycles(d: Orientation, cycles: Iterable[Cycle] | None = None) -> frozenset[tuple[int, int]]:
    """Second route: an arc is dependent iff it is the only arc of some cycle
    running against that cycle's traversal (all others run with it)."""
    if not d.acyclic:
        raise OrientationError("dependent arcs are defined for acyclic orientations only")
    if cycles is None:
        cycles = enumerate_cycles(d.host)
    dep = set()
    for c in cycles:
        fwd, bwd = [], []
        for a, b in c.arcs():
            (fwd if d.points(a, b) else bwd).append((a, b))
        if len(bwd) == 1:
            a, b = bwd[0]
            dep.add((b, a))
        if len(fwd) == 1:
            dep.add(fwd[0])
    return frozenset(dep)


def source_reversal(d: Orientation, v: int) -> Orientation:
    """Turn the source ``v`` into a sink by reversing its out-arcs."""
    if d.in_masks[v]:
        raise OrientationError(f"vertex {v} is not a source")
    flip = 0
    for w in bits(d.out_masks[v]):
        flip |= 1 << d.host.index_of(v, w)
    return Orientation(d.host, d.code ^ flip)


def flow_difference(d: Orientation, c: Cycle) -> int:
    """Forward minus backward arcs of ``c`` along its stored traversal."""
    c.check(d.host)
    return sum(1 if d.points(a, b) else -1 for a, b in c.arcs())


def is_k_good(d: Orientation, k: int, cycles: Iterable[Cycle] | None = None) -> bool:
    if k < 1:
        raise ValueError("k must be positive")
    if cycles is None:
        cycles = enumerate_cycles(d.host)
    for c in cycles:
        f = sum(1 if d.points(a, b) else -1 for a, b in c.arcs())
        if abs(f) > len(c) - 2 * k:
            return False
    return True


# -- cycle space --------------------------------------------------------------

@dataclass(frozen=True)
class SpanningForest:
    """BFS forest, lowest id first; ``parent[root] == -1``."""

    host: Graph
    parent: tuple[int, ...]
    depth: tuple[int, ...]
    tree_edges: frozenset[int] = field(repr=False)

    @property
    def chords(self) -> list[int]:
        return [k for k in range(self.host.m) if k not in self.tree_edges]

    def tree_path(self, a: int, b: int) -> list[int]:
        """Vertices of the tree path from ``a`` to ``b``."""
        par, dep = self.parent, self.depth
        pa, pb = [a], [b]
        while dep[pa[-1]] > dep[pb[-1]]:
            pa.append(par[pa[-1]])
        while dep[pb[-1]] > dep[pa[-1]]:
            pb.append(par[pb[-1]])
        while pa[-1] != pb[-1]:
            if par[pa[-1]] < 0:
                raise OrientationError(f"{a} and {b} lie in different trees")
            pa.append(par[pa[-1]])
            pb.append(par[pb[-1]])
        return pa + pb[-2::-1]

    def fundamental_cycle(self, k: int) -> Cycle:
        """Cycle of chord ``(a, b)``: tree path a..b, then the chord back to a."""
        a, b = self.host.edges[k]
        return Cycle(tuple(self.tree_path(a, b)))


def spanning_forest(g: Graph) -> SpanningForest:
    parent = [-2] * g.n
    depth = [0] * g.n
    tree = set()
    for root in range(g.n):
        if parent[root] != -2:
            continue
        parent[root] = -1
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if parent[w] == -2:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    tree.add(g.index_of(v, w))
                    queue.append(w)
    return SpanningForest(g, tuple(parent), tuple(depth), frozenset(tree))


def validate_forest(f: SpanningForest) -> None:
    g = f.host
    if len(f.parent) != g.n or len(f.tree_edges) != g.n - len(g.components()):
        raise OrientationError("forest does not span the host graph")
    for v, p in enumerate(f.parent):
        if p >= 0 and g.index_of(v, p) not in f.tree_edges:
            raise OrientationError("forest parent pointers disagree with its edges")


@dataclass(frozen=True)
class FlowSignature:
    basis: tuple[Cycle, ...]
    values: tuple[int, ...]


def flow_signature(d: Orientation, forest: SpanningForest | None = None) -> FlowSignature:
    if forest is None:
        forest = spanning_forest(d.host)
    elif forest.host != d.host:
        raise OrientationError("forest belongs to a different graph")
    validate_forest(forest)
    basis = tuple(forest.fundamental_cycle(k) for k in forest.chords)
    return FlowSignature(basis, tuple(flow_difference(d, c) for c in basis))


def cycle_coordinates(forest: SpanningForest, c: Cycle) -> dict[int, int]:
    """Integer coefficients of ``c`` over the fundamental cycles, keyed by chord.

    A traversal that crosses chord ``(a, b)`` from ``b`` to ``a`` uses its
    fundamental cycle positively, since that cycle closes with ``b -> a``.
    """
    g = forest.host
    coords = {}
    for x, y in c.arcs():
        k = g.index_of(x, y)
        if k in forest.tree_edges:
            continue
        a, b = g.edges[k]
        coords[k] = 1 if (x, y) == (b, a) else -1
    return coords


def is_inversion(d1: Orientation, d2: Orientation) -> bool:
    if d1.host != d2.host:
        raise OrientationError("orientations of different graphs")
    forest = spanning_forest(d1.host)
    return flow_signature(d1, forest).values == flow_signature(d2, forest).values


# -- source-reversal dynamics -------------------------------------------------

def mosesian_unique_source(
    d: Orientation, u: int, cap: int | None = None
) -> tuple[Orientation, list[int]]:
    """Reverse sources other than ``u`` (lowest id first) until ``u`` is the
    only source. Returns the final orientation and the reversal log."""
    g = d.host
    if not g.is_connected():
        raise OrientationError("unique-source procedure needs a connected graph")
    if not d.acyclic:
        raise OrientationError("orientation is not acyclic")
    if cap is None:
        cap = max(1, g.n * g.n * g.m)
    inn = list(d.in_masks)
    out = list(d.out_masks)
    code = d.code
    log: list[int] = []
    while True:
        v = next((s for s in range(g.n) if not inn[s] and s != u), -1)
        if v < 0:
            break
        if len(log) >= cap:
            raise SearchCapExceeded(f"no unique source after {cap} reversals")
        for w in bits(out[v]):
            code ^= 1 << g.index_of(v, w)
            inn[w] ^= 1 << v
            out[w] |= 1 << v
        inn[v], out[v] = out[v], 0
        log.append(v)
    return Orientation(g, code), log


def reversal_moves(g: Graph, code: int) -> Iterator[tuple[int, int]]:
    """``(vertex, new_code)`` for every source of the orientation ``code``."""
    inn = [0] * g.n
    flips = [0] * g.n
    for k, (a, b) in enumerate(g.edges):
        if code >> k & 1:
            inn[a] |= 1 << b
            flips[b] |= 1 << k
        else:
            inn[b] |= 1 << a
            flips[a] |= 1 << k
    for v in range(g.n):
        if not inn[v]:
            yield v, code ^ flips[v]


def reversal_class(d: Orientation, state_cap: int = 1_000_000) -> frozenset[int]:
    """Codes of all orientations reachable from ``d`` by source-reversals."""
    if not d.acyclic:
        raise OrientationError("orientation is not acyclic")
    g = d.host
    seen = {d.code}
    queue = deque([d.code])
    while queue:
        code = queue.popleft()
        for _, nxt in reversal_moves(g, code):
            if nxt not in seen:
                if len(seen) >= state_cap:
                    raise SearchCapExceeded(f"more than {state_cap} reachable orientations")
                seen.add(nxt)
                queue.append(nxt)
    return frozenset(seen)


def reversal_reachability(d1: Orientation, d2: Orientation, state_cap: int = 1_000_000) -> bool:
    """BFS over the source-reversal move graph from ``d1`` looking for ``d2``."""
    if d1.host != d2.host:
        raise OrientationError("orientations of different graphs")
    if not (d1.acyclic and d2.acyclic):
        raise OrientationError("both orientations must be acyclic")
    g = d1.host
    if d1.code == d2.code:
        return True
    seen = {d1.code}
    queue = deque([d1.code])
    while queue:
        code = queue.popleft()
        for _, nxt in reversal_moves(g, code):
            if nxt == d2.code:
                return True
            if nxt not in seen:
                if len(seen) >= state_cap:
                    raise SearchCapExceeded(f"more than {state_cap} reachable orientations")
                seen.add(nxt)
                queue.append(nxt)
    return False


def acyclic_orientations(g: Graph) -> Iterator[Orientation]:
    """Every acyclic orientation, by backtracking over edges with a reach check."""
    m = g.m
    edges = g.edges
    reach = [0] * g.n

    def rec(k: int, code: int) -> Iterator[int]:
        if k == m:
            yield code
            return
        a, b = edges[k]
        for t, h, bit in ((a, b, 0), (b, a, 1 << k)):
            if reach[h] >> t & 1:
                continue
            saved = reach[:]
            add = (1 << h) | reach[h]
            for x in range(g.n):
                if x == t or reach[x] >> t & 1:
                    reach[x] |= add
            yield from rec(k + 1, code | bit)
            reach[:] = saved

    for code in rec(0, 0):
        yield Orientation(g, code)
