"""Branch-and-bound over edge orientations.

The state keeps, per vertex, bitmasks of out-neighbours, descendants
(``reach``), ancestors (``coreach``) and dependent out-arcs. Adding an arc
never removes reachability, so the dependent-arc count only grows along a
branch and is a valid lower bound. On top of it every undecided edge whose
endpoints are already comparable is forced: one direction closes a cycle,
the other is dependent.

The same engine answers three questions:

* minimise dependent arcs (``d_min``),
* decide whether a dependency-free acyclic orientation exists (cover test),
* minimise deleted edges subject to a dependency-free remainder (``c``).
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, bits, enumerate_cycles, girth


class BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class Budget:
    max_nodes: int | None = 20_000_000
    max_seconds: float | None = None

    ENV = "DEPENDARC_BUDGET"

    @classmethod
    def from_env(cls) -> Budget:
        """Parse ``DEPENDARC_BUDGET="nodes=1000000,seconds=60"``."""
        raw = os.environ.get(cls.ENV, "").strip()
        if not raw:
            return cls()
        nodes, seconds = cls.max_nodes, cls.max_seconds
        for part in raw.split(","):
            key, _, val = part.partition("=")
            key = key.strip()
            if key == "nodes":
                nodes = None if val in ("", "none") else int(val)
            elif key == "seconds":
                seconds = None if val in ("", "none") else float(val)
            else:
                raise ValueError(f"unknown budget key {key!r} in {cls.ENV}")
        return cls(nodes, seconds)

    def override(self, max_nodes: int | None = None, max_seconds: float | None = None) -> Budget:
        return Budget(
            self.max_nodes if max_nodes is None else max_nodes,
            self.max_seconds if max_seconds is None else max_seconds,
        )


class Meter:
    """Counts search nodes and enforces a Budget."""

    def __init__(self, budget: Budget | None):
        self.budget = budget or Budget()
        self.nodes = 0
        self.start = time.perf_counter()

    def tick(self) -> None:
        self.nodes += 1
        b = self.budget
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise BudgetExceeded(f"node budget {b.max_nodes} exhausted")
        if b.max_seconds is not None and not self.nodes & 1023:
            if time.perf_counter() - self.start > b.max_seconds:
                raise BudgetExceeded(f"time budget {b.max_seconds}s exhausted")

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start

    def stats(self) -> dict:
        return {"nodes": self.nodes, "elapsed": round(self.elapsed, 6)}


def branching_order(g: Graph) -> list[int]:
    """Edge indices, most-constrained first.

    Greedy: repeatedly take the edge that completes the most short cycles
    among already chosen edges, then the one touching most short cycles.
    Short means length at most girth + 2.
    """
    m = g.m
    if m == 0:
        return []
    gg = girth(g)
    cyc_edges: list[int] = []
    if gg != float("inf"):
        cap = int(gg) + 2
        for c in enumerate_cycles(g, length_cap=cap):
            mask = 0
            for a, b in c.arcs():
                mask |= 1 << g.index_of(a, b)
            cyc_edges.append(mask)
            if len(cyc_edges) > 20000:
                break
    through = [0] * m
    for mask in cyc_edges:
        for k in bits(mask):
            through[k] += 1
    chosen = 0
    touched_vertices = 0
    order = []
    remaining = set(range(m))
    while remaining:
        best, best_key = -1, None
        for k in remaining:
            bit = 1 << k
            done = 0
            part = 0
            for mask in cyc_edges:
                if mask & bit:
                    rest = mask & ~bit
                    if rest & ~chosen == 0:
                        done += 1
                    elif rest & chosen:
                        part += 1
            a, b = g.edges[k]
            near = (touched_vertices >> a & 1) + (touched_vertices >> b & 1)
            key = (done, part, near, through[k], -k)
            if best_key is None or key > best_key:
                best, best_key = k, key
        order.append(best)
        remaining.discard(best)
        chosen |= 1 << best
        a, b = g.edges[best]
        touched_vertices |= (1 << a) | (1 << b)
    return order


class OrientationSearch:
    """Depth-first search over orientations (and optionally deletions).

    ``dep_limit``: maximum number of dependent arcs allowed in a solution.
    ``del_limit``: maximum number of deleted edges (0 disables deletion).
    ``run`` returns the first solution within both limits, as
    ``(arcs_code, deleted_mask, dependent_count)``, or None if none exists.
    Code bit ``k`` set means edge ``k`` runs from its larger to its smaller id.
    """

    def __init__(self, g: Graph, meter: Meter, order: Sequence[int] | None = None,
                 deletable: int | None = None):
        self.g = g
        self.meter = meter
        self.order = list(branching_order(g) if order is None else order)
        self.rank = {k: r for r, k in enumerate(self.order)}
        self.deletable = ((1 << g.m) - 1) if deletable is None else deletable

    def run(self, dep_limit: int, del_limit: int = 0):
        g = self.g
        n = g.n
        edges = g.edges
        order = self.order
        deletable = self.deletable
        meter = self.meter

        reach = [0] * n
        coreach = [0] * n
        out = [0] * n
        depout = [0] * n
        state = {"dep": 0, "deleted": 0, "code": 0, "delmask": 0}
        first = order[0] if order else -1

        def add_arc(t: int, h: int) -> int | None:
            """Insert t->h; return number of newly dependent arcs or None on a cycle."""
            if reach[h] >> t & 1:
                return None
            own = reach[t] >> h & 1
            new_dep = own
            tb = 1 << t
            hb = 1 << h
            amask = coreach[t] | tb
            bmask = reach[h] | hb
            # existing arcs x->y with x in A and y in B gain a second path
            x_mask = amask
            while x_mask:
                low = x_mask & -x_mask
                x = low.bit_length() - 1
                x_mask ^= low
                fresh = out[x] & bmask & ~depout[x]
                if fresh:
                    depout[x] |= fresh
                    new_dep += fresh.bit_count()
                reach[x] |= bmask
            y_mask = bmask
            while y_mask:
                low = y_mask & -y_mask
                y = low.bit_length() - 1
                y_mask ^= low
                coreach[y] |= amask
            out[t] |= hb
            if own:
                depout[t] |= hb
            return new_dep

        def snapshot():
            return reach[:], coreach[:], out[:], depout[:]

        def restore(s) -> None:
            reach[:], coreach[:], out[:], depout[:] = s

        def rec(remaining: int) -> tuple[int, int, int] | None:
            meter.tick()
            if not remaining:
                return state["code"], state["delmask"], state["dep"]
            # forced edges and bound
            forced = []
            for k in order:
                if remaining >> k & 1:
                    a, b = edges[k]
                    if reach[a] >> b & 1:
                        if reach[b] >> a & 1:
                            return None
                        forced.append((k, a, b))
                    elif reach[b] >> a & 1:
                        forced.append((k, b, a))
            nf = len(forced)
            if del_limit:
                # with deletions allowed no dependency is ever tolerated
                if state["deleted"] + nf > del_limit:
                    return None
            elif state["dep"] + nf > dep_limit:
                return None
            if forced:
                k, t, h = forced[0]
                choices = []
                if del_limit:
                    if deletable >> k & 1:
                        choices.append(None)
                else:
                    choices.append((t, h))
            else:
                k = next(k for k in order if remaining >> k & 1)
                a, b = edges[k]
                choices = [(a, b)] if k == first else [(a, b), (b, a)]
                if del_limit and deletable >> k & 1 and state["deleted"] < del_limit:
                    choices.append(None)
            rest = remaining & ~(1 << k)
            for choice in choices:
                if choice is None:
                    state["deleted"] += 1
                    state["delmask"] |= 1 << k
                    found = rec(rest)
                    if found is not None:
                        return found
                    state["deleted"] -= 1
                    state["delmask"] &= ~(1 << k)
                    continue
                t, h = choice
                saved = snapshot()
                gained = add_arc(t, h)
                if gained is not None:
                    limit = 0 if del_limit else dep_limit
                    if state["dep"] + gained <= limit:
                        state["dep"] += gained
                        bit = (1 << k) if t > h else 0
                        state["code"] |= bit
                        found = rec(rest)
                        if found is not None:
                            return found
                        state["code"] &= ~bit
                        state["dep"] -= gained
                restore(saved)
            return None

        return rec((1 << g.m) - 1)


def dependent_count_of_code(g: Graph, code: int) -> int | None:
    """Dependent arcs of the orientation ``code``; None if it is cyclic."""
    n = g.n
    out = [0] * n
    indeg = [0] * n
    for k, (a, b) in enumerate(g.edges):
        t, h = (b, a) if code >> k & 1 else (a, b)
        out[t] |= 1 << h
        indeg[h] += 1
    order = [v for v in range(n) if indeg[v] == 0]
    for v in order:
        for w in bits(out[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    if len(order) != n:
        return None
    reach = [0] * n
    for v in reversed(order):
        r = 0
        for w in bits(out[v]):
            r |= (1 << w) | reach[w]
        reach[v] = r
    total = 0
    for x in range(n):
        via = 0
        for z in bits(out[x]):
            via |= reach[z]
        total += (out[x] & via).bit_count()
    return total
