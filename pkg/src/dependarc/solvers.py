"""Exact parameters with re-checkable certificates.

Every solver returns a :class:`ParamReport`. When a budget runs out the
report is flagged ``exact=False`` and carries ``lower``/``upper`` brackets
instead of a wrong value.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Any

from .graph import (
    INFINITE,
    Graph,
    bipartition,
    chromatic_number,
    girth,
    is_proper_coloring,
    is_triangle_free,
    k_coloring,
    shortest_cycle,
)
from .mycielski import MycielskiMap, mycielski, shadow_bipartition, without_apex
from .orientation import (
    Orientation,
    acyclic_orientations,
    dependent_arcs,
    from_order,
    orient,
)
from .search import Budget, BudgetExceeded, Meter, OrientationSearch, dependent_count_of_code


class ReportError(AssertionError):
    """A certificate failed to re-validate."""


@dataclass
class ParamReport:
    parameter: str
    value: Any
    exact: bool = True
    certificate: dict = field(default_factory=dict)
    stats: dict = field(default_factory=dict)
    lower: Any = None
    upper: Any = None

    def to_dict(self) -> dict:
        out = {
            "parameter": self.parameter,
            "value": _jsonable(self.value),
            "exact": self.exact,
            "certificate": self.certificate,
            "stats": self.stats,
        }
        if not self.exact:
            out["lower"] = _jsonable(self.lower)
            out["upper"] = _jsonable(self.upper)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _jsonable(v: Any) -> Any:
    if v == INFINITE:
        return "inf"
    return v


def _arcs_json(d: Orientation) -> list[list[int]]:
    return [list(a) for a in d.arcs]


def _components(g: Graph) -> list[tuple[Graph, list[int]]]:
    """Components with at least one edge, relabelled."""
    return [g.induced(c) for c in g.components() if len(c) > 1]


# -- d_min --------------------------------------------------------------------

def heuristic_orientation(g: Graph, tries: int = 24, seed: int = 0) -> Orientation:
    """A good acyclic orientation from a few vertex orders (upper bound only)."""
    rng = random.Random(seed)
    candidates = []
    if g.n <= 32:
        _, col = chromatic_number(g)
        candidates.append(from_order(g, col))
    candidates.append(from_order(g, list(range(g.n))))
    for _ in range(tries):
        rank = list(range(g.n))
        rng.shuffle(rank)
        candidates.append(from_order(g, rank))
    return min(candidates, key=lambda d: (len(dependent_arcs(d)), d.code))


def _dmin_connected(g: Graph, meter: Meter) -> tuple[int, int, bool, int]:
    """(value, code, exact, lower) for one component."""
    best = heuristic_orientation(g)
    best_val, best_code = len(dependent_arcs(best)), best.code
    search = OrientationSearch(g, meter)
    lower = 0
    try:
        while best_val > 0:
            found = search.run(best_val - 1)
            if found is None:
                break
            code, _, dep = found
            best_val, best_code = dep, code
        lower = best_val
        return best_val, best_code, True, lower
    except BudgetExceeded:
        return best_val, best_code, False, lower


def d_min(g: Graph, budget: Budget | None = None) -> ParamReport:
    """Minimum number of dependent arcs over acyclic orientations.

    Computed per component and summed.
    """
    meter = Meter(budget)
    code_arcs: list[tuple[int, int]] = []
    value = lower = 0
    exact = True
    for comp, ids in _components(g):
        val, code, ok, lo = _dmin_connected(comp, meter)
        value += val
        lower += lo
        exact &= ok
        d = Orientation(comp, code)
        code_arcs.extend((ids[t], ids[h]) for t, h in d.arcs)
    d = orient(g, code_arcs)
    dep = sorted(dependent_arcs(d))
    if len(dep) != value:
        raise ReportError("d_min certificate does not re-validate")
    cert = {"orientation": _arcs_json(d), "dependent_arcs": [list(a) for a in dep]}
    if exact:
        cert["exhausted"] = True
    rep = ParamReport("d_min", value, exact, cert, meter.stats())
    if not exact:
        rep.lower, rep.upper = lower, value
    return rep


def d_min_without_apex(g: Graph, m: int = 1, budget: Budget | None = None) -> ParamReport:
    """d_min of M_m(G) - u, with vertex ids of M_m(G) kept (u isolated)."""
    h, mp = mycielski(g, m)
    rep = d_min(without_apex(h, mp), budget)
    rep.parameter = "d_min_without_apex"
    return rep


def at_most_dependent(g: Graph, limit: int, budget: Budget | None = None) -> tuple[bool | None, Orientation | None, dict]:
    """Is there an acyclic orientation with at most ``limit`` dependent arcs?

    Returns ``(answer, witness, stats)``; ``answer`` is None when the budget
    ran out. Used to check lower-bound claims without a full minimisation.
    """
    meter = Meter(budget)
    if g.m == 0:
        return True, Orientation(g, 0), meter.stats()
    try:
        found = OrientationSearch(g, meter).run(limit)
    except BudgetExceeded:
        return None, None, meter.stats()
    if found is None:
        return False, None, meter.stats()
    return True, Orientation(g, found[0]), meter.stats()


# -- d_max --------------------------------------------------------------------

def d_max_formula(g: Graph) -> int:
    return g.m - g.n + len(g.components())


def d_max(g: Graph, witness: bool = False, max_states: int = 2_000_000) -> ParamReport:
    """Closed-form maximum; ``witness=True`` also maximises by enumeration."""
    value = d_max_formula(g)
    rep = ParamReport("d_max", value, True, {"formula": "edges - vertices + components"})
    if witness:
        best, best_code, count = -1, 0, 0
        meter = Meter(Budget(max_nodes=None))
        for d in acyclic_orientations(g):
            count += 1
            if count > max_states:
                raise BudgetExceeded(f"more than {max_states} acyclic orientations")
            val = dependent_count_of_code(g, d.code)
            if val > best:
                best, best_code = val, d.code
        d = Orientation(g, best_code)
        rep.certificate.update({
            "search_value": best,
            "orientation": _arcs_json(d),
            "orientations_enumerated": count,
        })
        rep.stats = meter.stats()
    return rep


def d_max_search(g: Graph) -> int:
    return max(dependent_count_of_code(g, d.code) for d in acyclic_orientations(g))


# -- cover graphs ---------------------------------------------------------------

def _coloring_orientation(g: Graph, coloring) -> Orientation:
    return from_order(g, list(coloring))


def is_cover(g: Graph, budget: Budget | None = None, fast_paths: bool = True) -> ParamReport:
    """Whether ``g`` has an acyclic orientation without dependent arcs.

    Fast paths (when enabled): bipartite graphs, chromatic number below the
    girth (colour-ordered orientation), and triangles (never cover).
    """
    meter = Meter(budget)
    if fast_paths:
        parts = bipartition(g)
        if parts is not None:
            d = orient(g, [(a, b) if a in parts[0] else (b, a) for a, b in g.edges])
            return _cover_yes(d, meter, "bipartite")
        tri = shortest_cycle(g)
        if tri is not None and len(tri) == 3:
            return ParamReport("cover", False, True, {"route": "triangle", "triangle": list(tri.vertices)},
                               meter.stats())
        if g.n <= 32:
            chi, col = chromatic_number(g)
            gg = girth(g)
            if chi < gg:
                return _cover_yes(_coloring_orientation(g, col), meter, "chromatic_below_girth",
                                  {"chromatic_number": chi, "girth": _jsonable(gg), "coloring": list(col)})
    try:
        found = OrientationSearch(g, meter).run(0) if g.m else (0, 0, 0)
    except BudgetExceeded:
        rep = ParamReport("cover", None, False, {"route": "search"}, meter.stats())
        return rep
    if found is None:
        return ParamReport("cover", False, True, {"route": "search", "exhausted": True}, meter.stats())
    return _cover_yes(Orientation(g, found[0]), meter, "search")


def _cover_yes(d: Orientation, meter: Meter, route: str, extra: dict | None = None) -> ParamReport:
    if not d.acyclic or dependent_arcs(d):
        raise ReportError("cover certificate is not a dependency-free acyclic orientation")
    cert = {"route": route, "orientation": _arcs_json(d)}
    cert.update(extra or {})
    return ParamReport("cover", True, True, cert, meter.stats())


# -- c(G) ---------------------------------------------------------------------

def bridges(g: Graph) -> int:
    """Bitmask over edge indices of the bridges of ``g``."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    mask = 0
    timer = 0
    for root in range(n):
        if disc[root] >= 0:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, pe, it = stack[-1]
            advanced = False
            for w in it:
                k = g.index_of(v, w)
                if k == pe:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, k, iter(g.neighbors(w))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] > disc[p]:
                    mask |= 1 << pe
    return mask


def _c_connected(g: Graph, meter: Meter) -> tuple[int, int, int, bool, int]:
    """(value, deleted_mask, code, exact, lower) for one component."""
    parts = bipartition(g)
    if parts is not None:
        d = orient(g, [(a, b) if a in parts[0] else (b, a) for a, b in g.edges])
        return 0, 0, d.code, True, 0
    upper_sol = _bipartite_deletion(g)
    search = OrientationSearch(g, meter, deletable=((1 << g.m) - 1) & ~bridges(g))
    lower = 0
    try:
        for size in range(0, upper_sol[0] + 1):
            if size == 0:
                found = search.run(0)
            else:
                found = search.run(0, size)
            if found is not None:
                code, delmask, _ = found
                return delmask.bit_count(), delmask, code, True, size
            lower = size + 1
    except BudgetExceeded:
        return upper_sol[0], upper_sol[1], upper_sol[2], False, lower
    raise AssertionError("deleting a bipartite complement must give a cover graph")


def _bipartite_deletion(g: Graph) -> tuple[int, int, int]:
    """Upper bound for c: keep a maximum cut, oriented across it."""
    rep = e_k(g, 2)
    col = rep.certificate["coloring"]
    delmask = 0
    code = 0
    for k, (a, b) in enumerate(g.edges):
        if col[a] == col[b]:
            delmask |= 1 << k
        elif col[a] == 1:
            code |= 1 << k
    return delmask.bit_count(), delmask, code


def cover_excision_number(g: Graph, budget: Budget | None = None) -> ParamReport:
    """c(G): fewest edge deletions leaving a cover graph.

    Deletion sets are explored in increasing size; for each size the search
    branches on every edge between its two directions and deletion, with
    edges whose endpoints became comparable forced into the deletion set.
    Bridges are never deleted.
    """
    meter = Meter(budget)
    value = lower = 0
    exact = True
    deleted: list[tuple[int, int]] = []
    kept_arcs: list[tuple[int, int]] = []
    for comp, ids in _components(g):
        val, delmask, code, ok, lo = _c_connected(comp, meter)
        value += val
        lower += lo
        exact &= ok
        for k, (a, b) in enumerate(comp.edges):
            if delmask >> k & 1:
                deleted.append((ids[a], ids[b]))
            else:
                t, h = (b, a) if code >> k & 1 else (a, b)
                kept_arcs.append((ids[t], ids[h]))
    rest = g.delete_edges(deleted)
    d = orient(rest, kept_arcs)
    if not d.acyclic or dependent_arcs(d) or len(deleted) != value:
        raise ReportError("c certificate does not re-validate")
    cert = {
        "deleted": [list(e) for e in sorted((min(e), max(e)) for e in deleted)],
        "orientation": _arcs_json(d),
    }
    if exact:
        cert["exhausted"] = True
    rep = ParamReport("c", value, exact, cert, meter.stats())
    if not exact:
        rep.lower, rep.upper = lower, value
    return rep


# -- e_k ----------------------------------------------------------------------

def e_k(g: Graph, k: int, budget: Budget | None = None) -> ParamReport:
    """Maximum number of edges of a k-colourable subgraph (max k-cut)."""
    if k < 1:
        raise ValueError("k must be positive")
    meter = Meter(budget)
    if g.m == 0 or k >= g.n:
        col = tuple(range(g.n)) if k >= g.n else (0,) * g.n
        return _ek_report(g, k, col, True, meter)
    proper = k_coloring(g, k) if g.n <= 64 else None
    if proper is not None:
        return _ek_report(g, k, proper, True, meter)
    if k == 1:
        return _ek_report(g, k, (0,) * g.n, True, meter)

    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    pos = {v: p for p, v in enumerate(order)}
    # neighbours placed earlier in the order, per vertex
    earlier = [[w for w in g.neighbors(v) if pos[w] < pos[v]] for v in order]

    best_col = list(_greedy_cut(g, k))
    best = _cut_value(g, best_col)
    col = [-1] * g.n

    def bound(p: int, cut: int) -> int:
        # each later vertex can at best lose the fewest conflicts given placed colours
        total = cut
        for q in range(p, g.n):
            cnt = [0] * k
            free = 0
            for w in earlier[q]:
                if col[w] >= 0:
                    cnt[col[w]] += 1
                else:
                    free += 1
            total += free + sum(cnt) - min(cnt)
        return total

    def rec(p: int, cut: int, used: int) -> None:
        nonlocal best, best_col
        meter.tick()
        if p == g.n:
            if cut > best:
                best, best_col = cut, col[:]
            return
        if bound(p, cut) <= best:
            return
        v = order[p]
        gains = []
        for c in range(min(k, used + 1)):
            gain = sum(1 for w in earlier[p] if col[w] != c)
            gains.append((-gain, c))
        for neg, c in sorted(gains):
            col[v] = c
            rec(p + 1, cut - neg, max(used, c + 1))
            col[v] = -1

    try:
        rec(0, 0, 0)
        exact = True
    except BudgetExceeded:
        exact = False
    rep = _ek_report(g, k, tuple(best_col), exact, meter)
    if not exact:
        rep.lower, rep.upper = best, g.m
    return rep


def _cut_value(g: Graph, col) -> int:
    return sum(1 for a, b in g.edges if col[a] != col[b])


def _greedy_cut(g: Graph, k: int) -> list[int]:
    col = [0] * g.n
    for v in sorted(range(g.n), key=lambda v: (-g.degree(v), v)):
        cnt = [0] * k
        for w in g.neighbors(v):
            if w < v or col[w]:
                cnt[col[w]] += 1
        col[v] = min(range(k), key=lambda c: (cnt[c], c))
    improved = True
    while improved:
        improved = False
        for v in range(g.n):
            cnt = [0] * k
            for w in g.neighbors(v):
                cnt[col[w]] += 1
            c = min(range(k), key=lambda c: (cnt[c], c))
            if cnt[c] < cnt[col[v]]:
                col[v] = c
                improved = True
    return col


def _ek_report(g: Graph, k: int, col, exact: bool, meter: Meter) -> ParamReport:
    col = list(col)
    if len(col) != g.n or any(not 0 <= c < k for c in col):
        raise ReportError("e_k witness is not a k-colouring of the vertices")
    value = _cut_value(g, col)
    cert = {"coloring": col, "k": k}
    if exact:
        cert["exhausted"] = True
    return ParamReport("e_k", value, exact, cert, meter.stats())


def chi(g: Graph, cap: int = 32) -> ParamReport:
    meter = Meter(None)
    value, col = chromatic_number(g, cap)
    if not is_proper_coloring(g, col):
        raise ReportError("colouring certificate is not proper")
    return ParamReport("chi", value, True, {"coloring": list(col)}, meter.stats())


def girth_report(g: Graph) -> ParamReport:
    c = shortest_cycle(g)
    cert = {"cycle": list(c.vertices)} if c is not None else {"forest": True}
    return ParamReport("girth", girth(g), True, cert, {})


# -- upper bounds for c -------------------------------------------------------

@dataclass
class Bound:
    name: str
    value: int
    witness: dict

    def to_dict(self) -> dict:
        return {"name": self.name, "value": self.value, "witness": self.witness}


def mycielski_map_from_labels(h: Graph) -> MycielskiMap | None:
    """Recover the construction from level labels, if they are consistent."""
    if h.labels is None or h.n < 2:
        return None
    levels = [lab for lab in h.labels]
    apexes = [v for v, lab in enumerate(levels) if str(lab) == "u"]
    if len(apexes) != 1:
        return None
    try:
        m = max(lab.i for lab in levels if str(lab) != "u")
    except (AttributeError, ValueError):
        return None
    n = (h.n - 1) // (m + 1)
    if m < 1 or (m + 1) * n + 1 != h.n:
        return None
    base, _ = h.induced(list(range(n)))
    base = Graph(base.n, base.edges)
    built, mp = mycielski(base, m)
    if built.edges != h.edges or [str(x) for x in built.labels] != [str(x) for x in h.labels]:
        return None
    return mp


def c_upper_bounds(g: Graph, mp: MycielskiMap | None = None, budget: Budget | None = None) -> tuple[list[Bound], list[dict]]:
    """All applicable upper bounds for c(G), plus reasons for omitted ones."""
    bounds: list[Bound] = []
    omitted: list[dict] = []
    if mp is None:
        mp = mycielski_map_from_labels(g)
    elif mycielski(mp.base, mp.m)[0].edges != g.edges:
        raise ValueError("the Mycielski map does not describe this graph")
    gg = girth(g)

    # girth/e_k inequality, at the strongest useful k
    if g.n <= 32:
        chi_g, _ = chromatic_number(g)
        k = chi_g + 1 if gg == INFINITE else int(min(gg, chi_g + 1))
    else:
        k = int(gg) if gg != INFINITE else g.n + 1
    k = max(k, 2)
    ek = e_k(g, k - 1, budget)
    bounds.append(Bound("girth_ek", g.m - ek.value, {
        "k": k, "girth": _jsonable(gg), "e_k_minus_1": ek.value, "coloring": ek.certificate["coloring"],
        "exact": ek.exact,
    }))

    bipartite_split_applies = is_triangle_free(g)
    if bipartite_split_applies:
        e2 = e_k(g, 2, budget)
        col = e2.certificate["coloring"]
        sides = [frozenset(v for v in range(g.n) if col[v] == 0), frozenset(v for v in range(g.n) if col[v] == 1)]
        candidates = [("max_cut", sides[0], sides[1]), ("max_cut", sides[1], sides[0])]
        if mp is not None:
            x, y = shadow_bipartition(mp)
            candidates.insert(0, ("shadow_levels", x, y))
        for origin, x, y in candidates:
            h_edges = sum(1 for a, b in g.edges if (a in x) != (b in x))
            gx, ids = g.induced(sorted(x))
            ex = e_k(gx, 2, budget)
            bounds.append(Bound("bipartite_split", g.m - h_edges - ex.value, {
                "partition": origin, "X": sorted(x), "Y": sorted(y), "H_edges": h_edges,
                "e_2_of_X": ex.value, "exact": ex.exact and e2.exact,
            }))
    else:
        omitted.append({"name": "bipartite_split", "reason": "graph has a triangle"})

    if mp is not None:
        base = mp.base
        bounds.append(Bound("mycielski_base_edges", base.m, {"base_edges": base.m, "m": mp.m}))
        if is_triangle_free(base):
            e2 = e_k(base, 2, budget)
            bounds.append(Bound("mycielski_base_cut", base.m - e2.value, {
                "base_edges": base.m, "e_2_of_base": e2.value, "coloring": e2.certificate["coloring"],
                "exact": e2.exact,
            }))
        else:
            omitted.append({"name": "mycielski_base_cut", "reason": "base graph has a triangle"})
    else:
        omitted.append({"name": "mycielski_base_edges", "reason": "graph carries no Mycielski labelling"})
        omitted.append({"name": "mycielski_base_cut", "reason": "graph carries no Mycielski labelling"})
    return bounds, omitted


# -- consistency between c and d_min -------------------------------------------

@dataclass
class ChainResult:
    c: ParamReport
    d_min: ParamReport
    violations: list[str]

    @property
    def exact(self) -> bool:
        return self.c.exact and self.d_min.exact

    def to_dict(self) -> dict:
        return {"c": self.c.value, "d_min": self.d_min.value, "exact": self.exact,
                "violations": self.violations}


def check_fact_chain(c: int, dmin: int) -> list[str]:
    bad = []
    if c > dmin:
        bad.append(f"c={c} exceeds d_min={dmin}")
    if (c == 0) != (dmin == 0):
        bad.append(f"c=0 and d_min=0 disagree (c={c}, d_min={dmin})")
    if (c == 1) != (dmin == 1):
        bad.append(f"c=1 and d_min=1 disagree (c={c}, d_min={dmin})")
    if dmin == 2 and c != 2:
        bad.append(f"d_min=2 but c={c}")
    return bad


def verify_fact_chain(g: Graph, budget: Budget | None = None) -> ChainResult:
    cr = cover_excision_number(g, budget)
    dr = d_min(g, budget)
    bad = check_fact_chain(cr.value, dr.value) if cr.exact and dr.exact else []
    return ChainResult(cr, dr, bad)


__all__ = [
    "Bound", "Budget", "ChainResult", "ParamReport", "ReportError",
    "at_most_dependent", "bridges", "c_upper_bounds", "check_fact_chain", "chi",
    "cover_excision_number", "d_max", "d_max_formula", "d_min", "d_min_without_apex", "e_k", "girth_report",
    "heuristic_orientation", "is_cover", "mycielski_map_from_labels", "verify_fact_chain",
]
