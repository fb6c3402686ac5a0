"""Verification suites: each checks one family of claims on concrete instances.

A claim ends up ``verified``, ``vacuous`` (hypothesis not met), ``inexact``
(a budget ran out, so only brackets were checked) or ``violated`` (with a
counterexample that re-validates).
"""

from __future__ import annotations

import functools
import json
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import formats
from .census import connected_graphs, connected_graphs_by_edges, random_connected_graph, random_triangle_free_graph, all_graphs
from .constructions import InstanceError, lemma11_select, lemma13_select, theorem7_family, theorem7_orient
from .graph import Graph, complete_graph, cycle_graph, is_bipartite, is_independent, is_triangle_free
from .mycielski import mycielski, replace_subgraph, verify_embedding
from .orientation import (
    Orientation,
    acyclic_orientations,
    dependent_arcs,
    flow_signature,
    from_order,
    is_inversion,
    mosesian_unique_source,
    reversal_class,
    reversal_reachability,
    source_reversal,
    spanning_forest,
)
from .search import Budget
from .solvers import (
    at_most_dependent,
    c_upper_bounds,
    cover_excision_number,
    d_min,
    is_cover,
)

VERIFIED, VACUOUS, INEXACT, VIOLATED = "verified", "vacuous", "inexact", "violated"
EXIT_OK, EXIT_VIOLATION, EXIT_INEXACT, EXIT_USAGE = 0, 1, 2, 3


@dataclass
class Claim:
    instance: str
    claim: str
    status: str
    detail: dict = field(default_factory=dict)
    counterexample: dict | None = None

    def to_dict(self) -> dict:
        out = {"instance": self.instance, "claim": self.claim, "status": self.status, "detail": self.detail}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        return out


@dataclass
class SuiteResult:
    suite: str
    params: dict
    claims: list[Claim] = field(default_factory=list)
    timing: dict = field(default_factory=dict)

    def add(self, claim: Claim) -> None:
        if claim.status == VIOLATED and claim.counterexample is None:
            raise ValueError("a violated claim needs a counterexample")
        self.claims.append(claim)

    def counts(self) -> dict[str, int]:
        out = {VERIFIED: 0, VACUOUS: 0, INEXACT: 0, VIOLATED: 0}
        for c in self.claims:
            out[c.status] += 1
        return out

    @property
    def exit_code(self) -> int:
        counts = self.counts()
        if counts[VIOLATED]:
            return EXIT_VIOLATION
        if counts[INEXACT]:
            return EXIT_INEXACT
        return EXIT_OK

    def to_dict(self) -> dict:
        claims = sorted(self.claims, key=lambda c: (c.instance, c.claim))
        return {
            "suite": self.suite,
            "params": self.params,
            "summary": self.counts(),
            "claims": [c.to_dict() for c in claims],
            "timing": self.timing,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def describe(g: Graph, name: str | None = None) -> str:
    body = f"n={g.n} e=" + ",".join(f"{a}-{b}" for a, b in g.edges)
    return body if name is None else f"{name} [{body}]"


def graph_artifact(g: Graph, d: Orientation | None = None, **extra) -> dict:
    out = {"graph": formats.dumps(g, orientation=d)}
    out.update(extra)
    return out


def _bool_claim(suite: SuiteResult, inst: str, name: str, ok: bool, detail: dict, g: Graph, **extra) -> None:
    if ok:
        suite.add(Claim(inst, name, VERIFIED, detail))
    else:
        suite.add(Claim(inst, name, VIOLATED, detail, graph_artifact(g, **extra)))


def _timed(fn: Callable[..., SuiteResult]) -> Callable[..., SuiteResult]:
    @functools.wraps(fn)
    def wrapper(*args, **kwargs) -> SuiteResult:
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.timing = {"seconds": round(time.perf_counter() - t0, 3)}
        return res

    return wrapper


# -- c versus d_min -----------------------------------------------------------

@_timed
def suite_facts(exhaustive: int = 6, budget: Budget | None = None) -> SuiteResult:
    """c <= d_min, c = 0 iff d_min = 0, c = 1 iff d_min = 1, d_min = 2 => c = 2."""
    res = SuiteResult("facts", {"exhaustive": exhaustive})
    for g in connected_graphs(exhaustive):
        if g.m == 0:
            continue
        inst = describe(g)
        cr, dr = cover_excision_number(g, budget), d_min(g, budget)
        detail = {"c": cr.value, "d_min": dr.value}
        if not (cr.exact and dr.exact):
            detail.update({"c_bracket": [cr.lower, cr.upper], "d_min_bracket": [dr.lower, dr.upper]})
            for name in ("c_le_dmin", "c_zero_iff_dmin_zero", "c_one_iff_dmin_one", "dmin_two_implies_c_two"):
                res.add(Claim(inst, name, INEXACT, detail))
            continue
        c, dm = cr.value, dr.value
        cx = {"c_certificate": cr.certificate, "d_min_certificate": dr.certificate}
        _bool_claim(res, inst, "c_le_dmin", c <= dm, detail, g, **cx)
        _bool_claim(res, inst, "c_zero_iff_dmin_zero", (c == 0) == (dm == 0), detail, g, **cx)
        _bool_claim(res, inst, "c_one_iff_dmin_one", (c == 1) == (dm == 1), detail, g, **cx)
        if dm == 2:
            _bool_claim(res, inst, "dmin_two_implies_c_two", c == 2, detail, g, **cx)
        else:
            res.add(Claim(inst, "dmin_two_implies_c_two", VACUOUS, detail))
    return res


@_timed
def suite_t3(exhaustive: int = 5, budget: Budget | None = None) -> SuiteResult:
    """c = 1 iff d_min = 1 on named instances and a small sweep."""
    res = SuiteResult("t3", {"exhaustive": exhaustive})
    named = [
        ("K3", complete_graph(3)),
        ("C5", cycle_graph(5)),
        ("M1(C5)", mycielski(cycle_graph(5), 1)[0]),
        ("M1(C7)", mycielski(cycle_graph(7), 1)[0]),
        ("M2(C5)", mycielski(cycle_graph(5), 2)[0]),
    ]
    pool = [(describe(g, name), g) for name, g in named]
    pool += [(describe(g), g) for g in connected_graphs(exhaustive) if g.m]
    for inst, g in pool:
        cr, dr = cover_excision_number(g, budget), d_min(g, budget)
        detail = {"c": cr.value, "d_min": dr.value}
        if not (cr.exact and dr.exact):
            res.add(Claim(inst, "c_one_iff_dmin_one", INEXACT, detail))
            continue
        ok = (cr.value == 1) == (dr.value == 1)
        _bool_claim(res, inst, "c_one_iff_dmin_one", ok, detail, g,
                    c_certificate=cr.certificate, d_min_certificate=dr.certificate)
    return res


# -- Mycielski towers -----------------------------------------------------------

@_timed
def suite_t5(ns: Iterable[int] = range(3, 7), ms: Iterable[int] = range(1, 3),
             budget: Budget | None = None, fast_paths: bool = True) -> SuiteResult:
    """M_m(C_n) is a cover graph exactly when n is even."""
    ns, ms = list(ns), list(ms)
    res = SuiteResult("t5", {"n": ns, "m": ms, "fast_paths": fast_paths})
    for n in ns:
        for m in ms:
            h, _ = mycielski(cycle_graph(n), m)
            inst = f"M{m}(C{n})"
            rep = is_cover(h, budget, fast_paths=fast_paths)
            detail = {"cover": rep.value, "route": rep.certificate.get("route"), "nodes": rep.stats.get("nodes")}
            if not rep.exact:
                res.add(Claim(inst, "cover_iff_n_even", INEXACT, detail))
                continue
            _bool_claim(res, inst, "cover_iff_n_even", rep.value == (n % 2 == 0), detail, h,
                        certificate=rep.certificate)
    return res


@_timed
def suite_t6(exhaustive: int = 4, ms: Iterable[int] = range(1, 3), budget: Budget | None = None) -> SuiteResult:
    """d_min(M_m(G)) >= 1 (equivalently c >= 1) iff G is not bipartite."""
    ms = list(ms)
    res = SuiteResult("t6", {"exhaustive": exhaustive, "m": ms})
    for g in all_graphs(exhaustive):
        for m in ms:
            h, _ = mycielski(g, m)
            inst = f"M{m}({describe(g)})"
            rep = is_cover(h, budget)
            detail = {"bipartite": is_bipartite(g), "cover": rep.value, "route": rep.certificate.get("route")}
            if not rep.exact:
                res.add(Claim(inst, "noncover_iff_nonbipartite", INEXACT, detail))
                res.add(Claim(inst, "dmin_positive_iff_nonbipartite", INEXACT, detail))
                continue
            ok = (not rep.value) == (not is_bipartite(g))
            _bool_claim(res, inst, "noncover_iff_nonbipartite", ok, detail, h, certificate=rep.certificate)
            _bool_claim(res, inst, "dmin_positive_iff_nonbipartite", ok, detail, h, certificate=rep.certificate)
    return res


def family_grid(instances: int, seed: int = 0) -> list[tuple[int, int, int, int, int]]:
    """Parameter tuples ``(p, q, |Y'|, path_len, seed)`` that are realisable."""
    grid = []
    for p in (2, 3, 4):
        for q in (2, 3, 4):
            for yp in range(1, q):
                for length in (3, 5):
                    if (length + 1) // 2 <= p and (length - 1) // 2 <= q - yp:
                        grid.append((p, q, yp, length))
    rng = random.Random(seed)
    out = []
    k = 0
    while len(out) < instances:
        p, q, yp, length = grid[k % len(grid)]
        out.append((p, q, yp, length, rng.randrange(1 << 30)))
        k += 1
    return out


@_timed
def suite_t7(instances: int = 10, ms: Iterable[int] = range(1, 4), seed: int = 0,
             budget: Budget | None = None, exact_edge_cap: int = 40) -> SuiteResult:
    """The three-step orientation has exactly one dependent arc, <m,v'> -> u.

    Where M_m(G) has at most ``exact_edge_cap`` edges the search also
    confirms it is not a cover graph, so d_min(M_m(G)) = 1 exactly.
    """
    ms = list(ms)
    res = SuiteResult("t7", {"instances": instances, "m": ms, "seed": seed})
    for p, q, yp, length, s in family_grid(instances, seed):
        for m in ms:
            inst_obj = theorem7_family(p, q, yp, length, seed=s, m=m)
            inst = f"family(p={p},q={q},yprime={yp},len={length},seed={s}) m={m}"
            d, mp, special = theorem7_orient(inst_obj)
            dep = sorted(dependent_arcs(d))
            detail = {"dependent_arcs": [list(a) for a in dep], "expected": list(special), "acyclic": d.acyclic}
            _bool_claim(res, inst, "unique_dependent_arc", d.acyclic and dep == [special], detail,
                        d.host, d=d)
            if d.host.m <= exact_edge_cap:
                rep = is_cover(d.host, budget)
                if not rep.exact:
                    res.add(Claim(inst, "d_min_is_1", INEXACT, {"cover": None}))
                else:
                    _bool_claim(res, inst, "d_min_is_1", rep.value is False, {"cover": rep.value}, d.host, d=d)
    return res


# -- lower bounds for d_min / c of M_m(G) -------------------------------------------------------

def _embedding_trials(trials: int, seed: int) -> tuple[dict, list[dict]]:
    rng = random.Random(seed)
    counts = {"independent_replacement": 0, "two_edge_selection": 0, "three_edge_selection": 0}
    failures = []
    while sum(counts.values()) < trials:
        n = rng.randint(3, 8)
        g = random_triangle_free_graph(n, rng, p=rng.uniform(0.3, 0.9))
        if g.m < 2:
            continue
        h, mp = mycielski(g, 1)
        kind = ("independent_replacement", "two_edge_selection", "three_edge_selection")[sum(counts.values()) % 3]
        try:
            if kind == "independent_replacement":
                s = set()
                for v in rng.sample(range(n), n):
                    if rng.random() < 0.5 and is_independent(g, s | {v}):
                        s.add(v)
                sub, sigma = replace_subgraph(g, s, mp)
                ok = is_independent(g, s) and verify_embedding(g, sub, sigma) and sub.m == g.m
            elif kind == "two_edge_selection":
                pool = [e for e in h.edges if mp.apex not in e]
                e1, e2 = rng.sample(pool, 2)
                sel = lemma11_select(g, e1, e2)
                ok = is_independent(g, sel.S) and verify_embedding(g, sel.target, sel.sigma)
                ok = ok and not sel.target.has_edge(*e1) and not sel.target.has_edge(*e2)
            else:
                if g.m < 3:
                    continue
                e1, e2, e3 = rng.sample(list(g.edges), 3)
                sel = lemma13_select(g, e1, e2, e3)
                ok = is_independent(g, sel.S) and len(sel.S) <= 3 and verify_embedding(g, sel.target, sel.sigma)
        except (AssertionError, InstanceError) as exc:
            ok = False
            failures.append({"kind": kind, "graph": formats.dumps(g), "error": str(exc)})
        else:
            if not ok:
                failures.append({"kind": kind, "graph": formats.dumps(g)})
        counts[kind] += 1
    return counts, failures


@_timed
def suite_t12t14(trials: int = 500, seed: int = 0, budget: Budget | None = None) -> SuiteResult:
    """Edge-deletion embeddings on random triangle-free graphs, and the lower bounds
    for d_min / c of M_m(G) wherever both sides are desk-computable."""
    if budget is None:
        budget = Budget(max_nodes=300_000)
    res = SuiteResult("t12t14", {"trials": trials, "seed": seed})
    counts, failures = _embedding_trials(trials, seed)
    for kind in ("independent_replacement", "two_edge_selection", "three_edge_selection"):
        fails = [f for f in failures if f["kind"] == kind]
        detail = {"trials": counts[kind], "failures": len(fails)}
        if fails:
            res.add(Claim(f"random triangle-free, seed={seed}", kind, VIOLATED, detail, fails[0]))
        else:
            res.add(Claim(f"random triangle-free, seed={seed}", kind, VERIFIED, detail))

    grotzsch = mycielski(cycle_graph(5), 1)[0]
    named = [("C4", cycle_graph(4)), ("C5", cycle_graph(5)), ("C7", cycle_graph(7)), ("Grotzsch", grotzsch)]
    for name, g in named:
        _lower_bound_claims(res, name, g, 1, budget)
    return res


def _lower_bound_claims(res: SuiteResult, name: str, g: Graph, m: int, budget: Budget) -> None:
    inst = f"{name} m={m}"
    h, _ = mycielski(g, m)
    # non-bipartite => M_m(G) is not a cover graph
    cov = is_cover(h, budget)
    if is_bipartite(g):
        res.add(Claim(inst, "nonbipartite_not_cover", VACUOUS, {"bipartite": True}))
    elif not cov.exact:
        res.add(Claim(inst, "nonbipartite_not_cover", INEXACT, {}))
    else:
        _bool_claim(res, inst, "nonbipartite_not_cover", cov.value is False, {"cover": cov.value}, h)

    tf = is_triangle_free(g)
    dg = d_min(g, budget)
    cg = cover_excision_number(g, budget)
    base = {"d_min(G)": dg.value, "c(G)": cg.value, "triangle_free": tf}
    checks = []
    if tf and g.m >= 2 and dg.exact and dg.value >= 1:
        checks.append(("dmin_gain_2", "d_min", dg.value + 2))
    if tf and g.m >= 3 and dg.exact and dg.value >= 3:
        checks.append(("dmin_gain_3", "d_min", dg.value + 3))
    if tf and cg.exact and cg.value >= 1:
        checks.append(("c_gain_2", "c", cg.value + 2))
    if tf and g.m >= 3 and cg.exact and cg.value >= 3:
        checks.append(("c_gain_3", "c", cg.value + 3))
    if m == 1 and tf and dg.exact:
        for thresh, need in ((1, 3), (2, 4), (3, 6)):
            if dg.value >= thresh:
                checks.append((f"dmin_at_least_{need}", "d_min", need))
    named = {"dmin_gain_2", "dmin_gain_3", "c_gain_2", "c_gain_3",
             "dmin_at_least_3", "dmin_at_least_4", "dmin_at_least_6"}
    present = {c[0] for c in checks}
    for missing in sorted(named - present):
        res.add(Claim(inst, missing, VACUOUS, base))
    for claim, param, need in checks:
        detail = dict(base, needed=need, parameter=param)
        if param == "d_min":
            answer, witness, stats = at_most_dependent(h, need - 1, budget)
        else:
            answer, witness, stats = _c_at_most(h, need - 1, budget)
        detail["nodes"] = stats.get("nodes")
        if answer is None:
            res.add(Claim(inst, claim, INEXACT, detail))
        elif answer:
            res.add(Claim(inst, claim, VIOLATED, detail, graph_artifact(h, d=witness)))
        else:
            res.add(Claim(inst, claim, VERIFIED, detail))


def _c_at_most(h: Graph, limit: int, budget: Budget):
    from .search import BudgetExceeded, Meter, OrientationSearch
    from .solvers import bridges

    meter = Meter(budget)
    search = OrientationSearch(h, meter, deletable=((1 << h.m) - 1) & ~bridges(h))
    try:
        found = search.run(0, limit) if limit else search.run(0)
    except BudgetExceeded:
        return None, None, meter.stats()
    if found is None:
        return False, None, meter.stats()
    code, delmask, _ = found
    rest = h.delete_edges(h.edges[k] for k in range(h.m) if delmask >> k & 1)
    return True, Orientation(h, code).restrict(rest), meter.stats()


# -- upper bounds -----------------------------------------------------------------

@_timed
def suite_bounds(exhaustive: int = 6, budget: Budget | None = None) -> SuiteResult:
    """Every upper bound for c is at least the exact c."""
    res = SuiteResult("bounds", {"exhaustive": exhaustive})
    pool = []
    for n in range(3, 7):
        for m in (1, 2):
            pool.append((f"M{m}(C{n})", mycielski(cycle_graph(n), m)[0]))
    pool += [(describe(g), g) for g in connected_graphs(exhaustive) if g.m]
    for inst, g in pool:
        cr = cover_excision_number(g, budget)
        if not cr.exact:
            res.add(Claim(inst, "bounds_sound", INEXACT, {"c_bracket": [cr.lower, cr.upper]}))
            continue
        bounds, omitted = c_upper_bounds(g, budget=budget)
        values = {f"{b.name}:{b.witness.get('partition', '')}".rstrip(":"): b.value for b in bounds}
        detail = {"c": cr.value, "bounds": values, "omitted": sorted(o["name"] for o in omitted)}
        ok = all(b.value >= cr.value for b in bounds)
        _bool_claim(res, inst, "bounds_sound", ok, detail, g, c_certificate=cr.certificate)
        tf = is_triangle_free(g)
        emitted = {b.name for b in bounds}
        gated_ok = tf or not ({"bipartite_split", "mycielski_base_cut"} & emitted)
        _bool_claim(res, inst, "triangle_free_gating", gated_ok, {"triangle_free": tf, "emitted": sorted(emitted)}, g)
    return res


# -- source-reversal dynamics ------------------------------------------------------

def random_acyclic(g: Graph, rng: random.Random) -> Orientation:
    rank = list(range(g.n))
    rng.shuffle(rank)
    return from_order(g, rank)


def reversal_trials(trials: int, seed: int, max_vertices: int = 8) -> tuple[int, list[dict]]:
    """Seeded single-reversal checks: acyclicity, flow signature, and
    dependency-freeness are all preserved."""
    rng = random.Random(seed)
    failures = []
    for _ in range(trials):
        n = rng.randint(2, max_vertices)
        g = random_connected_graph(n, rng, p=rng.uniform(0.1, 0.7))
        d = random_acyclic(g, rng)
        if rng.random() < 0.5:
            cov = is_cover(g)
            if cov.value:
                d = Orientation(g, _code_from_arcs(g, cov.certificate["orientation"]))
        forest = spanning_forest(g)
        v = rng.choice(d.sources())
        d2 = source_reversal(d, v)
        problems = []
        if not d2.acyclic:
            problems.append("acyclicity lost")
        if flow_signature(d, forest).values != flow_signature(d2, forest).values:
            problems.append("flow signature changed")
        if d2.in_masks[v] != d.out_masks[v] or d2.out_masks[v]:
            problems.append("reversed vertex is not a sink")
        if not dependent_arcs(d) and d2.acyclic and dependent_arcs(d2):
            problems.append("dependent arc created from a dependency-free orientation")
        if problems:
            failures.append({"problems": problems, "graph": formats.dumps(g, orientation=d), "vertex": v})
    return trials, failures


def _code_from_arcs(g: Graph, arcs) -> int:
    code = 0
    for t, h in arcs:
        if t > h:
            code |= 1 << g.index_of(t, h)
    return code


def mosesian_sweep(max_vertices: int) -> tuple[int, list[dict]]:
    """Unique-source procedure on every (graph, acyclic orientation, target)."""
    runs = 0
    failures = []
    for g in connected_graphs(max_vertices):
        for d in acyclic_orientations(g):
            for u in range(g.n):
                runs += 1
                try:
                    d2, log = mosesian_unique_source(d, u)
                except Exception as exc:  # noqa: BLE001 - any failure is a counterexample
                    failures.append({"graph": formats.dumps(g, orientation=d), "target": u, "error": str(exc)})
                    continue
                if d2.sources() != [u]:
                    failures.append({"graph": formats.dumps(g, orientation=d), "target": u, "log": log})
    return runs, failures


def inversion_equivalence(max_edges: int, spot_pairs: int = 4, seed: int = 0) -> tuple[dict, list[dict]]:
    """Flow-signature equality versus source-reversal reachability on every
    connected graph with at most ``max_edges`` edges.

    Reachability is computed as BFS classes, one BFS per class, and
    compared with the grouping by signature: the two partitions agree iff
    the two relations agree on every pair. A few pairs per graph are also
    checked with the pairwise BFS directly.
    """
    rng = random.Random(seed)
    stats = {"graphs": 0, "orientations": 0, "pairs": 0, "spot_checks": 0}
    failures = []
    for g in connected_graphs_by_edges(max_edges):
        stats["graphs"] += 1
        forest = spanning_forest(g)
        ors = list(acyclic_orientations(g))
        stats["orientations"] += len(ors)
        stats["pairs"] += len(ors) * len(ors)
        sig = {d.code: flow_signature(d, forest).values for d in ors}
        cls: dict[int, int] = {}
        for d in ors:
            if d.code in cls:
                continue
            members = reversal_class(d)
            for code in members:
                cls[code] = d.code
        by_sig: dict[tuple, set[int]] = {}
        by_cls: dict[int, set[int]] = {}
        for d in ors:
            by_sig.setdefault(sig[d.code], set()).add(d.code)
            by_cls.setdefault(cls[d.code], set()).add(d.code)
        if sorted(map(sorted, by_sig.values())) != sorted(map(sorted, by_cls.values())):
            failures.append({"graph": formats.dumps(g), "reason": "partitions differ"})
            continue
        for _ in range(spot_pairs):
            d1, d2 = rng.choice(ors), rng.choice(ors)
            stats["spot_checks"] += 1
            if is_inversion(d1, d2) != reversal_reachability(d1, d2):
                failures.append({"graph": formats.dumps(g), "pair": [d1.code, d2.code]})
    return stats, failures


@_timed
def suite_reversal(trials: int = 1000, seed: int = 0, mosesian_vertices: int = 7,
                   inversion_edges: int = 8) -> SuiteResult:
    res = SuiteResult("reversal", {"trials": trials, "seed": seed, "mosesian_vertices": mosesian_vertices,
                                   "inversion_edges": inversion_edges})
    n, fails = reversal_trials(trials, seed)
    _aggregate(res, f"random connected <= 8 vertices, seed={seed}", "reversal_invariants", n, fails)
    runs, fails = mosesian_sweep(mosesian_vertices)
    _aggregate(res, f"all connected <= {mosesian_vertices} vertices", "mosesian_unique_source", runs, fails)
    stats, fails = inversion_equivalence(inversion_edges, seed=seed)
    _aggregate(res, f"all connected <= {inversion_edges} edges", "inversion_iff_reachable", stats, fails)
    return res


def _aggregate(res: SuiteResult, inst: str, claim: str, count, failures: list[dict]) -> None:
    detail = {"checked": count, "failures": len(failures)}
    if failures:
        res.add(Claim(inst, claim, VIOLATED, detail, failures[0]))
    else:
        res.add(Claim(inst, claim, VERIFIED, detail))


SUITES = {
    "facts": suite_facts,
    "t3": suite_t3,
    "t5": suite_t5,
    "t6": suite_t6,
    "t7": suite_t7,
    "t12t14": suite_t12t14,
    "bounds": suite_bounds,
    "reversal": suite_reversal,
}
