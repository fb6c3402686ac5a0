"""Command line: ``dependarc {gen,param,verify,orient,export-dot}``.

Reports go to stdout as one JSON document; diagnostics go to stderr.
Exit codes: 0 verified/exact, 1 violation, 2 inexact (budget), 3 usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import formats
from .constructions import InstanceError, theorem7_family
from .graph import GraphError, generate
from .harness import EXIT_INEXACT, EXIT_OK, EXIT_USAGE, SUITES
from .mycielski import mycielski
from .orientation import (
    OrientationError,
    SearchCapExceeded,
    dependent_arcs,
    flow_signature,
    is_inversion,
    mosesian_unique_source,
    reversal_reachability,
    source_reversal,
)
from .search import Budget
from .solvers import (
    c_upper_bounds,
    chi,
    cover_excision_number,
    d_max,
    d_min,
    d_min_without_apex,
    e_k,
    girth_report,
    is_cover,
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits 2 by default
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def parse_range(text: str) -> list[int]:
    """``"3..6"`` -> [3, 4, 5, 6]; ``"4"`` -> [4]; ``"1,3"`` -> [1, 3]."""
    out: list[int] = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _budget(args) -> Budget:
    return Budget.from_env().override(getattr(args, "nodes", None), getattr(args, "seconds", None))


def _emit(doc: dict) -> None:
    print(json.dumps(doc, sort_keys=True, indent=2))


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


# -- gen ----------------------------------------------------------------------

def _base_graph(tokens: list[str]):
    if not tokens:
        raise UsageError("missing generator name")
    kind, rest = tokens[0], tokens[1:]
    try:
        nums = [int(t) for t in rest]
    except ValueError:
        raise UsageError(f"generator parameters must be integers: {rest}") from None
    return generate(kind, *nums)


def cmd_gen(args) -> int:
    spec = args.spec
    roles = None
    if spec[0] == "mycielski":
        g, _ = mycielski(_base_graph(spec[1:]), args.m)
        comment = f"M_{args.m}({' '.join(spec[1:])})"
    elif spec[0] == "family":
        if len(spec) != 5:
            raise UsageError("family needs p q yprime_size path_len")
        p, q, yp, length = (int(t) for t in spec[1:])
        inst = theorem7_family(p, q, yp, length, seed=args.seed, m=args.m)
        g = inst.graph
        roles = {
            "v": [inst.v], "v_prime": [inst.v_prime], "X": sorted(inst.X), "Y": sorted(inst.Y),
            "Yprime": sorted(inst.yprime), "m": [inst.m],
        }
        comment = f"family p={p} q={q} yprime={yp} path_len={length} seed={args.seed}"
    else:
        g = _base_graph(spec)
        comment = " ".join(spec)
    _write(formats.dumps(g, roles=roles, comment=comment), args.out)
    return EXIT_OK


# -- param --------------------------------------------------------------------

def cmd_param(args) -> int:
    gf = formats.load(args.file)
    g = gf.graph
    budget = _budget(args)
    name = args.parameter
    if name == "dmin":
        rep = d_min(g, budget)
    elif name == "dmin-minus-apex":
        rep = d_min_without_apex(g, args.m, budget)
    elif name == "dmax":
        rep = d_max(g, witness=args.witness)
    elif name == "cover":
        rep = is_cover(g, budget, fast_paths=not args.no_fast_paths)
    elif name == "cnum":
        rep = cover_excision_number(g, budget)
    elif name == "ek":
        if args.k is None:
            raise UsageError("ek needs --k")
        rep = e_k(g, args.k, budget)
    elif name == "chi":
        rep = chi(g)
    elif name == "girth":
        rep = girth_report(g)
    elif name == "bounds":
        bounds, omitted = c_upper_bounds(g, budget=budget)
        exact = all(b.witness.get("exact", True) for b in bounds)
        _emit({"parameter": "c_upper_bounds", "exact": exact, "bounds": [b.to_dict() for b in bounds],
               "omitted": omitted})
        return EXIT_OK if exact else EXIT_INEXACT
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(name)
    _emit(rep.to_dict())
    return EXIT_OK if rep.exact else EXIT_INEXACT


# -- verify -------------------------------------------------------------------

def cmd_verify(args) -> int:
    budget = _budget(args) if (args.nodes or args.seconds or Budget.ENV in os.environ) else None
    suite = args.suite
    kw: dict = {}
    if suite == "t5":
        kw = {"ns": parse_range(args.n or "3..6"), "ms": parse_range(args.m or "1..2"), "budget": budget,
              "fast_paths": not args.no_fast_paths}
    elif suite in ("facts", "t3", "bounds"):
        kw = {"budget": budget}
        if args.exhaustive is not None:
            kw["exhaustive"] = args.exhaustive
    elif suite == "t6":
        kw = {"budget": budget, "ms": parse_range(args.m or "1..2")}
        if args.exhaustive is not None:
            kw["exhaustive"] = args.exhaustive
    elif suite == "t7":
        kw = {"instances": args.instances or 10, "ms": parse_range(args.m or "1..3"), "seed": args.seed,
              "budget": budget}
    elif suite == "t12t14":
        kw = {"trials": args.trials or 500, "seed": args.seed, "budget": budget}
    elif suite == "reversal":
        kw = {"trials": args.trials or 1000, "seed": args.seed}
        if args.exhaustive is not None:
            kw["mosesian_vertices"] = args.exhaustive
        if args.edges is not None:
            kw["inversion_edges"] = args.edges
    res = SUITES[suite](**kw)
    _emit(res.to_dict())
    return res.exit_code


# -- orient -------------------------------------------------------------------

def cmd_orient(args) -> int:
    gf = formats.load(args.file)
    d = gf.orientation
    if d is None:
        raise UsageError("the file has no direction markers")
    g = gf.graph
    action = args.action
    if action == "check":
        doc = {"acyclic": d.acyclic, "sources": d.sources(), "sinks": d.sinks()}
        if d.acyclic:
            dep = sorted(dependent_arcs(d))
            doc.update({"dependent_arcs": [list(a) for a in dep], "dependent_count": len(dep),
                        "flow_signature": list(flow_signature(d).values)})
        _emit(doc)
        return EXIT_OK
    if action == "reverse":
        if args.vertex is None:
            raise UsageError("reverse needs --vertex")
        d2 = source_reversal(d, args.vertex)
        text = formats.dumps(g, orientation=d2)
        if args.out:
            _write(text, args.out)
        _emit({"reversed": args.vertex, "orientation": text, "acyclic": d2.acyclic})
        return EXIT_OK
    if action == "mosesian":
        if args.target is None:
            raise UsageError("mosesian needs --target")
        d2, log = mosesian_unique_source(d, args.target)
        text = formats.dumps(g, orientation=d2)
        if args.out:
            _write(text, args.out)
        _emit({"target": args.target, "log": log, "sources": d2.sources(), "orientation": text})
        return EXIT_OK
    if action == "compare":
        if args.other is None:
            raise UsageError("compare needs --other FILE")
        other = formats.load(args.other).orientation
        if other is None or other.host != g:
            raise UsageError("--other must orient the same graph")
        inv = is_inversion(d, other)
        reach = reversal_reachability(d, other)
        _emit({"inversion": inv, "reachable": reach, "agree": inv == reach})
        return EXIT_OK if inv == reach else 1
    raise UsageError(action)  # pragma: no cover


def cmd_export_dot(args) -> int:
    gf = formats.load(args.file)
    _write(formats.to_dot(gf.graph, gf.orientation), args.out)
    return EXIT_OK


# -- entry point --------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="dependarc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def budget_flags(p):
        p.add_argument("--nodes", type=int, help="search node budget (overrides $DEPENDARC_BUDGET)")
        p.add_argument("--seconds", type=float, help="wall-clock budget per search")

    p = sub.add_parser("gen", help="write a generated graph as an edge list")
    p.add_argument("spec", nargs="+", help="cycle N | complete N | path N | petersen | bipartite P Q | "
                                           "mycielski <base...> | family P Q YPRIME LEN")
    p.add_argument("--m", type=int, default=1, help="Mycielski levels")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("param", help="compute one parameter as a JSON report")
    p.add_argument("parameter", choices=["dmin", "dmin-minus-apex", "dmax", "cover", "cnum", "ek", "chi", "girth", "bounds"])
    p.add_argument("file")
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int, default=1, help="dmin-minus-apex: Mycielski levels")
    p.add_argument("--witness", action="store_true", help="dmax: also maximise by enumeration")
    p.add_argument("--no-fast-paths", action="store_true")
    budget_flags(p)
    p.set_defaults(func=cmd_param)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--n", help="range such as 3..6")
    p.add_argument("--m", help="range such as 1..2")
    p.add_argument("--exhaustive", type=int, help="vertex bound for exhaustive sweeps")
    p.add_argument("--edges", type=int, help="edge bound for the inversion sweep")
    p.add_argument("--instances", type=int)
    p.add_argument("--trials", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-fast-paths", action="store_true")
    budget_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("orient", help="inspect or transform an orientation file")
    p.add_argument("action", choices=["check", "reverse", "mosesian", "compare"])
    p.add_argument("file")
    p.add_argument("--vertex", type=int)
    p.add_argument("--target", type=int)
    p.add_argument("--other")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("export-dot", help="write Graphviz DOT")
    p.add_argument("file")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_export_dot)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, GraphError, InstanceError, OrientationError, ValueError, OSError) as exc:
        print(f"dependarc: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SearchCapExceeded as exc:
        print(f"dependarc: {exc}", file=sys.stderr)
        return EXIT_INEXACT


if __name__ == "__main__":
    sys.exit(main())
