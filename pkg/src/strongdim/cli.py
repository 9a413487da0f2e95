"""``strongdim`` command line.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input error.
Graph arguments take graph6 inline, a file path (first line is read), or
``-`` for standard input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import formulas as F
from .cover import BudgetExceeded, strong_dimension
from .graph_core import GraphError, parse_graph6, serialize_dot, serialize_graph6
from .harness import (
    THEOREMS,
    conjecture_search,
    oracle_strong_dimension,
    recheck_counterexample,
    summary_table,
    verify_theorem,
)
from .metrics import boundary, simplicial, strong_resolving_graph
from .products import FamilyFSpec, corona_product, family_F, rooted_product


class UsageError(Exception):
    pass


def read_graph(arg: str):
    if arg == "-":
        text = sys.stdin.readline()
    elif os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.readline()
    else:
        text = arg
    text = text.strip()
    if not text:
        raise UsageError("empty graph6 input")
    return parse_graph6(text)


def _emit(obj, fmt: str):
    if fmt == "json":
        print(json.dumps(obj, sort_keys=True))
    else:
        for k, v in obj.items():
            print(f"{k}: {v}")


def cmd_dims(args) -> int:
    g = read_graph(args.graph)
    rep = oracle_strong_dimension(g, args.oracle_max) if args.method == "oracle" else strong_dimension(g, args.budget)
    _emit(rep.to_dict(), args.format)
    return 0


def cmd_srg(args) -> int:
    g = read_graph(args.graph)
    sr = strong_resolving_graph(g)
    if args.format == "dot":
        sys.stdout.write(sr.to_dot())
    elif args.format == "graph6":
        print(sr.to_graph6())
        print(sr.id_map_json())
    else:
        print(json.dumps({
            "graph6": sr.to_graph6(),
            "sr_to_host": list(sr.boundary),
            "edges": sorted(list(e) for e in sr.sr_edges),
        }, sort_keys=True))
    return 0


def cmd_boundary(args) -> int:
    g = read_graph(args.graph)
    _emit({"boundary": sorted(boundary(g)), "simplicial": sorted(simplicial(g))}, args.format)
    return 0


def cmd_product(args) -> int:
    g = read_graph(args.g)
    h = read_graph(args.h)
    if args.corona:
        pm = corona_product(g, h)
    else:
        if args.root is None:
            raise UsageError("--root is required for rooted products")
        pm = rooted_product(g, h, args.root)
    if args.format == "graph6":
        print(serialize_graph6(pm.product))
    elif args.format == "dot":
        sys.stdout.write(serialize_dot(pm.product))
    else:
        print(pm.to_json())
    return 0


def cmd_family(args) -> int:
    spec = FamilyFSpec(args.t, args.p, args.r)
    h, marks = family_F(spec)
    if args.format == "graph6":
        print(serialize_graph6(h))
    elif args.format == "dot":
        sys.stdout.write(serialize_dot(h, [marks["y"]]))
    else:
        print(json.dumps({"graph6": serialize_graph6(h), "labels": list(h.labels), "marks": marks,
                          "dim_s": spec.dim_s}, sort_keys=True))
    return 0


FORMULAS = ["simplicial", "matching", "antipodal", "cycle", "universal", "corona", "bounds", "pendant", "family"]


def cmd_formula(args) -> int:
    need = lambda name: _required(args, name)  # noqa: E731
    th = args.theorem
    if th == "cycle":
        res = F.dim_cycle_rooted(need("n"), need("t"))
    elif th == "antipodal":
        res = F.dim_antipodal(need("n"), read_graph(need("h")))
    elif th == "corona":
        res = F.dim_corona(need("n"), read_graph(need("h")))
    elif th == "pendant":
        res = F.bound_pendant(need("n"), read_graph(need("h")), need("root"))
    elif th == "family":
        res = F.family_F_product_value(need("n"), FamilyFSpec(need("t"), need("p"), need("r")), need("root_choice"))
    else:
        g, h, v = read_graph(need("g")), read_graph(need("h")), need("root")
        fn = {
            "simplicial": F.dim_simplicial_boundary,
            "matching": F.dim_matching_sr,
            "universal": F.dim_universal_root,
            "bounds": F.bounds_general,
        }[th]
        res = fn(g, h, v)
    _emit(res.to_dict(), args.format)
    return 0


def _required(args, name):
    val = getattr(args, name)
    if val is None:
        raise UsageError(f"formula {args.theorem} needs --{name.replace('_', '-')}")
    return val


def cmd_verify(args) -> int:
    reports = verify_theorem(args.theorem, args.grid, args.seed, args.workers, args.oracle_budget)
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        for rep in reports:
            out.write(rep.to_json() + "\n")
    finally:
        if args.out:
            out.close()
    print(summary_table(reports), file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 1


def _orders(text: str) -> tuple[int, int]:
    if ".." in text:
        lo, hi = text.split("..")
        return int(lo), int(hi)
    return int(text), int(text)


def cmd_conjecture(args) -> int:
    rep = conjecture_search(_orders(args.orders), args.samples, args.seed, not args.unrestricted, args.workers)
    text = rep.to_jsonl()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    bad = [c for c in rep.counterexamples if not recheck_counterexample(c)]
    print(f"samples={rep.samples} roots_examined={rep.examined_roots} filtered={rep.filtered} "
          f"findings={len(rep.counterexamples)} reproducer_failures={len(bad)}", file=sys.stderr)
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strongdim", description="Strong metric dimension of graphs and rooted products.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dims", help="strong metric dimension of a graph")
    s.add_argument("graph")
    s.add_argument("--method", choices=["reduction", "oracle"], default="reduction")
    s.add_argument("--oracle-max", type=int, default=12)
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("--format", choices=["json", "text"], default="json")
    s.set_defaults(func=cmd_dims)

    s = sub.add_parser("srg", help="strong resolving graph")
    s.add_argument("graph")
    s.add_argument("--format", choices=["json", "dot", "graph6"], default="json")
    s.set_defaults(func=cmd_srg)

    s = sub.add_parser("boundary", help="boundary and simplicial vertices")
    s.add_argument("graph")
    s.add_argument("--format", choices=["json", "text"], default="json")
    s.set_defaults(func=cmd_boundary)

    s = sub.add_parser("product", help="rooted or corona product")
    s.add_argument("--g", required=True)
    s.add_argument("--h", required=True)
    s.add_argument("--root", type=int)
    s.add_argument("--corona", action="store_true")
    s.add_argument("--format", choices=["json", "graph6", "dot"], default="json")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("family", help="the graph H_{t,p,r}")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--format", choices=["json", "graph6", "dot"], default="json")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("formula", help="evaluate one closed formula or bound")
    s.add_argument("theorem", choices=FORMULAS)
    s.add_argument("--g")
    s.add_argument("--h")
    s.add_argument("--root", type=int)
    s.add_argument("--n", type=int, help="order of G")
    s.add_argument("--t", type=int)
    s.add_argument("--p", type=int)
    s.add_argument("--r", type=int)
    s.add_argument("--root-choice", choices=["y", "x_t"])
    s.add_argument("--format", choices=["json", "text"], default="json")
    s.set_defaults(func=cmd_formula)

    s = sub.add_parser("verify", help="check a theorem over a seeded grid (JSON lines)")
    s.add_argument("theorem", choices=sorted(THEOREMS))
    s.add_argument("--grid", default=None, help='e.g. "r=2..4,t=3..7"')
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--oracle-budget", type=int, default=10)
    s.add_argument("--out")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("conjecture", help="search for roots outside the boundary with nonempty i(v)")
    s.add_argument("--orders", default="4..9")
    s.add_argument("--samples", type=int, default=10_000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("--unrestricted", action="store_true")
    s.add_argument("--out")
    s.set_defaults(func=cmd_conjecture)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("workers", "budget", "samples", "oracle_budget", "oracle_max"):
        val = getattr(args, name, None)
        if val is not None and val <= 0:
            print(f"strongdim: error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return 2
    try:
        return args.func(args)
    except (UsageError, GraphError, F.PreconditionError, ValueError) as exc:
        print(f"strongdim: error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"strongdim: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
