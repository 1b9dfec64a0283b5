"""Command line interface.

JSON goes to stdout; human-readable summaries go to stderr. Exit codes:
0 success, 1 counterexample found, 2 usage or input error.

Default budgets can be overridden with ``STEMLEAF_TREE_LIMIT`` and
``STEMLEAF_MOVE_BUDGET``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional

from .extremal import ExtremalParamsG, ExtremalParamsH, build_g, build_h
from .graph import (Graph, GraphParseError, find_induced_star, looks_like_graph6,
                    parse_edge_list, parse_graph6, to_edge_list, to_graph6)
from .harness import SOLVERS, SampleStats, SamplerConfig, sample_k1t_free, sweep
from .invariants import alpha_m, evaluate_condition
from .search.certificate import validate_certificate, verify_tree
from .search.exact import DEFAULT_TREE_LIMIT, exact_solve
from .search.local import DEFAULT_MOVE_BUDGET, local_search_solve

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_graph(path: str, fmt: str = "auto") -> Graph:
    text = _read_text(path)
    if fmt == "auto":
        fmt = "graph6" if looks_like_graph6(text) else "edgelist"
    if fmt == "graph6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise UsageError(f"expected one graph6 line, found {len(lines)}")
        return parse_graph6(lines[0])
    return parse_edge_list(text)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _default_t(g: Graph) -> int:
    # every graph is K_{1,t}-free once t exceeds its maximum degree
    return max(3, g.max_degree() + 1)


def cmd_inspect(args) -> int:
    g = _load_graph(args.file, args.format)
    if args.l is not None:
        _emit(evaluate_condition(g, args.t, args.l).to_dict())
        return EXIT_OK
    star = find_induced_star(g, args.t)
    alpha4 = alpha_m(g, 4)
    _emit({
        "n": g.n,
        "edge_count": g.edge_count,
        "max_degree": g.max_degree(),
        "alpha4": alpha4,
        "k1t_free": star is None,
        "star": star.to_dict() if star else None,
        "reports": [evaluate_condition(g, args.t, l).to_dict() for l in range(1, max(alpha4, 1) + 1)],
    })
    return EXIT_OK


def cmd_find(args) -> int:
    g = _load_graph(args.file, args.format)
    t = args.t if args.t is not None else _default_t(g)
    if args.method == "exact":
        out = exact_solve(g, args.l, args.tree_limit)
        result = out.to_dict()
    elif args.method == "local":
        out = local_search_solve(g, t, args.l, args.move_budget)
        result = out.to_dict()
    else:
        out = local_search_solve(g, t, args.l, args.move_budget)
        result = out.to_dict()
        if not out.found:
            exact = exact_solve(g, args.l, args.tree_limit)
            result["cross_check"] = {"exact_status": exact.status, "stats": exact.stats}
            if exact.found:
                result = exact.to_dict()
                result["cross_check"] = {"local_status": out.status}
                out = exact
    result["t"] = t
    result["l"] = args.l
    star = find_induced_star(g, t)
    result["k1t_free"] = star is None
    if star is not None:
        result["star"] = star.to_dict()
    if out.tree is not None:
        result["verified"] = bool(verify_tree(g, args.l, out.tree))
    if out.certificate is not None:
        check = validate_certificate(g, t, args.l, out.certificate)
        result["certificate_valid"] = check.ok
        result["certificate_check"] = check.failed or check.notes
    _emit(result)
    print(f"find: {out.status}", file=sys.stderr)
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.family == "g":
        built = build_g(ExtremalParamsG(args.t, args.k, args.m))
    else:
        built = build_h(ExtremalParamsH(args.t, args.m))
    text = to_graph6(built.graph) + "\n" if args.format == "graph6" else to_edge_list(built.graph)
    labels = json.dumps(built.labeling, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        Path(args.labels or args.out + ".labels.json").write_text(labels)
    else:
        sys.stdout.write(text)
        if args.labels:
            Path(args.labels).write_text(labels)
    print(f"gen: {built.labeling['family']} n={built.graph.n} l={built.labeling['l']}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    lines = _read_text(args.stream).splitlines()
    report = sweep(
        lines, args.t, args.l, args.solver,
        jobs=args.jobs, tree_limit=args.tree_limit, move_budget=args.move_budget,
        keep_instances=args.instances or bool(args.figure),
    )
    if args.figure:
        from .plotting import sweep_figure

        sweep_figure(report, args.figure)
        print(f"verify: figure written to {args.figure}", file=sys.stderr)
    out = report.to_dict()
    if not args.instances:
        out.pop("per_instance", None)
    _emit(out)
    print(
        f"verify: total={report.total} checked={report.checked} found={report.found} "
        f"counterexamples={len(report.counterexamples)}",
        file=sys.stderr,
    )
    return EXIT_COUNTEREXAMPLE if report.counterexamples else EXIT_OK


def cmd_sample(args) -> int:
    stats = SampleStats()
    cfg = SamplerConfig(n=args.n, t=args.t, density=args.density, seed=args.seed, count=args.count)
    for g in sample_k1t_free(cfg, stats):
        sys.stdout.write(to_graph6(g) + "\n")
    print(f"sample: {stats}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="stemleaf", description="Spanning trees with l-ended stems in K_{1,t}-free graphs.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)
    formats = ("auto", "edgelist", "graph6")

    sp = sub.add_parser("inspect", help="evaluate the degree-sum condition")
    sp.add_argument("file")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--l", type=int)
    sp.add_argument("--format", choices=formats, default="auto")
    sp.set_defaults(func=cmd_inspect)

    sp = sub.add_parser("find", help="search for a spanning tree with an l-ended stem")
    sp.add_argument("file")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--t", type=int)
    sp.add_argument("--method", choices=("exact", "local", "auto"), default="auto")
    sp.add_argument("--tree-limit", type=int, default=DEFAULT_TREE_LIMIT)
    sp.add_argument("--move-budget", type=int, default=DEFAULT_MOVE_BUDGET)
    sp.add_argument("--format", choices=formats, default="auto")
    sp.set_defaults(func=cmd_find)

    sp = sub.add_parser("gen", help="build a sharpness-family graph")
    fam = sp.add_subparsers(dest="family", required=True)
    for name in ("g", "h"):
        fp = fam.add_parser(name)
        fp.add_argument("--t", type=int, required=True)
        if name == "g":
            fp.add_argument("--k", type=int, required=True)
        fp.add_argument("--m", type=int, required=True)
        fp.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
        fp.add_argument("--out")
        fp.add_argument("--labels")
        fp.set_defaults(func=cmd_gen)

    sp = sub.add_parser("verify", help="check the theorem over a graph6 stream")
    sp.add_argument("stream")
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--solver", choices=SOLVERS, default="exact")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--tree-limit", type=int, default=DEFAULT_TREE_LIMIT)
    sp.add_argument("--move-budget", type=int, default=DEFAULT_MOVE_BUDGET)
    sp.add_argument("--instances", action="store_true", help="include per-instance records")
    sp.add_argument("--figure", help="also render a summary figure to this path")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sample", help="emit random connected K_{1,t}-free graphs (graph6)")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--t", type=int, default=3)
    sp.add_argument("--density", type=float, default=0.3)
    sp.add_argument("--count", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_sample)
    return p


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, GraphParseError, ValueError) as exc:
        print(f"stemleaf {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
