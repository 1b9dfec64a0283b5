"""Batch verification of the degree-sum theorem and random instance sampling."""

from __future__ import annotations

import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .graph import Graph, find_induced_star, is_connected, iter_graph6, to_graph6
from .invariants import evaluate_condition, sigma_json
from .search.certificate import validate_certificate, verify_tree
from .search.exact import DEFAULT_TREE_LIMIT, exact_solve
from .search.local import DEFAULT_MOVE_BUDGET, local_search_solve

log = logging.getLogger(__name__)

SKIP_REASONS = ("not_connected", "not_k1t_free", "l_equals_t_minus_2", "hypothesis_fails")
SOLVERS = ("exact", "local", "both")


@dataclass
class SamplerConfig:
    n: int
    t: int = 3
    density: float = 0.3
    seed: int = 0
    count: int = 1
    repair_cap: Optional[int] = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0 < self.density <= 1:
            raise ValueError("density must lie in (0, 1]")
        if self.t < 3:
            raise ValueError("t must be at least 3")


@dataclass
class SampleStats:
    connectivity_rejections: int = 0
    repair_edges: int = 0
    skipped_repair_cap: int = 0


def sample_k1t_free(cfg: SamplerConfig, stats: Optional[SampleStats] = None) -> Iterator[Graph]:
    """Random connected ``K_{1,t}``-free graphs, reproducible from ``cfg.seed``.

    Each draw is a G(n, p) graph, redrawn until connected, whose induced stars
    are repaired by joining two of their leaves until none remain.
    """
    rng = random.Random(cfg.seed)
    stats = stats if stats is not None else SampleStats()
    cap = cfg.repair_cap if cfg.repair_cap is not None else cfg.n * cfg.n
    pairs = list(combinations(range(cfg.n), 2))
    emitted = 0
    while emitted < cfg.count:
        while True:
            edges = {e for e in pairs if rng.random() < cfg.density}
            g = Graph(cfg.n, edges)
            if is_connected(g):
                break
            stats.connectivity_rejections += 1
        for _ in range(cap):
            star = find_induced_star(g, cfg.t)
            if star is None:
                break
            a, b = rng.sample(sorted(star.leaves), 2)
            edges.add((min(a, b), max(a, b)))
            stats.repair_edges += 1
            g = Graph(cfg.n, edges)
        else:
            if find_induced_star(g, cfg.t) is not None:
                stats.skipped_repair_cap += 1
                continue
        emitted += 1
        yield g


@dataclass
class SweepReport:
    t: int
    l: int
    solver: str
    total: int = 0
    skipped: dict[str, int] = field(default_factory=lambda: {r: 0 for r in SKIP_REASONS})
    checked: int = 0
    found: int = 0
    counterexamples: list[dict] = field(default_factory=list)
    parse_errors: list[dict] = field(default_factory=list)
    disagreements: int = 0
    per_instance: Optional[list[dict]] = None

    def consistent(self) -> bool:
        return (self.total == sum(self.skipped.values()) + self.checked
                and self.checked == self.found + len(self.counterexamples))

    def to_dict(self) -> dict:
        out = {
            "t": self.t, "l": self.l, "solver": self.solver,
            "total": self.total, "skipped": dict(self.skipped),
            "checked": self.checked, "found": self.found,
            "counterexamples": self.counterexamples,
            "parse_errors": self.parse_errors,
            "disagreements": self.disagreements,
        }
        if self.per_instance is not None:
            out["per_instance"] = self.per_instance
        return out


def check_instance(
    g: Graph,
    t: int,
    l: int,
    solver: str = "exact",
    tree_limit: int = DEFAULT_TREE_LIMIT,
    move_budget: int = DEFAULT_MOVE_BUDGET,
) -> dict:
    """Gate one graph and, if the theorem applies, run the solver(s).

    Gates run in a fixed order: connectivity, K_{1,t}-freeness, l != t-2,
    then the degree-sum hypothesis.
    """
    rec: dict = {"graph6": to_graph6(g), "n": g.n}
    if not is_connected(g):
        rec["skip"] = "not_connected"
        return rec
    if find_induced_star(g, t) is not None:
        rec["skip"] = "not_k1t_free"
        return rec
    if l == t - 2:
        rec["skip"] = "l_equals_t_minus_2"
        return rec
    report = evaluate_condition(g, t, l)
    rec["sigma4"] = sigma_json(report.sigma4)
    rec["rhs"] = report.rhs
    if not report.hypothesis_holds:
        rec["skip"] = "hypothesis_fails"
        return rec
    outcomes = {}
    if solver in ("exact", "both"):
        outcomes["exact"] = exact_solve(g, l, tree_limit)
    if solver in ("local", "both"):
        outcomes["local"] = local_search_solve(g, t, l, move_budget)
    ok = True
    for name, out in outcomes.items():
        if not out.found or not verify_tree(g, l, out.tree):
            ok = False
        if out.certificate is not None and not validate_certificate(g, t, l, out.certificate):
            ok = False
    rec["found"] = ok
    rec["status"] = {name: out.status for name, out in outcomes.items()}
    if solver == "both":
        rec["agree"] = outcomes["exact"].found == outcomes["local"].found
    if not ok:
        rec["outcomes"] = {name: out.to_dict() for name, out in outcomes.items()}
    return rec


def _check_line(args) -> dict:
    idx, line, t, l, solver, tree_limit, move_budget = args
    from .graph import parse_graph6

    rec = check_instance(parse_graph6(line), t, l, solver, tree_limit, move_budget)
    rec["index"] = idx
    return rec


def sweep(
    lines: Iterable[str],
    t: int,
    l: int,
    solver: str = "exact",
    *,
    jobs: int = 1,
    tree_limit: int = DEFAULT_TREE_LIMIT,
    move_budget: int = DEFAULT_MOVE_BUDGET,
    keep_instances: bool = False,
) -> SweepReport:
    """Run the theorem check over a graph6 stream."""
    if t < 3 or l < 1:
        raise ValueError("need t >= 3 and l >= 1")
    if solver not in SOLVERS:
        raise ValueError(f"solver must be one of {SOLVERS}")
    report = SweepReport(t, l, solver, per_instance=[] if keep_instances else None)
    tasks = []
    for idx, raw, parsed in iter_graph6(lines):
        if isinstance(parsed, Exception):
            report.parse_errors.append({"index": idx, "line": raw, "error": str(parsed)})
            continue
        tasks.append((idx, raw, t, l, solver, tree_limit, move_budget))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_check_line, tasks, chunksize=max(1, len(tasks) // (jobs * 8))))
    else:
        records = [_check_line(task) for task in tasks]
    records.sort(key=lambda r: r["index"])
    for rec in records:
        report.total += 1
        if "skip" in rec:
            report.skipped[rec["skip"]] += 1
        else:
            report.checked += 1
            if rec["found"]:
                report.found += 1
            else:
                report.counterexamples.append(rec)
            if rec.get("agree") is False:
                report.disagreements += 1
        if report.per_instance is not None:
            report.per_instance.append(rec)
    return report
