"""Failure certificates for stuck local-search states, and independent checks.

A stuck tree ``T`` (maximal, stem with exactly ``l`` leaves ``x_i``) yields:

* ``distance_set``: an outside vertex ``v1`` next to a leaf ``v2`` plus, for
  each stem leaf ``x_i``, a leaf child ``y_i`` whose neighbours are all leaves
  or ``x_i``. These ``l + 1`` vertices are pairwise at distance >= 4 and their
  degrees sum to at most ``|G| - |Stem(T)| - 1``.
* ``induced_star``: an induced ``K_{1,t}`` found around the stem core when the
  degree-sum route does not contradict the hypothesis.
* ``exception_case``: the core is a single vertex and ``l == t - 2``, the one
  configuration the star argument cannot close.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

from ..graph import Graph, InducedStar, find_induced_star, is_induced_star, _independent_subset
from ..invariants import hypothesis_rhs
from ..tree import TreeState, decompose, is_valid_tree
from .outcome import DISTANCE_SET, EXCEPTION_CASE, INDUCED_STAR, Certificate


class ExtractionError(RuntimeError):
    """The tree is not a stuck state, or no certificate could be assembled."""

    def __init__(self, message: str, diagnostics: Optional[dict] = None):
        self.diagnostics = diagnostics or {}
        super().__init__(message)


@dataclass
class Validation:
    ok: bool
    failed: Optional[str] = None
    notes: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.ok


def _leaf_parent(tree: TreeState, y: int) -> int:
    return tree.tree_adj[y][0]


def _check_stuck(g: Graph, l: int, tree: TreeState) -> None:
    from .local import first_applicable  # local import: local.py imports this module

    if tree.order == g.n:
        raise ExtractionError("tree is spanning")
    if decompose(tree).stem_leaf_count > l:
        raise ExtractionError("tree does not have an l-ended stem")
    move = first_applicable(g, l, tree, moves=("M1", "M2"))
    if move is not None:
        raise ExtractionError(f"move {move} is still applicable", {"move": move})


def extract_certificate(g: Graph, t: int, l: int, stuck: TreeState, check: bool = True) -> Certificate:
    if check:
        _check_stuck(g, l, stuck)
    dec = stuck.decomposition
    leaves, stem, xs, core = dec.leaves, dec.stem, sorted(dec.stem_leaves), dec.core
    outside = [v for v in range(g.n) if v not in stuck.vertices]
    v1 = v2 = None
    for v in outside:
        nb = [w for w in g.adj[v] if w in stuck.vertices]
        if nb:
            v1, v2 = v, nb[0]
            break
    if v1 is None:
        raise ExtractionError("no outside vertex touches the tree (host disconnected?)")

    ys: list[int] = []
    no_private_leaf: list[int] = []
    for x in xs:
        eligible = [
            y for y in stuck.tree_adj[x]
            if y in leaves and all(w in leaves or w == x for w in g.adj[y])
        ]
        if eligible:
            ys.append(eligible[0])
        else:
            no_private_leaf.append(x)

    witness = (v1, *ys)
    d = g.distances().dist
    close_pairs = [(a, b) for a, b in combinations(witness, 2) if d[a][b] < 4]
    degree_sum = sum(g.degree(v) for v in witness)
    stem_size = len(stem)
    bound = g.n - stem_size - 1
    y_set = set(ys)
    q = sum(1 for w in g.adj[v1] if w in leaves and w not in y_set)
    details = {
        "v1": v1, "v2": v2, "x": xs, "y": ys, "q": q,
        "no_private_leaf": no_private_leaf,
        "close_pairs": [list(p) for p in close_pairs],
        "core": sorted(core),
    }
    distance_ok = (
        not no_private_leaf and not close_pairs
        and len(witness) == l + 1 and degree_sum <= bound
    )
    rhs = hypothesis_rhs(g.n, t, l)
    details["rhs"] = rhs

    def distance_cert() -> Certificate:
        return Certificate(DISTANCE_SET, stuck, witness, degree_sum, stem_size, bound,
                           details=details)

    if distance_ok and degree_sum < rhs:
        return distance_cert()

    if len(core) == 1 and l == t - 2:
        details["reason"] = "single core vertex with l = t - 2"
        return Certificate(EXCEPTION_CASE, stuck, witness, degree_sum, stem_size, bound,
                           details=details)

    star = _star_near_core(g, t, stuck, v2)
    if star is not None:
        return Certificate(INDUCED_STAR, stuck, witness, degree_sum, stem_size, bound,
                           star=star, details=details)
    if distance_ok:
        details["refutes_hypothesis"] = False
        return distance_cert()
    raise ExtractionError("no certificate could be assembled", details)


def _star_near_core(g: Graph, t: int, tree: TreeState, v2: int) -> Optional[InducedStar]:
    dec = tree.decomposition
    centers: list[int] = []
    # single core vertex; then core vertices next to v2; then the rest of the core
    if len(dec.core) == 1:
        centers.extend(dec.core)
    centers.extend(sorted(w for w in g.adj[v2] if w in dec.core))
    centers.extend(sorted(dec.core))
    centers.extend(sorted(dec.stem))
    seen = set()
    for c in centers:
        if c in seen:
            continue
        seen.add(c)
        if len(g.adj[c]) >= t:
            found = _independent_subset(g, g.adj[c], t)
            if found is not None:
                return InducedStar(c, found)
    return find_induced_star(g, t)


def validate_certificate(g: Graph, t: int, l: int, c: Certificate) -> Validation:
    tree = c.stuck_tree
    if not is_valid_tree(g, tree.edges, tree.vertices):
        return Validation(False, "stuck-tree-invalid")
    if c.kind == "induced_star":
        if c.star is None or len(c.star.leaves) != t or not is_induced_star(g, c.star.center, c.star.leaves):
            return Validation(False, "star-not-induced/absent")
        return Validation(True)
    if c.kind == "exception_case":
        if l != t - 2:
            return Validation(False, "not-exception")
        return Validation(True)
    if c.kind != "distance_set":
        return Validation(False, "unknown-kind")
    w = c.witness_set
    if len(w) != l + 1 or len(set(w)) != len(w):
        return Validation(False, "witness-size")
    if not all(0 <= v < g.n for v in w):
        return Validation(False, "witness-range")
    d = g.distances().dist
    if any(d[a][b] < 4 for a, b in combinations(w, 2)):
        return Validation(False, "pairwise-distance")
    if c.degree_sum != sum(g.degree(v) for v in w):
        return Validation(False, "degree-sum")
    stem_size = len(decompose(tree).stem)
    if c.stem_size != stem_size:
        return Validation(False, "stem-size")
    if c.bound != g.n - stem_size - 1:
        return Validation(False, "bound")
    if c.degree_sum > c.bound:
        return Validation(False, "degree-bound")
    floor_term = (l * (t - 1)) // (t - 2)
    return Validation(True, notes={
        # a valid set is feasible for sigma, so sigma <= degree_sum
        "sigma4_upper_bound": c.degree_sum,
        "refutes_hypothesis": c.degree_sum < g.n - floor_term - 1,
        "large_stem": stem_size >= floor_term + 1,
    })


def verify_tree(g: Graph, l: int, tree: TreeState) -> Validation:
    if not all(g.has_edge(u, v) for u, v in tree.edges):
        return Validation(False, "not-host-edges")
    if not all(0 <= v < g.n for v in tree.vertices) or len(tree.vertices) != g.n:
        return Validation(False, "not-spanning")
    if not is_valid_tree(g, tree.edges, tree.vertices):
        return Validation(False, "not-a-tree")
    count = decompose(tree).stem_leaf_count
    if count > l:
        return Validation(False, "stem-leaves", {"stem_leaf_count": count})
    return Validation(True, notes={"stem_leaf_count": count})
