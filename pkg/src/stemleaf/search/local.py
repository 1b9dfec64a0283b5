"""Local search for a spanning tree with an l-ended stem.

The engine keeps a tree whose stem has at most ``l`` leaves and applies the
first applicable exchange from an ordered move list. Every accepted move
strictly increases ``(|V(T)|, |Leaf(T)|)`` lexicographically, so each run
takes at most ``n**2`` moves.

Moves (``x`` = stem leaves, ``L`` = tree leaves, ``O`` = vertices off the tree):

M1  attach an outside vertex to a tree vertex.
M2  move every leaf hanging from a stem leaf ``x`` onto other stem vertices,
    turning ``x`` into a leaf.
M3  graft a path ``y .. v1`` onto a leaf child ``y`` of a stem leaf, running
    through leaves only and ending outside; grafted leaves lose their old edge.
M4  the same graft anchored at a stem leaf ``x``.
M5  join two stem-leaf branches by a path through leaves/outside vertices,
    break the resulting cycle at a stem edge (branch vertices first) and, if
    needed, attach one outside vertex.
M6  core swaps around a leaf ``v2`` next to an outside ``v1`` and a core
    neighbour ``v3``: ``T + s v2 + v2 v1 - s v3`` and
    ``T + x s + x v3 + v2 v1 - s v3``.
M7  (extended) any single edge swap, optionally followed by one attachment,
    and grafts anchored at any leaf.

A run that stops without spanning is handed to certificate extraction. With
``restarts`` on, runs start from the pruned BFS tree of every root in turn.
"""

from __future__ import annotations

import os
import time
from collections import deque
from typing import Iterable, Iterator, Optional

from ..graph import Edge, Graph, is_connected, norm_edge
from ..tree import ExchangeRejected, TreeState, apply_exchange, bfs_tree, decompose
from .certificate import ExtractionError, extract_certificate
from .outcome import CERTIFIED_FAIL, EXHAUSTED, FOUND, LIMIT, PreconditionError, SearchOutcome

CORE_MOVES = ("M1", "M2", "M3", "M4", "M5", "M6")
ALL_MOVES = CORE_MOVES + ("M7",)
DEFAULT_MOVE_BUDGET = int(os.environ.get("STEMLEAF_MOVE_BUDGET", 1_000_000))

Exchange = tuple[frozenset, frozenset]


class _View:
    """Cached sets describing one tree state."""

    def __init__(self, g: Graph, tree: TreeState):
        self.g = g
        self.tree = tree
        dec = tree.decomposition
        self.leaves = dec.leaves
        self.stem = dec.stem
        self.xs = sorted(dec.stem_leaves)
        self.core = dec.core
        self.inside = tree.vertices
        self.outside = frozenset(v for v in range(g.n) if v not in tree.vertices)
        self.adj = tree.tree_adj

    def parent(self, leaf: int) -> int:
        return self.adj[leaf][0]

    def leaf_children(self, x: int) -> list[int]:
        return [y for y in self.adj[x] if y in self.leaves]

    def stem_degree(self, v: int) -> int:
        return sum(1 for w in self.adj[v] if w in self.stem)


def _bfs_paths(
    g: Graph, src: int, passable: frozenset | set, targets: frozenset | set
) -> list[list[int]]:
    """BFS-tree paths from ``src`` to every reachable target, in discovery order.

    Only ``passable`` vertices are expanded; targets end a path.
    """
    prev = {src: src}
    queue = deque([src])
    hits = []
    while queue:
        u = queue.popleft()
        for w in g.adj[u]:
            if w in prev:
                continue
            if w in targets:
                prev[w] = u
                hits.append(w)
            elif w in passable:
                prev[w] = u
                queue.append(w)
    paths = []
    for h in hits:
        p = [h]
        while p[-1] != src:
            p.append(prev[p[-1]])
        paths.append(p[::-1])
    return paths


def _graft(view: _View, path: list[int]) -> tuple[set[Edge], set[Edge]]:
    """Edges to add/remove so ``path`` joins the tree; inner leaves are detached."""
    add = {norm_edge(a, b) for a, b in zip(path, path[1:])}
    remove = {
        norm_edge(p, view.parent(p)) for p in path[1:-1] if p in view.leaves
    }
    common = add & remove
    add -= common
    remove -= common
    add -= view.tree.edges
    return add, remove


def _attach_anchors(view: _View, vertices: Iterable[int], outside: frozenset | set) -> list[Edge]:
    """One attaching edge per tree vertex adjacent to ``outside``."""
    out = []
    for u in sorted(vertices):
        for w in view.g.adj[u]:
            if w in outside:
                out.append((u, w))
                break
    return out


def _m1(view: _View) -> Iterator[Exchange]:
    for u, w in _attach_anchors(view, view.inside, view.outside):
        yield frozenset({(u, w)}), frozenset()


def _m2(view: _View) -> Iterator[Exchange]:
    if len(view.stem) < 2:
        return
    for x in view.xs:
        add, remove = set(), set()
        for y in view.leaf_children(x):
            z = next((w for w in view.g.adj[y] if w in view.stem and w != x), None)
            if z is None:
                break
            add.add(norm_edge(y, z))
            remove.add(norm_edge(y, x))
        else:
            if remove:
                yield frozenset(add), frozenset(remove)


def _m3(view: _View) -> Iterator[Exchange]:
    for x in view.xs:
        for y in view.leaf_children(x):
            for path in _bfs_paths(view.g, y, view.leaves - {y}, view.outside):
                add, remove = _graft(view, path)
                yield frozenset(add), frozenset(remove)


def _m4(view: _View) -> Iterator[Exchange]:
    for x in view.xs:
        for path in _bfs_paths(view.g, x, view.leaves, view.outside):
            add, remove = _graft(view, path)
            yield frozenset(add), frozenset(remove)


def _m5(view: _View) -> Iterator[Exchange]:
    xs = view.xs
    passable_base = view.leaves | view.outside
    for i, xi in enumerate(xs):
        side_a = [xi] + view.leaf_children(xi)
        for xj in xs[i + 1:]:
            side_b = [xj] + view.leaf_children(xj)
            ends = set(side_a) | set(side_b)
            passable = passable_base - ends
            stem_path = view.tree.path(xi, xj)
            cycle_edges = [norm_edge(a, b) for a, b in zip(stem_path, stem_path[1:])]
            branchy = [e for e in cycle_edges
                       if view.stem_degree(e[0]) >= 3 or view.stem_degree(e[1]) >= 3]
            ordered = branchy + [e for e in cycle_edges if e not in branchy]
            for a in side_a:
                for path in _bfs_paths(view.g, a, passable, set(side_b)):
                    add, remove = _graft(view, path)
                    new_outside = view.outside - set(path)
                    grows = len(new_outside) < len(view.outside)
                    reach = view.inside | set(path)
                    for e in ordered:
                        rem = frozenset(remove | {e})
                        if grows:
                            yield frozenset(add), rem
                        for u, w in _attach_anchors(view, reach, new_outside):
                            yield frozenset(add | {(u, w)}), rem


def _m6(view: _View) -> Iterator[Exchange]:
    g, adj = view.g, view.adj
    for v2 in sorted(view.leaves):
        v1s = [w for w in g.adj[v2] if w in view.outside]
        if not v1s:
            continue
        v1 = v1s[0]
        p2 = view.parent(v2)
        for v3 in (w for w in g.adj[v2] if w in view.core):
            for s in (w for w in adj[v3] if w in view.core):
                cut = norm_edge(s, v3)
                if s != p2 and g.has_edge(s, v2):
                    yield frozenset({norm_edge(s, v2), norm_edge(v2, v1)}), frozenset({cut})
                for x in adj[v3]:
                    if x not in view.xs or x == s or not g.has_edge(x, s):
                        continue
                    add = {norm_edge(x, s), norm_edge(v2, v1)}
                    yield frozenset(add), frozenset({cut})
                    if p2 != v3:
                        yield (frozenset(add | {norm_edge(v2, v3)}),
                               frozenset({cut, norm_edge(v2, p2)}))


def _m7(view: _View) -> Iterator[Exchange]:
    g, tree = view.g, view.tree
    for a, b in g.edges:
        if a not in view.inside or b not in view.inside or (a, b) in tree.edges:
            continue
        p = tree.path(a, b)
        for f in (norm_edge(c, d) for c, d in zip(p, p[1:])):
            yield frozenset({(a, b)}), frozenset({f})
            for u, w in _attach_anchors(view, view.inside, view.outside):
                yield frozenset({(a, b), (u, w)}), frozenset({f})
    for y in sorted(view.leaves):
        for path in _bfs_paths(g, y, view.leaves - {y}, view.outside):
            add, remove = _graft(view, path)
            yield frozenset(add), frozenset(remove)


_GENERATORS = {"M1": _m1, "M2": _m2, "M3": _m3, "M4": _m4, "M5": _m5, "M6": _m6, "M7": _m7}


def _accept(tree: TreeState, l: int, add, remove) -> Optional[TreeState]:
    try:
        new = apply_exchange(tree, add, remove)
    except ExchangeRejected:
        return None
    if new.decomposition.stem_leaf_count > l:
        return None
    if new.potential() <= tree.potential():
        return None
    return new


def try_moves(
    g: Graph, l: int, tree: TreeState, moves: Iterable[str] = ALL_MOVES
) -> Optional[tuple[str, TreeState]]:
    """First improving move in ``moves`` order, as ``(name, new tree)``."""
    view = _View(g, tree)
    for name in moves:
        for add, remove in _GENERATORS[name](view):
            new = _accept(tree, l, add, remove)
            if new is not None:
                return name, new
    return None


def first_applicable(g: Graph, l: int, tree: TreeState, moves: Iterable[str] = ALL_MOVES) -> Optional[str]:
    hit = try_moves(g, l, tree, moves)
    return hit[0] if hit else None


def initial_tree(g: Graph, l: int, root: int = 0) -> TreeState:
    """BFS tree from ``root`` pruned until its stem has at most ``l`` leaves."""
    tree = bfs_tree(g, root)
    while decompose(tree).stem_leaf_count > l:
        dec = tree.decomposition
        view = _View(g, tree)
        # strip the stem leaf carrying the fewest leaves
        x = min(dec.stem_leaves, key=lambda v: (len(view.leaf_children(v)), v))
        drop = {norm_edge(x, y) for y in view.leaf_children(x)}
        if not drop or len(drop) == len(tree.edges):
            return TreeState.single(g, root)
        tree = apply_exchange(tree, (), drop)
    return tree


def local_search_solve(
    g: Graph,
    t: int,
    l: int,
    move_budget: int = DEFAULT_MOVE_BUDGET,
    *,
    moves: Iterable[str] = ALL_MOVES,
    restarts: bool = True,
    keep_traces: bool = False,
) -> SearchOutcome:
    """Grow a tree by improving exchanges; certify failure when stuck.

    ``stats["traces"]`` (with ``keep_traces``) holds the potential sequence of
    every run.
    """
    if t < 3 or l < 1:
        raise ValueError("need t >= 3 and l >= 1")
    if g.n == 0 or not is_connected(g):
        raise PreconditionError("local_search_solve needs a connected, non-empty graph")
    moves = tuple(moves)
    start = time.perf_counter()
    stats: dict = {"method": "local", "moves": 0, "runs": 0, "move_counts": {}}
    traces: list[list[tuple[int, int]]] = []
    stuck_states: list[TreeState] = []
    roots = range(g.n) if restarts else range(1)

    def finish(status, tree=None, cert=None):
        stats["elapsed"] = time.perf_counter() - start
        if keep_traces:
            stats["traces"] = [[list(p) for p in tr] for tr in traces]
        return SearchOutcome(status, tree, cert, stats)

    for root in roots:
        stats["runs"] += 1
        tree = initial_tree(g, l, root)
        trace = [tree.potential()]
        traces.append(trace)
        while tree.order < g.n:
            if stats["moves"] >= move_budget:
                return finish(LIMIT, None)
            hit = try_moves(g, l, tree, moves)
            if hit is None:
                break
            name, tree = hit
            stats["moves"] += 1
            stats["move_counts"][name] = stats["move_counts"].get(name, 0) + 1
            trace.append(tree.potential())
        if tree.order == g.n:
            stats["root"] = root
            return finish(FOUND, tree)
        stuck_states.append(tree)

    failures = []
    for stuck in stuck_states:
        try:
            cert = extract_certificate(g, t, l, stuck, check=False)
        except ExtractionError as exc:
            failures.append({"error": str(exc), **exc.diagnostics})
            continue
        stats["q"] = cert.details.get("q")
        stats["extraction_failures"] = len(failures)
        return finish(CERTIFIED_FAIL, None, cert)
    stats["extraction_failures"] = failures
    return finish(EXHAUSTED)
