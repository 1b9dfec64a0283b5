"""Exact decision by spanning-tree enumeration with pruning.

Search nodes are pairs (forced edges F, forbidden edges X). Each node

* drops edges that would close a cycle in F and checks the remaining graph
  is still connected,
* forces every bridge of the remaining graph into F,
* bounds the stem-leaf count of every completion from below and prunes.

The bound: any vertex of F-degree >= 2, and any cut vertex of the remaining
graph, is a non-leaf of every completion, so it lies in the stem. Inside an
F-component the minimal subtree spanning those vertices is part of the stem,
and a tree containing a subtree has at least as many leaves. Joining ``c``
such subtrees can absorb at most ``2(c - 1)`` of their leaves.
"""

from __future__ import annotations

import os
import sys
import time

from ..graph import Edge, Graph, is_connected, norm_edge
from ..tree import TreeState, decompose
from .outcome import EXHAUSTED, FOUND, LIMIT, PreconditionError, SearchOutcome

DEFAULT_TREE_LIMIT = int(os.environ.get("STEMLEAF_TREE_LIMIT", 10_000_000))


class _LimitHit(Exception):
    pass


class _Find:
    __slots__ = ("parent",)

    def __init__(self, n: int, edges):
        self.parent = list(range(n))
        for u, v in edges:
            self.union(u, v)

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _cut_structure(n: int, adj: list[list[int]]) -> tuple[bool, set[Edge], set[int]]:
    """Connectivity, bridges and articulation points (iterative Tarjan)."""
    disc = [-1] * n
    low = [0] * n
    bridges: set[Edge] = set()
    cuts: set[int] = set()
    disc[0] = low[0] = 0
    timer = 1
    root_children = 0
    stack = [(0, -1, iter(adj[0]))]
    while stack:
        u, parent, it = stack[-1]
        advanced = False
        for w in it:
            if disc[w] == -1:
                disc[w] = low[w] = timer
                timer += 1
                stack.append((w, u, iter(adj[w])))
                if u == 0:
                    root_children += 1
                advanced = True
                break
            if w != parent:
                low[u] = min(low[u], disc[w])
        if advanced:
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[u])
            if low[u] > disc[parent]:
                bridges.add(norm_edge(parent, u))
            if parent != 0 and low[u] >= disc[parent]:
                cuts.add(parent)
    if root_children > 1:
        cuts.add(0)
    return timer == n, bridges, cuts


def _steiner_leaves(members: list[int], forest_adj: list[list[int]], marked: set[int]) -> int:
    """Leaf count of the minimal subtree of one F-component spanning ``marked``.

    Returns 0 when that subtree has fewer than two vertices.
    """
    inside = set(members)
    deg = {v: len(forest_adj[v]) for v in members}
    queue = [v for v in members if deg[v] <= 1 and v not in marked]
    while queue:
        v = queue.pop()
        if v not in inside:
            continue
        inside.discard(v)
        for w in forest_adj[v]:
            if w in inside:
                deg[w] -= 1
                if deg[w] <= 1 and w not in marked:
                    queue.append(w)
    if len(inside) < 2:
        return 0
    return sum(1 for v in inside if deg[v] == 1)


def stem_leaf_lower_bound(
    n: int, forest: set[Edge], avail_adj: list[list[int]], cuts: set[int]
) -> int:
    forest_adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in forest:
        forest_adj[u].append(v)
        forest_adj[v].append(u)
    marked = {v for v in range(n) if len(forest_adj[v]) >= 2} | cuts
    if not marked:
        return 0
    seen = [False] * n
    per_component = []
    for s in range(n):
        if seen[s] or len(forest_adj[s]) == 0:
            continue
        members = []
        stack = [s]
        seen[s] = True
        while stack:
            u = stack.pop()
            members.append(u)
            for w in forest_adj[u]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        leaves = _steiner_leaves(members, forest_adj, marked)
        if leaves:
            per_component.append(leaves)
    if not per_component:
        return 0
    return max(max(per_component), sum(per_component) - 2 * (len(per_component) - 1))


def exact_solve(g: Graph, l: int, limit: int = DEFAULT_TREE_LIMIT) -> SearchOutcome:
    """Decide whether ``g`` has a spanning tree whose stem has at most ``l`` leaves.

    ``limit`` caps the number of search nodes (partial or complete trees).
    """
    if l < 1:
        raise ValueError("l must be at least 1")
    if g.n == 0 or not is_connected(g):
        raise PreconditionError("exact_solve needs a connected, non-empty graph")
    start = time.perf_counter()
    stats = {"nodes": 0, "trees": 0, "pruned": 0, "method": "exact"}
    n = g.n
    if n == 1:
        stats["trees"] = 1
        stats["elapsed"] = time.perf_counter() - start
        return SearchOutcome(FOUND, TreeState.single(g, 0), stats=stats)

    found: list[TreeState] = []

    def node(forest: set[Edge], banned: set[Edge]) -> bool:
        stats["nodes"] += 1
        if stats["nodes"] > limit:
            raise _LimitHit
        uf = _Find(n, forest)
        # edges closing a cycle in F can never be used
        avail_adj: list[list[int]] = [[] for _ in range(n)]
        cross: list[Edge] = []
        for e in g.edges:
            if e in banned:
                continue
            u, v = e
            if e in forest:
                avail_adj[u].append(v)
                avail_adj[v].append(u)
            elif uf.find(u) != uf.find(v):
                avail_adj[u].append(v)
                avail_adj[v].append(u)
                cross.append(e)
        connected, bridges, cuts = _cut_structure(n, avail_adj)
        if not connected:
            return False
        forced = bridges - forest
        if forced:
            forest = forest | forced
            for u, v in forced:
                uf.union(u, v)
            cross = [e for e in cross if e not in forced and uf.find(e[0]) != uf.find(e[1])]
        if stem_leaf_lower_bound(n, forest, avail_adj, cuts) > l:
            stats["pruned"] += 1
            return False
        if len(forest) == n - 1:
            stats["trees"] += 1
            tree = TreeState(g, forest)
            if decompose(tree).stem_leaf_count <= l:
                found.append(tree)
                return True
            return False
        # grow around the vertex with the most usable cross edges
        weight = [0] * n
        for u, v in cross:
            weight[u] += 1
            weight[v] += 1
        fdeg = [0] * n
        for u, v in forest:
            fdeg[u] += 1
            fdeg[v] += 1
        hub = max(range(n), key=lambda v: (weight[v] > 0, fdeg[v] >= 2, weight[v], -v))
        e = min(x for x in cross if hub in x)
        if node(forest | {e}, banned):
            return True
        return node(forest, banned | {e})

    old = sys.getrecursionlimit()
    sys.setrecursionlimit(max(old, 10 * len(g.edges) + 1000))
    try:
        status = FOUND if node(set(), set()) else EXHAUSTED
    except _LimitHit:
        status = LIMIT
    finally:
        sys.setrecursionlimit(old)
    stats["elapsed"] = time.perf_counter() - start
    return SearchOutcome(status, found[0] if found else None, stats=stats)
