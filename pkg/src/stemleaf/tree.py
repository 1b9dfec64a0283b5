"""Trees inside a host graph and their leaf/stem decomposition.

Conventions for tiny stems (the usual degree-one definition of a leaf does
not cover them):

* an empty stem (the tree is one edge) has 0 stem leaves;
* a one-vertex stem counts that vertex as its single stem leaf;
* a two-vertex stem has both vertices as stem leaves.

A one-vertex tree has no leaves, so its stem is the vertex itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from .graph import Edge, Graph, format_edge_list, norm_edge


class ExchangeRejected(ValueError):
    """An edge exchange would not leave a tree inside the host."""

    def __init__(self, reason: str, edges: Iterable[Edge] = ()):
        self.reason = reason
        self.edges = tuple(sorted(edges))
        super().__init__(f"{reason}: {list(self.edges)}")


@dataclass(frozen=True)
class StemDecomposition:
    leaves: frozenset[int]
    stem: frozenset[int]
    stem_leaves: frozenset[int]
    core: frozenset[int]

    @property
    def stem_leaf_count(self) -> int:
        return len(self.stem_leaves)


class TreeState:
    """A tree in ``host`` stored as an edge set (plus a root when edgeless)."""

    __slots__ = ("host", "edges", "vertices", "__dict__")

    def __init__(self, host: Graph, edges: Iterable[Edge], root: Optional[int] = None):
        es = frozenset(norm_edge(u, v) for u, v in edges)
        self.host = host
        self.edges = es
        if es:
            self.vertices = frozenset(v for e in es for v in e)
        else:
            if root is None:
                raise ValueError("an edgeless tree needs a root vertex")
            self.vertices = frozenset((root,))

    @classmethod
    def single(cls, host: Graph, root: int) -> "TreeState":
        return cls(host, (), root)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TreeState):
            return NotImplemented
        return self.host is other.host and self.edges == other.edges and self.vertices == other.vertices

    def __hash__(self) -> int:
        return hash((self.edges, self.vertices))

    def __repr__(self) -> str:
        return f"TreeState({sorted(self.edges)})" if self.edges else f"TreeState(root={min(self.vertices)})"

    @cached_property
    def tree_adj(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for lst in adj.values():
            lst.sort()
        return adj

    def tree_degree(self, v: int) -> int:
        return len(self.tree_adj.get(v, ()))

    @cached_property
    def decomposition(self) -> StemDecomposition:
        return decompose(self)

    @property
    def order(self) -> int:
        return len(self.vertices)

    def potential(self) -> tuple[int, int]:
        return (len(self.vertices), len(self.decomposition.leaves))

    def path(self, a: int, b: int) -> list[int]:
        """Vertices of the unique tree path from ``a`` to ``b``."""
        parent = {a: a}
        stack = [a]
        adj = self.tree_adj
        while stack:
            u = stack.pop()
            if u == b:
                break
            for w in adj[u]:
                if w not in parent:
                    parent[w] = u
                    stack.append(w)
        if b not in parent:
            raise KeyError(f"{b} not in tree")
        out = [b]
        while out[-1] != a:
            out.append(parent[out[-1]])
        return out[::-1]

    def to_edge_list(self) -> str:
        return format_edge_list(self.host.n, self.edges)

    def to_dict(self) -> dict:
        return {
            "n": self.host.n,
            "edges": [list(e) for e in sorted(self.edges)],
            "vertices": sorted(self.vertices),
        }


def is_valid_tree(host: Graph, edges: frozenset[Edge], vertices: frozenset[int]) -> bool:
    if len(edges) != len(vertices) - 1:
        return False
    if not all(host.has_edge(u, v) for u, v in edges):
        return False
    if not edges:
        return len(vertices) == 1
    adj: dict[int, list[int]] = {v: [] for v in vertices}
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(vertices))
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == len(vertices)


def decompose(tree: TreeState) -> StemDecomposition:
    adj = tree.tree_adj
    if len(tree.vertices) == 1:
        leaves: frozenset[int] = frozenset()
    else:
        leaves = frozenset(v for v, nb in adj.items() if len(nb) == 1)
    stem = tree.vertices - leaves
    if len(stem) <= 2:
        stem_leaves = stem
    else:
        stem_leaves = frozenset(
            v for v in stem if sum(1 for w in adj[v] if w in stem) == 1
        )
    return StemDecomposition(leaves, stem, stem_leaves, stem - stem_leaves)


def stem_leaf_count(tree: TreeState) -> int:
    return tree.decomposition.stem_leaf_count


def has_l_ended_stem(tree: TreeState, l: int) -> bool:
    return tree.decomposition.stem_leaf_count <= l


def is_spanning(tree: TreeState) -> bool:
    return len(tree.vertices) == tree.host.n


def apply_exchange(
    tree: TreeState, add: Iterable[Edge] = (), remove: Iterable[Edge] = ()
) -> TreeState:
    """Return ``tree + add - remove``; raises :class:`ExchangeRejected`."""
    add_set = frozenset(norm_edge(u, v) for u, v in add)
    rem_set = frozenset(norm_edge(u, v) for u, v in remove)
    if not add_set and not rem_set:
        return tree
    host = tree.host
    missing = rem_set - tree.edges
    if missing:
        raise ExchangeRejected("removed edge not in tree", missing)
    bad = [e for e in add_set if e in tree.edges or not host.has_edge(*e)]
    if bad:
        raise ExchangeRejected("added edge not a free host edge", bad)
    edges = (tree.edges - rem_set) | add_set
    if edges:
        vertices = frozenset(v for e in edges for v in e)
    else:
        # everything removed: keep an anchor from the old tree
        vertices = frozenset((min(tree.vertices),))
    if len(edges) != len(vertices) - 1:
        kind = "cycle created" if len(edges) >= len(vertices) else "tree disconnected"
        raise ExchangeRejected(kind, add_set | rem_set)
    if not is_valid_tree(host, edges, vertices):
        raise ExchangeRejected("result is not a tree", add_set | rem_set)
    new = TreeState.__new__(TreeState)
    new.host = host
    new.edges = edges
    new.vertices = vertices
    return new


def bfs_tree(host: Graph, root: int = 0) -> TreeState:
    """Breadth-first spanning tree of the component containing ``root``."""
    seen = {root}
    frontier = [root]
    edges = []
    while frontier:
        nxt = []
        for u in frontier:
            for w in host.adj[u]:
                if w not in seen:
                    seen.add(w)
                    edges.append((u, w))
                    nxt.append(w)
        frontier = nxt
    return TreeState(host, edges, root)
