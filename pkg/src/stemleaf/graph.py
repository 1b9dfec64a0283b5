"""Immutable simple graphs on vertices ``0..n-1``.

Covers construction, edge-list and graph6 text formats, hop distances,
connectivity and induced-star (``K_{1,t}``) detection.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

log = logging.getLogger(__name__)

Edge = tuple[int, int]


class GraphParseError(ValueError):
    """Raised for malformed edge-list or graph6 input."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with sorted, symmetric adjacency.

    Instances are never mutated after construction; the distance matrix is
    computed lazily and cached.
    """

    __slots__ = ("n", "adj", "_nbrs", "edges", "_dist")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self._nbrs = tuple(frozenset(s) for s in nbrs)
        self.adj = tuple(tuple(sorted(s)) for s in nbrs)
        self.edges = tuple(
            (u, v) for u in range(n) for v in self.adj[u] if u < v
        )
        self._dist: Optional[DistanceMatrix] = None

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbrs[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def distances(self) -> DistanceMatrix:
        if self._dist is None:
            self._dist = all_pairs_distances(self)
        return self._dist

    def dist(self, u: int, v: int) -> int:
        return self.distances().dist[u][v]


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop distances; unreachable pairs hold ``unreachable`` (= n)."""

    dist: tuple[tuple[int, ...], ...]
    unreachable: int

    def __getitem__(self, uv: tuple[int, int]) -> int:
        u, v = uv
        return self.dist[u][v]

    def reachable(self, u: int, v: int) -> bool:
        return self.dist[u][v] != self.unreachable


@dataclass(frozen=True)
class InducedStar:
    center: int
    leaves: tuple[int, ...] = field(default_factory=tuple)

    def to_dict(self) -> dict:
        return {"center": self.center, "leaves": list(self.leaves)}


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Single-source hop distances, ``g.n`` for unreachable vertices."""
    dist = [g.n] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.adj[u]:
            if dist[w] > du:
                dist[w] = du
                queue.append(w)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    # the sentinel n exceeds every finite hop distance (at most n-1)
    rows = tuple(tuple(bfs_distances(g, s)) for s in range(g.n))
    return DistanceMatrix(rows, g.n)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        raise ValueError("connectivity is undefined for the empty graph")
    return all(d < g.n for d in bfs_distances(g, 0))


def power_graph(g: Graph, k: int) -> Graph:
    """Graph joining vertices at hop distance ``1..k`` in ``g``."""
    dm = g.distances()
    return Graph(g.n, ((u, v) for u in range(g.n) for v in range(u + 1, g.n)
                       if dm.dist[u][v] <= k and dm.reachable(u, v)))


def find_induced_star(g: Graph, t: int) -> Optional[InducedStar]:
    """First induced ``K_{1,t}``: lowest center, lexicographically first leaves."""
    if t < 3:
        raise ValueError("t must be at least 3")
    for c in range(g.n):
        nb = g.adj[c]
        if len(nb) < t:
            continue
        found = _independent_subset(g, nb, t)
        if found is not None:
            return InducedStar(c, found)
    return None


def _independent_subset(g: Graph, pool: Sequence[int], size: int) -> Optional[tuple[int, ...]]:
    # depth-first in lexicographic order, so the first hit equals the first
    # independent subset that combinations() would yield
    chosen: list[int] = []

    def rec(start: int) -> bool:
        if len(chosen) == size:
            return True
        for i in range(start, len(pool) - (size - len(chosen)) + 1):
            v = pool[i]
            if any(g.has_edge(v, c) for c in chosen):
                continue
            chosen.append(v)
            if rec(i + 1):
                return True
            chosen.pop()
        return False

    return tuple(chosen) if rec(0) else None


def is_induced_star(g: Graph, center: int, leaves: Sequence[int]) -> bool:
    if center in leaves or len(set(leaves)) != len(leaves):
        return False
    if not all(0 <= v < g.n for v in (center, *leaves)):
        return False
    if not all(g.has_edge(center, v) for v in leaves):
        return False
    return not any(g.has_edge(a, b) for a, b in combinations(leaves, 2))


# ---------------------------------------------------------------- edge lists

def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"``.

    Duplicate edges are collapsed and counted (logged as a warning); blank
    trailing lines are ignored.
    """
    g, _ = parse_edge_list_counted(text)
    return g


def parse_edge_list_counted(text: str) -> tuple[Graph, int]:
    lines = text.replace("\r\n", "\n").replace("\r", "\n").split("\n")
    rows = [(i + 1, ln.strip()) for i, ln in enumerate(lines)]
    rows = [(i, ln) for i, ln in rows if ln]
    if not rows:
        raise GraphParseError("empty input", 1)
    lineno, header = rows[0]
    n, m = _two_ints(header, lineno)
    if n < 1 or m < 0:
        raise GraphParseError(f"bad header {header!r}", lineno)
    body = rows[1:]
    if len(body) != m:
        raise GraphParseError(f"header announces {m} edges, found {len(body)}", lineno)
    seen: set[Edge] = set()
    duplicates = 0
    for lineno, ln in body:
        u, v = _two_ints(ln, lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise GraphParseError(f"vertex index out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno)
        e = norm_edge(u, v)
        if e in seen:
            duplicates += 1
        seen.add(e)
    if duplicates:
        log.warning("collapsed %d duplicate edge(s)", duplicates)
    return Graph(n, sorted(seen)), duplicates


def _two_ints(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 2:
        raise GraphParseError(f"expected two integers, got {line!r}", lineno)
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise GraphParseError(f"expected two integers, got {line!r}", lineno) from None


def format_edge_list(n: int, edges: Iterable[Edge]) -> str:
    edges = sorted(norm_edge(u, v) for u, v in edges)
    out = [f"{n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


def to_edge_list(g: Graph) -> str:
    return format_edge_list(g.n, g.edges)


# -------------------------------------------------------------------- graph6

_G6_HEADER = ">>graph6<<"


def _encode_n(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    """graph6 encoding (no header, no newline)."""
    bits = [
        1 if g.has_edge(i, j) else 0
        for j in range(1, g.n)
        for i in range(j)
    ]
    bits.extend([0] * (-len(bits) % 6))
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return _encode_n(g.n) + "".join(chars)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphParseError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"invalid graph6 character {ch!r}")
    vals = [ord(ch) - 63 for ch in s]
    if vals[0] != 63:
        n, pos = vals[0], 1
    elif len(vals) >= 4 and vals[1] != 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        pos = 4
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        pos = 8
    else:
        raise GraphParseError("truncated graph6 size header")
    need = n * (n - 1) // 2
    data = vals[pos:]
    if len(data) != (need + 5) // 6:
        raise GraphParseError(
            f"graph6 body has {len(data)} bytes, expected {(need + 5) // 6} for n={n}"
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (data[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def iter_graph6(lines: Iterable[str]) -> Iterator[tuple[int, str, Graph | GraphParseError]]:
    """Yield ``(index, raw line, graph or parse error)`` for non-blank lines."""
    idx = 0
    for raw in lines:
        s = raw.strip()
        if not s:
            continue
        try:
            g: Graph | GraphParseError = parse_graph6(s)
        except GraphParseError as exc:
            g = exc
        yield idx, s, g
        idx += 1


def looks_like_graph6(text: str) -> bool:
    """First-byte heuristic: edge lists start with a digit or whitespace."""
    s = text.lstrip()
    if not s:
        return False
    if s.startswith(_G6_HEADER):
        return True
    return not s[0].isdigit()


# ------------------------------------------------------------ small builders

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)
