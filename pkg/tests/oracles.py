"""Brute-force reference implementations, independent of the package code paths."""

from itertools import combinations, product

import networkx as nx


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


def nx_distances(g):
    return dict(nx.all_pairs_shortest_path_length(to_nx(g)))


def _far(dist, a, b, m):
    return b not in dist[a] or dist[a][b] >= m


def bf_distance_sets(g, m, p):
    dist = nx_distances(g)
    return [
        s for s in combinations(range(g.n), p)
        if all(_far(dist, a, b, m) for a, b in combinations(s, 2))
    ]


def bf_alpha(g, m):
    for size in range(g.n, 0, -1):
        if bf_distance_sets(g, m, size):
            return size
    return 0


def bf_sigma(g, m, p):
    """Minimum degree sum, or None for the +infinity case."""
    sets = bf_distance_sets(g, m, p)
    if not sets:
        return None
    return min(sum(g.degree(v) for v in s) for s in sets)


def bf_star(g, t):
    for c in range(g.n):
        for leaves in combinations(g.adj[c], t):
            if not any(g.has_edge(a, b) for a, b in combinations(leaves, 2)):
                return c, leaves
    return None


def stem_leaf_count_nx(edges, n):
    """Stem-leaf count of a tree given as an edge list on vertices 0..n-1."""
    t = nx.Graph()
    t.add_nodes_from(range(n))
    t.add_edges_from(edges)
    if n == 1:
        return 1
    leaves = [v for v in t if t.degree(v) == 1]
    stem = t.subgraph([v for v in t if v not in leaves])
    if stem.number_of_nodes() <= 2:
        return stem.number_of_nodes()
    return sum(1 for v in stem if stem.degree(v) == 1)


def prufer_trees(n):
    """All labelled trees on n >= 2 vertices via Pruefer decoding."""
    if n == 2:
        yield [(0, 1)]
        return
    for seq in product(range(n), repeat=n - 2):
        degree = [1] * n
        for x in seq:
            degree[x] += 1
        edges = []
        for x in seq:
            leaf = min(v for v in range(n) if degree[v] == 1)
            edges.append((leaf, x))
            degree[leaf] -= 1
            degree[x] -= 1
        u, w = [v for v in range(n) if degree[v] == 1]
        edges.append((u, w))
        yield edges


def bf_has_l_ended_spanning_tree(g, l):
    if g.n == 1:
        return True
    for edges in prufer_trees(g.n):
        if all(g.has_edge(a, b) for a, b in edges) and stem_leaf_count_nx(edges, g.n) <= l:
            return True
    return False
