"""Regenerate tests/data/connected_upto8.g6: every connected graph on 1..8 vertices
up to isomorphism, one graph6 line each, ordered by vertex count.

n <= 7 comes from the networkx graph atlas. n = 8 is grown from the n = 7
connected graphs by adding a vertex with every non-empty neighbourhood
(every connected graph has a non-cut vertex), deduplicated by WL hash buckets
and a full isomorphism test inside each bucket.

Usage: python tools/gen_connected.py [OUT]
"""

import sys
from collections import defaultdict
from itertools import combinations

import networkx as nx

from stemleaf.graph import Graph, to_graph6

EXPECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853, 8: 11117}


def atlas_connected():
    by_n = defaultdict(list)
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() >= 1 and nx.is_connected(h):
            by_n[h.number_of_nodes()].append(nx.convert_node_labels_to_integers(h))
    return by_n


def extend(graphs, n):
    buckets = defaultdict(list)
    for h in graphs:
        for r in range(1, n):
            for nb in combinations(range(n - 1), r):
                cand = h.copy()
                cand.add_node(n - 1)
                cand.add_edges_from((n - 1, v) for v in nb)
                key = (tuple(sorted(d for _, d in cand.degree())),
                       nx.weisfeiler_lehman_graph_hash(cand, iterations=3))
                bucket = buckets[key]
                if not any(nx.is_isomorphic(cand, other) for other in bucket):
                    bucket.append(cand)
    return [h for bucket in buckets.values() for h in bucket]


def main(out):
    by_n = atlas_connected()
    by_n[8] = extend(by_n[7], 8)
    lines = []
    for n in sorted(by_n):
        assert len(by_n[n]) == EXPECTED[n], (n, len(by_n[n]))
        for h in by_n[n]:
            lines.append(to_graph6(Graph(n, h.edges())))
    with open(out, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {len(lines)} graphs to {out}")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "tests/data/connected_upto8.g6")
