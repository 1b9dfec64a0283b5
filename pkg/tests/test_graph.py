import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from stemleaf.graph import (
    Graph, GraphParseError, all_pairs_distances, bfs_distances, complete_graph,
    cycle_graph, find_induced_star, is_connected, is_induced_star, parse_edge_list,
    parse_edge_list_counted, parse_graph6, path_graph, petersen_graph, star_graph,
    to_edge_list, to_graph6,
)

from oracles import bf_star, to_nx


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


class TestEdgeList:
    def test_path(self):
        g = parse_edge_list("3 2\n0 1\n1 2")
        assert g.degrees() == [1, 2, 1]
        assert g.edges == ((0, 1), (1, 2))

    def test_single_vertex(self):
        g = parse_edge_list("1 0")
        assert g.n == 1 and g.edge_count == 0

    def test_k4(self):
        g = parse_edge_list("4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3")
        assert g.degrees() == [3, 3, 3, 3]

    def test_crlf_and_duplicates(self):
        g, dups = parse_edge_list_counted("3 3\r\n0 1\r\n1 0\r\n1 2\r\n")
        assert dups == 1
        assert g.edges == ((0, 1), (1, 2))

    @pytest.mark.parametrize("text, line", [
        ("3 1\n0 x", 2),
        ("3 1\n0 3", 2),
        ("3 1\n1 1", 2),
        ("3 2\n0 1", 1),
        ("three 0", 1),
    ])
    def test_errors_name_line(self, text, line):
        with pytest.raises(GraphParseError) as exc:
            parse_edge_list(text)
        assert exc.value.line == line
        assert f"line {line}" in str(exc.value)

    def test_round_trip(self):
        g = petersen_graph()
        assert parse_edge_list(to_edge_list(g)) == g


class TestGraph6:
    def test_round_trip_literal(self):
        g = parse_graph6("D?{")
        assert g.n == 5
        assert to_graph6(g) == "D?{"

    def test_c5_against_networkx_encoder(self):
        reference = nx.to_graph6_bytes(nx.cycle_graph(5), header=False).decode().strip()
        g = parse_graph6(reference)
        assert (g.n, g.edge_count) == (5, 5)
        assert g.degrees() == [2] * 5
        assert to_graph6(cycle_graph(5)) == reference

    def test_empty_two_vertices(self):
        g = parse_graph6(to_graph6(Graph(2)))
        assert (g.n, g.edge_count) == (2, 0)

    def test_header_is_accepted(self):
        assert parse_graph6(">>graph6<<D?{") == parse_graph6("D?{")

    def test_large_n_header(self):
        g = path_graph(70)
        s = to_graph6(g)
        assert s.startswith("~")
        assert s == nx.to_graph6_bytes(nx.path_graph(70), header=False).decode().strip()
        assert parse_graph6(s) == g

    @pytest.mark.parametrize("bad", ["D?", "D?{{", "D \x01", ""])
    def test_invalid(self, bad):
        with pytest.raises(GraphParseError):
            parse_graph6(bad)

    def test_stream_round_trip(self, connected_stream):
        for line in connected_stream[:2000]:
            assert to_graph6(parse_graph6(line)) == line

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=8))
    def test_matches_networkx(self, g):
        expected = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
        assert to_graph6(g) == expected
        assert parse_graph6(expected) == g


class TestDistances:
    def test_path(self):
        assert path_graph(5).dist(0, 4) == 4

    def test_unreachable_sentinel(self):
        d = all_pairs_distances(Graph(2))
        assert d[0, 1] == 2 and not d.reachable(0, 1)
        assert d[0, 1] > 1

    def test_complete(self):
        d = complete_graph(4).distances()
        assert all(d[u, v] == (0 if u == v else 1) for u in range(4) for v in range(4))

    @settings(max_examples=100, deadline=None)
    @given(graphs())
    def test_matrix_properties(self, g):
        d = g.distances().dist
        for u in range(g.n):
            assert d[u] == tuple(bfs_distances(g, u))
            assert d[u][u] == 0
            for v in range(g.n):
                assert d[u][v] == d[v][u]
                assert (d[u][v] == 1) == g.has_edge(u, v)
                for w in range(g.n):
                    if d[u][v] < g.n and d[v][w] < g.n:
                        assert d[u][w] <= d[u][v] + d[v][w]

    @settings(max_examples=50, deadline=None)
    @given(graphs())
    def test_matches_networkx(self, g):
        ref = dict(nx.all_pairs_shortest_path_length(to_nx(g)))
        d = g.distances().dist
        for u in range(g.n):
            for v in range(g.n):
                assert d[u][v] == ref[u].get(v, g.n)


class TestConnectivity:
    def test_cases(self):
        assert is_connected(path_graph(5))
        assert not is_connected(Graph(5, complete_graph(4).edges))
        assert is_connected(Graph(1))


class TestInducedStar:
    def test_claw(self):
        s = find_induced_star(star_graph(3), 3)
        assert s.center == 0 and s.leaves == (1, 2, 3)

    def test_cycle_has_none(self):
        assert find_induced_star(cycle_graph(6), 3) is None

    def test_petersen(self):
        g = petersen_graph()
        s = find_induced_star(g, 3)
        assert (s.center, s.leaves) == bf_star(g, 3)
        assert is_induced_star(g, s.center, s.leaves)
        # girth 5: every vertex carries a claw
        for c in range(g.n):
            assert is_induced_star(g, c, g.adj[c])

    def test_t_must_be_at_least_three(self):
        with pytest.raises(ValueError):
            find_induced_star(path_graph(3), 2)

    @settings(max_examples=300, deadline=None)
    @given(graphs(), st.integers(3, 5))
    def test_oracle_equivalence(self, g, t):
        found = find_induced_star(g, t)
        ref = bf_star(g, t)
        if ref is None:
            assert found is None
        else:
            assert (found.center, found.leaves) == ref

    def test_low_degree_is_star_free(self):
        rng = random.Random(5)
        for _ in range(200):
            n = rng.randint(1, 12)
            g = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
            assert find_induced_star(g, g.max_degree() + 1 if g.max_degree() >= 2 else 3) is None


class TestGraphInvariants:
    @settings(max_examples=100, deadline=None)
    @given(graphs())
    def test_symmetric_simple(self, g):
        for v in range(g.n):
            assert v not in g.adj[v]
            assert g.degree(v) == len(g.adj[v])
            assert list(g.adj[v]) == sorted(set(g.adj[v]))
            assert all(v in g.adj[w] for w in g.adj[v])

    def test_rejects_bad_edges(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 0)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])
