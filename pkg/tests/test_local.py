import pytest
from hypothesis import given, settings, strategies as st

from stemleaf.extremal import ExtremalParamsG, ExtremalParamsH, build_g, build_h
from stemleaf.graph import Graph, complete_graph, is_connected, path_graph, star_graph
from stemleaf.invariants import evaluate_condition
from stemleaf.search.certificate import validate_certificate, verify_tree
from stemleaf.search.exact import exact_solve
from stemleaf.search.local import CORE_MOVES, initial_tree, local_search_solve, try_moves
from stemleaf.search.outcome import PreconditionError
from stemleaf.tree import TreeState

from test_graph import graphs

SPIDER = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


@pytest.mark.parametrize("g,l", [
    (path_graph(5), 2),
    (complete_graph(4), 1),
    (star_graph(4), 3),
    (Graph(1), 1),
])
def test_finds(g, l):
    out = local_search_solve(g, 3, l)
    assert out.found
    assert verify_tree(g, l, out.tree)


def test_sharpness_member_distance_set():
    g = build_g(ExtremalParamsG(3, 2, 1)).graph
    out = local_search_solve(g, 3, 2)
    assert out.status == "certified_fail"
    c = out.certificate
    assert c.kind == "distance_set"
    check = validate_certificate(g, 3, 2, c)
    assert check.ok
    assert check.notes["refutes_hypothesis"]
    assert len(c.witness_set) == 3


def test_single_core_exception():
    g = build_h(ExtremalParamsH(4, 1)).graph
    out = local_search_solve(g, 4, 2)
    assert out.status == "certified_fail"
    assert out.certificate.kind == "exception_case"
    assert validate_certificate(g, 4, 2, out.certificate)


def test_spider_gives_star():
    out = local_search_solve(SPIDER, 3, 2)
    assert out.status == "certified_fail"
    c = out.certificate
    assert c.kind == "induced_star"
    assert c.star.center == 0 and sorted(c.star.leaves) == [1, 3, 5]
    assert validate_certificate(SPIDER, 3, 2, c)


def test_preconditions():
    with pytest.raises(PreconditionError):
        local_search_solve(Graph(4, [(0, 1), (2, 3)]), 3, 1)
    with pytest.raises(ValueError):
        local_search_solve(path_graph(3), 2, 1)


def test_budget():
    g = build_g(ExtremalParamsG(4, 2, 2)).graph
    assert local_search_solve(g, 4, 4, move_budget=1).status == "limit"


def test_initial_tree_is_l_ended():
    g = build_g(ExtremalParamsG(3, 3, 2)).graph
    for root in range(g.n):
        tree = initial_tree(g, 2, root)
        assert tree.decomposition.stem_leaf_count <= 2
        assert tree.edges <= frozenset(g.edges)


@settings(max_examples=80, deadline=None)
@given(graphs(max_n=9), st.integers(3, 5), st.integers(1, 3))
def test_potential_strictly_increases(g, t, l):
    if not is_connected(g):
        return
    out = local_search_solve(g, t, l, keep_traces=True)
    for trace in out.stats["traces"]:
        assert len(trace) - 1 <= g.n ** 2
        for a, b in zip(trace, trace[1:]):
            assert tuple(b) > tuple(a)
    if out.found:
        assert verify_tree(g, l, out.tree)
    else:
        assert not exact_solve(g, l).found
    if out.certificate is not None:
        assert validate_certificate(g, t, l, out.certificate)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=8), st.integers(1, 3))
def test_every_accepted_move_keeps_invariants(g, l):
    if not is_connected(g) or g.n < 2:
        return
    tree = initial_tree(g, l)
    steps = 0
    while tree.order < g.n and steps <= g.n ** 2:
        hit = try_moves(g, l, tree)
        if hit is None:
            break
        _, new = hit
        assert new.edges <= frozenset(g.edges)
        assert new.decomposition.stem_leaf_count <= l
        assert new.potential() > tree.potential()
        tree = new
        steps += 1


def test_core_moves_alone_still_certify_sharpness():
    g = build_g(ExtremalParamsG(3, 2, 2)).graph
    out = local_search_solve(g, 3, 2, moves=CORE_MOVES)
    assert out.status == "certified_fail"
    assert validate_certificate(g, 3, 2, out.certificate)


@pytest.mark.parametrize("t,l", [(3, 2), (3, 3), (4, 3), (4, 4), (5, 2)])
def test_complete_under_hypothesis(connected_graphs, t, l):
    for g in connected_graphs:
        if g.n > 7:
            break
        rep = evaluate_condition(g, t, l)
        if not rep.k1t_free or not rep.hypothesis_holds or l == t - 2:
            continue
        out = local_search_solve(g, t, l)
        assert out.found, g.edges


def test_l1_is_outside_the_guarantee():
    # a 1-ended stem forces a spanning star, which P4 lacks even though no
    # pair of its vertices is at distance 4
    g = path_graph(4)
    rep = evaluate_condition(g, 4, 1)
    assert rep.hypothesis_holds and rep.k1t_free and not rep.l_equals_t_minus_2
    assert not exact_solve(g, 1).found
    assert not local_search_solve(g, 4, 1).found


def test_deterministic():
    g = build_g(ExtremalParamsG(3, 2, 1)).graph
    a, b = local_search_solve(g, 3, 2), local_search_solve(g, 3, 2)
    assert a.certificate.witness_set == b.certificate.witness_set
    assert a.stats["moves"] == b.stats["moves"]


def test_single_vertex_tree_state():
    t = TreeState.single(path_graph(3), 1)
    assert t.order == 1 and t.potential() == (1, 0)
