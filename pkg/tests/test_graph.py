"""Graph core: BFS, exact closeness, edge-list format."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from closegraph.dyadic import Dyadic
from closegraph.graph import (
    UNREACHABLE,
    Graph,
    bfs_distances,
    format_edgelist,
    graph_closeness,
    parse_edgelist,
    to_dot,
    vertex_closeness,
)
from closegraph.generators import FamilySpec, gen_random_connected, generate
from closegraph.transforms import add_edge, delete_edge

from conftest import build, oracle_total_closeness, oracle_vertex_closeness


def test_construction_validation():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph.from_edges(2, [], labels=["a"])


def test_adjacency_sorted_and_symmetric():
    g = build(4, [(2, 0), (3, 1), (0, 1)])
    assert g.adj[0] == [1, 2]
    for u in range(g.order):
        for v in g.adj[u]:
            assert u in g.adj[v]
    assert g.has_edge(0, 2) and g.has_edge(2, 0)
    assert not g.has_edge(0, 3)


def test_bfs_path():
    g = build(3, [(0, 1), (1, 2)])
    assert bfs_distances(g, 0) == [0, 1, 2]


def test_bfs_disconnected():
    g = build(2, [])
    assert bfs_distances(g, 0) == [0, UNREACHABLE]


def test_bfs_cycle5():
    g = generate(FamilySpec("cycle", 5))
    assert bfs_distances(g, 0) == [0, 1, 2, 2, 1]


def test_bfs_source_out_of_range():
    g = build(2, [(0, 1)])
    with pytest.raises(IndexError):
        bfs_distances(g, 2)
    with pytest.raises(IndexError):
        vertex_closeness(g, -1)


def test_vertex_closeness_star_center():
    g = generate(FamilySpec("star", 4))
    assert vertex_closeness(g, 0) == Dyadic(3, 1)


def test_vertex_closeness_path_leaf():
    for n in (1, 2, 5, 9):
        g = generate(FamilySpec("path", n))
        assert vertex_closeness(g, 0) == Dyadic(1) - Dyadic.pow2(1 - n)


def test_vertex_closeness_edgeless():
    g = build(4, [])
    assert vertex_closeness(g, 2) == Dyadic(0)


def test_graph_closeness_k4():
    g = generate(FamilySpec("complete", 4))
    assert graph_closeness(g).total == Dyadic(6)


def test_graph_closeness_p5():
    g = generate(FamilySpec("path", 5))
    assert graph_closeness(g).total == Dyadic(49, 3)


def test_graph_closeness_empty():
    report = graph_closeness(build(0, []))
    assert report.total == Dyadic(0)
    assert report.per_vertex == []


def test_total_is_sum_of_per_vertex():
    g = gen_random_connected(9, 14, seed=3)
    report = graph_closeness(g)
    acc = Dyadic(0)
    for c in report.per_vertex:
        acc = acc + c
    assert acc == report.total


@pytest.mark.parametrize(
    "g",
    [
        build(5, [(0, 1), (1, 2), (2, 3), (3, 4)]),
        build(6, [(0, 1), (0, 2), (3, 4)]),  # disconnected
        generate(FamilySpec("tadpole", 5, 3)),
        gen_random_connected(10, 20, seed=11),
    ],
)
def test_matches_independent_oracle(g):
    report = graph_closeness(g)
    assert report.total.as_fraction() == oracle_total_closeness(g)
    for i in range(g.order):
        assert report.per_vertex[i].as_fraction() == oracle_vertex_closeness(g, i)


def test_distances_symmetric():
    g = gen_random_connected(8, 12, seed=17)
    rows = [bfs_distances(g, i) for i in range(g.order)]
    for i in range(g.order):
        for j in range(g.order):
            assert rows[i][j] == rows[j][i]


def test_component_additivity():
    left = generate(FamilySpec("cycle", 5))
    right = generate(FamilySpec("star", 4))
    edges = list(left.edges()) + [(5 + u, 5 + v) for u, v in right.edges()]
    union = build(9, edges)
    assert (
        graph_closeness(union).total
        == graph_closeness(left).total + graph_closeness(right).total
    )


def test_closeness_bounds():
    n = 7
    g = generate(FamilySpec("complete", n))
    report = graph_closeness(g)
    assert report.total == Dyadic(n * (n - 1), 1)
    star = generate(FamilySpec("star", 5))
    rep = graph_closeness(star)
    bound = Dyadic(star.order - 1, 1)
    for i, c in enumerate(rep.per_vertex):
        assert c <= bound
        # the bound is attained exactly at the vertex adjacent to all others
        assert (c == bound) == (star.degree(i) == star.order - 1)
    assert rep.total < Dyadic(star.order * (star.order - 1), 1)


def test_edge_monotonicity():
    g = gen_random_connected(8, 10, seed=5)
    base = graph_closeness(g).total
    u, v = next(e for e in [(a, b) for a in range(8) for b in range(a + 1, 8)]
                if not g.has_edge(*e))
    assert graph_closeness(add_edge(g, u, v)).total >= base
    eu, ev = next(iter(g.edges()))
    assert graph_closeness(delete_edge(g, eu, ev)).total <= base


def test_edgelist_round_trip():
    g = generate(FamilySpec("lollipop", 4, 3))
    text = format_edgelist(g)
    back = parse_edgelist(text)
    assert back.order == g.order
    assert list(back.edges()) == list(g.edges())
    assert graph_closeness(back).total == graph_closeness(g).total


def test_edgelist_comments_and_whitespace():
    text = "# graph\n3 2\n\n0 1\n  # inline comment line\n1 2\n"
    g = parse_edgelist(text)
    assert g.order == 3 and g.edge_count == 2


@pytest.mark.parametrize(
    "text,fragment",
    [
        ("", "line 1"),
        ("2 1\n0 0\n", "line 2: self-loop"),
        ("2 2\n0 1\n1 0\n", "line 3: duplicate"),
        ("2 1\n0 5\n", "line 2: edge (0, 5) out of range"),
        ("2 2\n0 1\n", "declares 2 edges"),
        ("2 1\n0 1\nx y\n", "line 3"),
    ],
)
def test_edgelist_errors_carry_line_numbers(text, fragment):
    with pytest.raises(ValueError, match="line"):
        try:
            parse_edgelist(text)
        except ValueError as exc:
            assert fragment in str(exc)
            raise


@settings(max_examples=60, deadline=None)
@given(
    order=st.integers(min_value=2, max_value=10),
    extra=st.integers(min_value=0, max_value=20),
    seed=st.integers(min_value=0, max_value=2 ** 32 - 1),
)
def test_distance_row_invariants(order, extra, seed):
    max_edges = order * (order - 1) // 2
    budget = min(order - 1 + extra, max_edges)
    g = gen_random_connected(order, budget, seed)
    for source in range(order):
        dist = bfs_distances(g, source)
        assert dist[source] == 0
        assert all(0 <= d <= order - 1 for d in dist)  # connected: all finite
        for v in g.adj[source]:
            assert dist[v] == 1


@settings(max_examples=60, deadline=None)
@given(
    order=st.integers(min_value=2, max_value=9),
    extra=st.integers(min_value=0, max_value=15),
    seed=st.integers(min_value=0, max_value=2 ** 32 - 1),
)
def test_edge_monotonicity_property(order, extra, seed):
    max_edges = order * (order - 1) // 2
    budget = min(order - 1 + extra, max_edges)
    g = gen_random_connected(order, budget, seed)
    base = graph_closeness(g).total
    eu, ev = next(iter(g.edges()))
    assert graph_closeness(delete_edge(g, eu, ev)).total <= base
    non_edges = [
        (a, b) for a in range(order) for b in range(a + 1, order)
        if not g.has_edge(a, b)
    ]
    if non_edges:
        u, v = non_edges[0]
        assert graph_closeness(add_edge(g, u, v)).total >= base


def test_dot_export_has_labels():
    g = generate(FamilySpec("lollipop", 3, 2))
    dot = to_dot(g)
    assert 'label="K:0"' in dot and 'label="P:1"' in dot
    assert "0 -- 1;" in dot
