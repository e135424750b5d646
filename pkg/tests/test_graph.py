import pytest
from hypothesis import given

from helpers import all_graphs, bip_graphs, graphs
from turanmatch import (
    BipartiteGraph,
    CapacityError,
    DuplicateEdgeError,
    Edge,
    Graph,
    LabelRangeError,
    MalformedLineError,
    ParameterRangeError,
    SelfLoopError,
    complete_graph,
    empty_graph,
    extremal_graph,
    join,
    parse_bipartite,
    parse_graph,
    serialize_bipartite,
    serialize_graph,
)


def test_complete_graph_edge_counts():
    assert complete_graph(0).m == 0 and complete_graph(0).n == 0
    assert complete_graph(1).m == 0 and complete_graph(1).n == 1
    assert complete_graph(5).m == 10


def test_complete_graph_capacity():
    complete_graph(64)
    with pytest.raises(CapacityError):
        complete_graph(65)


def test_join_small_cases():
    assert join(empty_graph(1), empty_graph(1)) == complete_graph(2)
    assert join(complete_graph(2), empty_graph(3)).m == 7
    assert join(complete_graph(2), empty_graph(5)).m == 11


def test_join_offsets_second_graph_labels():
    g = join(Graph.from_edges(2, [(1, 2)]), Graph.from_edges(2, [(1, 2)]))
    assert g.has_edge(3, 4)
    assert g.has_edge(1, 3) and g.has_edge(2, 4)


def test_join_capacity():
    with pytest.raises(CapacityError):
        join(empty_graph(40), empty_graph(30))


def test_extremal_graph_examples():
    g = extremal_graph(7, 2, 3)
    assert g.m == 11
    assert extremal_graph(7, 2, 5).m == 10
    assert not extremal_graph(7, 2, 5).adj[5] and not extremal_graph(7, 2, 5).adj[6]


def test_extremal_graph_at_top_ell_is_clique_plus_isolated():
    for k in range(4):
        n = 2 * k + 4
        g = extremal_graph(n, k, 2 * k + 1)
        kplus = complete_graph(2 * k + 1)
        assert all(g.adj[a] == kplus.adj[a] for a in range(2 * k + 1))
        assert all(g.adj[a] == 0 for a in range(2 * k + 1, n))


def test_extremal_graph_edge_count_grid():
    for k in range(6):
        for ell in range(k + 1, 2 * k + 2):
            for n in range(ell, 21):
                g = extremal_graph(n, k, ell)
                assert g.m == ell * (ell - 1) // 2 + (n - ell) * (2 * k + 1 - ell)


def test_extremal_graph_bottom_ell_equals_join():
    for k in range(4):
        for n in range(k + 1, 11):
            assert extremal_graph(n, k, k + 1) == join(complete_graph(k), empty_graph(n - k))


def test_extremal_graph_range_errors():
    with pytest.raises(ParameterRangeError):
        extremal_graph(7, 2, 2)
    with pytest.raises(ParameterRangeError):
        extremal_graph(7, 2, 6)
    with pytest.raises(ParameterRangeError):
        extremal_graph(4, 2, 5)


def test_graph_rejects_asymmetry_and_loops():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0b00])
    with pytest.raises(ValueError):
        Graph(1, [0b1])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph.from_edges(3, [(1, 4)])


def test_edge_type_orders_endpoints():
    assert Edge(1, 2) == (1, 2)
    with pytest.raises(ValueError):
        Edge(2, 2)
    with pytest.raises(ValueError):
        Edge(0, 3)


def test_add_edge_returns_new_graph():
    g = empty_graph(3)
    h = g.add_edge(1, 3)
    assert g.m == 0 and h.m == 1 and h.has_edge(1, 3)
    with pytest.raises(ValueError):
        h.add_edge(3, 1)


def test_parse_examples():
    g = parse_graph("3 2\n1 2\n2 3")
    assert g.edges() == [Edge(1, 2), Edge(2, 3)]
    with pytest.raises(SelfLoopError):
        parse_graph("2 1\n1 1")
    with pytest.raises(DuplicateEdgeError):
        parse_graph("3 2\n1 2\n1 2")


def test_parse_distinct_errors():
    with pytest.raises(MalformedLineError):
        parse_graph("")
    with pytest.raises(MalformedLineError):
        parse_graph("3 2\n1 2")
    with pytest.raises(MalformedLineError):
        parse_graph("3 1\n1  2")
    with pytest.raises(MalformedLineError):
        parse_graph("3 1\n2 1")
    with pytest.raises(MalformedLineError):
        parse_graph("3 1\n1 a")
    with pytest.raises(LabelRangeError):
        parse_graph("3 1\n1 4")
    with pytest.raises(LabelRangeError):
        parse_graph("3 1\n0 2")


def test_serialize_format():
    g = Graph.from_edges(3, [(2, 3), (1, 2)])
    assert serialize_graph(g) == "3 2\n1 2\n2 3\n"
    assert serialize_graph(empty_graph(2)) == "2 0\n"


def test_roundtrip_exhaustive_small():
    for g in all_graphs(4):
        assert parse_graph(serialize_graph(g)) == g


@given(graphs(max_n=8))
def test_roundtrip_random(g):
    text = serialize_graph(g)
    assert parse_graph(text) == g
    assert serialize_graph(parse_graph(text)) == text


def test_bipartite_parse_and_serialize():
    bg = parse_bipartite("2 3 2\n1 3\n2 1")
    assert bg.edges() == [(1, 3), (2, 1)]
    assert serialize_bipartite(bg) == "2 3 2\n1 3\n2 1\n"
    with pytest.raises(LabelRangeError):
        parse_bipartite("2 3 1\n3 1")
    with pytest.raises(LabelRangeError):
        parse_bipartite("2 3 1\n1 4")
    with pytest.raises(DuplicateEdgeError):
        parse_bipartite("2 3 2\n1 1\n1 1")
    with pytest.raises(MalformedLineError):
        parse_bipartite("2 3\n")


@given(bip_graphs())
def test_bipartite_roundtrip(bg):
    assert parse_bipartite(serialize_bipartite(bg)) == bg


@given(bip_graphs())
def test_bipartite_embedding(bg):
    g = bg.as_graph()
    assert g.n == bg.nx + bg.ny
    assert g.m == bg.m
    for x, y in bg.edges():
        assert g.has_edge(x, bg.nx + y)


def test_bipartite_capacity():
    with pytest.raises(CapacityError):
        BipartiteGraph(65, 1, [0] * 65)
