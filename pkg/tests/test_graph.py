import io

import networkx as nx
import pytest
from hypothesis import given, settings

from dmcs import (
    UNREACHABLE,
    Graph,
    articulation_nodes,
    bfs_distances,
    connected_component_containing,
    induced_counts,
)
from dmcs.errors import (
    DisconnectedInputError,
    EdgeListParseError,
    QueriesDisconnectedError,
    SelfLoopError,
    UnknownNodeError,
)
from dmcs.graph import is_connected, write_edge_list

from conftest import from_text, graphs, path, to_nx, two_cliques_bridge


def test_load_path():
    g = from_text("0 1\n1 2")
    assert (g.n, g.m) == (3, 2)
    assert g.deg == [1, 2, 1]


def test_load_merges_duplicates():
    g = from_text("0 1\n1 0")
    assert (g.n, g.m) == (2, 1)


def test_load_weighted_duplicates_sum():
    g = from_text("0 1 2.5\n1 0 1.5\n1 2\n", weighted=True)
    assert g.m == 2
    assert g.edge_weight(0, 1) == 4.0
    assert g.edge_weight(2, 1) == 1.0
    assert g.w_G == 5.0


def test_load_rejects_self_loop():
    with pytest.raises(SelfLoopError, match="node 0"):
        from_text("0 0")


@pytest.mark.parametrize("text, lineno", [
    ("# c\n0 1\nfoo bar\n", 3),
    ("0 1 2 3\n", 1),
    ("0\n", 1),
])
def test_load_malformed_line(text, lineno):
    with pytest.raises(EdgeListParseError) as exc:
        from_text(text, weighted=True)
    assert exc.value.lineno == lineno


def test_load_negative_weight():
    with pytest.raises(EdgeListParseError, match="negative"):
        from_text("0 1 -1\n", weighted=True)


def test_load_remaps_sparse_ids():
    g = from_text("# comment\n100 7\n7 42\n\n")
    assert g.labels.tolist() == [7, 42, 100]
    assert g.internal(100) == 2
    assert g.external_ids([0, 1, 2]) == [7, 42, 100]
    with pytest.raises(UnknownNodeError):
        g.internal(5)


def test_load_empty():
    g = from_text("# nothing\n")
    assert (g.n, g.m) == (0, 0)


def test_graph_is_immutable():
    g = path(3)
    with pytest.raises(ValueError):
        g.degree[0] = 5


def test_write_round_trip():
    g = from_text("10 20\n20 30\n30 10\n30 40\n")
    buf = io.StringIO()
    write_edge_list(g, buf)
    h = from_text(buf.getvalue())
    assert h.labels.tolist() == g.labels.tolist()
    assert h.edges() == g.edges()


@given(graphs(max_n=12))
def test_degree_sum_and_symmetry(g):
    assert sum(g.deg) == 2 * g.m
    for u in range(g.n):
        assert g.adj[u] == sorted(g.adj[u])
        for v in g.adj[u]:
            assert u != v and g.has_edge(v, u)
    assert induced_counts(g, range(g.n)) == (g.m, float(g.m), 2 * g.m)


@given(graphs(max_n=12))
def test_label_map_is_bijection(g):
    text = "".join(f"{3 * u + 11} {3 * v + 11}\n" for u, v in g.edges())
    h = from_text(text)
    for v in range(h.n):
        assert h.internal(h.labels[v]) == v
    assert len(set(h.labels.tolist())) == h.n


# ---- components / distances


def test_component_path_plus_isolated():
    g = Graph(4, [(0, 1), (1, 2)])
    assert connected_component_containing(g, [0]) == (0, 1, 2)
    with pytest.raises(QueriesDisconnectedError):
        connected_component_containing(g, [0, 3])


def test_component_ring():
    from dmcs import ring_of_cliques
    g, _ = ring_of_cliques(3, 3)
    assert len(connected_component_containing(g, [4])) == 9


def test_bfs_single_source():
    di = bfs_distances(path(4), [0])
    assert di.dist == (0, 1, 2, 3)
    assert di.D == 3
    assert di.layers == ((0,), (1,), (2,), (3,))


def test_bfs_two_sources():
    di = bfs_distances(path(4), [0, 3])
    assert di.dist == (0, 1, 1, 0)
    assert di.D == 1
    assert di.layers == ((0, 3), (1, 2))


def test_bfs_unreachable():
    g = Graph(5, [(0, 1), (1, 2), (3, 4)])
    di = bfs_distances(g, [0])
    assert di.dist[3] == di.dist[4] == UNREACHABLE
    assert all(3 not in layer and 4 not in layer for layer in di.layers)


@given(graphs(max_n=12, connected=True))
def test_bfs_layer_invariants(g):
    di = bfs_distances(g, [0])
    assert di.dist == tuple(nx.single_source_shortest_path_length(to_nx(g), 0)[v] for v in range(g.n))
    for i, layer in enumerate(di.layers):
        for v in layer:
            assert di.dist[v] == i
            if i:
                assert any(di.dist[w] == i - 1 for w in g.adj[v])
    # dropping any subset of the outer layer keeps the inner layers connected
    inner = [v for v in range(g.n) if di.dist[v] < di.D]
    for v in di.layers[-1]:
        assert is_connected(g, inner + [v])
    assert is_connected(g, inner)


# ---- articulation


def test_articulation_small_cases():
    assert articulation_nodes(path(3), [0, 1, 2]) == {1}
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert articulation_nodes(c4, range(4)) == set()
    bowtie = Graph(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)])
    assert articulation_nodes(bowtie, range(5)) == {2}


def test_articulation_disconnected():
    with pytest.raises(DisconnectedInputError):
        articulation_nodes(path(4), [0, 1, 3])


def _brute_articulation(g, s):
    return {v for v in s if len(s) > 1 and not is_connected(g, [w for w in s if w != v])}


@settings(max_examples=200)
@given(graphs(min_n=1, max_n=10, connected=True))
def test_articulation_matches_brute_force(g):
    s = list(range(g.n))
    assert articulation_nodes(g, s) == _brute_articulation(g, s)
    assert articulation_nodes(g, s) == set(nx.articulation_points(to_nx(g)))


@given(graphs(min_n=2, max_n=10, connected=True))
def test_articulation_on_induced_subsets(g):
    # ball of radius 1 around node 0 is connected
    s = [0] + g.adj[0]
    assert articulation_nodes(g, s) == _brute_articulation(g, sorted(s))


def test_articulation_long_path_no_recursion_limit():
    g = path(20000)
    assert len(articulation_nodes(g, range(g.n))) == 19998


# ---- induced counts


def test_induced_counts_examples():
    g = two_cliques_bridge()
    assert induced_counts(g, range(4)) == (6, 6.0, 13)
    assert induced_counts(g, [5]) == (0, 0.0, 3)
    assert induced_counts(g, range(8)) == (13, 13.0, 26)


@given(graphs(max_n=10))
def test_induced_counts_match_networkx(g):
    s = list(range(0, g.n, 2))
    l, w, d = induced_counts(g, s)
    assert l == to_nx(g, s).number_of_edges()
    assert d == sum(g.deg[v] for v in s)
