import io
import itertools
import math
import random
import warnings

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from geodtrans.errors import DisconnectedError, GraphError, ParseError
from geodtrans.families import complete, complete_bipartite, cycle, hamming, johnson, odd
from geodtrans.graph import (INF, Graph, VertexPartition, antipodal_fibres, count_s_arcs,
                             count_s_geodesics, diameter, distance_graph, enumerate_s_arcs,
                             enumerate_s_geodesics, first_s_arc, format_edge_list, girth,
                             local_graph, metrics, quotient_graph, read_edge_list,
                             write_edge_list)

from conftest import random_graph


def floyd(graph):
    n = graph.order
    d = [[0 if i == j else (1 if graph.has_edge(i, j) else INF) for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][k] + d[k][j] < d[i][j]:
                    d[i][j] = d[i][k] + d[k][j]
    return d


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.order))
    h.add_edges_from(g.edges())
    return h


def test_graph_rejects_loops_and_bad_vertices():
    with pytest.raises(GraphError):
        Graph(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])


def test_basic_queries():
    g = cycle(5)
    assert g.size == 5 and g.valency == 2
    assert g.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert g.has_edge(4, 0) and not g.has_edge(0, 2)
    assert Graph(3, [(0, 1)]).valency is None


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_bfs_matches_floyd(g):
    assert [list(r) for r in g.distances] == floyd(g)


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_girth_matches_networkx(g):
    ours = girth(g)
    theirs = nx.girth(to_nx(g))
    assert ours == theirs or (ours == INF and math.isinf(theirs))


def test_known_metrics():
    assert metrics(odd(2)) == (5, 2, 3, True)
    assert metrics(complete(4)).girth == 3
    assert girth(hamming(3, 2)) == 4
    assert girth(odd(3)) == 6
    assert girth(Graph(4, [(0, 1), (1, 2), (2, 3)])) == INF


def test_diameter_disconnected():
    g = Graph(4, [(0, 1), (2, 3)])
    with pytest.raises(DisconnectedError):
        diameter(g)
    assert metrics(g).diameter is None and not metrics(g).connected


def brute_arcs(g, s):
    out = []
    for walk in itertools.product(range(g.order), repeat=s + 1):
        if all(g.has_edge(walk[i], walk[i + 1]) for i in range(s)) and \
                all(walk[i] != walk[i + 2] for i in range(s - 1)):
            out.append(walk)
    return out


def brute_geodesics(g, s):
    return [w for w in brute_arcs(g, s) if g.distance(w[0], w[-1]) == s]


@pytest.mark.parametrize("g", [odd(2), complete(4), hamming(3, 2), cycle(6),
                               complete_bipartite(2, 3)], ids=lambda g: g.name)
@pytest.mark.parametrize("s", [1, 2, 3])
def test_arc_and_geodesic_enumeration_against_brute_force(g, s):
    arcs = brute_arcs(g, s)
    assert enumerate_s_arcs(g, s) == sorted(arcs)
    assert count_s_arcs(g, s) == len(arcs)
    assert first_s_arc(g, s) == (min(arcs) if arcs else None)
    if s <= diameter(g):
        geo = brute_geodesics(g, s)
        assert enumerate_s_geodesics(g, s) == sorted(geo)
        assert count_s_geodesics(g, s) == len(geo)


def test_arc_length_must_be_positive():
    with pytest.raises(GraphError):
        enumerate_s_arcs(odd(2), 0)


def test_arc_count_formula_regular():
    # k-regular: n k (k-1)^(s-1) s-arcs
    g = odd(2)
    for s in range(1, 7):
        assert count_s_arcs(g, s) == 10 * 3 * 2 ** (s - 1)


def test_geodesics_beyond_diameter_warn():
    with warnings.catch_warnings(record=True) as rec:
        warnings.simplefilter("always")
        assert enumerate_s_geodesics(odd(2), 3) == []
    assert rec


def test_local_and_distance_graph():
    lg = local_graph(johnson(5, 2), 0)
    assert lg.order == 6 and lg.valency == 3
    d2 = distance_graph(odd(2), 2)
    assert d2.valency == 6
    with pytest.raises(GraphError):
        distance_graph(odd(2), 3)


def test_antipodal_fibres_and_quotient():
    cube = hamming(3, 2)
    fib = antipodal_fibres(cube)
    assert fib is not None and {len(c) for c in fib} == {2} and len(fib) == 4
    q, cover = quotient_graph(cube, fib)
    assert q.order == 4 and q.size == 6 and cover
    assert antipodal_fibres(odd(2)) is None
    assert antipodal_fibres(complete(5)) is None


def test_cycle_fibres():
    fib = antipodal_fibres(cycle(6))
    assert fib is not None and len(fib) == 3


def test_vertex_partition_validation():
    with pytest.raises(GraphError):
        VertexPartition([[0, 1], [1, 2]])
    p = VertexPartition([[2, 0], [1]])
    assert p.cell_of(2) == p.cell_of(0) != p.cell_of(1)


def test_edge_list_round_trip(tmp_path):
    g = johnson(5, 2)
    path = tmp_path / "j.edges"
    write_edge_list(g, path, ["johnson"])
    h = read_edge_list(path)
    assert h == g


@pytest.mark.parametrize("text,line", [
    ("3\n0 1\n1 1\n", 3),
    ("3\n0 1\n0 1\n", 3),
    ("3\n0 5\n", 2),
    ("x\n", 1),
    ("3\n0 1 2\n", 2),
])
def test_edge_list_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        read_edge_list(io.StringIO(text))
    assert exc.value.lineno == line


def test_relabel_preserves_structure(rng):
    g = odd(2)
    perm = list(range(10))
    rng.shuffle(perm)
    h = g.relabel(perm)
    assert all(h.has_edge(perm[u], perm[v]) for u, v in g.edges())


@settings(max_examples=40, deadline=None)
@given(graphs(max_n=8))
def test_complement_involution(g):
    assert g.complement().complement() == g
    assert g.size + g.complement().size == g.order * (g.order - 1) // 2
