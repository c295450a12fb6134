import itertools
import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from geodtrans.autiso import (are_isomorphic, automorphism_group, canonical_form, certificate,
                              refine)
from geodtrans.errors import GraphError, ScaleError
from geodtrans.families import build, complete, cycle, hamming, johnson, odd, paley
from geodtrans.graph import Graph

from conftest import brute_force_aut_order, random_graph


def atlas_connected(max_n=6):
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() <= max_n and nx.is_connected(h):
            yield Graph(h.number_of_nodes(), h.edges())


def is_equitable(graph, cells):
    for a in cells:
        for b in cells:
            counts = {len(graph.neighbors(v) & set(b)) for v in a}
            if len(counts) > 1:
                return False
    return True


def test_atlas_orders_match_brute_force():
    graphs = list(atlas_connected())
    assert len(graphs) == 143
    for g in graphs:
        assert automorphism_group(g).order == brute_force_aut_order(g), g.edges()


def test_random_orders_match_brute_force():
    rng = random.Random(7)
    for i in range(50):
        n = 7 + i % 2
        g = random_graph(n, rng.choice([0.3, 0.5, 0.7]), rng)
        assert automorphism_group(g).order == brute_force_aut_order(g), g.edges()


def test_generators_are_automorphisms():
    g = paley(13)
    for p in automorphism_group(g).generators:
        assert all(g.has_edge(p[u], p[v]) for u, v in g.edges())


@pytest.mark.parametrize("spec,order", [
    ("odd:2", 120), ("complete:5", 120), ("johnson:6,3", 1440), ("hamming:3,3", 1296),
    ("odd:3", 5040), ("kmb:3,2", 48), ("paley:13", 78), ("paley:3^2", 72),
    ("pg2:2", 336), ("cycle:9", 18), ("complete-bipartite:3,4", 144),
])
def test_family_orders(spec, order):
    assert automorphism_group(build(spec)).order == order


def test_empty_and_edgeless():
    assert automorphism_group(Graph(4)).order == 24
    assert automorphism_group(Graph(1)).order == 1


def test_refine_is_equitable():
    g = odd(2)
    part = refine(g, [[0], list(range(1, 10))])
    assert is_equitable(g, part.cells)
    assert [len(c) for c in part.cells] == [1, 6, 3]
    with pytest.raises(GraphError):
        refine(g, [[0, 1]])


@pytest.mark.parametrize("spec", ["odd:2", "paley:13", "johnson:6,3", "hamming:3,3",
                                  "taylor:13", "pg2:3"])
def test_canonical_form_invariant_under_relabeling(spec):
    g = build(spec)
    cert = certificate(g)
    rng = random.Random(spec)
    for _ in range(20):
        perm = list(range(g.order))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert certificate(h) == cert
        m = are_isomorphic(g, h)
        assert m is not None and all(h.has_edge(m[u], m[v]) for u, v in g.edges())


def test_canonical_relabeling_gives_canonical_edges():
    g = johnson(5, 2)
    cf = canonical_form(g)
    assert sorted(tuple(sorted((cf.relabeling[u], cf.relabeling[v]))) for u, v in g.edges()) \
        == list(cf.edges)
    assert len(cf.certificate) == 64


def test_isomorphism_against_networkx():
    rng = random.Random(11)
    graphs = [random_graph(7, 0.45, rng) for _ in range(20)]
    for a, b in itertools.combinations(graphs[:20], 2):
        na, nb = nx.Graph(), nx.Graph()
        na.add_nodes_from(range(7))
        na.add_edges_from(a.edges())
        nb.add_nodes_from(range(7))
        nb.add_edges_from(b.edges())
        assert (are_isomorphic(a, b) is not None) == nx.is_isomorphic(na, nb)


def test_cospectral_like_pairs_distinguished():
    # same degree sequence, different structure
    assert are_isomorphic(cycle(6), Graph(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])) is None
    assert are_isomorphic(odd(2), johnson(5, 2)) is None
    assert are_isomorphic(odd(2), johnson(5, 2).complement()) is not None


def test_scale_refusal():
    with pytest.raises(ScaleError):
        automorphism_group(complete(201))


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 8), st.floats(0.1, 0.9), st.randoms(use_true_random=False))
def test_certificate_property(n, p, rnd):
    g = random_graph(n, p, rnd)
    perm = list(range(n))
    rnd.shuffle(perm)
    h = g.relabel(perm)
    assert certificate(g) == certificate(h)
    assert automorphism_group(g).order == automorphism_group(h).order
