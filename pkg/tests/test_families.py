import itertools

import pytest

from geodtrans.autiso import are_isomorphic, automorphism_group, certificate
from geodtrans.errors import GraphError, ParseError
from geodtrans.families import (DATA_FILES, FamilySpec, build, circulant, complete_multipartite,
                                data_path, hamming, johnson, load_graph, odd, paley, parse_spec,
                                pg2_incidence)
from geodtrans.graph import diameter, girth


def test_johnson_distance_identity():
    g = johnson(6, 3)
    assert g.order == 20 and g.valency == 9 and diameter(g) == 3
    for u, v in itertools.combinations(range(g.order), 2):
        common = len(set(g.label(u)) & set(g.label(v)))
        assert g.distance(u, v) == 3 - common


def test_hamming_distance_identity():
    g = hamming(3, 3)
    assert g.order == 27 and g.valency == 6
    for u, v in itertools.combinations(range(g.order), 2):
        differ = sum(a != b for a, b in zip(g.label(u), g.label(v)))
        assert g.distance(u, v) == differ


def test_odd_distance_identity():
    k = 3
    g = odd(k)
    assert g.order == 35 and g.valency == k + 1 and diameter(g) == k
    for u, v in itertools.combinations(range(g.order), 2):
        m = len(set(g.label(u)) & set(g.label(v)))
        d = g.distance(u, v)
        if d % 2:
            assert m == (d - 1) // 2
        else:
            assert m == k - d // 2


def test_labels_are_one_indexed_and_lexicographic():
    g = johnson(5, 2)
    assert g.label(0) == (1, 2) and g.label(9) == (4, 5)
    assert hamming(2, 3).label(5) == (1, 2)


@pytest.mark.parametrize("q", [5, 9, 13, 17, 25])
def test_paley_basics(q):
    spec = f"paley:{q}"
    g = build(spec)
    assert g.order == q and g.valency == (q - 1) // 2
    assert are_isomorphic(g, g.complement()) is not None


def test_paley_rejects_bad_q():
    with pytest.raises(GraphError):
        paley(7)
    with pytest.raises(GraphError):
        build("paley:15")


def test_multipartite():
    g = complete_multipartite(3, 2)
    assert g.order == 6 and g.valency == 4 and not g.has_edge(0, 1) and g.has_edge(1, 2)


def test_circulant_closes_under_negation():
    g = circulant(13, [1, 3, 4])
    assert g.valency == 6 and g.name == "circulant:13;1,3,4,9,10,12"
    with pytest.raises(GraphError):
        circulant(5, [0])


@pytest.mark.parametrize("q,order,girth_,aut", [(2, 14, 6, 336), (3, 26, 6, 11232)])
def test_projective_plane_incidence(q, order, girth_, aut):
    g = pg2_incidence(q)
    assert g.order == order and g.valency == q + 1
    assert girth(g) == girth_ and diameter(g) == 3
    assert automorphism_group(g).order == aut


@pytest.mark.parametrize("name", sorted(DATA_FILES))
def test_data_files(name):
    g = load_graph(name)
    order, valency, diam = DATA_FILES[name]
    assert (g.order, g.valency, diameter(g)) == (order, valency, diam)


def test_data_file_certificates_are_recorded():
    # the provenance header records the canonical certificate
    for name in DATA_FILES:
        with open(data_path(name)) as fh:
            header = fh.read()
        assert certificate(load_graph(name)) in header


def test_reserved_name_validation(tmp_path):
    bad = tmp_path / "foster.edges"
    bad.write_text("3\n0 1\n1 2\n0 2\n")
    with pytest.raises(ParseError):
        load_graph(bad)
    ok = tmp_path / "triangle.edges"
    ok.write_text("3\n0 1\n1 2\n0 2\n")
    assert load_graph(ok).valency == 2


@pytest.mark.parametrize("text,family,params", [
    ("johnson:6,3", "johnson", (6, 3)),
    ("J:6,3", "johnson", (6, 3)),
    ("paley:13", "paley", (13, 1)),
    ("paley:3^2", "paley", (3, 2)),
    ("paley:9", "paley", (3, 2)),
    ("taylor:13", "taylor", (13,)),
    ("taylor:13,1", "taylor", (13, 1)),
    ("kmb:3,2", "complete-multipartite", (3, 2)),
    ("pg2:2", "pg2-incidence", (2,)),
    ("circulant:13;1,3,4", "circulant", (13, (1, 3, 4))),
])
def test_parse_spec(text, family, params):
    spec = parse_spec(text)
    assert spec.family == family and spec.params == params
    assert parse_spec(str(spec)) == spec


def test_parse_complement_and_file():
    spec = parse_spec("complement(paley:13)")
    assert spec.complement and str(spec) == "complement(paley:13)"
    assert parse_spec("file:foster.edges") == FamilySpec("file", (), "foster.edges")


@pytest.mark.parametrize("bad", ["", "nope:3", "johnson", "johnson:a,b", "johnson:1,2,3",
                                 "paley:x", "file:"])
def test_parse_spec_errors(bad):
    with pytest.raises(GraphError):
        parse_spec(bad)


@pytest.mark.parametrize("spec", ["johnson:6,3", "paley:3^2", "taylor:13", "pg2:3",
                                  "circulant:13;1,3,4", "odd:3"])
def test_constructors_are_deterministic(spec):
    assert build(spec).edges() == build(spec).edges()
