import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from geodtrans.errors import GraphError
from geodtrans.families import circulant, odd, paley
from geodtrans.autiso import automorphism_group
from geodtrans.perm import (PermGroup, check_perm, cycles, from_cycles, identity, inverse,
                            mul, orbit, perm_order, point_orbits, regular_subgroup_to_cayley,
                            stabilizer)


def closure(gens, n):
    """Oracle: all products of generators, by breadth-first multiplication."""
    e = identity(n)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def test_mul_applies_left_first():
    g = from_cycles(3, (0, 1))
    h = from_cycles(3, (1, 2))
    assert mul(g, h)[0] == h[g[0]] == 2


def test_cycles_and_order():
    g = from_cycles(6, (0, 1, 2), (3, 4))
    assert cycles(g) == [(0, 1, 2), (3, 4)]
    assert perm_order(g) == 6
    assert mul(g, inverse(g)) == identity(6)
    with pytest.raises(ValueError):
        check_perm([0, 0, 1])


@pytest.mark.parametrize("gens,n,order", [
    ([from_cycles(4, (0, 1)), from_cycles(4, (0, 1, 2, 3))], 4, 24),
    ([from_cycles(8, (0, 1, 2, 3, 4, 5, 6, 7)), from_cycles(8, (1, 7), (2, 6), (3, 5))], 8, 16),
    ([from_cycles(8, (0, 1, 2)), from_cycles(8, (1, 2, 3, 4, 5, 6, 7))], 8, 20160),
    ([from_cycles(8, (0, 1)), from_cycles(8, (0, 1, 2, 3, 4, 5, 6, 7))], 8, 40320),
    ([], 5, 1),
])
def test_known_orders(gens, n, order):
    assert PermGroup(gens, n).order == order


@st.composite
def small_groups(draw):
    n = draw(st.integers(2, 6))
    k = draw(st.integers(1, 3))
    gens = [tuple(draw(st.permutations(range(n)))) for _ in range(k)]
    return gens, n


@settings(max_examples=60, deadline=None)
@given(small_groups())
def test_schreier_sims_matches_closure(data):
    gens, n = data
    G = PermGroup(gens, n)
    elems = closure(gens, n)
    assert G.order == len(elems)
    assert set(G.elements()) == elems
    for p in itertools.permutations(range(n)):
        assert (p in G) == (p in elems)


@settings(max_examples=40, deadline=None)
@given(small_groups(), st.data())
def test_stabilizer_matches_filter(data, draw):
    gens, n = data
    pts = draw.draw(st.lists(st.integers(0, n - 1), unique=True, max_size=2))
    G = PermGroup(gens, n)
    S = stabilizer(G, pts)
    expected = {g for g in closure(gens, n) if all(g[x] == x for x in pts)}
    assert S.order == len(expected)
    assert set(S.elements()) == expected


def test_stabilizer_of_s8():
    G = PermGroup([from_cycles(8, (0, 1)), from_cycles(8, tuple(range(8)))], 8)
    assert stabilizer(G, [0, 1]).order == 720


def test_orbits():
    G = PermGroup([from_cycles(6, (0, 1, 2)), from_cycles(6, (3, 4))], 6)
    assert point_orbits(G) == [[0, 1, 2], [3, 4], [5]]
    assert len(orbit(G, (0, 3))) == 6


def test_random_element_is_member():
    G = PermGroup([from_cycles(7, (0, 1)), from_cycles(7, tuple(range(7)))], 7)
    rng = random.Random(3)
    for _ in range(20):
        assert G.random_element(rng) in G


def test_paley_cayley_connection_set():
    g = paley(13)
    translations = PermGroup([tuple((v + 1) % 13 for v in range(13))], 13)
    elements, conn = regular_subgroup_to_cayley(g, translations)
    assert conn == [1, 3, 4, 9, 10, 12]
    assert len(elements) == 13


def test_non_automorphism_rejected():
    g = circulant(7, [1])
    with pytest.raises(GraphError):
        regular_subgroup_to_cayley(g, PermGroup([from_cycles(7, (0, 1))], 7))


def test_non_regular_returns_none():
    g = odd(2)
    A = automorphism_group(g)
    assert regular_subgroup_to_cayley(g, A) is None


def test_petersen_has_no_regular_subgroup():
    # every group of order 10 contains elements of orders 5 and 2 that generate it
    g = odd(2)
    elems = list(automorphism_group(g).elements())
    fives = [x for x in elems if perm_order(x) == 5]
    twos = [x for x in elems if perm_order(x) == 2]
    found = 0
    for x in fives:
        for y in twos:
            H = closure([x, y], 10)
            if len(H) == 10:
                found += 1
                assert regular_subgroup_to_cayley(g, PermGroup([x, y], 10)) is None
    assert found > 0  # D5 subgroups exist, none regular
