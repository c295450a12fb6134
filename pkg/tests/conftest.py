import itertools
import random

import pytest

from geodtrans.graph import Graph


def random_graph(n, p, rng):
    return Graph(n, [e for e in itertools.combinations(range(n), 2) if rng.random() < p])


def brute_force_aut_order(graph):
    """Count adjacency-preserving permutations by backtracking on a fixed vertex order."""
    n = graph.order
    adj = [set(graph.neighbors(v)) for v in range(n)]
    deg = [len(a) for a in adj]
    image = [None] * n
    used = [False] * n
    count = 0

    def extend(i):
        nonlocal count
        if i == n:
            count += 1
            return
        for w in range(n):
            if used[w] or deg[w] != deg[i]:
                continue
            if all((image[j] in adj[w]) == (j in adj[i]) for j in range(i)):
                image[i] = w
                used[w] = True
                extend(i + 1)
                used[w] = False

    extend(0)
    return count


@pytest.fixture
def rng():
    return random.Random(20240601)


def petersen():
    from geodtrans.families import odd
    return odd(2)
