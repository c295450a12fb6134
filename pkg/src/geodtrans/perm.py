"""Permutations as image tuples, and permutation groups via Schreier-Sims.

A permutation ``g`` of degree ``n`` is a tuple with ``g[i]`` the image of
``i``.  Products act left to right: ``mul(g, h)`` applies ``g`` first.
"""

from __future__ import annotations

from collections import deque
from functools import cached_property
from math import prod
from typing import Iterable, Sequence

from .errors import GraphError

Perm = tuple


def identity(n: int) -> Perm:
    return tuple(range(n))


def mul(g: Perm, h: Perm) -> Perm:
    """Apply ``g`` then ``h``."""
    return tuple(h[x] for x in g)


def inverse(g: Perm) -> Perm:
    inv = [0] * len(g)
    for i, x in enumerate(g):
        inv[x] = i
    return tuple(inv)


def is_identity(g: Perm) -> bool:
    return all(i == x for i, x in enumerate(g))


def check_perm(g: Sequence[int]) -> Perm:
    g = tuple(g)
    if sorted(g) != list(range(len(g))):
        raise GraphError(f"not a permutation: {g!r}")
    return g


def from_cycles(n: int, *cycles: Sequence[int]) -> Perm:
    img = list(range(n))
    for c in cycles:
        for i, x in enumerate(c):
            img[x] = c[(i + 1) % len(c)]
    return check_perm(img)


def cycles(g: Perm) -> list[tuple[int, ...]]:
    seen = set()
    out = []
    for i in range(len(g)):
        if i in seen or g[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = g[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = g[j]
        out.append(tuple(cyc))
    return out


def format_perm(g: Perm) -> str:
    cs = cycles(g)
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs) or "()"


def perm_order(g: Perm) -> int:
    from math import lcm
    return lcm(*(len(c) for c in cycles(g))) if not is_identity(g) else 1


class _Level:
    __slots__ = ("point", "gens", "transversal", "inv_transversal", "orbit", "checked")

    def __init__(self, point: int, n: int):
        self.point = point
        self.gens: list[Perm] = []
        ident = identity(n)
        self.transversal = {point: ident}
        self.inv_transversal = {point: ident}
        self.orbit = [point]
        self.checked: set[tuple[int, int]] = set()

    def extend_orbit(self) -> None:
        """Close the orbit of the base point under ``gens``, keeping old transversal entries."""
        queue = deque(self.orbit)
        while queue:
            beta = queue.popleft()
            u = self.transversal[beta]
            for s in self.gens:
                img = s[beta]
                if img not in self.transversal:
                    t = mul(u, s)
                    self.transversal[img] = t
                    self.inv_transversal[img] = inverse(t)
                    self.orbit.append(img)
                    queue.append(img)


class PermGroup:
    """Group generated by permutations of one common degree.

    The base-and-strong-generating set is built on demand by the
    deterministic Schreier-Sims algorithm.  ``base`` forces a base prefix;
    further base points are the smallest points moved by a strong generator.
    """

    def __init__(self, generators: Iterable[Sequence[int]], degree: int | None = None,
                 base: Sequence[int] = ()):
        gens = [check_perm(g) for g in generators]
        degrees = {len(g) for g in gens}
        if degree is not None:
            degrees.add(degree)
        if len(degrees) > 1:
            raise GraphError(f"generators of mixed degree {sorted(degrees)}")
        if not degrees:
            raise GraphError("degree required for a group without generators")
        self.degree = degrees.pop()
        for b in base:
            if not 0 <= b < self.degree:
                raise GraphError(f"base point {b} out of range")
        self.generators = [g for g in gens if not is_identity(g)]
        self._base_prefix = tuple(base)

    def __repr__(self):
        return f"<PermGroup degree={self.degree} gens={len(self.generators)}>"

    # -- stabilizer chain ------------------------------------------------

    @cached_property
    def _chain(self) -> list[_Level]:
        n = self.degree
        levels: list[_Level] = []
        strong: list[Perm] = list(self.generators)

        def fixes_prefix(g, i):
            return all(g[levels[j].point] == levels[j].point for j in range(i))

        def new_level(point):
            levels.append(_Level(point, n))

        for b in self._base_prefix:
            if all(lv.point != b for lv in levels):
                new_level(b)
        for g in strong:
            if all(g[lv.point] == lv.point for lv in levels):
                new_level(next(x for x in range(n) if g[x] != x))
        for i, lv in enumerate(levels):
            lv.gens = [g for g in strong if fixes_prefix(g, i)]
            lv.extend_orbit()

        i = len(levels) - 1
        while i >= 0:
            lv = levels[i]
            restart = None
            for beta in list(lv.orbit):
                u = lv.transversal[beta]
                for k, s in enumerate(lv.gens):
                    if (beta, k) in lv.checked:
                        continue
                    img = s[beta]
                    h = mul(mul(u, s), lv.inv_transversal[img])
                    residue, j = self._strip(levels, h, i + 1)
                    lv.checked.add((beta, k))
                    if j < len(levels) or not is_identity(residue):
                        if j == len(levels):
                            new_level(next(x for x in range(n) if residue[x] != x))
                        for m in range(i + 1, j + 1):
                            levels[m].gens.append(residue)
                            levels[m].extend_orbit()
                        restart = j
                        break
                if restart is not None:
                    break
            if restart is not None:
                i = restart
            else:
                i -= 1
        return levels

    @staticmethod
    def _strip(levels, g, start=0):
        for j in range(start, len(levels)):
            lv = levels[j]
            beta = g[lv.point]
            if beta not in lv.transversal:
                return g, j
            g = mul(g, lv.inv_transversal[beta])
        return g, len(levels)

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lv.point for lv in self._chain)

    @property
    def transversal_sizes(self) -> tuple[int, ...]:
        return tuple(len(lv.orbit) for lv in self._chain)

    @property
    def strong_generators(self) -> list[Perm]:
        seen, out = set(), []
        for lv in self._chain:
            for g in lv.gens:
                if g not in seen:
                    seen.add(g)
                    out.append(g)
        for g in self.generators:
            if g not in seen:
                seen.add(g)
                out.append(g)
        return out

    @cached_property
    def order(self) -> int:
        return prod(self.transversal_sizes)

    def __len__(self):
        return self.order

    def __contains__(self, g) -> bool:
        g = tuple(g)
        if len(g) != self.degree:
            return False
        residue, j = self._strip(self._chain, g)
        return j == len(self._chain) and is_identity(residue)

    def is_trivial(self) -> bool:
        return not self.generators

    def elements(self):
        """Iterate over all group elements (desk-scale groups only)."""
        chain = self._chain

        def rec(j, acc):
            if j < 0:
                yield acc
                return
            for t in chain[j].transversal.values():
                yield from rec(j - 1, mul(acc, t))

        yield from rec(len(chain) - 1, identity(self.degree))

    def random_element(self, rng) -> Perm:
        g = identity(self.degree)
        for lv in reversed(self._chain):
            g = mul(g, lv.transversal[rng.choice(lv.orbit)])
        return g


def schreier_sims(generators: Sequence[Sequence[int]], degree: int | None = None) -> PermGroup:
    """Build the group and its stabilizer chain eagerly."""
    group = PermGroup(generators, degree)
    group._chain
    return group


def orbit(group: PermGroup, seed: Sequence[int]) -> list[tuple[int, ...]]:
    """Orbit of a tuple under coordinatewise action, in breadth-first order."""
    seed = tuple(seed)
    for x in seed:
        if not 0 <= x < group.degree:
            raise GraphError(f"point {x} out of range")
    seen = {seed}
    out = [seed]
    queue = deque([seed])
    gens = group.generators
    while queue:
        t = queue.popleft()
        for g in gens:
            img = tuple(g[x] for x in t)
            if img not in seen:
                seen.add(img)
                out.append(img)
                queue.append(img)
    return out


def point_orbits(group: PermGroup, points: Iterable[int] | None = None) -> list[list[int]]:
    """Orbits on points (union-find over generators), each sorted, ordered by minimum."""
    n = group.degree
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in group.generators:
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    cells: dict[int, list[int]] = {}
    for x in (range(n) if points is None else sorted(points)):
        cells.setdefault(find(x), []).append(x)
    return sorted(cells.values())


def stabilizer(group: PermGroup, points: Sequence[int]) -> PermGroup:
    """Pointwise stabilizer of ``points`` with its own chain."""
    points = tuple(points)
    for x in points:
        if not 0 <= x < group.degree:
            raise GraphError(f"point {x} out of range")
    rebased = PermGroup(group.strong_generators, group.degree, base=points)
    chain = rebased._chain
    k = len(set(points))
    # levels past the prefix form a stabilizer chain of the pointwise stabilizer
    tail = chain[k:]
    stab = PermGroup(tail[0].gens if tail else [], group.degree)
    stab.__dict__["_chain"] = tail
    return stab


def regular_subgroup_to_cayley(graph, subgroup: PermGroup, base_vertex: int = 0):
    """Cayley-graph description of ``graph`` from a regular subgroup of its automorphisms.

    Returns ``(elements, connection_set)`` where ``elements[v]`` is the unique
    subgroup element sending ``base_vertex`` to ``v`` and ``connection_set`` is
    the sorted list of vertex labels of the neighbours of ``base_vertex``.
    Returns ``None`` if the subgroup is not regular.
    """
    if subgroup.degree != graph.order:
        raise GraphError("subgroup degree differs from graph order")
    for g in subgroup.generators:
        if any(not graph.has_edge(g[u], g[v]) for u, v in graph.edges()):
            raise GraphError("subgroup is not contained in the automorphism group")
    if subgroup.order != graph.order:
        return None
    orb = orbit(subgroup, (base_vertex,))
    if len(orb) != graph.order:
        return None
    # regular: the transversal of base_vertex is the whole group
    rebased = PermGroup(subgroup.generators, subgroup.degree, base=(base_vertex,))
    level = rebased._chain[0]
    elements = {v: level.transversal[v] for v in range(graph.order)}
    conn = sorted(graph.adjacency[base_vertex])
    conn_set = set(conn)
    if base_vertex in conn_set:
        return None
    for s in conn:
        inv_label = inverse(elements[s])[base_vertex]
        if inv_label not in conn_set:
            return None
    return elements, conn
