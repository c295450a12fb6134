"""Automorphism groups, canonical labeling and isomorphism by partition refinement.

The search tree is the usual individualization-refinement tree: a node is an
equitable ordered partition, a child individualizes one vertex of the first
largest non-singleton cell and refines again.  Cells are addressed by their
start position in the vertex array, which keeps every choice independent of
the input labeling.
"""

from __future__ import annotations

import hashlib
import weakref
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ScaleError
from .graph import Graph
from .perm import PermGroup, stabilizer

MAX_ORDER = 200

_AUT_CACHE: "weakref.WeakKeyDictionary[Graph, PermGroup]" = weakref.WeakKeyDictionary()


@dataclass(frozen=True)
class OrderedPartition:
    cells: tuple[tuple[int, ...], ...]

    @property
    def is_discrete(self) -> bool:
        return all(len(c) == 1 for c in self.cells)

    def __len__(self):
        return len(self.cells)


@dataclass(frozen=True)
class CanonicalForm:
    relabeling: tuple[int, ...]  # vertex -> canonical position
    edges: tuple[tuple[int, int], ...]
    certificate: str


class _Node:
    """Ordered partition stored as a vertex array plus cell boundaries."""

    __slots__ = ("lab", "start", "end")

    def __init__(self, lab, start, end):
        self.lab = lab
        self.start = start  # vertex -> start position of its cell
        self.end = end  # cell start -> cell end (exclusive)

    @classmethod
    def from_cells(cls, cells):
        lab, start, end = [], {}, {}
        for cell in cells:
            s = len(lab)
            lab.extend(cell)
            end[s] = len(lab)
            for v in cell:
                start[v] = s
        n = len(lab)
        return cls(lab, [start[v] for v in range(n)], end)

    def copy(self):
        return _Node(self.lab[:], self.start[:], dict(self.end))

    def is_discrete(self):
        return len(self.end) == len(self.lab)

    def cells(self):
        return [tuple(self.lab[s:self.end[s]]) for s in sorted(self.end)]

    def target_cell(self) -> int:
        """Start of the first largest non-singleton cell."""
        best, best_size = -1, 1
        for s in sorted(self.end):
            size = self.end[s] - s
            if size > best_size:
                best, best_size = s, size
        return best

    def individualize(self, v):
        c = self.start[v]
        e = self.end[c]
        lab = self.lab
        i = lab.index(v, c, e)
        lab[c], lab[i] = lab[i], lab[c]
        self.end[c] = c + 1
        if e > c + 1:
            self.end[c + 1] = e
            for u in lab[c + 1:e]:
                self.start[u] = c + 1
        return c


def _refine(adj, node: _Node, queue: Iterable[int]) -> list:
    """Refine ``node`` in place to an equitable partition; returns the split trace."""
    lab, start, end = node.lab, node.start, node.end
    n = len(lab)
    queue = deque(queue)
    queued = set(queue)
    trace = []
    while queue and len(end) < n:
        s = queue.popleft()
        queued.discard(s)
        counts: dict[int, int] = {}
        for v in lab[s:end[s]]:
            for u in adj[v]:
                counts[u] = counts.get(u, 0) + 1
        for c in sorted({start[u] for u in counts}):
            e = end[c]
            if e - c == 1:
                continue
            cell = lab[c:e]
            keys = [counts.get(v, 0) for v in cell]
            if min(keys) == max(keys):
                continue
            pairs = sorted(zip(keys, cell))
            lab[c:e] = [v for _, v in pairs]
            frags = []
            i = 0
            while i < len(pairs):
                j = i
                k = pairs[i][0]
                while j < len(pairs) and pairs[j][0] == k:
                    j += 1
                frags.append((c + i, c + j, k))
                i = j
            for a, b, _ in frags:
                end[a] = b
                for v in lab[a:b]:
                    start[v] = a
            trace.append((s, c, tuple((k, b - a) for a, b, k in frags)))
            if c in queued:
                new = [a for a, _, _ in frags[1:]]
            else:
                largest = max(frags, key=lambda f: (f[1] - f[0], -f[0]))
                new = [a for a, _, _ in frags if a != largest[0]]
            for a in new:
                if a not in queued:
                    queued.add(a)
                    queue.append(a)
    return trace


def _check_scale(graph: Graph) -> None:
    if graph.order > MAX_ORDER:
        raise ScaleError(f"graph order {graph.order} exceeds the search bound {MAX_ORDER}")


def _root(graph: Graph, partition=None) -> tuple[_Node, list]:
    if partition is None:
        by_degree: dict[int, list[int]] = {}
        for v in range(graph.order):
            by_degree.setdefault(graph.degree(v), []).append(v)
        cells = [by_degree[d] for d in sorted(by_degree)]
    else:
        cells = [list(c) for c in partition]
    node = _Node.from_cells(cells)
    trace = _refine(graph.adjacency, node, sorted(node.end))
    return node, trace


def refine(graph: Graph, partition: Sequence[Iterable[int]] | OrderedPartition) -> OrderedPartition:
    """Coarsest equitable refinement of an ordered partition."""
    cells = partition.cells if isinstance(partition, OrderedPartition) else partition
    cells = [list(c) for c in cells]
    flat = sorted(v for c in cells for v in c)
    if flat != list(range(graph.order)) or any(not c for c in cells):
        from .errors import GraphError
        raise GraphError("not an ordered partition of the vertex set")
    node, _ = _root(graph, cells)
    return OrderedPartition(tuple(tuple(c) for c in node.cells()))


def _is_automorphism(graph: Graph, perm) -> bool:
    has_edge = graph.has_edge
    return all(has_edge(perm[u], perm[v]) for u, v in graph.edges())


def automorphism_group(graph: Graph) -> PermGroup:
    """Generators of the full automorphism group, as a ``PermGroup``."""
    _check_scale(graph)
    cached = _AUT_CACHE.get(graph)
    if cached is not None:
        return cached
    n = graph.order
    adj = graph.adjacency
    root, root_trace = _root(graph)

    # first path: always individualize the smallest vertex of the target cell
    path = [root]
    traces = [root_trace]
    targets, choices = [], []
    node = root
    while not node.is_discrete():
        t = node.target_cell()
        b = min(node.lab[t:node.end[t]])
        child = node.copy()
        c = child.individualize(b)
        traces.append(_refine(adj, child, [c]))
        targets.append(t)
        choices.append(b)
        path.append(child)
        node = child
    leaf0 = node.lab

    def search(parent: _Node, level: int, w: int):
        child = parent.copy()
        c = child.individualize(w)
        if _refine(adj, child, [c]) != traces[level + 1]:
            return None
        if child.is_discrete():
            perm = [0] * n
            for a, b in zip(leaf0, child.lab):
                perm[a] = b
            return tuple(perm) if _is_automorphism(graph, perm) else None
        t = targets[level + 1]
        for x in sorted(child.lab[t:child.end[t]]):
            found = search(child, level + 1, x)
            if found:
                return found
        return None

    gens: list[tuple[int, ...]] = []
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def absorb(g):
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)

    for level in reversed(range(len(targets))):
        node = path[level]
        t, b = targets[level], choices[level]
        failed: list[int] = []
        # generators found so far all fix choices[:level]
        for w in sorted(node.lab[t:node.end[t]]):
            if find(w) == find(b) or any(find(w) == find(f) for f in failed):
                continue
            g = search(node, level, w)
            if g is None:
                failed.append(w)
            else:
                gens.append(g)
                absorb(g)
    group = PermGroup(gens, n)
    _AUT_CACHE[graph] = group
    return group


def canonical_form(graph: Graph, group: PermGroup | None = None) -> CanonicalForm:
    """Canonical relabeling: the leaf with least (trace sequence, edge list).

    ``group`` must be a subgroup of the automorphism group; it is only used
    to skip automorphic branches.
    """
    _check_scale(graph)
    if group is None:
        group = automorphism_group(graph)
    n = graph.order
    adj = graph.adjacency
    root, root_trace = _root(graph)
    stabs: dict[tuple, PermGroup] = {(): group}

    def stab(path):
        if path not in stabs:
            stabs[path] = stabilizer(stab(path[:-1]), [path[-1]])
        return stabs[path]

    best = [None]  # (invariants, edges, lab)

    def leaf_edges(lab):
        pos = [0] * n
        for i, v in enumerate(lab):
            pos[v] = i
        return tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in graph.edges()))

    def dfs(node: _Node, path: tuple, invs: list):
        if best[0] is not None:
            prefix = best[0][0][:len(invs)]
            if invs > prefix:
                return
        if node.is_discrete():
            key = (invs, leaf_edges(node.lab))
            if best[0] is None or key < best[0][:2]:
                best[0] = (key[0], key[1], node.lab[:])
            return
        t = node.target_cell()
        cell = set(node.lab[t:node.end[t]])
        g = stab(path)
        reps = []
        seen = set()
        for w in sorted(cell):
            if w in seen:
                continue
            reps.append(w)
            orb = {w}
            frontier = [w]
            while frontier:
                x = frontier.pop()
                for h in g.generators:
                    y = h[x]
                    if y not in orb:
                        orb.add(y)
                        frontier.append(y)
            seen |= orb
        for w in reps:
            child = node.copy()
            c = child.individualize(w)
            tr = _refine(adj, child, [c])
            dfs(child, path + (w,), invs + [tr])

    dfs(root, (), [root_trace])
    _, edges, lab = best[0]
    relabel = [0] * n
    for i, v in enumerate(lab):
        relabel[v] = i
    digest = hashlib.sha256(f"{n};".encode() + ";".join(f"{u},{v}" for u, v in edges).encode())
    return CanonicalForm(tuple(relabel), edges, digest.hexdigest())


def certificate(graph: Graph) -> str:
    return canonical_form(graph).certificate


def are_isomorphic(g1: Graph, g2: Graph) -> dict[int, int] | None:
    """An adjacency-preserving bijection ``g1 -> g2``, or ``None``."""
    _check_scale(g1)
    _check_scale(g2)
    if g1.order != g2.order or g1.size != g2.size:
        return None
    if sorted(map(len, g1.adjacency)) != sorted(map(len, g2.adjacency)):
        return None
    c1, c2 = canonical_form(g1), canonical_form(g2)
    if c1.certificate != c2.certificate or c1.edges != c2.edges:
        return None
    back = [0] * g2.order
    for v, p in enumerate(c2.relabeling):
        back[p] = v
    mapping = {v: back[c1.relabeling[v]] for v in range(g1.order)}
    if any(not g2.has_edge(mapping[u], mapping[v]) for u, v in g1.edges()):
        raise AssertionError("canonical forms agree but the induced map is not an isomorphism")
    return mapping
