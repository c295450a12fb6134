"""Immutable simple graphs, distance structure, arcs, geodesics and quotients.

Vertices are always the integers ``0 .. order-1``.  Semantic names (subsets,
field elements, cosets) live in an optional ``labels`` table so that group
actions stay plain integer permutations.
"""

from __future__ import annotations

import io
import math
import os
import warnings
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

from .errors import DisconnectedError, GraphError, ParseError

INF = math.inf


class Graph:
    """Finite undirected simple graph on ``range(order)``."""

    def __init__(self, order: int, edges: Iterable[tuple[int, int]] = (),
                 labels: Sequence | None = None, name: str | None = None):
        if order < 0:
            raise GraphError(f"negative order {order}")
        nbrs: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise GraphError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.order = order
        self.adjacency: tuple[tuple[int, ...], ...] = tuple(tuple(sorted(s)) for s in nbrs)
        self._nbrsets = tuple(frozenset(s) for s in nbrs)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != order:
                raise GraphError("label table length differs from order")
        self.labels = labels
        self.name = name

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]], labels=None, name=None) -> "Graph":
        adjacency = [list(a) for a in adjacency]
        n = len(adjacency)
        for u, row in enumerate(adjacency):
            for v in row:
                if not 0 <= v < n:
                    raise GraphError(f"neighbor {v} of {u} out of range")
                if u not in adjacency[v]:
                    raise GraphError(f"adjacency not symmetric at ({u}, {v})")
        return cls(n, ((u, v) for u, row in enumerate(adjacency) for v in row if u < v),
                   labels=labels, name=name)

    def __repr__(self):
        tag = f" {self.name!r}" if self.name else ""
        return f"<Graph{tag} order={self.order} size={self.size}>"

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.adjacency == other.adjacency

    def __hash__(self):
        return hash((self.order, self.adjacency))

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbrsets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbrsets[u]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def size(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.order) for v in self.adjacency[u] if u < v]

    @cached_property
    def valency(self) -> int | None:
        """Common degree if the graph is regular, else ``None``."""
        degs = {len(a) for a in self.adjacency}
        return degs.pop() if len(degs) == 1 else None

    def label(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.order:
            raise GraphError(f"vertex {v!r} out of range for order {self.order}")

    @cached_property
    def distances(self) -> tuple[tuple, ...]:
        return tuple(tuple(bfs_distances(self, v)) for v in range(self.order))

    def distance(self, u: int, v: int):
        return self.distances[u][v]

    @cached_property
    def is_connected(self) -> bool:
        return self.order > 0 and all(d != INF for d in bfs_distances(self, 0))

    def sphere(self, v: int, i: int) -> frozenset[int]:
        """The vertices at distance exactly ``i`` from ``v``."""
        row = self.distances[v]
        return frozenset(u for u in range(self.order) if row[u] == i)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph whose edges are the images ``(perm[u], perm[v])``."""
        if sorted(perm) != list(range(self.order)):
            raise GraphError("relabeling is not a permutation of the vertex set")
        labels = None
        if self.labels is not None:
            labels = [None] * self.order
            for v in range(self.order):
                labels[perm[v]] = self.labels[v]
        return Graph(self.order, ((perm[u], perm[v]) for u, v in self.edges()),
                     labels=labels, name=self.name)

    def complement(self) -> "Graph":
        n = self.order
        return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)
                         if v not in self._nbrsets[u]),
                     labels=self.labels,
                     name=f"complement({self.name})" if self.name else None)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph relabeled ``0..k-1``; labels map back to the original vertices."""
        verts = sorted(set(vertices))
        index = {v: i for i, v in enumerate(verts)}
        edges = [(index[u], index[w]) for u in verts for w in self.adjacency[u]
                 if w in index and u < w]
        return Graph(len(verts), edges, labels=verts)


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint non-empty cells covering ``range(order)``."""

    cells: tuple[tuple[int, ...], ...]

    def __init__(self, cells: Iterable[Iterable[int]], order: int | None = None):
        cells = tuple(tuple(sorted(c)) for c in cells)
        object.__setattr__(self, "cells", cells)
        seen: set[int] = set()
        for c in cells:
            if not c:
                raise GraphError("empty cell in partition")
            for v in c:
                if v in seen:
                    raise GraphError(f"vertex {v} occurs in two cells")
                seen.add(v)
        n = len(seen) if order is None else order
        if seen != set(range(n)):
            raise GraphError("partition cells do not cover the vertex set exactly")

    @property
    def order(self) -> int:
        return sum(len(c) for c in self.cells)

    def __len__(self):
        return len(self.cells)

    def __iter__(self):
        return iter(self.cells)

    @cached_property
    def cell_index(self) -> tuple[int, ...]:
        idx = [0] * self.order
        for i, c in enumerate(self.cells):
            for v in c:
                idx[v] = i
        return tuple(idx)

    def cell_of(self, v: int) -> int:
        return self.cell_index[v]


class Metrics(NamedTuple):
    girth: float  # INF for forests
    diameter: int | None  # None when disconnected
    valency: int | None  # None when irregular
    connected: bool


def bfs_distances(graph: Graph, source: int) -> list:
    graph.check_vertex(source)
    dist = [INF] * graph.order
    dist[source] = 0
    queue = deque([source])
    adj = graph.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] == INF:
                dist[w] = du
                queue.append(w)
    return dist


def girth(graph: Graph) -> float:
    """Length of a shortest cycle, by BFS from every vertex with parent exclusion."""
    best = INF
    adj = graph.adjacency
    for s in range(graph.order):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] >= best:
                break
            for w in adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def diameter(graph: Graph) -> int:
    if not graph.is_connected:
        raise DisconnectedError("diameter of a disconnected graph is undefined")
    return max(max(row) for row in graph.distances)


def metrics(graph: Graph) -> Metrics:
    if graph.order == 0:
        raise GraphError("metrics of the empty graph")
    conn = graph.is_connected
    return Metrics(girth(graph), diameter(graph) if conn else None, graph.valency, conn)


def _arc_walk(graph: Graph, s: int, prefix: list[int], out: list) -> None:
    if len(prefix) == s + 1:
        out.append(tuple(prefix))
        return
    last = prefix[-1]
    back = prefix[-2] if len(prefix) > 1 else -1
    for w in graph.adjacency[last]:
        if w != back:
            prefix.append(w)
            _arc_walk(graph, s, prefix, out)
            prefix.pop()


def enumerate_s_arcs(graph: Graph, s: int) -> list[tuple[int, ...]]:
    """All s-arcs (non-backtracking walks with ``s`` steps), lexicographic."""
    if s < 1:
        raise GraphError("s must be a positive integer")
    out: list = []
    for v in range(graph.order):
        _arc_walk(graph, s, [v], out)
    return out


def count_s_arcs(graph: Graph, s: int) -> int:
    """Number of s-arcs, by dynamic programming over arcs."""
    if s < 1:
        raise GraphError("s must be a positive integer")
    adj = graph.adjacency
    # ways[(u, v)] = number of non-backtracking walks of the current length ending in arc u->v
    ways = {(u, v): 1 for u in range(graph.order) for v in adj[u]}
    for _ in range(s - 1):
        nxt = dict.fromkeys(ways, 0)
        for (u, v), c in ways.items():
            if c:
                for w in adj[v]:
                    if w != u:
                        nxt[(v, w)] += c
        ways = nxt
    return sum(ways.values())


def first_s_arc(graph: Graph, s: int) -> tuple[int, ...] | None:
    """Lexicographically smallest s-arc, or ``None`` when there is none."""
    def walk(prefix):
        if len(prefix) == s + 1:
            return tuple(prefix)
        back = prefix[-2] if len(prefix) > 1 else -1
        for w in graph.adjacency[prefix[-1]]:
            if w != back:
                found = walk(prefix + [w])
                if found:
                    return found
        return None

    for v in range(graph.order):
        found = walk([v])
        if found:
            return found
    return None


def _geodesic_walk(graph, s, prefix, row, out, limit=None):
    if len(prefix) == s + 1:
        out.append(tuple(prefix))
        return
    step = len(prefix)
    for w in graph.adjacency[prefix[-1]]:
        if row[w] == step:
            prefix.append(w)
            _geodesic_walk(graph, s, prefix, row, out, limit)
            prefix.pop()
            if limit is not None and len(out) >= limit:
                return


def enumerate_s_geodesics(graph: Graph, s: int, limit: int | None = None) -> list[tuple[int, ...]]:
    """All s-geodesics ``(v0, ..., vs)`` with ``d(v0, vs) = s``, lexicographic.

    ``limit`` stops after that many tuples (used to fetch a seed cheaply).
    """
    if s < 1:
        raise GraphError("s must be a positive integer")
    if graph.is_connected and s > diameter(graph):
        warnings.warn(f"s={s} exceeds the diameter; no {s}-geodesics exist", stacklevel=2)
        return []
    out: list = []
    for v in range(graph.order):
        _geodesic_walk(graph, s, [v], graph.distances[v], out, limit)
        if limit is not None and len(out) >= limit:
            break
    return out


def count_s_geodesics(graph: Graph, s: int) -> int:
    """Number of s-geodesics; counts shortest paths per source without listing them."""
    total = 0
    for v in range(graph.order):
        row = graph.distances[v]
        ways = [0] * graph.order
        ways[v] = 1
        layer = [v]
        for step in range(1, s + 1):
            nxt = {}
            for u in layer:
                for w in graph.adjacency[u]:
                    if row[w] == step:
                        ways[w] += ways[u]
                        nxt[w] = True
            layer = list(nxt)
        total += sum(ways[u] for u in layer)
    return total


def local_graph(graph: Graph, v: int) -> Graph:
    """Subgraph induced on the neighborhood of ``v`` (labels are original vertices)."""
    graph.check_vertex(v)
    return graph.induced_subgraph(graph.adjacency[v])


def distance_graph(graph: Graph, k: int) -> Graph:
    """Same vertex set; ``u ~ v`` iff ``d(u, v) = k``."""
    d = diameter(graph)
    if not 1 <= k <= d:
        raise GraphError(f"k={k} outside 1..{d}")
    dist = graph.distances
    n = graph.order
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if dist[u][v] == k),
                 labels=graph.labels)


def antipodal_fibres(graph: Graph) -> VertexPartition | None:
    """Fibres ``{v} + Γ_d(v)`` if the distance-d graph is a union of cliques, else ``None``."""
    d = diameter(graph)
    if d < 2:
        return None
    fibres = {}
    for v in range(graph.order):
        fibres[v] = graph.sphere(v, d) | {v}
    for v, f in fibres.items():
        if any(fibres[u] != f for u in f):
            return None
    cells = sorted({tuple(sorted(f)) for f in fibres.values()})
    return VertexPartition(cells, graph.order)


def quotient_graph(graph: Graph, partition: VertexPartition) -> tuple[Graph, bool]:
    """Quotient by ``partition`` and whether ``graph`` is a cover of it."""
    if not isinstance(partition, VertexPartition):
        partition = VertexPartition(partition, graph.order)
    if partition.order != graph.order:
        raise GraphError("partition does not match the vertex set")
    cell = partition.cell_index
    qedges = set()
    for u, v in graph.edges():
        a, b = cell[u], cell[v]
        if a != b:
            qedges.add((min(a, b), max(a, b)))
    quotient = Graph(len(partition), qedges, labels=partition.cells)
    is_cover = True
    for i, block in enumerate(partition.cells):
        for j in quotient.adjacency[i]:
            target = partition.cells[j]
            for v in block:
                if sum(1 for w in target if graph.has_edge(v, w)) != 1:
                    is_cover = False
                    break
            if not is_cover:
                break
        if not is_cover:
            break
    return quotient, is_cover


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)), name=f"cycle:{n}")


def read_edge_list(source, name: str | None = None) -> Graph:
    """Parse the edge-list format: ``#`` comments, a vertex count, then ``u v`` lines."""
    if isinstance(source, (str, os.PathLike)) and not str(source).count("\n") and os.path.exists(source):
        where = os.fspath(source)
        with open(source) as fh:
            text = fh.read()
    elif isinstance(source, str):
        where, text = "<string>", source
    else:
        where, text = getattr(source, "name", "<stream>"), source.read()
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", lineno, where) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 0:
                raise ParseError("first data line must be the vertex count", lineno, where)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise ParseError(f"expected 'u v', got {line!r}", lineno, where)
        u, v = nums
        if not (0 <= u < v < n):
            raise ParseError(f"edge ({u}, {v}) violates 0 <= u < v < {n}", lineno, where)
        if (u, v) in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", lineno, where)
        seen.add((u, v))
        edges.append((u, v))
    if n is None:
        raise ParseError("missing vertex count", None, where)
    return Graph(n, edges, name=name)


def format_edge_list(graph: Graph, comments: Sequence[str] = ()) -> str:
    buf = io.StringIO()
    for c in comments:
        buf.write(f"# {c}\n")
    buf.write(f"{graph.order}\n")
    for u, v in graph.edges():
        buf.write(f"{u} {v}\n")
    return buf.getvalue()


def write_edge_list(graph: Graph, path, comments: Sequence[str] = ()) -> None:
    with open(path, "w") as fh:
        fh.write(format_edge_list(graph, comments))
