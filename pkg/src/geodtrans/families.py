"""Constructors for the graph families, a spec-string parser and the data-file loader."""

from __future__ import annotations

import itertools
import os
import re
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

from . import algebra
from .errors import GraphError, ParseError
from .graph import Graph, cycle_graph, diameter, read_edge_list

DATA_FILES = {
    # reserved name -> (order, valency, diameter)
    "foster.edges": (90, 3, 8),
    "biggs-smith.edges": (102, 3, 7),
}


def complete(n: int) -> Graph:
    if n < 1:
        raise GraphError("K_n needs n >= 1")
    return Graph(n, itertools.combinations(range(n), 2), name=f"complete:{n}")


def complete_multipartite(m: int, b: int) -> Graph:
    """``K_{m[b]}``: ``m`` parts of size ``b``; vertex ``i`` lies in part ``i // b``."""
    if m < 2 or b < 1:
        raise GraphError("K_{m[b]} needs m >= 2 and b >= 1")
    n = m * b
    return Graph(n, ((u, v) for u, v in itertools.combinations(range(n), 2) if u // b != v // b),
                 name=f"kmb:{m},{b}")


def complete_bipartite(n: int, m: int | None = None) -> Graph:
    m = n if m is None else m
    if n < 1 or m < 1:
        raise GraphError("K_{n,m} needs positive part sizes")
    return Graph(n + m, ((u, n + v) for u in range(n) for v in range(m)),
                 name=f"complete-bipartite:{n},{m}")


def cycle(n: int) -> Graph:
    return cycle_graph(n)


def circulant(n: int, connection: Sequence[int]) -> Graph:
    """Cayley graph of ``Z_n``; the connection set is closed under negation here."""
    s = {c % n for c in connection} | {(-c) % n for c in connection}
    if 0 in s:
        raise GraphError("connection set contains 0")
    name = f"circulant:{n};" + ",".join(map(str, sorted(s)))
    return Graph(n, ((u, (u + c) % n) for u in range(n) for c in s), name=name)


def _subsets(ground: int, k: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(1, ground + 1), k))


def johnson(n: int, k: int) -> Graph:
    """``J(n, k)``: k-subsets of ``{1..n}``, adjacent iff they meet in ``k-1`` points."""
    if n < 3 or not 1 <= k <= n // 2:
        raise GraphError(f"J(n,k) needs n >= 3 and 1 <= k <= n/2, got ({n}, {k})")
    verts = _subsets(n, k)
    sets = [set(v) for v in verts]
    edges = [(i, j) for i, j in itertools.combinations(range(len(verts)), 2)
             if len(sets[i] & sets[j]) == k - 1]
    return Graph(len(verts), edges, labels=verts, name=f"johnson:{n},{k}")


def hamming(d: int, n: int) -> Graph:
    """``H(d, n)``: words of length ``d`` over ``Z_n`` at Hamming distance one."""
    if d < 1 or n < 2:
        raise GraphError(f"H(d,n) needs d >= 1 and n >= 2, got ({d}, {n})")
    verts = list(itertools.product(range(n), repeat=d))
    index = {w: i for i, w in enumerate(verts)}
    edges = []
    for i, w in enumerate(verts):
        for pos in range(d):
            for x in range(w[pos] + 1, n):
                edges.append((i, index[w[:pos] + (x,) + w[pos + 1:]]))
    return Graph(len(verts), edges, labels=verts, name=f"hamming:{d},{n}")


def odd(k: int) -> Graph:
    """Odd graph ``O_{k+1}``: k-subsets of ``{1..2k+1}``, adjacent iff disjoint."""
    if k < 1:
        raise GraphError("odd graph needs k >= 1")
    verts = _subsets(2 * k + 1, k)
    sets = [set(v) for v in verts]
    edges = [(i, j) for i, j in itertools.combinations(range(len(verts)), 2)
             if not sets[i] & sets[j]]
    return Graph(len(verts), edges, labels=verts, name=f"odd:{k}")


def paley(p: int, e: int = 1) -> Graph:
    """Paley graph on GF(p^e): adjacent iff the difference is a nonzero square."""
    q = p ** e
    if q % 4 != 1:
        raise GraphError(f"Paley graph needs q = 1 mod 4, got q = {q}")
    F = algebra.field_make(p, e)
    sq = algebra.squares(F)
    edges = [(u, v) for u in range(q) for v in range(u + 1, q) if F.sub(v, u) in sq]
    name = f"paley:{p}" if e == 1 else f"paley:{p}^{e}"
    return Graph(q, edges, labels=[F.format(a) for a in range(q)], name=name)


def pg2_incidence(q: int) -> Graph:
    """Point-line incidence graph of PG(2, q); points first, then lines."""
    if q not in (2, 3, 4, 5):
        raise GraphError(f"pg2_incidence supports q in 2..5, got {q}")
    p, e = algebra.prime_power(q)
    F = algebra.field_make(p, e)
    # projective points: nonzero vectors whose first nonzero coordinate is 1
    pts = [v for v in itertools.product(range(q), repeat=3)
           if any(v) and next(x for x in v if x) == 1]
    n = len(pts)

    def dot(u, v):
        s = 0
        for a, b in zip(u, v):
            s = F.add(s, F.mul(a, b))
        return s

    # a line is the kernel of a dual vector, indexed by the same normalized vectors
    edges = [(i, n + j) for i, u in enumerate(pts) for j, v in enumerate(pts) if dot(u, v) == 0]
    labels = [("point", F_vec(F, v)) for v in pts] + [("line", F_vec(F, v)) for v in pts]
    return Graph(2 * n, edges, labels=labels, name=f"pg2:{q}")


def F_vec(F, v):
    return "(" + ",".join(F.format(x) for x in v) + ")"


def data_path(name: str) -> str:
    return str(resources.files("geodtrans") / "data" / name)


def load_graph(path) -> Graph:
    """Read an edge-list file; reserved data-file names must match their known parameters."""
    path = os.fspath(path)
    if not os.path.exists(path) and os.path.basename(path) == path:
        candidate = data_path(path)
        if os.path.exists(candidate):
            path = candidate
    if not os.path.exists(path):
        raise ParseError("no such file", None, path)
    base = os.path.basename(path)
    graph = read_edge_list(path, name=f"file:{base}")
    if base in DATA_FILES:
        order, valency, diam = DATA_FILES[base]
        if graph.order != order or graph.valency != valency or not graph.is_connected \
                or diameter(graph) != diam:
            raise ParseError(f"{base} must have order {order}, valency {valency} and "
                             f"diameter {diam}", None, path)
    return graph


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple = ()
    path: str | None = None
    complement: bool = False

    def __str__(self):
        if self.family == "file":
            core = f"file:{self.path}"
        elif self.family == "circulant":
            n, conn = self.params
            core = f"circulant:{n};" + ",".join(map(str, conn))
        elif self.family == "paley" and self.params[1] > 1:
            core = f"paley:{self.params[0]}^{self.params[1]}"
        elif self.family == "paley":
            core = f"paley:{self.params[0]}"
        else:
            core = f"{self.family}:" + ",".join(map(str, self.params))
        return f"complement({core})" if self.complement else core


_ALIASES = {
    "complete": "complete", "k": "complete",
    "complete-bipartite": "complete-bipartite", "knn": "complete-bipartite",
    "complete-multipartite": "complete-multipartite", "kmb": "complete-multipartite",
    "cycle": "cycle", "c": "cycle",
    "johnson": "johnson", "j": "johnson",
    "hamming": "hamming", "h": "hamming",
    "odd": "odd", "o": "odd",
    "paley": "paley",
    "taylor": "taylor",
    "pg2": "pg2-incidence", "pg2-incidence": "pg2-incidence",
    "circulant": "circulant",
    "file": "file",
}

_ARITY = {
    "complete": (1, 1), "complete-bipartite": (1, 2), "complete-multipartite": (2, 2),
    "cycle": (1, 1), "johnson": (2, 2), "hamming": (2, 2), "odd": (1, 1),
    "taylor": (1, 2), "pg2-incidence": (1, 1),
}


def parse_spec(text: str) -> FamilySpec:
    """Parse strings such as ``johnson:6,3``, ``paley:3^2``, ``complement(paley:13)``."""
    raw = text.strip()
    m = re.fullmatch(r"complement\((.*)\)", raw)
    if m:
        inner = parse_spec(m.group(1))
        return FamilySpec(inner.family, inner.params, inner.path, not inner.complement)
    name, sep, rest = raw.partition(":")
    family = _ALIASES.get(name.lower())
    if family is None or not sep:
        raise GraphError(f"unknown graph spec {text!r}")
    if family == "file":
        if not rest:
            raise GraphError("file spec needs a path")
        return FamilySpec("file", (), rest)
    try:
        if family == "paley":
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", rest)
            if not m:
                raise ValueError
            p, e = int(m.group(1)), int(m.group(2) or 1)
            if m.group(2) is None:
                pe = algebra.prime_power(p)
                if pe is None:
                    raise GraphError(f"paley order {p} is not a prime power")
                p, e = pe
            return FamilySpec("paley", (p, e))
        if family == "circulant":
            n_text, _, conn_text = rest.partition(";")
            conn = tuple(int(x) for x in conn_text.split(",") if x)
            return FamilySpec("circulant", (int(n_text), conn))
        params = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise GraphError(f"malformed parameters in {text!r}") from None
    lo, hi = _ARITY[family]
    if not lo <= len(params) <= hi:
        raise GraphError(f"{family} takes {lo}..{hi} parameters, got {len(params)}")
    return FamilySpec(family, params)


def build(spec: FamilySpec | str) -> Graph:
    """Construct the graph a spec names (deterministically)."""
    if isinstance(spec, str):
        spec = parse_spec(spec)
    f, ps = spec.family, spec.params
    if f == "complete":
        g = complete(*ps)
    elif f == "complete-bipartite":
        g = complete_bipartite(*ps)
    elif f == "complete-multipartite":
        g = complete_multipartite(*ps)
    elif f == "cycle":
        g = cycle(*ps)
    elif f == "johnson":
        g = johnson(*ps)
    elif f == "hamming":
        g = hamming(*ps)
    elif f == "odd":
        g = odd(*ps)
    elif f == "paley":
        g = paley(*ps)
    elif f == "taylor":
        g = algebra.taylor_construction(*ps)
    elif f == "pg2-incidence":
        g = pg2_incidence(*ps)
    elif f == "circulant":
        g = circulant(*ps)
    elif f == "file":
        g = load_graph(spec.path)
    else:
        raise GraphError(f"unknown family {f!r}")
    if spec.complement:
        g = g.complement()
    g.name = str(spec)
    return g
