"""s-distance, s-geodesic and s-arc transitivity, and the profile that collects them.

Each verdict is decided by closing the orbit of one seed tuple under the
group and comparing its size with the number of tuples of that kind.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

from .autiso import automorphism_group
from .errors import ConsistencyError, DisconnectedError, GraphError
from .graph import (INF, Graph, count_s_arcs, count_s_geodesics, diameter,
                    enumerate_s_geodesics, first_s_arc, girth)
from .perm import PermGroup, orbit

ARC_CAP = 8


def _check_group(graph: Graph, group: PermGroup) -> None:
    if group.degree != graph.order:
        raise GraphError("group degree differs from graph order")
    edges = graph.edges()
    for g in group.generators:
        if any(not graph.has_edge(g[u], g[v]) for u, v in edges):
            raise GraphError("a generator is not an automorphism of the graph")


def _resolve(graph: Graph, group: PermGroup | None) -> PermGroup:
    if group is None:
        return automorphism_group(graph)
    _check_group(graph, group)
    return group


def _single_orbit(group: PermGroup, seed, total: int) -> bool:
    if total == 0:
        return True
    if total > group.order:
        return False
    return len(orbit(group, seed)) == total


def _pairs_at(graph: Graph, t: int):
    dist = graph.distances
    n = graph.order
    count, seed = 0, None
    for u in range(n):
        row = dist[u]
        for v in range(n):
            if row[v] == t:
                if seed is None:
                    seed = (u, v)
                count += 1
    return seed, count


def _vertex_transitive(graph: Graph, group: PermGroup) -> bool:
    return graph.order == 0 or _single_orbit(group, (0,), graph.order)


def is_s_distance_transitive(graph: Graph, group: PermGroup | None, s: int) -> bool:
    """Transitive on ordered pairs at each distance ``t <= s`` (``t = 0`` included)."""
    group = _resolve(graph, group)
    if not graph.is_connected:
        raise DisconnectedError("distance transitivity needs a connected graph")
    if not _vertex_transitive(graph, group):
        return False
    for t in range(1, s + 1):
        seed, count = _pairs_at(graph, t)
        if not _single_orbit(group, seed, count):
            return False
    return True


def is_s_geodesic_transitive(graph: Graph, group: PermGroup | None, s: int) -> bool:
    """Transitive on ``geod_i`` for every ``i <= s``."""
    group = _resolve(graph, group)
    if not graph.is_connected:
        raise DisconnectedError("geodesic transitivity needs a connected graph")
    if not _vertex_transitive(graph, group):
        return False
    d = diameter(graph)
    for i in range(1, min(s, d) + 1):
        seed = enumerate_s_geodesics(graph, i, limit=1)[0]
        if not _single_orbit(group, seed, count_s_geodesics(graph, i)):
            return False
    return True


def is_s_arc_transitive(graph: Graph, group: PermGroup | None, s: int) -> bool:
    """Transitive on the t-arcs for every ``t <= s``."""
    if s < 1:
        raise GraphError("s must be a positive integer")
    group = _resolve(graph, group)
    if not _vertex_transitive(graph, group):
        return False
    for t in range(1, s + 1):
        total = count_s_arcs(graph, t)
        if total and not _single_orbit(group, first_s_arc(graph, t), total):
            return False
    return True


@dataclass
class IntersectionData:
    x: int  # |Γ(v) ∩ Γ(u)|
    y: int  # |Γ_2(v) ∩ Γ(u)|
    z: int  # |Γ(v) ∩ Γ(w)|
    t: int  # |Γ_2(v) ∩ Γ(w) ∩ Γ(u)|
    n2: int  # |Γ_2(v)|
    n3: int  # |Γ_3(v)|

    def as_tuple(self) -> tuple[int, ...]:
        return (self.x, self.y, self.z, self.t, self.n2, self.n3)


def intersection_data(graph: Graph, v: int, u: int, w: int) -> IntersectionData:
    for x in (v, u, w):
        graph.check_vertex(x)
    if not (graph.has_edge(v, u) and graph.has_edge(u, w) and graph.distance(v, w) == 2):
        raise GraphError(f"({v}, {u}, {w}) is not a 2-geodesic")
    N = graph.neighbors
    S1, S2, S3 = graph.sphere(v, 1), graph.sphere(v, 2), graph.sphere(v, 3)
    return IntersectionData(
        x=len(S1 & N(u)),
        y=len(S2 & N(u)),
        z=len(S1 & N(w)),
        t=len(S2 & N(w) & N(u)),
        n2=len(S2),
        n3=len(S3),
    )


def girth_consistency_check(graph: Graph, group: PermGroup | None, s: int) -> bool | None:
    """For an s-geodesic transitive graph, check s-arc transitivity against ``girth >= 2s``.

    Returns the s-arc verdict, ``None`` (skipped) when the graph is not
    s-geodesic transitive, and raises ``ConsistencyError`` on disagreement.
    """
    group = _resolve(graph, group)
    if s < 2 or s > diameter(graph) or not is_s_geodesic_transitive(graph, group, s):
        return None
    arc = is_s_arc_transitive(graph, group, s)
    if arc != (girth(graph) >= 2 * s):
        raise ConsistencyError(f"s={s}: arc transitive={arc} but girth={girth(graph)}")
    return arc


@dataclass
class TransitivityProfile:
    order: int
    girth: float
    diameter: int
    valency: int | None
    aut_order: int
    group_source: str  # "computed" or "supplied"
    vertex_transitive: bool
    max_s_distance: int
    max_s_geodesic: int
    max_s_arc: int
    arc_cap_exceeded: bool
    distance_transitive: bool = field(init=False)
    geodesic_transitive: bool = field(init=False)

    def __post_init__(self):
        self.distance_transitive = self.vertex_transitive and self.max_s_distance == self.diameter
        self.geodesic_transitive = self.vertex_transitive and self.max_s_geodesic == self.diameter

    def to_dict(self) -> dict:
        d = asdict(self)
        d["girth"] = None if self.girth == INF else int(self.girth)
        return d


def _largest(limit: int, test) -> int:
    s = 0
    while s < limit and test(s + 1):
        s += 1
    return s


def check_hierarchy(p: TransitivityProfile) -> None:
    """Raise ``ConsistencyError`` if the verdicts break arc => geodesic => distance or the girth criterion."""
    arc_within = min(p.max_s_arc, p.diameter)
    if not arc_within <= p.max_s_geodesic <= p.max_s_distance:
        raise ConsistencyError(
            f"hierarchy violated: arc {p.max_s_arc}, geodesic {p.max_s_geodesic}, "
            f"distance {p.max_s_distance}")
    for s in range(2, p.diameter + 1):
        geo = s <= p.max_s_geodesic
        arc = s <= p.max_s_arc
        if (geo and p.girth >= 2 * s) != arc:
            raise ConsistencyError(f"girth criterion violated at s={s}")


def profile(graph: Graph, group: PermGroup | None = None) -> TransitivityProfile:
    """Maximal s for each property, with the hierarchy asserted before returning."""
    if not graph.is_connected:
        raise DisconnectedError("profile needs a connected graph")
    source = "supplied" if group is not None else "computed"
    group = _resolve(graph, group)
    d = diameter(graph)
    g = girth(graph)
    vt = _vertex_transitive(graph, group)
    if vt:
        max_dist = _largest(d, lambda s: is_s_distance_transitive(graph, group, s))
        max_geo = _largest(d, lambda s: is_s_geodesic_transitive(graph, group, s))
        if graph.valency == 2 and is_s_arc_transitive(graph, group, 1):
            # on a cycle an s-arc is fixed by its first arc, so 1-arc transitivity gives every s
            max_arc, capped = ARC_CAP, True
        else:
            max_arc = _largest(ARC_CAP, lambda s: is_s_arc_transitive(graph, group, s))
            capped = max_arc == ARC_CAP
    else:
        max_dist = max_geo = max_arc = 0
        capped = False
    prof = TransitivityProfile(
        order=graph.order, girth=g, diameter=d, valency=graph.valency,
        aut_order=group.order, group_source=source, vertex_transitive=vt,
        max_s_distance=max_dist, max_s_geodesic=max_geo, max_s_arc=max_arc,
        arc_cap_exceeded=capped,
    )
    if vt:
        check_hierarchy(prof)
    return prof
