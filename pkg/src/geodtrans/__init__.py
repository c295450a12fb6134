"""Geodesic, arc and distance transitivity of finite graphs.

The library builds the standard families (Johnson, Hamming, odd, Paley,
projective-plane incidence, circulant and a PSL(2,p) coset-graph double cover),
computes automorphism groups by partition refinement, and decides for each s
whether the group is transitive on distance-s pairs, s-geodesics and s-arcs.
"""

__version__ = "0.1.0"

from .errors import (ConsistencyError, ConstructionError, DisconnectedError, GraphError,
                     ParseError, ScaleError)
from .graph import (Graph, VertexPartition, antipodal_fibres, count_s_arcs, count_s_geodesics,
                    diameter, distance_graph, enumerate_s_arcs, enumerate_s_geodesics, girth,
                    local_graph, metrics, quotient_graph, read_edge_list, write_edge_list)
from .perm import PermGroup, orbit, regular_subgroup_to_cayley, stabilizer
from .autiso import are_isomorphic, automorphism_group, canonical_form, certificate, refine
from .algebra import FiniteField, coset_graph, field_make, psl2, taylor_construction
from .families import build, load_graph, parse_spec
from .transitivity import (intersection_data, is_s_arc_transitive, is_s_distance_transitive,
                           is_s_geodesic_transitive, profile)
