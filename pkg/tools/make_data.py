"""Regenerate the shipped Foster and Biggs-Smith edge lists."""

import os
import sys

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from geodtrans.autiso import certificate  # noqa: E402
from geodtrans.graph import Graph, write_edge_list  # noqa: E402

OUT = os.path.join(os.path.dirname(__file__), "..", "src", "geodtrans", "data")


def foster():
    n, lcf = 90, [17, -9, 37, -37, 9, -17]
    edges = {tuple(sorted((i, (i + 1) % n))) for i in range(n)}
    edges |= {tuple(sorted((i, (i + lcf[i % 6]) % n))) for i in range(n)}
    return Graph(n, edges)


def biggs_smith():
    # four 17-gons {17/1}, {17/2}, {17/4}, {17/8} on vertices 17k+i,
    # joined by H-shapes u_i = 68+i, v_i = 85+i
    steps = [1, 2, 4, 8]
    edges = set()
    for k, s in enumerate(steps):
        for i in range(17):
            edges.add(tuple(sorted((17 * k + i, 17 * k + (i + s) % 17))))
    for i in range(17):
        u, v = 68 + i, 85 + i
        edges |= {(u, v), (i, u), (34 + i, u), (17 + i, v), (51 + i, v)}
    return Graph(102, edges)


if __name__ == "__main__":
    f, bs = foster(), biggs_smith()
    write_edge_list(f, os.path.join(OUT, "foster.edges"), [
        "Foster graph: cubic distance-transitive graph on 90 vertices.",
        "Built from LCF notation [17,-9,37,-37,9,-17]^15 (Hamiltonian cycle 0..89 plus chords).",
        "Intersection array {3,2,2,2,2,1,1,1; 1,1,1,1,2,2,2,3}; |Aut| = 4320.",
        f"Canonical certificate {certificate(f)}.",
        "Regenerate with tools/make_data.py.",
    ])
    write_edge_list(bs, os.path.join(OUT, "biggs-smith.edges"), [
        "Biggs-Smith graph: cubic distance-transitive graph on 102 vertices.",
        "Four 17-gons {17/1},{17/2},{17/4},{17/8} on 17k+i (k=0..3), and for each i an",
        "edge u_i v_i (u_i=68+i, v_i=85+i) with u_i ~ 17*0+i, 17*2+i and v_i ~ 17*1+i, 17*3+i.",
        "Intersection array {3,2,2,2,1,1,1; 1,1,1,1,1,1,3}; |Aut| = 2448.",
        f"Canonical certificate {certificate(bs)}.",
        "Regenerate with tools/make_data.py.",
    ])
