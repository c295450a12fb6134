"""Command-line front end: ``construct``, ``analyze``, ``iso`` and ``verify``.

Exit codes: 0 success, 1 claim failure (or non-isomorphic for ``iso``),
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import replace

from . import __version__
from .autiso import are_isomorphic, automorphism_group, canonical_form
from .errors import GraphError
from .families import FamilySpec, build, data_path, parse_spec
from .graph import (INF, Graph, antipodal_fibres, diameter, enumerate_s_geodesics,
                    format_edge_list, girth, local_graph, quotient_graph)
from .transitivity import intersection_data, profile

log = logging.getLogger("geodtrans")

FIELDS = (
    "order", "valency", "girth", "diameter", "aut_order", "max_s_arc", "max_s_geodesic",
    "max_s_distance", "distance_transitive", "geodesic_transitive", "antipodal_fibre_size",
    "antipodal_cover_of_complete", "local_graph_iso_to", "isomorphic_to", "intersection_data",
)


class UsageError(Exception):
    pass


def _spec(text: str, alt_g: int | None = None) -> FamilySpec:
    spec = parse_spec(text)
    if alt_g is not None:
        if spec.family != "taylor":
            raise UsageError("--alt-g only applies to taylor specs")
        spec = replace(spec, params=(spec.params[0], alt_g))
    return spec


def _graph(text: str, alt_g: int | None = None) -> Graph:
    return build(_spec(text, alt_g))


def _girth_json(g):
    return None if g == INF else int(g)


class Analysis:
    """Lazily computed measurements of one graph, shared by the claims that name it."""

    def __init__(self, graph: Graph):
        self.graph = graph
        self._cache: dict = {}

    def _get(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def profile(self):
        return self._get("profile", lambda: profile(self.graph))

    @property
    def fibres(self):
        return self._get("fibres", lambda: antipodal_fibres(self.graph)
                         if self.graph.is_connected else None)

    def measure(self, name: str, expected=None):
        g = self.graph
        if name == "order":
            return g.order
        if name == "valency":
            return g.valency
        if name == "girth":
            return _girth_json(girth(g))
        if name in ("diameter", "aut_order", "max_s_arc", "max_s_geodesic", "max_s_distance",
                    "distance_transitive", "geodesic_transitive"):
            if name == "aut_order":
                return automorphism_group(g).order
            if not g.is_connected:
                return None
            return getattr(self.profile, name)
        if name == "antipodal_fibre_size":
            f = self.fibres
            if f is None:
                return None
            sizes = {len(c) for c in f}
            return sizes.pop() if len(sizes) == 1 else None
        if name == "antipodal_cover_of_complete":
            f = self.fibres
            if f is None:
                return False
            q, cover = quotient_graph(g, f)
            return cover and q.size == q.order * (q.order - 1) // 2
        if name in ("local_graph_iso_to", "isomorphic_to"):
            other = _graph(expected)
            mine = local_graph(g, 0) if name == "local_graph_iso_to" else g
            return expected if are_isomorphic(mine, other) is not None else \
                f"not isomorphic (order {mine.order}, valency {mine.valency})"
        if name == "intersection_data":
            geo = enumerate_s_geodesics(g, 2, limit=1) if g.is_connected and diameter(g) >= 2 else []
            if not geo:
                return None
            return list(intersection_data(g, *geo[0]).as_tuple())
        raise UsageError(f"unknown claim field {name!r}")


# -- construct -------------------------------------------------------------

def cmd_construct(args) -> int:
    g = _graph(args.spec, args.alt_g)
    text = format_edge_list(g, [f"{g.name}"])
    summary = f"order={g.order} size={g.size} valency={g.valency}"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(summary)
    else:
        sys.stdout.write(text)
        print(summary, file=sys.stderr)
    return 0


# -- analyze ---------------------------------------------------------------

def analyze_report(g: Graph, intersection=False, local=None) -> dict:
    report: dict = {
        "version": __version__,
        "family": g.name,
        "order": g.order,
        "valency": g.valency,
        "girth": _girth_json(girth(g)),
        "diameter": None,
        "aut_order": automorphism_group(g).order,
        "certificate": canonical_form(g).certificate,
        "profile": None,
        "antipodal": {"is_antipodal": False, "fibre_size": None, "fibres": None,
                      "quotient_order": None, "quotient_is_cover": None},
        "warnings": [],
    }
    if not g.is_connected:
        report["warnings"].append("graph is disconnected; profile omitted")
        return report
    report["diameter"] = diameter(g)
    report["profile"] = profile(g).to_dict()
    fib = antipodal_fibres(g)
    if fib is not None:
        q, cover = quotient_graph(g, fib)
        sizes = {len(c) for c in fib}
        report["antipodal"] = {
            "is_antipodal": True,
            "fibre_size": sizes.pop() if len(sizes) == 1 else None,
            "fibres": [list(c) for c in fib],
            "quotient_order": q.order,
            "quotient_is_cover": cover,
        }
    if intersection:
        geo = enumerate_s_geodesics(g, 2, limit=1) if report["diameter"] >= 2 else []
        if geo:
            data = intersection_data(g, *geo[0])
            report["intersection_data"] = {"geodesic": list(geo[0]), **vars(data)}
        else:
            report["intersection_data"] = None
    if local is not None:
        lg = local_graph(g, 0)
        entry = {"vertex": 0, "order": lg.order, "valency": lg.valency,
                 "certificate": canonical_form(lg).certificate}
        if isinstance(local, str):
            entry["compared_to"] = local
            entry["isomorphic"] = are_isomorphic(lg, _graph(local)) is not None
        report["local_graph"] = entry
    return report


def _print_analysis(r: dict) -> None:
    print(f"graph        {r['family']}")
    print(f"order        {r['order']}")
    print(f"valency      {r['valency']}")
    print(f"girth        {r['girth'] if r['girth'] is not None else 'inf'}")
    print(f"diameter     {r['diameter']}")
    print(f"|Aut|        {r['aut_order']}")
    p = r["profile"]
    if p:
        print(f"max s        distance {p['max_s_distance']}  geodesic {p['max_s_geodesic']}  "
              f"arc {p['max_s_arc']}{' (cap reached)' if p['arc_cap_exceeded'] else ''}")
        print(f"distance transitive  {p['distance_transitive']}")
        print(f"geodesic transitive  {p['geodesic_transitive']}")
    a = r["antipodal"]
    if a["is_antipodal"]:
        print(f"antipodal    fibres of size {a['fibre_size']}, quotient order "
              f"{a['quotient_order']}, cover {a['quotient_is_cover']}")
    else:
        print("antipodal    no")
    if "intersection_data" in r and r["intersection_data"]:
        d = r["intersection_data"]
        print("intersection " + " ".join(f"{k}={d[k]}" for k in ("x", "y", "z", "t", "n2", "n3")))
    if "local_graph" in r:
        lg = r["local_graph"]
        line = f"local graph  order {lg['order']} valency {lg['valency']}"
        if "isomorphic" in lg:
            line += f", isomorphic to {lg['compared_to']}: {lg['isomorphic']}"
        print(line)
    for w in r["warnings"]:
        print(f"warning: {w}", file=sys.stderr)


def cmd_analyze(args) -> int:
    g = _graph(args.spec, args.alt_g)
    report = analyze_report(g, intersection=args.intersection, local=args.local)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report, fh, indent=2)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        _print_analysis(report)
    return 0


# -- iso -------------------------------------------------------------------

def cmd_iso(args) -> int:
    a = _graph(args.a)
    b = _graph(args.b, args.alt_g)
    mapping = are_isomorphic(a, b)
    if args.json:
        print(json.dumps({"a": a.name, "b": b.name, "isomorphic": mapping is not None,
                          "mapping": None if mapping is None else
                          [mapping[v] for v in range(a.order)]}))
    elif mapping is None:
        print("non-isomorphic")
    else:
        print("isomorphic")
        print(" ".join(f"{v}->{mapping[v]}" for v in range(a.order)))
    return 0 if mapping is not None else 1


# -- verify ----------------------------------------------------------------

def load_manifest(path: str) -> list[dict]:
    if path == "default":
        path = data_path("default_manifest.json")
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read manifest {path}: {exc}") from None
    claims = doc.get("claims") if isinstance(doc, dict) else doc
    if not isinstance(claims, list):
        raise UsageError("manifest must be a list of claims or an object with 'claims'")
    for i, c in enumerate(claims):
        if not isinstance(c, dict) or "graph" not in c or not c.get("expect"):
            raise UsageError(f"claim {i} needs 'graph' and a non-empty 'expect'")
        unknown = set(c["expect"]) - set(FIELDS)
        if unknown:
            raise UsageError(f"claim {i} names unknown fields {sorted(unknown)}")
        try:
            parse_spec(c["graph"])
        except GraphError as exc:
            raise UsageError(f"claim {i}: {exc}") from None
    return claims


def _matches(expected, measured) -> bool:
    if isinstance(expected, bool) or isinstance(measured, bool):
        return type(expected) is type(measured) and expected == measured
    if isinstance(expected, list) and isinstance(measured, (list, tuple)):
        return list(expected) == list(measured)
    return expected == measured


def run_claims(claims: list[dict]) -> dict:
    analyses: dict[str, Analysis] = {}
    rows = []
    for claim in claims:
        spec = claim["graph"]
        citation = claim.get("citation", "")
        for fld, expected in claim["expect"].items():
            t0 = time.perf_counter()
            row = {"citation": citation, "family": spec, "field": fld,
                   "expected": expected, "measured": None, "status": "fail"}
            try:
                if spec not in analyses:
                    analyses[spec] = Analysis(build(spec))
                measured = analyses[spec].measure(fld, expected)
                row["measured"] = measured
                if measured is None and fld not in ("valency", "girth", "antipodal_fibre_size"):
                    row["status"] = "skipped"
                else:
                    row["status"] = "pass" if _matches(expected, measured) else "fail"
            except (GraphError, UsageError) as exc:
                row["measured"] = f"error: {exc}"
            row["runtime"] = round(time.perf_counter() - t0, 4)
            rows.append(row)
    summary = {s: sum(r["status"] == s for r in rows) for s in ("pass", "fail", "skipped")}
    summary["total"] = len(rows)
    return {"version": __version__, "summary": summary, "claims": rows}


def _print_claims(report: dict) -> None:
    for r in report["claims"]:
        print(f"{r['status'].upper():7} {r['family']:24} {r['field']:28} "
              f"expected={json.dumps(r['expected'])} measured={json.dumps(r['measured'])}  "
              f"[{r['citation']}]")
    s = report["summary"]
    print(f"{s['total']} checks: {s['pass']} passed, {s['fail']} failed, {s['skipped']} skipped")


def cmd_verify(args) -> int:
    claims = load_manifest(args.manifest)
    if not claims:
        print("warning: manifest contains no claims", file=sys.stderr)
    report = run_claims(claims)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(report, fh, indent=2)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        _print_claims(report)
    return 1 if report["summary"]["fail"] else 0


# -- entry point -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--out", metavar="PATH", help="output file")
    common.add_argument("--seedless", action="store_true",
                        help="reject nondeterministic paths (all algorithms are deterministic)")

    parser = argparse.ArgumentParser(prog="geodtrans", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="write a family member as an edge list")
    p.add_argument("spec")
    p.add_argument("--alt-g", type=int, metavar="I", help="taylor: use the involution b^I g")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("analyze", parents=[common], help="symmetry profile of a graph")
    p.add_argument("spec")
    p.add_argument("--alt-g", type=int, metavar="I")
    p.add_argument("--intersection", action="store_true",
                   help="report intersection counts at the first 2-geodesic")
    p.add_argument("--local", nargs="?", const=True, metavar="SPEC",
                   help="report the local graph, optionally testing isomorphism with SPEC")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("iso", parents=[common], help="test two graphs for isomorphism")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--alt-g", type=int, metavar="I", help="applied to the second graph")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("verify", parents=[common], help="check a claim manifest")
    p.add_argument("manifest", nargs="?", default="default")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.func(args)
    except (GraphError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
