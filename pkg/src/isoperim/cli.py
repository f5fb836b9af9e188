"""Command-line front end.

Commands: ``ratio``, ``symmetrize``, ``strange``, ``certify``, ``selftest``.
Every numeric value printed is the exact repr of the library result, so the
CLI adds nothing on top of the library API.

Exit codes: 0 success, 1 a certification failed, 2 bad input or
configuration, 3 a certification ran out of budget.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from . import certify as cert_mod
from . import geometry, polyfile, strange, symmetrize
from .errors import (
    BudgetExceeded,
    CertificationFailed,
    DegenerateInput,
    DomainError,
    InvalidApexPair,
)
from .interval import Interval
from .kernel import BACKEND

EXIT_OK = 0
EXIT_CERT_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3

#: reference ratio bounds by vertex count: the regular tetrahedron, the
#: optimal triangle bipyramid as usually quoted, and the regular octahedron
RATIO_BOUNDS = {
    4: 216.0 * math.sqrt(3.0),
    5: 243.0 * math.sqrt(2.0),
    6: 108.0 * math.sqrt(3.0),
}


def _csv_append(path, row: dict) -> None:
    try:
        new = not open(path).read(1)
    except FileNotFoundError:
        new = True
    with open(path, "a", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=list(row))
        if new:
            w.writeheader()
        w.writerow(row)


def cmd_ratio(args) -> int:
    try:
        P = polyfile.load_polytope(args.input)
        V = geometry.volume(P)
        S = geometry.surface_area(P)
        ratio = geometry.isoperimetric_ratio(P)
        ins = geometry.insphere(P)
    except (DegenerateInput, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    n = P.n_vertices
    print(f"vertices: {n}   facets: {P.n_facets}")
    print(f"V = {V!r}")
    print(f"S = {S!r}")
    print(f"S^3/V^2 = {ratio!r}")
    print(f"insphere: center ({ins.center.x!r}, {ins.center.y!r}, {ins.center.z!r})"
          f" radius {ins.radius!r} touching {len(ins.touching)}/{P.n_facets} facets")
    bound = RATIO_BOUNDS.get(n)
    if bound is None:
        status = "INFO"
        print(f"no reference bound for {n} vertices [INFO]")
    else:
        if abs(ratio - bound) <= 1e-6 * bound:
            status = "AT-BOUND"
        elif ratio > bound:
            status = "ABOVE-BOUND"
        else:
            status = "BELOW-BOUND"
        print(f"reference bound for n={n}: {bound!r} [{status}]")
    if args.csv:
        _csv_append(args.csv, {
            "command": "ratio", "input": args.input, "n_vertices": n,
            "V": repr(V), "S": repr(S), "ratio": repr(ratio),
            "bound": "" if bound is None else repr(bound), "status": status,
        })
    return EXIT_OK


def _parse_vec(text: str) -> geometry.Vec3:
    parts = [float(t) for t in text.replace(",", " ").split()]
    if len(parts) != 3:
        raise ValueError(f"need three components, got {text!r}")
    return geometry.Vec3(*parts)


def cmd_symmetrize(args) -> int:
    try:
        P = polyfile.load_polytope(args.input)
        V0, S0 = geometry.volume(P), geometry.surface_area(P)
        if args.apex_pair:
            i, j = (int(t) for t in args.apex_pair.replace(",", " ").split())
            T = geometry.triangulate_boundary(P)
            Q, TQ, _ = symmetrize.bipyramid_symmetral(
                T, symmetrize.ApexPair(min(i, j), max(i, j)))
            preserved = symmetrize.triangulations_isomorphic(T, TQ)
            print(f"combinatorial type preserved: {preserved}")
        else:
            normal = _parse_vec(args.normal)
            Q = symmetrize.steiner_symmetral(P, normal)
    except (DegenerateInput, InvalidApexPair, ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    V1, S1 = geometry.volume(Q), geometry.surface_area(Q)
    print(f"V: {V0!r} -> {V1!r}   (dV = {V1 - V0!r})")
    print(f"S: {S0!r} -> {S1!r}   (dS = {S1 - S0!r})")
    if args.output:
        polyfile.save_polytope(args.output, Q)
        print(f"wrote {args.output}")
    return EXIT_OK


def _profile(args):
    if args.profile == "six":
        return strange.SIX_VERTEX
    if args.five_constants == "narrow":
        return strange.FIVE_VERTEX_NARROW
    return strange.FIVE_VERTEX_WIDE


def cmd_strange(args) -> int:
    try:
        p = strange.StrangeParams(args.x1, args.x2, args.x3, args.y1, args.y2)
        profile = _profile(args)
        S = strange.strange_S(p)
        V = strange.strange_V(p)
        print(f"S = {S!r}")
        print(f"V = {V!r}")
        print(f"base area = {p.base_area!r}")
        print(f"S^3 - 188 V^2 = {S**3 - 188.0 * V**2!r}")
        print(f"feasible ({args.profile}): {strange.feasible(p, profile)}")
        if args.action == "realize":
            body = strange.realize(p)
            print(f"realized: {body.polytope.n_vertices} vertices, "
                  f"{body.polytope.n_facets} facets"
                  + (f", merged: {', '.join(body.merged)}" if body.merged else ""))
            print(f"hull volume = {geometry.volume(body.polytope)!r}")
            print(f"hull surface = {geometry.surface_area(body.polytope)!r}")
            if args.output:
                polyfile.save_polytope(args.output, body.polytope)
                print(f"wrote {args.output}")
    except (DegenerateInput, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    return EXIT_OK


def _certify_sixvertex(args) -> int:
    cs = cert_mod.ConstraintSet(area_min=args.area_min, coord_max=args.coord_max)
    budget = cert_mod.Budget(max_boxes=args.max_boxes, max_depth=args.max_depth,
                             max_seconds=args.max_seconds)
    try:
        c = cert_mod.branch_and_bound(cs.root_box(), cs, args.threshold, budget,
                                      jobs=args.jobs)
    except BudgetExceeded as exc:
        c = exc.certificate
        print(f"BUDGET EXCEEDED: {exc}")
        if c is not None:
            print(f"partial: {c.counts()}  min unresolved bound: "
                  f"{c.min_unresolved_bound!r}")
            if args.output:
                c.save(args.output)
                print(f"wrote partial certificate {args.output}")
        return EXIT_BUDGET
    counts = c.counts()
    print(f"kernel: {BACKEND}")
    print(f"leaves: {counts['verified']} verified, {counts['infeasible']} infeasible "
          f"({c.stats['boxes']} boxes, depth {c.stats['max_depth']}, "
          f"{c.stats['seconds']}s)")
    print(f"global_margin = {c.global_margin!r} > threshold {args.threshold!r}: "
          f"{c.global_margin > args.threshold}")
    if args.output:
        c.save(args.output)
        print(f"wrote certificate {args.output}")
    if args.csv:
        _csv_append(args.csv, {
            "command": "certify", "claim": "sixvertex",
            "verdict": "ok", "margin": repr(c.global_margin),
            "boxes": c.stats["boxes"], "seconds": c.stats["seconds"],
        })
    return EXIT_OK


def _certify_min5(args) -> int:
    ext = cert_mod.strange5_ratio_extension()
    res = cert_mod.certify_min_1d(ext, Interval(0.1, 100.0), args.tol)
    print(f"argmin enclosure: [{res.argmin.lo!r}, {res.argmin.hi!r}] "
          f"(width {res.argmin.width!r})")
    print(f"minimum enclosure: [{res.minimum.lo!r}, {res.minimum.hi!r}] "
          f"(width {res.minimum.width!r})")
    print(f"evaluations: {res.evaluations}")
    for label, value in (("sqrt(2)", math.sqrt(2.0)),
                         ("1/sqrt(2)", 1.0 / math.sqrt(2.0)),
                         ("243*sqrt(2)", 243.0 * math.sqrt(2.0)),
                         ("243", 243.0)):
        inside = (res.argmin.contains(value) if "sqrt(2)" == label or label == "1/sqrt(2)"
                  else res.minimum.contains(value))
        print(f"  contains {label} = {value!r}: {inside}")
    return EXIT_OK


def cmd_certify(args) -> int:
    try:
        rc = EXIT_OK
        if args.claim in ("thresholds", "all"):
            rep = cert_mod.certify_threshold_bounds()
            for c in rep.checks:
                print(f"{c.label}: enclosure [{c.enclosure.lo!r}, {c.enclosure.hi!r}] "
                      f"strict: {c.strict}")
            print(f"profile derivative signs certified on {rep.monotone_pieces} "
                  f"pieces per side")
        if args.claim in ("distances", "all"):
            rep = cert_mod.certify_distance_bounds()
            for c in rep.checks:
                print(f"{c.label}: enclosure [{c.enclosure.lo!r}, {c.enclosure.hi!r}] "
                      f"strict: {c.strict}")
        if args.claim in ("min5", "all"):
            rc = max(rc, _certify_min5(args))
        if args.claim in ("sixvertex", "all"):
            rc = max(rc, _certify_sixvertex(args))
        return rc
    except CertificationFailed as exc:
        print(f"CERTIFICATION FAILED: {exc}", file=sys.stderr)
        return EXIT_CERT_FAILED
    except BudgetExceeded as exc:
        print(f"BUDGET EXCEEDED: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def cmd_selftest(args) -> int:
    checks = []

    def check(name, fn):
        try:
            ok = bool(fn())
        except Exception as exc:  # a selftest must never crash the runner
            ok = False
            name = f"{name} ({exc})"
        checks.append(ok)
        print(f"{'PASS' if ok else 'FAIL'}  {name}")

    octa = geometry.convex_hull(
        [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])
    check("octahedron ratio = 108*sqrt(3)",
          lambda: abs(geometry.isoperimetric_ratio(octa) - 108 * math.sqrt(3))
          <= 1e-9 * 108 * math.sqrt(3))
    cube = geometry.convex_hull(
        [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)])
    check("unit cube V=1 S=6", lambda: geometry.volume(cube) == 1.0
          and geometry.surface_area(cube) == 6.0)
    check("steiner symmetral preserves cube volume",
          lambda: abs(geometry.volume(
              symmetrize.steiner_symmetral(cube, geometry.Vec3(0, 0, 1))) - 1.0) < 1e-12)
    from .interval import Box5, eval_G
    check("interval point evaluation",
          lambda: eval_G(Box5.point(0.0, 1.0, 1.0, 1.0, 1.0)).width < 1e-9)
    check("distance bounds certify",
          lambda: cert_mod.certify_distance_bounds().all_strict)
    check("threshold bounds certify",
          lambda: cert_mod.certify_threshold_bounds(pieces=16).all_strict)
    cs = cert_mod.ConstraintSet(coord_max=1.0)
    check("small subdivision run certifies",
          lambda: cert_mod.branch_and_bound(
              cs.root_box(), cs, 0.0,
              cert_mod.Budget(max_boxes=3_000_000, max_depth=80)).complete)
    print(f"kernel backend: {BACKEND}")
    return EXIT_OK if all(checks) else EXIT_CERT_FAILED


def build_parser():
    ap = argparse.ArgumentParser(
        prog="isoperim",
        description="Certified isoperimetric bounds for 3-polytopes.")
    ap.add_argument("--config", help="JSON file of default option values")
    sub = ap.add_subparsers(dest="command", required=True)
    subparsers = {}

    p = subparsers["ratio"] = sub.add_parser("ratio", help="measures and ratio of a polytope file")
    p.add_argument("input")
    p.add_argument("--csv", help="append a summary row to this CSV file")
    p.set_defaults(fn=cmd_ratio)

    p = subparsers["symmetrize"] = sub.add_parser("symmetrize", help="Steiner symmetral of a polytope file")
    p.add_argument("input")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--normal", help="direction, e.g. '0,0,1'")
    g.add_argument("--apex-pair", help="vertex indices, e.g. '0,5'")
    p.add_argument("--output", help="write the symmetral to this JSON file")
    p.set_defaults(fn=cmd_symmetrize)

    p = subparsers["strange"] = sub.add_parser("strange", help="evaluate or realize a family member")
    p.add_argument("action", choices=("eval", "realize"))
    for name in ("x1", "x2", "x3", "y1", "y2"):
        p.add_argument(name, type=float)
    p.add_argument("--profile", choices=("six", "five"), default="six")
    p.add_argument("--five-constants", choices=("wide", "narrow"), default="wide",
                   help="which 5-vertex constant set to use (wide: area 0.09..15,"
                        " coords <= 17; narrow: area >= 0.18, coords <= 11)")
    p.add_argument("--output")
    p.set_defaults(fn=cmd_strange)

    p = subparsers["certify"] = sub.add_parser("certify", help="run certified verifications")
    p.add_argument("--claim", choices=("sixvertex", "thresholds", "distances",
                                       "min5", "all"), default="all")
    p.add_argument("--threshold", type=float, default=3.44)
    p.add_argument("--area-min", type=float, default=0.411)
    p.add_argument("--coord-max", type=float, default=6.5)
    p.add_argument("--max-boxes", type=int, default=50_000_000)
    p.add_argument("--max-depth", type=int, default=200)
    p.add_argument("--max-seconds", type=float, default=None)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--tol", type=float, default=1e-6,
                   help="enclosure width for the 1-D minimization")
    p.add_argument("--output", help="write the certificate JSON here")
    p.add_argument("--csv", help="append a summary row to this CSV file")
    p.set_defaults(fn=cmd_certify)

    p = subparsers["selftest"] = sub.add_parser("selftest", help="quick end-to-end sanity checks")
    p.set_defaults(fn=cmd_selftest)
    return ap, subparsers


def main(argv=None) -> int:
    ap, subparsers = build_parser()
    args, _ = ap.parse_known_args(argv)
    if args.config:
        try:
            with open(args.config) as fh:
                defaults = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            print(f"error reading config: {exc}", file=sys.stderr)
            return EXIT_BAD_INPUT
        # flags still override: config only replaces subcommand defaults
        subparsers[args.command].set_defaults(**defaults)
    args = ap.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    sys.exit(main())
