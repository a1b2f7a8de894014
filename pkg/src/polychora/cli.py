"""Command-line surface: generate, stats, project, solve, pole, validate, export.

Exit codes: 0 success, 1 usage or input error, 2 validation findings under
--strict.  All numeric text output carries 10 decimals.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import build, catalog, incidence, measure, projection, symmetry, tables
from .catalog import UnknownPolytopeError
from .spheres import DegenerateCentersError, SphereSystem, solve_vertex

_FACE_NOUN = {4: "squares", 5: "pentagons", 3: "triangles"}
_CELL_NOUN = {"tesseract": "cubes", "120-cell": "dodecahedrons",
              "600-cell": "tetrahedrons"}


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1 instead of argparse's 2
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="polychora",
                     description="Exact 4-polytope toolkit: construction, "
                                 "incidence, measures, projection, tables.")
    sub = parser.add_subparsers(dest="command", required=True,
                                parser_class=_Parser)

    gen = sub.add_parser("generate", help="write a vertex coordinate CSV")
    gen.add_argument("name")
    gen.add_argument("--unit-edge", action="store_true")
    gen.add_argument("--exact", action="store_true")
    gen.add_argument("--out", required=True)
    gen.set_defaults(func=_cmd_generate)

    stats = sub.add_parser("stats", help="composition/feature/measure table")
    stats.add_argument("name")
    stats.add_argument("--json", action="store_true")
    stats.set_defaults(func=_cmd_stats)

    proj = sub.add_parser("project", help="2D wireframe projection")
    proj.add_argument("name")
    proj.add_argument("--format", choices=("svg", "csv", "png"), default="svg")
    proj.add_argument("--out")
    proj.add_argument("--width", type=int, default=800)
    proj.add_argument("--height", type=int, default=800)
    proj.add_argument("--stroke", default="black")
    proj.add_argument("--labels", action="store_true")
    proj.set_defaults(func=_cmd_project)

    solve = sub.add_parser("solve", help="four-sphere vertex location")
    solve.add_argument("--centers", required=True)
    solve.add_argument("--a", type=float, required=True)
    solve.add_argument("--b", type=float, required=True)
    solve.set_defaults(func=_cmd_solve)

    pole = sub.add_parser("pole", help="rotation-group pole-number table")
    pole.add_argument("name")
    pole.set_defaults(func=_cmd_pole)

    val = sub.add_parser("validate", help="errata report for a data table")
    val.add_argument("--vertices", required=True)
    val.add_argument("--joints", required=True)
    val.add_argument("--canonical")
    val.add_argument("--report")
    val.add_argument("--strict", action="store_true")
    val.set_defaults(func=_cmd_validate)

    exp = sub.add_parser("export", help="write the incidence complex as JSON")
    exp.add_argument("name")
    exp.add_argument("--unit-edge", action="store_true")
    exp.add_argument("--out", required=True)
    exp.set_defaults(func=_cmd_export)

    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_generate(args) -> int:
    poly = catalog.polytope(args.name)
    if args.unit_edge:
        poly = build.normalize_unit_edge(poly)
    _emit(tables.write_vertices_csv(poly, exact=args.exact), args.out)
    return 0


def _cmd_stats(args) -> int:
    name = catalog.normalize_name(args.name)
    cx = catalog.metric_complex(name)
    rep = measure.metrics_report(cx)
    profile = incidence.incidence_profile(cx)
    n0, n1, n2, n3 = cx.counts
    d = cx.polytope.descriptor
    payload = {
        "name": name,
        "schlafli": [d.p, d.q, d.r],
        "counts": {"vertices": n0, "edges": n1, "faces": n2, "cells": n3},
        "feature": {
            "edges_per_vertex": profile.edges_per_vertex,
            "faces_per_edge": profile.faces_per_edge,
            "cells_per_edge": profile.cells_per_edge,
            "cells_per_vertex": profile.cells_per_vertex,
            "cells_per_face": profile.cells_per_face,
        },
        "angles_deg": {
            "edges": rep.angle_edges_deg,
            "faces": rep.angle_faces_deg,
            "cells": rep.angle_cells_deg,
        },
        "boundary_content": rep.boundary_content,
        "hypervolume": rep.hypervolume,
        "inradius": rep.inradius,
    }
    if args.json:
        print(json.dumps(payload))
        return 0
    face_noun = _FACE_NOUN[d.p]
    cell_noun = _CELL_NOUN[name]
    left = [
        f"{n0} vertices",
        f"{n1} edges",
        f"{n2} {face_noun}",
        f"{n3} {cell_noun}",
        "", "",
    ]
    mid = [
        f"{profile.edges_per_vertex} edges meet at a vertex",
        f"{profile.faces_per_edge} {face_noun} meet at an edge",
        f"{profile.cells_per_face} {cell_noun} meet at a face",
        "", "", "",
    ]
    right = [
        f"angle between edges   {rep.angle_edges_deg:.10f}",
        f"angle between faces   {rep.angle_faces_deg:.10f}",
        f"angle between cells   {rep.angle_cells_deg:.10f}",
        f"boundary content      {rep.boundary_content:.10f} a^3",
        f"hypervolume           {rep.hypervolume:.10f} a^4",
        f"inradius              {rep.inradius:.10f} a",
    ]
    print(f"Designation: {name}    Schlafli symbol: {{{d.p}, {d.q}, {d.r}}}")
    print(f"{'I. Composition':<22}{'II. Feature':<40}III. Numerical value")
    for a, b, c in zip(left, mid, right):
        print(f"{a:<22}{b:<40}{c}")
    return 0


def _cmd_project(args) -> int:
    name = catalog.normalize_name(args.name)
    cx = catalog.complex_for(name)
    wf = projection.project_polytope(cx.polytope, cx.edges)
    if args.format == "csv":
        _emit(projection.emit_csv(wf), args.out)
    elif args.format == "svg":
        _emit(projection.emit_svg(wf, width=args.width, height=args.height,
                               stroke=args.stroke, labels=args.labels),
              args.out)
    else:
        if not args.out:
            raise _UsageError("--out is required for --format png")
        projection.render_png(wf, args.out, width=args.width, height=args.height,
                           stroke=args.stroke, labels=args.labels)
    return 0


def _read_centers(path: str) -> list[tuple[float, float, float, float]]:
    rows: list[tuple[float, float, float, float]] = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        fields = line.split(",")
        if fields[0].lower() in ("index", "x1"):
            continue
        if len(fields) == 5:  # index column present
            fields = fields[1:]
        if len(fields) != 4:
            raise _UsageError(f"{path}:{lineno}: expected 4 coordinates")
        try:
            rows.append(tuple(float(x) for x in fields))
        except ValueError as exc:
            raise _UsageError(f"{path}:{lineno}: {exc}") from exc
    return rows


def _cmd_solve(args) -> int:
    centers = _read_centers(args.centers)
    if len(centers) != 4:
        raise _UsageError(f"{args.centers}: expected 4 centers, got {len(centers)}")
    system = SphereSystem(centers=tuple(centers), a=args.a, b=args.b)
    for root in solve_vertex(system):
        print(",".join(f"{x:.10f}" for x in root))
    return 0


def _cmd_pole(args) -> int:
    name = catalog.normalize_name(args.name)
    cx = catalog.complex_for(name)
    profile = symmetry.symmetry_profile(cx)
    ident = symmetry.pole_identity(profile)
    d = cx.polytope.descriptor
    print(f"Polytope: {name}    Schlafli symbol: {{{d.p}, {d.q}, {d.r}}}")
    print(f"{'rotation group order n':<34}{profile.n}")
    print(f"{'cell count':<34}{profile.cell_count}")
    print(f"{'orbit sizes (vertices,edges,faces)':<34}"
          f"{profile.v[0]} {profile.v[1]} {profile.v[2]}")
    print(f"{'stabilizer orders':<34}"
          f"{profile.n_stab[0]} {profile.n_stab[1]} {profile.n_stab[2]}")
    print(f"{'alpha (incident cells)':<34}"
          f"{profile.alpha[0]} {profile.alpha[1]} {profile.alpha[2]}")
    print(f"{'left  2(n - cells)':<34}{ident.left}")
    print(f"{'right sum over orbits':<34}{ident.right}")
    print(f"Result: {'equals' if ident.holds else 'differs'}")
    return 0


def _cmd_validate(args) -> int:
    records = tables.load_table(args.vertices)
    joints = tables.load_joints(args.joints)
    canonical = catalog.polytope(args.canonical) if args.canonical else None
    report = tables.validate(records, joints, canonical)
    diff = tables.cross_check_adjacency(records, joints)
    if args.report:
        Path(args.report).write_text(json.dumps(report.to_dict()))
    print(f"rows: {len(records)}    joint lists: {len(joints)}")
    print(f"radius outliers: {len(report.radius_outliers)}")
    print(f"edge outliers: {len(report.edge_outliers)}")
    print(f"asymmetric pairs: {len(report.asymmetric_pairs)}")
    dups = " ".join(f"({i},{j})" for i, j in report.duplicate_rows)
    print(f"duplicate rows: {len(report.duplicate_rows)}"
          + (f": {dups}" if dups else ""))
    print(f"degree violations: {len(report.degree_violations)}")
    print(f"spectrum match fraction: {report.spectrum_match_fraction:.10f}")
    print(f"adjacency recomputation: agree={diff.agree} "
          f"missing={len(diff.missing)} extra={len(diff.extra)}")
    if report.has_findings and args.strict:
        return 2
    return 0


def _cmd_export(args) -> int:
    name = catalog.normalize_name(args.name)
    if args.unit_edge:
        cx = catalog.metric_complex(name)
    else:
        cx = catalog.complex_for(name)
    Path(args.out).write_text(incidence.complex_to_json(cx))
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (UnknownPolytopeError, tables.TableFormatError,
            DegenerateCentersError, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
