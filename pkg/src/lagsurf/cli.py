"""Command-line surface tying the front, surface, classifier, and numeric
layers together.

Exit codes: 0 success, 1 domain error (invalid input, failed verification),
2 usage error.  All JSON output carries ``"schema": 1`` and sorted keys;
surface-build scripts are line-oriented verb lists that map one-to-one onto
the cobordism operations, so derivation witnesses double as runnable
scripts.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import sys
from dataclasses import asdict
from typing import Sequence

import numpy as np

from .classify import (
    InvalidSurface,
    massey_set,
    rationally_convex_set,
    stein_set,
)
from .dsl import FrontDocument, document_from_diagram, parse_front, serialize_front
from .fronts import FrontDiagram, FrontError, word
from .immersions import (
    boundary_curve,
    cone_family,
    convergence_to_cone,
    legendrian_residual,
    liouville_identity,
    pullback_residual,
    strip_family,
    strip_half_width,
    strip_identities,
    umbrella_family,
)
from .linking import DegenerateProjection, contact_framing, tangent_winding
from .moves import MoveDirection, MoveId, MoveInstance, apply_move, applicable_moves, equivalent_within
from .render import render_svg
from .surfaces import (
    SurfaceComplex,
    SurfaceError,
    cone_cap,
    euler_number,
    genus_chain,
    glue_mobius_three_umbrellas,
    klein_base,
    mark_umbrella,
    mobius_smoothing,
    one_handle,
    split_cone,
    standard_pieces,
)
from .table import ClosureMismatch, Rule, derive_table, verify_closure

_DOMAIN_ERRORS = (FrontError, SurfaceError, ClosureMismatch, ValueError, DegenerateProjection)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _load_diagram(path: str) -> tuple[str, FrontDiagram]:
    doc = parse_front(_read_text(path))
    return doc.name, doc.to_diagram()


# -- front ---------------------------------------------------------------


def _front_stats(args) -> int:
    name, diagram = _load_diagram(args.file)
    _emit_json(
        {
            "schema": 1,
            "name": name,
            "notation": diagram.notation(),
            "components": diagram.component_count,
            "invariants": [list(pair) for pair in diagram.classical_invariants()],
            "linking": [list(row) for row in diagram.linking_matrix()],
            "max_strands": diagram.max_strands,
            "cusps": len(diagram.cusps()),
            "crossings": len(diagram.crossings()),
        }
    )
    return 0


def _front_render(args) -> int:
    _, diagram = _load_diagram(args.file)
    svg = render_svg(diagram)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def _front_check(args) -> int:
    name, diagram = _load_diagram(args.file)
    print(f"ok: {name} components={diagram.component_count}")
    return 0


# -- moves ---------------------------------------------------------------


def _parse_move(text: str) -> MoveInstance:
    try:
        head, tail = text.split("@", 1)
        index, pos, direction = tail.split(":")
        return MoveInstance(
            MoveId(head), (int(index), int(pos)), MoveDirection(direction)
        )
    except (ValueError, KeyError) as err:
        raise ValueError(f"bad move spec {text!r} "
                         "(want id@index:pos:forward|backward)") from err


def _moves_list(args) -> int:
    _, diagram = _load_diagram(args.file)
    for move in applicable_moves(diagram):
        print(move)
    return 0


def _moves_apply(args) -> int:
    _, diagram = _load_diagram(args.file)
    for spec in args.move:
        diagram = apply_move(diagram, _parse_move(spec))
    print(diagram.notation() or "(empty)")
    return 0


def _moves_equiv(args) -> int:
    _, first = _load_diagram(args.first)
    _, second = _load_diagram(args.second)
    witness = equivalent_within(first, second, args.depth)
    if witness is None:
        print(f"no witness found within depth {args.depth}")
        return 1
    if not witness:
        print("identical")
        return 0
    for move in witness:
        print(move)
    return 0


# -- surface scripts -----------------------------------------------------


def _script_int(token: str, lineno: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ValueError(f"script line {lineno}: expected an integer, got {token!r}")


def run_surface_script(text: str) -> SurfaceComplex:
    """Execute a line-oriented build script and return the final complex."""
    surface: SurfaceComplex | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        cut = raw.find("#")
        tokens = (raw[:cut] if cut >= 0 else raw).split()
        if not tokens:
            continue
        verb, rest = tokens[0], tokens[1:]
        try:
            if verb in ("klein", "genus", "piece"):
                if surface is not None:
                    raise ValueError("a script has exactly one starter line")
                if verb == "klein":
                    surface = klein_base()
                elif verb == "genus":
                    surface = genus_chain(_script_int(rest[0], lineno))
                else:
                    pieces = standard_pieces()
                    if rest[0] not in pieces:
                        raise ValueError(
                            f"unknown piece {rest[0]!r}; have {sorted(pieces)}"
                        )
                    surface = pieces[rest[0]]
                continue
            if surface is None:
                raise ValueError("script must start with klein, genus, or piece")
            if verb == "split":
                surface = split_cone(surface, _script_int(rest[0], lineno))
            elif verb == "smooth":
                surface = mobius_smoothing(surface, _script_int(rest[0], lineno))
            elif verb == "glue3":
                surface = glue_mobius_three_umbrellas(surface)
            elif verb == "mark":
                surface = mark_umbrella(surface, _script_int(rest[0], lineno))
            elif verb == "cap":
                model = FrontDiagram(word(" ".join(rest[1:])))
                surface = cone_cap(surface, _script_int(rest[0], lineno), model)
            elif verb == "handle":
                surface = one_handle(
                    surface, _script_int(rest[0], lineno), _script_int(rest[1], lineno)
                )
            else:
                raise ValueError(f"unknown verb {verb!r}")
        except IndexError:
            raise ValueError(f"script line {lineno}: {verb} is missing arguments")
        except (FrontError, SurfaceError) as err:
            raise type(err)(f"script line {lineno}: {err}") from err
    if surface is None:
        raise ValueError("empty script")
    return surface


def _surface_payload(surface: SurfaceComplex) -> dict:
    return {
        "schema": 1,
        "chi": surface.chi,
        "orientable": surface.orientable,
        "closed": surface.is_closed,
        "euler": euler_number(surface) if surface.is_closed else None,
        "boundary": surface.boundary.notation(),
        "boundary_components": surface.boundary.component_count,
        "singularities": [
            [s.model_tb, s.model_rot, s.umbrella] for s in surface.singularities
        ],
    }


def _surface_build(args) -> int:
    _emit_json(_surface_payload(run_surface_script(_read_text(args.script))))
    return 0


def _surface_euler(args) -> int:
    print(euler_number(run_surface_script(_read_text(args.script))))
    return 0


# -- classify / table ------------------------------------------------------


def witness_script(path: Sequence[Rule]) -> list[str]:
    """Render a derivation witness as surface-script lines."""
    return ["klein"] + [
        "glue3" if rule is Rule.VERTICAL else "smooth 0" for rule in path
    ]


def _classify(args) -> int:
    chi, e, orientable = args.chi, args.euler, args.orientable
    rc = e in rationally_convex_set(chi, orientable)
    st = e in stein_set(chi, orientable)
    ms = e in massey_set(chi, orientable)
    umbrella_points = -chi - e if rc else None
    if args.format == "json":
        _emit_json(
            {
                "schema": 1,
                "chi": chi,
                "euler": e,
                "orientable": orientable,
                "rationally_convex": rc,
                "stein": st,
                "massey": ms,
                "umbrella_points": umbrella_points,
            }
        )
    else:
        print(f"rationally_convex: {str(rc).lower()}; stein: {str(st).lower()}")
        tail = "none" if umbrella_points is None else umbrella_points
        print(f"massey: {str(ms).lower()}; umbrella_points: {tail}")
    return 0


def _table(args) -> int:
    graph = derive_table(args.min_chi)
    order = sorted(graph.nodes, key=lambda n: (-n.chi, n.euler))
    if args.format == "json":
        _emit_json(
            {
                "schema": 1,
                "min_chi": args.min_chi,
                "rows": [
                    {"chi": chi, "euler": list(graph.row(chi))}
                    for chi in range(0, args.min_chi - 1, -1)
                ],
                "witnesses": [
                    {
                        "chi": node.chi,
                        "euler": node.euler,
                        "script": witness_script(graph.witnesses[node]),
                    }
                    for node in order
                ],
            }
        )
    else:
        for chi in range(0, args.min_chi - 1, -1):
            cells = " ".join(str(e) for e in graph.row(chi))
            print(f"chi {chi:>3}: {cells}")
    return 0


def _table_check(args) -> int:
    report = verify_closure(args.min_chi)
    print(f"closure verified to chi {report.min_chi}: {report.node_count} nodes")
    return 0


# -- verify ----------------------------------------------------------------


def _report_dict(check: str, report) -> dict:
    return {"check": check, **asdict(report)}


def _write_grid_csv(path: str, family, first, second) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["a", "b", "q1", "p1", "q2", "p2"])
        for a in first:
            row = family.evaluator(np.full_like(second, a), second)
            for b, point in zip(second, row):
                writer.writerow([f"{a:.6f}", f"{b:.6f}", *(f"{c:.9f}" for c in point)])


def _write_curve_csv(path: str, s, points) -> None:
    with open(path, "w", newline="", encoding="utf-8") as handle:
        writer = csv.writer(handle)
        writer.writerow(["s", "q1", "p1", "q2", "p2"])
        for value, point in zip(s, points):
            writer.writerow([f"{value:.6f}", *(f"{c:.9f}" for c in point)])


def _verify(args) -> int:
    reports: list[dict] = []
    extra: dict = {}
    if args.family == "strip":
        half = strip_half_width(args.a)
        family = strip_family(args.a)
        first = np.linspace(0.0, math.pi, args.grid)
        second = np.linspace(-half, half, args.grid)
        reports.append(
            _report_dict(
                "pullback",
                pullback_residual(family, first, second, args.step, args.tolerance),
            )
        )
        reports.append(_report_dict("identities", strip_identities(args.a)))
        extra["a"] = args.a
    elif args.family == "cone":
        family = cone_family()
        first = np.linspace(0.0, math.pi, args.grid)
        second = np.linspace(0.1, 1.0, args.grid)
        reports.append(
            _report_dict(
                "pullback",
                pullback_residual(family, first, second, args.step, args.tolerance),
            )
        )
    elif args.family == "umbrella":
        family = umbrella_family()
        first = second = np.linspace(-1.0, 1.0, args.grid)
        reports.append(
            _report_dict(
                "pullback",
                pullback_residual(family, first, second, args.step, args.tolerance),
            )
        )
        reports.append(_report_dict("liouville", liouville_identity()))
    elif args.family == "curve":
        reports.append(
            _report_dict("legendrian", legendrian_residual(tolerance=args.tolerance))
        )
        s = np.linspace(0.0, 2 * math.pi, 512, endpoint=False)
        curve = boundary_curve(s)
        extra["framing"] = contact_framing(curve)
        extra["winding"] = tangent_winding(curve)
    else:  # convergence
        report = convergence_to_cone([0.2, 0.1, 0.05])
        ok = all(0.2 <= r <= 0.3 for r in report.ratios)
        reports.append(
            {
                "check": "convergence",
                "a_values": list(report.a_values),
                "distances": list(report.distances),
                "ratios": list(report.ratios),
                "passed": ok,
            }
        )

    if args.csv:
        if args.family in ("strip", "cone", "umbrella"):
            _write_grid_csv(args.csv, family, first, second)
        elif args.family == "curve":
            s = np.linspace(0.0, 2 * math.pi, 512, endpoint=False)
            _write_curve_csv(args.csv, s, boundary_curve(s))

    passed = all(r["passed"] for r in reports)
    _emit_json({"schema": 1, "family": args.family, "passed": passed, **extra,
                "reports": reports})
    return 0 if passed else 1


# -- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lagsurf",
        description="Front words, singular-surface assembly, and numeric checks.",
    )
    parser.add_argument("--seed", type=int, default=None,
                        help="seed randomized subroutines")
    sub = parser.add_subparsers(dest="command", required=True)

    front = sub.add_parser("front", help="front-word documents")
    front_sub = front.add_subparsers(dest="action", required=True)
    p = front_sub.add_parser("stats", help="invariants as JSON")
    p.add_argument("file")
    p.set_defaults(handler=_front_stats)
    p = front_sub.add_parser("render", help="deterministic SVG")
    p.add_argument("file")
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_front_render)
    p = front_sub.add_parser("check", help="validate a document")
    p.add_argument("file")
    p.set_defaults(handler=_front_check)

    moves = sub.add_parser("moves", help="diagram rewrites")
    moves_sub = moves.add_subparsers(dest="action", required=True)
    p = moves_sub.add_parser("list", help="applicable moves")
    p.add_argument("file")
    p.set_defaults(handler=_moves_list)
    p = moves_sub.add_parser("apply", help="apply move specs in order")
    p.add_argument("file")
    p.add_argument("move", nargs="+")
    p.set_defaults(handler=_moves_apply)
    p = moves_sub.add_parser("equiv", help="search for a rewrite witness")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--depth", type=int, default=3)
    p.set_defaults(handler=_moves_equiv)

    surface = sub.add_parser("surface", help="run build scripts")
    surface_sub = surface.add_subparsers(dest="action", required=True)
    p = surface_sub.add_parser("build", help="run a script, print the summary")
    p.add_argument("script")
    p.set_defaults(handler=_surface_build)
    p = surface_sub.add_parser("euler", help="run a script, print the twist number")
    p.add_argument("script")
    p.set_defaults(handler=_surface_euler)

    p = sub.add_parser("classify", help="membership in the realization sets")
    p.add_argument("--chi", type=int, required=True)
    p.add_argument("--euler", type=int, required=True)
    p.add_argument("--orientable", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_classify)

    p = sub.add_parser("table", help="derive the realization grid")
    p.add_argument("--min-chi", type=int, default=-5)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--check", action="store_true",
                   help="verify the closure against the classifier instead")
    p.set_defaults(handler=lambda args: _table_check(args) if args.check else _table(args))

    p = sub.add_parser("verify", help="numeric residual checks")
    p.add_argument("family", choices=("strip", "cone", "umbrella", "curve", "convergence"))
    p.add_argument("--a", type=float, default=0.5)
    p.add_argument("--grid", type=int, default=64)
    p.add_argument("--step", type=float, default=1e-4)
    p.add_argument("--tolerance", type=float, default=1e-6)
    p.add_argument("--csv", default=None)
    p.set_defaults(handler=_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.seed is not None:
        random.seed(args.seed)
    try:
        return args.handler(args)
    except _DOMAIN_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
