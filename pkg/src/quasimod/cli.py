"""Command-line front end.

Every command reads JSON, writes a deterministic JSON (or CSV) report, and
exits 0 when all checks pass, 1 when violations were found, and 2 on usage
or input errors.  Verbosity is controlled by the QUASIMOD_LOG environment
variable (a logging level name such as DEBUG).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys

from .axioms import check_axioms, convexity_check
from .completeness import (SampledSequence, classify_cauchy,
                           heine_borel_report)
from .conorms import conorm_from_name
from .extreal import format_ext
from .gauges import Regime, gauge_from_json
from .graphs import (asymmetry_index, distance_matrix, graph_from_json,
                     graph_gauge)
from .luxemburg import (NonmonotoneGaugeError, luxemburg_distance,
                        symmetrized_luxemburg)
from .orlicz import (DiscreteMeasureSpace, OneSidedPair, modular,
                     luxemburg_norm, one_sided_gauges, orlicz_from_json,
                     parse_function, quasi_metric_from_gauges,
                     unit_ball_check)
from .envelopes import PartialFunction, lower_envelope, upper_envelope
from .luxemburg import quasi_pseudometric_check
from .profiles import ScaleGrid
from .topology import critical_thresholds, verify_join_equality

log = logging.getLogger("quasimod.cli")

DEFAULT_SEED = 0


class InputError(Exception):
    """Bad input file or document; maps to exit code 2."""


def _load_json(path: str) -> object:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"input file not found: {path}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: line {exc.lineno} "
                         f"column {exc.colno}: {exc.msg}") from None


def _emit(report: dict, output: str | None, matrix=None) -> None:
    if output and output.endswith(".csv") and matrix is not None:
        buf = io.StringIO()
        writer = csv.writer(buf)
        points, rows = matrix
        writer.writerow([""] + [str(p) for p in points])
        for p, row in zip(points, rows):
            writer.writerow([str(p)] + [format_ext(v) for v in row])
        text = buf.getvalue()
    else:
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _parse_grid(raw: str | None) -> ScaleGrid | None:
    if raw is None:
        return None
    try:
        return ScaleGrid(tuple(float(s) for s in raw.split(",")))
    except ValueError as exc:
        raise InputError(f"bad --grid value {raw!r}: {exc}") from None


def _gauge_from_doc(doc, args) -> object:
    if not isinstance(doc, dict):
        raise InputError("gauge document must be a JSON object")
    try:
        g = gauge_from_json(doc)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad gauge document: {exc}") from None
    grid = _parse_grid(args.grid)
    if grid is not None:
        g = g.tabulated(grid)
    if getattr(args, "conorm", None) and g.regime is Regime.CONORM:
        g = type(g)(regime=g.regime, points=g.points,
                    conorm=conorm_from_name(args.conorm), grid=g.grid,
                    claims_symmetric=g.claims_symmetric,
                    claims_convex=g.claims_convex, name=g.name,
                    warnings=g.warnings, table=g.table)
    return g


def _resolve_points(ids, points):
    by_str = {str(p): p for p in points}
    out = []
    for i in ids:
        key = i if i in points else by_str.get(str(i))
        if key is None:
            raise InputError(f"unknown point id {i!r}")
        out.append(key)
    return out


def cmd_check_axioms(args) -> int:
    g = _gauge_from_doc(_load_json(args.input), args)
    report = check_axioms(g)
    doc = {"command": "check-axioms", "axioms": report.to_json()}
    ok = report.ok
    if g.regime is Regime.ADDITIVE and g.claims_convex:
        conv = convexity_check(g)
        doc["convexity"] = conv.to_json()
        ok = ok and conv.ok
    _emit(doc, args.output)
    return 0 if ok else 1


def cmd_topology(args) -> int:
    g = _gauge_from_doc(_load_json(args.input), args)
    report = verify_join_equality(g)
    doc = {"command": "topology"} | report.to_json()
    _emit(doc, args.output)
    return 0 if report.equal else 1


def cmd_cover(args) -> int:
    raw = _load_json(args.input)
    if isinstance(raw, dict) and "space" in raw:
        g = _gauge_from_doc(raw["space"], args)
        sequence = _resolve_points(raw.get("sequence", []), g.points)
    else:
        g = _gauge_from_doc(raw, args)
        sequence = []
    hb = heine_borel_report(g)
    doc = {"command": "cover", "heine_borel": hb.to_json()}
    if sequence:
        seq = SampledSequence(tuple(sequence))
        rows = []
        for r, t in critical_thresholds(g).pairs():
            c = classify_cauchy(seq, g, r, t)
            rows.append({"radius": r, "scale": t, "kind": c.kind,
                         "i0": c.i0, "forward_i0": c.forward_i0,
                         "backward_i0": c.backward_i0})
        doc["cauchy"] = rows
    _emit(doc, args.output)
    return 0 if hb.all_composed_ok else 1


def cmd_luxemburg(args) -> int:
    g = _gauge_from_doc(_load_json(args.input), args)
    if g.regime is not Regime.ADDITIVE:
        raise InputError("luxemburg distances need an additive-regime gauge")
    values, sym = {}, {}
    rows = []
    try:
        for x in g.points:
            row = []
            for y in g.points:
                v = luxemburg_distance(g, x, y, tol=args.tol).value
                values[f"{x}|{y}"] = format_ext(v)
                row.append(v)
            rows.append(row)
        for x in g.points:
            for y in g.points:
                sym[f"{x}|{y}"] = format_ext(
                    symmetrized_luxemburg(g, x, y, tol=args.tol))
    except NonmonotoneGaugeError as exc:
        _emit({"command": "luxemburg", "error": str(exc)}, args.output)
        return 1
    doc = {"command": "luxemburg", "tol": args.tol,
           "distances": values, "symmetrized": sym}
    _emit(doc, args.output, matrix=(g.points, rows))
    return 0


def cmd_graph(args) -> int:
    try:
        g = graph_from_json(_load_json(args.input))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad graph document: {exc}") from None
    fwd = distance_matrix(g)
    bwd = distance_matrix(g, backward=True)
    doc = {"command": "graph",
           "forward": {f"{x}|{y}": format_ext(fwd[(x, y)])
                       for x in g.vertices for y in g.vertices},
           "backward": {f"{x}|{y}": format_ext(bwd[(x, y)])
                        for x in g.vertices for y in g.vertices},
           "asymmetry_index": asymmetry_index(g)}
    ok = True
    grid = _parse_grid(args.grid)
    if grid is not None:
        report = check_axioms(graph_gauge(g, grid=grid))
        doc["axioms"] = report.to_json()
        ok = report.ok
    rows = [[fwd[(x, y)] for y in g.vertices] for x in g.vertices]
    _emit(doc, args.output, matrix=(g.vertices, rows))
    return 0 if ok else 1


def cmd_orlicz(args) -> int:
    raw = _load_json(args.input)
    try:
        space = DiscreteMeasureSpace.from_json(raw["space"])
        functions = {fid: parse_function(doc, space)
                     for fid, doc in raw.get("functions", {}).items()}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad orlicz document: {exc}") from None
    doc = {"command": "orlicz", "tol": args.tol}
    ok = True
    try:
        if "phi" in raw:
            phi = orlicz_from_json(raw["phi"], space)
            out = {}
            for fid in sorted(functions, key=str):
                f = functions[fid]
                ub = unit_ball_check(space, phi, f, args.tol)
                out[str(fid)] = {"modular": modular(space, phi, f),
                                 "norm": luxemburg_norm(space, phi, f, args.tol),
                                 "unit_ball": ub.to_json()}
                ok = ok and ub.ok
            doc["phi"] = out
        if "psi1" in raw and "psi2" in raw:
            pair = OneSidedPair(orlicz_from_json(raw["psi1"], space),
                                orlicz_from_json(raw["psi2"], space))
            sides, dists = {}, {}
            for fid in sorted(functions, key=str):
                np_, nm, ns = one_sided_gauges(space, pair, functions[fid],
                                               args.tol)
                sides[str(fid)] = {"plus": np_, "minus": nm, "sym": ns}
            for fa in sorted(functions, key=str):
                for fb in sorted(functions, key=str):
                    if fa == fb:
                        continue
                    dp, dm = quasi_metric_from_gauges(
                        space, pair, functions[fa], functions[fb], args.tol)
                    dists[f"{fa}|{fb}"] = {"plus": dp, "minus": dm}
            doc["one_sided"] = {"norms": sides, "distances": dists}
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad orlicz document: {exc}") from None
    _emit(doc, args.output)
    return 0 if ok else 1


def cmd_envelope(args) -> int:
    raw = _load_json(args.input)
    try:
        points = list(raw["points"])
        d = {}
        for key, v in raw["distance"].items():
            sx, sep, sy = key.partition("|")
            if not sep:
                raise ValueError(f"bad distance key {key!r}")
            pair = tuple(_resolve_points([sx, sy], points))
            d[pair] = float(v)
        domain = _resolve_points(raw["domain"], points)
        values = {a: float(raw["values"][str(a)]) for a in domain}
        f = PartialFunction(tuple(domain), values, float(raw["lipschitz"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad envelope document: {exc}") from None
    metric_report = quasi_pseudometric_check(d, points)
    doc = {"command": "envelope",
           "distance_check": metric_report.to_json(),
           "upper": {str(x): v for x, v in upper_envelope(f, d, points).items()},
           "lower": {str(x): v for x, v in lower_envelope(f, d, points).items()}}
    _emit(doc, args.output)
    return 0 if metric_report.ok else 1


_COMMANDS = {
    "check-axioms": cmd_check_axioms,
    "topology": cmd_topology,
    "cover": cmd_cover,
    "luxemburg": cmd_luxemburg,
    "graph": cmd_graph,
    "orlicz": cmd_orlicz,
    "envelope": cmd_envelope,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasimod",
        description="Quasi-modular gauge analyses over finite data")
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--input", required=True, help="input JSON file")
    parser.add_argument("--output", help="report file (.json or .csv)")
    parser.add_argument("--tol", type=float, default=1e-9,
                        help="bisection tolerance (default 1e-9)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed echoed into reports (default 0)")
    parser.add_argument("--grid", help="comma-separated scales, e.g. 0.5,1,2")
    parser.add_argument("--conorm", choices=["max", "prob_sum", "bounded_sum"],
                        help="override the gauge's conorm")
    parser.add_argument("--side", choices=["forward", "backward", "sym"],
                        default="forward", help="ball side where applicable")
    return parser


def main(argv=None) -> int:
    level = os.environ.get("QUASIMOD_LOG")
    if level:
        logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO))
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    if args.tol <= 0:
        parser.print_usage(sys.stderr)
        sys.stderr.write("quasimod: error: --tol must be positive\n")
        return 2
    try:
        return _COMMANDS[args.command](args)
    except InputError as exc:
        sys.stderr.write(f"quasimod: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
