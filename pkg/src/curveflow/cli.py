"""Command-line front end: every pipeline as a subcommand with file I/O.

Exit codes partition outcomes so scripts can branch on them:
0 success / verdict true, 1 bad input, 2 numerical failure,
3 verdict false, 4 geometric precondition (convexity) failure.

Flags override values from an optional JSON config file (``--config``), which
in turn overrides built-in defaults; the effective configuration is echoed
into every JSON report. ``CURVEFLOW_LOG`` (error|info|debug) sets verbosity.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from pathlib import Path

import numpy as np

from . import bonnesen as bn
from . import curves as cv
from . import flow as fl
from . import shrinker as sk
from . import support as sp
from .errors import (
    GeometricPreconditionError,
    InputError,
    NumericalError,
)
from .symmetrize import find_bisecting_chord, symmetrize

log = logging.getLogger("curveflow")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_NUMERICAL = 2
EXIT_VERDICT_FALSE = 3
EXIT_PRECONDITION = 4

_DEFAULTS = {
    "flow": {
        "output": ".",
        "t_max": None,
        "dt_factor": 0.25,
        "area_floor_rel": 1e-3,
        "stride": 1,
        "svg_every": 0,
        "format": "csv",
    },
    "shrink-verify": {"grid": 0, "tol": 1e-3, "output": None},
    "ode-shoot": {"tol": 1e-3, "output": None, "jobs": 1, "format": "csv"},
    "bonnesen": {"seed": 0, "tol": None, "output": None},
    "symmetrize": {"grid": 1024, "tol": 1e-8, "output": "."},
    "support": {"grid": 1024, "output": None},
}


def _setup_logging() -> None:
    level = {"error": logging.ERROR, "info": logging.INFO, "debug": logging.DEBUG}.get(
        os.environ.get("CURVEFLOW_LOG", "error").lower(), logging.ERROR
    )
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curveflow",
        description="curve shortening flow toolkit: flows, shrinker checks, "
        "support functions, Bonnesen chains, and symmetrization",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_input=True):
        if with_input:
            p.add_argument("--input", help="curve CSV file (x,y per line)")
        p.add_argument("--output", help="output directory or file")
        p.add_argument("--grid", type=int, help="support grid size (even, >= 16)")
        p.add_argument("--tol", type=float, help="tolerance knob")
        p.add_argument("--seed", type=int, help="seed for randomized algorithms")
        p.add_argument("--format", choices=["csv", "json", "svg"], help="output format")
        p.add_argument("--jobs", type=int, help="parallel workers for sweeps")
        p.add_argument("--config", help="JSON config file (flags override it)")

    p_flow = sub.add_parser("flow", help="time-step the curve shortening flow")
    add_common(p_flow)
    p_flow.add_argument("--until-extinct", action="store_true",
                        help="run until the area floor (default behavior)")
    p_flow.add_argument("--t-max", dest="t_max", type=float, help="flow time horizon")
    p_flow.add_argument("--dt-factor", dest="dt_factor", type=float)
    p_flow.add_argument("--area-floor-rel", dest="area_floor_rel", type=float)
    p_flow.add_argument("--stride", type=int, help="trajectory CSV decimation")
    p_flow.add_argument("--svg-every", dest="svg_every", type=int,
                        help="write an SVG snapshot every N accepted steps")

    p_ver = sub.add_parser("shrink-verify", help="verify the self-shrinker relation")
    add_common(p_ver)

    p_ode = sub.add_parser("ode-shoot", help="period survey of the support ODE")
    add_common(p_ode, with_input=False)
    p_ode.add_argument("--amplitudes", help="comma-separated list of p0 values")

    p_bon = sub.add_parser("bonnesen", help="inradius/circumradius inequality chain")
    add_common(p_bon)

    p_sym = sub.add_parser("symmetrize", help="equal-area chord symmetrization")
    add_common(p_sym)

    p_sup = sub.add_parser("support", help="extract the support function")
    add_common(p_sup)
    return parser


def _effective_config(args: argparse.Namespace, keys) -> dict:
    config = dict(_DEFAULTS[args.command])
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            loaded = json.load(fh)
        for k, v in loaded.items():
            if k in config:
                config[k] = v
    for k in keys:
        v = getattr(args, k, None)
        if v is not None and v is not False:
            config[k] = v
    return config


def _read_curve(path) -> cv.ClosedCurve:
    if not path:
        raise InputError("--input is required")
    if not Path(path).exists():
        raise InputError(f"input file not found: {path}")
    return cv.read_curve_csv(path)


def _json_report(config: dict, payload: dict) -> str:
    return json.dumps({"config": config, "report": payload}, indent=2, sort_keys=False)


def _cmd_flow(args) -> int:
    config = _effective_config(
        args, ["output", "t_max", "dt_factor", "area_floor_rel", "stride", "svg_every", "format"]
    )
    curve = _read_curve(args.input)
    out = Path(config["output"])
    out.mkdir(parents=True, exist_ok=True)
    if config["format"] == "svg" and not config["svg_every"]:
        config["svg_every"] = 500
    t_max = config["t_max"] if config["t_max"] is not None else np.inf
    traj = fl.run_flow(
        curve,
        dt_factor=config["dt_factor"],
        area_floor_rel=config["area_floor_rel"],
        t_max=t_max,
        snapshot_stride=config["svg_every"] or None,
    )
    traj.write_csv(out / "trajectory.csv", stride=config["stride"])
    cv.write_curve_csv(traj.final_state.curve, out / "final_curve.csv")
    if config["svg_every"] or config["format"] == "svg":
        pts = curve.points
        lo, hi = pts.min(axis=0), pts.max(axis=0)
        margin = 0.05 * float(np.max(hi - lo))
        viewbox = (lo[0] - margin, lo[1] - margin,
                   hi[0] - lo[0] + 2 * margin, hi[1] - lo[1] + 2 * margin)
        for i, (_t, snap) in enumerate(traj.snapshots):
            fl.write_curve_svg(snap, out / f"snapshot_{i:06d}.svg", viewbox=viewbox)
    log.info("flow stopped (%s) at t = %.6g after %d steps",
             traj.stop_reason, traj.final_state.time, traj.final_state.step_count)
    print(
        _json_report(
            config,
            {
                "stop_reason": traj.stop_reason,
                "final_time": traj.final_state.time,
                "steps": traj.final_state.step_count,
                "final_area": traj.final_state.diagnostics.area,
                "final_length": traj.final_state.diagnostics.length,
            },
        )
    )
    return EXIT_OK


def _cmd_shrink_verify(args) -> int:
    config = _effective_config(args, ["grid", "tol", "output"])
    curve = _read_curve(args.input)
    report = sk.verify_shrinker(curve, tol=config["tol"])
    text = _json_report(config, json.loads(report.to_json()))
    print(text)
    if config["output"]:
        Path(config["output"]).mkdir(parents=True, exist_ok=True)
        (Path(config["output"]) / "shrinker_report.json").write_text(text + "\n")
    return EXIT_OK if report.verdict else EXIT_VERDICT_FALSE


def _cmd_ode_shoot(args) -> int:
    config = _effective_config(args, ["tol", "output", "jobs", "format"])
    raw = getattr(args, "amplitudes", None) or ""
    try:
        amplitudes = [float(tok) for tok in raw.split(",") if tok.strip()]
    except ValueError as exc:
        raise InputError(f"cannot parse --amplitudes {raw!r}: {exc}") from exc
    if not amplitudes:
        raise InputError("--amplitudes must list at least one p0 value")
    jobs = max(1, int(config["jobs"]))
    report = sk.classify_closed_solutions(amplitudes, tol=config["tol"], jobs=jobs)
    if config["format"] == "json":
        print(_json_report(config, json.loads(report.to_json())))
    else:
        sys.stdout.write(report.to_csv())
    if config["output"]:
        Path(config["output"]).mkdir(parents=True, exist_ok=True)
        report.write_csv(Path(config["output"]) / "classification.csv")
    return EXIT_OK


def _cmd_bonnesen(args) -> int:
    config = _effective_config(args, ["seed", "tol", "output"])
    curve = _read_curve(args.input)
    report = bn.bonnesen_chain(curve, tol=config["tol"], seed=config["seed"])
    text = _json_report(config, json.loads(report.to_json()))
    print(text)
    if config["output"]:
        Path(config["output"]).mkdir(parents=True, exist_ok=True)
        (Path(config["output"]) / "bonnesen_report.json").write_text(text + "\n")
    return EXIT_OK if report.chain_ok else EXIT_VERDICT_FALSE


def _cmd_symmetrize(args) -> int:
    config = _effective_config(args, ["grid", "tol", "output"])
    curve = _read_curve(args.input)
    shift = cv.centroid(curve)
    p = sp.support_from_curve(curve.translated(-shift), config["grid"])
    cut = find_bisecting_chord(p, tol=config["tol"])
    pair = symmetrize(p, cut)
    out = Path(config["output"])
    out.mkdir(parents=True, exist_ok=True)
    cv.write_curve_csv(pair.curve1.translated(shift), out / "symmetrized_1.csv")
    cv.write_curve_csv(pair.curve2.translated(shift), out / "symmetrized_2.csv")
    sidecar = json.loads(pair.sidecar_json())
    sidecar["omega0"] = [sidecar["omega0"][0] + shift[0], sidecar["omega0"][1] + shift[1]]
    text = _json_report(config, sidecar)
    (out / "symmetrize_report.json").write_text(text + "\n")
    print(text)
    return EXIT_OK


def _cmd_support(args) -> int:
    config = _effective_config(args, ["grid", "output"])
    curve = _read_curve(args.input)
    p = sp.support_from_curve(curve.translated(-cv.centroid(curve)), config["grid"])
    if config["output"]:
        out = Path(config["output"])
        out.mkdir(parents=True, exist_ok=True)
        sp.write_support_csv(p, out / "support.csv")
    else:
        for t, v in zip(p.theta, p.values):
            sys.stdout.write(f"{t:.17g},{v:.17g}\n")
    return EXIT_OK


_HANDLERS = {
    "flow": _cmd_flow,
    "shrink-verify": _cmd_shrink_verify,
    "ode-shoot": _cmd_ode_shoot,
    "bonnesen": _cmd_bonnesen,
    "symmetrize": _cmd_symmetrize,
    "support": _cmd_support,
}


def main(argv=None) -> int:
    _setup_logging()
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else 0
    try:
        return _HANDLERS[args.command](args)
    except (InputError, OSError, ValueError) as exc:
        log.error("input error: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GeometricPreconditionError as exc:
        log.error("precondition failed: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except NumericalError as exc:
        log.error("numerical failure: %s", exc)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
