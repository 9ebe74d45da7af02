"""Command-line front end.

    hmwkit verify
    hmwkit phase --config FILE [--csv]
    hmwkit sweep --config FILE --param NAME --from A --to B --steps N [--jobs J]

Exit codes: 0 ok, 2 config error, 3 singular path, 4 tolerance not met,
5 internal error (also: a verify suite failed -> 1).
"""

from __future__ import annotations

import argparse
import copy
import csv
import io
import json
import math
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from . import __version__, verify as verify_mod
from .config import ConfigError, ScenarioConfig, load_config, parse_config
from .fields import SingularPoint
from .phase import total_phase
from .quadrature import ToleranceNotMet

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_CONFIG = 2
EXIT_SINGULAR = 3
EXIT_TOLERANCE = 4
EXIT_INTERNAL = 5

PHASE_CSV_COLUMNS = ("phi_hmw", "delta_ncs", "delta_ncps", "total",
                     "err_phi_hmw", "err_delta_ncs", "err_delta_ncps",
                     "flux_phase", "deviation", "flagged")
SWEEP_CSV_COLUMNS = ("param", "value", "phi_hmw", "delta_ncs", "delta_ncps", "total",
                     "err_phi_hmw", "err_delta_ncs", "err_delta_ncps", "error")
SWEEP_PARAMS = ("theta", "alpha", "radius", "lambda_m", "k", "s3")
_PARAM_ALIASES = {"|k|": "k", "s3-list": "s3", "s3_list": "s3"}


def build_report(cfg: ScenarioConfig) -> dict:
    """Full phase report for a validated config (raises on singular / tolerance)."""
    sc = cfg.build()
    b = total_phase(sc.field, sc.path, sc.particle, sc.params, sc.quad)
    deviation = b.phi_hmw - b.flux_phase
    tolerance = 10.0 * b.errors["phi_hmw"] + sc.quad.abs_tol
    agrees = abs(deviation) <= tolerance
    return {
        "schema": SCHEMA_VERSION,
        "version": __version__,
        "inputs": cfg.echo(),
        "nc": {"theta": float(sc.params.theta), "alpha": float(sc.params.alpha),
               "theta_bar": float(sc.params.theta_bar)},
        "phases": {"phi_hmw": b.phi_hmw, "delta_ncs": b.delta_ncs,
                   "delta_ncps": b.delta_ncps, "total": b.total},
        "terms": dict(b.terms),
        "errors": dict(b.errors),
        "cross_check": {"flux_phase": b.flux_phase, "winding": b.winding,
                        "deviation": deviation, "tolerance": tolerance, "agrees": agrees},
        "quadrature": {"order": sc.quad.order, "abs_tol": sc.quad.abs_tol,
                       "rel_tol": sc.quad.rel_tol, "max_evaluations": sc.quad.max_evaluations,
                       "evaluations": b.evaluations},
        "flagged": not agrees,
    }


def dump_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2) + "\n"


def _fmt(x) -> str:
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return repr(x)
    return str(x)


def report_csv(report: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(PHASE_CSV_COLUMNS)
    ph, err, cc = report["phases"], report["errors"], report["cross_check"]
    w.writerow([_fmt(v) for v in (
        ph["phi_hmw"], ph["delta_ncs"], ph["delta_ncps"], ph["total"],
        err["phi_hmw"], err["delta_ncs"], err["delta_ncps"],
        cc["flux_phase"], cc["deviation"], report["flagged"])])
    return buf.getvalue()


# sweeps

def sweep_values(param: str, start: float, stop: float, steps: int) -> list:
    if steps < 2:
        raise ConfigError("--steps: must be >= 2")
    vals = np.linspace(start, stop, steps)
    if param == "s3":
        out = []
        for v in vals:
            if v != round(v) or int(round(v)) not in (-1, 0, 1):
                raise ConfigError(f"--param s3: value {v:g} is not one of -1, 0, 1")
            out.append(int(round(v)))
        return out
    return [float(v) for v in vals]


def apply_param(base: dict, param: str, value) -> dict:
    data = copy.deepcopy(base)
    if param == "theta":
        data.setdefault("nc", {})["theta"] = value
    elif param == "alpha":
        nc = data.setdefault("nc", {})
        nc.pop("theta_bar", None)
        nc["alpha"] = value
    elif param == "radius":
        if data.get("path", {}).get("kind") != "circle":
            raise ConfigError("--param radius: only valid for circle paths")
        data["path"]["radius"] = value
    elif param == "lambda_m":
        data["field"]["lambda_m"] = value
    elif param == "k":
        part = data["particle"]
        if "k" in part:
            kx, ky = part["k"]
            n = math.hypot(kx, ky)
            ux, uy = (kx / n, ky / n) if n else (1.0, 0.0)
            part["k"] = [value * ux, value * uy]
        elif "speed" in part:
            part["speed"] = value / part.get("mass", 1.0)
        else:
            part["k"] = [value, 0.0]
    elif param == "s3":
        data["particle"]["s3"] = value
    else:
        raise ConfigError(f"--param: unknown parameter {param!r}")
    return data


def _sweep_row(args) -> list[str]:
    param, value, data = args
    try:
        rep = build_report(parse_config(data))
    except (ConfigError, SingularPoint, ToleranceNotMet, ValueError) as exc:
        return [param, _fmt(value)] + [""] * 7 + [f"{type(exc).__name__}: {exc}"]
    ph, err = rep["phases"], rep["errors"]
    return [param, _fmt(value)] + [_fmt(v) for v in (
        ph["phi_hmw"], ph["delta_ncs"], ph["delta_ncps"], ph["total"],
        err["phi_hmw"], err["delta_ncs"], err["delta_ncps"])] + [""]


def run_sweep(cfg: ScenarioConfig, param: str, start: float, stop: float, steps: int,
              jobs: int = 1) -> str:
    param = _PARAM_ALIASES.get(param, param)
    if param not in SWEEP_PARAMS:
        raise ConfigError(f"--param: unknown parameter {param!r}; "
                          f"choose from {', '.join(SWEEP_PARAMS)}")
    base = cfg.echo()
    values = sweep_values(param, start, stop, steps)
    tasks = [(param, v, apply_param(base, param, v)) for v in values]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            rows = list(ex.map(_sweep_row, tasks))
    else:
        rows = [_sweep_row(t) for t in tasks]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SWEEP_CSV_COLUMNS)
    w.writerows(rows)
    return buf.getvalue()


# commands

def cmd_verify(args, out=sys.stdout) -> int:
    checks = verify_mod.run_all()
    out.write(verify_mod.report(checks))
    return EXIT_OK if all(c.passed for c in checks) else EXIT_VERIFY_FAILED


def cmd_phase(args, out=sys.stdout) -> int:
    report = build_report(load_config(args.config))
    out.write(report_csv(report) if args.csv else dump_json(report))
    return EXIT_OK


def cmd_sweep(args, out=sys.stdout) -> int:
    cfg = load_config(args.config)
    out.write(run_sweep(cfg, args.param, args.start, args.stop, args.steps, args.jobs))
    return EXIT_OK


def make_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hmwkit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"hmwkit {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the exact algebra suites")
    v.set_defaults(func=cmd_verify)

    ph = sub.add_parser("phase", help="phase breakdown for one scenario")
    ph.add_argument("--config", required=True, help="scenario JSON file")
    ph.add_argument("--csv", action="store_true", help="emit one CSV row instead of JSON")
    ph.set_defaults(func=cmd_phase)

    sw = sub.add_parser("sweep", help="sweep one parameter, CSV out")
    sw.add_argument("--config", required=True)
    sw.add_argument("--param", required=True,
                    help="theta, alpha, radius, lambda_m, k (|k|) or s3")
    sw.add_argument("--from", dest="start", type=float, required=True)
    sw.add_argument("--to", dest="stop", type=float, required=True)
    sw.add_argument("--steps", type=int, required=True)
    sw.add_argument("--jobs", type=int, default=1, help="worker processes (row order is kept)")
    sw.set_defaults(func=cmd_sweep)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = make_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ConfigError as exc:
        err.write(f"config error: {exc}\n")
        return EXIT_CONFIG
    except SingularPoint as exc:
        err.write(f"singular point: {exc}\n")
        return EXIT_SINGULAR
    except ToleranceNotMet as exc:
        err.write(f"tolerance not met: {exc}\n")
        return EXIT_TOLERANCE
    except Exception as exc:  # noqa: BLE001
        err.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return EXIT_INTERNAL


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
