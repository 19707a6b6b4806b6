"""Command-line interface.

Subcommands::

    ctcsim scan-fig2      # region map over (rest-wire speed, boost)
    ctcsim pulse-fig3     # pulse-frame speeds against F at fixed boost
    ctcsim flux-profile   # AC flux needed for a target F, or a wire profile
    ctcsim ctc-check      # full report for one parameter point
    ctcsim optics-design  # two-surface assembly and scattering timeline

Exit codes: 0 success, 2 invalid input, 3 physically infeasible flux,
4 CTC condition unmet. Every flag can also be set from a ``--config``
file of ``key = value`` lines; flags on the command line win.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import boost, ctc, optics, squid
from .errors import CTCConditionError, DomainError, SingularityError
from .metric import WireProfile

__all__ = ["main", "build_parser", "EXIT_OK", "EXIT_INPUT", "EXIT_INFEASIBLE", "EXIT_NO_CTC"]

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3
EXIT_NO_CTC = 4

SIG_DIGITS = 12


class InputError(Exception):
    pass


def fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (float, np.floating)):
        return format(float(x), f".{SIG_DIGITS}g")
    return str(x)


def _jsonable(x):
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if not math.isfinite(x):
            return None
        return float(format(x, f".{SIG_DIGITS}g"))
    if isinstance(x, np.integer):
        return int(x)
    if hasattr(x, "value") and isinstance(x.value, str):
        return x.value
    return x


def render_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(v) for v in row])
    return buf.getvalue()


def render_json(obj) -> str:
    return json.dumps(_jsonable(obj), indent=2) + "\n"


def parse_range(text: str, default_n: int) -> tuple[float, float, int]:
    """Parse ``min:max`` or ``min:max:n``; an empty range gets one point."""
    parts = text.split(":")
    if len(parts) not in (2, 3):
        raise argparse.ArgumentTypeError(f"expected min:max[:n], got {text!r}")
    try:
        lo, hi = float(parts[0]), float(parts[1])
        n = int(parts[2]) if len(parts) == 3 else (1 if lo == hi else default_n)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}") from None
    if hi < lo:
        raise argparse.ArgumentTypeError(f"range max below min in {text!r}")
    return lo, hi, n


def _range_type(default_n):
    return lambda text: parse_range(text, default_n)


def read_config(path) -> dict[str, str]:
    """Flat ``key = value`` file; ``#`` starts a comment."""
    values = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InputError(f"{path}:{lineno}: expected key = value")
        key, value = (s.strip() for s in line.split("=", 1))
        values[key.lstrip("-").replace("-", "_")] = value
    return values


def _common(p: argparse.ArgumentParser, fmt_default: str) -> None:
    p.add_argument("--config", help="flat key = value file providing defaults")
    p.add_argument("--format", choices=("csv", "json"), default=fmt_default)
    p.add_argument("--out", help="output path (default: standard output)")
    p.add_argument("--c-v", dest="c_v", type=float, default=1.0,
                   help="simulated vacuum light speed (default 1)")


def _squid_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--dc", type=float, default=squid.DEFAULT_FLUX_CEILING,
                   help="DC flux bias as a fraction of the flux quantum")
    p.add_argument("--c0", type=float, default=1.0)
    p.add_argument("--flux-ceiling", dest="flux_ceiling", type=float,
                   default=squid.DEFAULT_FLUX_CEILING)
    p.add_argument("--total-flux-limit", dest="total_flux_limit", type=float,
                   default=squid.HARD_FLUX_WALL)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ctcsim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan-fig2", help="region map over rest-wire speed and boost")
    _common(p, "csv")
    p.add_argument("--beta-range", dest="beta_range", type=_range_type(200),
                   default="0.01:0.99:200")
    p.add_argument("--speed-range", dest="speed_range", type=_range_type(200),
                   default="1:2.5:200")
    p.add_argument("--upper-F", dest="upper_F", type=float, default=None,
                   help="fix the boosted wire's F instead of sharing the rest-wire value")
    p.set_defaults(handler=cmd_scan_fig2)

    p = sub.add_parser("pulse-fig3", help="pulse-frame speeds against F at fixed boost")
    _common(p, "csv")
    p.add_argument("--beta", type=float, default=0.6)
    p.add_argument("--F-range", dest="F_range", type=_range_type(601), default="1:7:601")
    p.set_defaults(handler=cmd_pulse_fig3)

    p = sub.add_parser("flux-profile", help="flux synthesis for a target F or a wire")
    _common(p, "json")
    _squid_opts(p)
    p.add_argument("--F", dest="F", type=float, default=None, help="target shape value")
    p.add_argument("--R", dest="R", type=float, default=None, help="wire radius")
    p.add_argument("--n", dest="n", type=int, default=2, help="shape exponent")
    p.add_argument("--r-range", dest="r_range", type=_range_type(101), default=None)
    p.add_argument("--t", dest="t", type=float, default=0.0)
    p.set_defaults(handler=cmd_flux_profile)

    p = sub.add_parser("ctc-check", help="full report for one parameter point")
    _common(p, "json")
    _squid_opts(p)
    p.add_argument("--F1", type=float, required=False, default=None)
    p.add_argument("--F2", type=float, default=None, help="defaults to F1")
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--L", type=float, default=1.0)
    p.set_defaults(handler=cmd_ctc_check)

    p = sub.add_parser("optics-design", help="two-surface assembly and timeline")
    _common(p, "json")
    p.add_argument("--F1", type=float, default=None)
    p.add_argument("--F2", type=float, default=None, help="defaults to F1")
    p.add_argument("--beta", type=float, default=None)
    p.add_argument("--mode", choices=[m.value for m in optics.DesignMode],
                   default=optics.DesignMode.SYMMETRIC.value)
    p.add_argument("--n-samples", dest="n_samples", type=int, default=50)
    p.set_defaults(handler=cmd_optics_design)
    return parser


def _subparser(parser: argparse.ArgumentParser, command: str) -> argparse.ArgumentParser:
    for action in parser._subparsers._group_actions:
        if command in action.choices:
            return action.choices[command]
    raise KeyError(command)


def _require(value, name):
    if value is None:
        raise InputError(f"--{name} is required")
    return value


def _squid_params(args) -> squid.SquidArrayParams:
    return squid.SquidArrayParams(c0=args.c0, flux_ceiling=args.flux_ceiling,
                                  total_flux_limit=args.total_flux_limit)


def cmd_scan_fig2(args) -> tuple[int, str]:
    blo, bhi, bn = args.beta_range
    slo, shi, sn = args.speed_range
    grid = ctc.ScanGrid(blo, bhi, bn, slo, shi, sn)
    rows = ctc.scan_figure2(grid, c_v=args.c_v, upper_F=args.upper_F)
    if args.format == "json":
        return EXIT_OK, render_json([
            {"c_z_rest": r.c_z_rest, "beta": r.beta, "c_z_beta": r.c_z_beta,
             "region": r.region} for r in rows])
    table = ((r.c_z_rest, r.beta,
              "SINGULAR" if r.c_z_beta is None else r.c_z_beta, r.region) for r in rows)
    return EXIT_OK, render_csv(("c_z_rest", "beta", "c_z_beta", "region"), table)


def cmd_pulse_fig3(args) -> tuple[int, str]:
    lo, hi, n = args.F_range
    if not 0 <= args.beta < 1:
        raise InputError(f"--beta must satisfy 0 <= beta < 1, got {args.beta}")
    if lo < 1 or n < 1:
        raise InputError("--F-range must start at F >= 1")
    rows = ctc.scan_figure3(args.beta, np.linspace(lo, hi, n), c_v=args.c_v)
    header = ("F", "c_p", "v_pulse", "abs_c_p", "horizon")
    if args.format == "json":
        return EXIT_OK, render_json([dict(zip(header, (r.F, r.c_p, r.v_pulse, r.abs_c_p,
                                                        r.horizon))) for r in rows])
    return EXIT_OK, render_csv(header, ((r.F, r.c_p, r.v_pulse, r.abs_c_p, r.horizon)
                                        for r in rows))


def cmd_flux_profile(args) -> tuple[int, str]:
    params = _squid_params(args)
    if args.R is not None:
        if args.r_range is None:
            raise InputError("--r-range is required with --R")
        profile = WireProfile(args.R, args.n)
        lo, hi, n = args.r_range
        try:
            fp = squid.wire_flux_profile(profile, args.dc, np.linspace(lo, hi, n),
                                         t=args.t, params=params)
        except squid.FluxOutOfRangeError as exc:
            record = {"R": args.R, "n": args.n, "dc": args.dc,
                      "verdict": squid.Verdict.OUT_OF_RANGE, "reason": str(exc)}
            return EXIT_INFEASIBLE, _record(record, args.format)
        header = ("r", "t", "phi_total_fraction")
        if args.format == "json":
            return EXIT_OK, render_json([dict(zip(header, s)) for s in fp.total_samples()])
        return EXIT_OK, render_csv(header, fp.total_samples())

    F = _require(args.F, "F")
    report = squid.feasibility_for_F(F, args.dc, params)
    record = {"F_target": F, "dc": args.dc}
    if report.feasible:
        record.update(ac=report.ac, total=report.total, c_ratio=math.sqrt(F),
                      verdict=report.verdict)
        return EXIT_OK, _record(record, args.format)
    lim = report.limiting_quantity
    record.update(verdict=report.verdict, reason=report.reason,
                  limiting_name=lim[0] if lim else None,
                  limiting_value=lim[1] if lim else None)
    return EXIT_INFEASIBLE, _record(record, args.format)


def _record(record: dict, format_: str) -> str:
    if format_ == "json":
        return render_json(record)
    return render_csv(tuple(record), [tuple(record.values())])


def ctc_report(F1: float, F2: float, beta: float, L: float = 1.0, c_v: float = 1.0,
               dc: float = squid.DEFAULT_FLUX_CEILING,
               params: squid.SquidArrayParams | None = None) -> dict:
    """Thresholds, loop time, region, quantum feasibility and classical design for one point."""
    if not (F1 >= 1 and F2 >= 1):
        raise InputError("F1 and F2 must be >= 1")
    if not 0 < beta < 1:
        raise InputError(f"beta must satisfy 0 < beta < 1, got {beta}")
    if not L > 0:
        raise InputError("L must be positive")
    region = ctc.classify_parameters(F1, F2, beta)
    try:
        c_z_beta = boost.null_speed_backward(F2, beta, c_v)
        rtt = ctc.round_trip_time(L, F1, F2, beta, c_v)
    except SingularityError:
        c_z_beta = rtt = None
    if c_z_beta is None:
        feas = None
    else:
        feas = squid.feasibility_report(c_z_beta / c_v, dc, params).as_dict()
    assembly = None
    if region is ctc.RegionLabel.CTC:
        assembly = optics.design_ctc_assembly(F1, F2, beta, optics.DesignMode.AS_GIVEN).as_dict()
    return {
        "inputs": {"F1": F1, "F2": F2, "beta": beta, "L": L, "c_v": c_v, "dc": dc},
        "thresholds": {
            "ctc_equal_wires_F1": ctc.ctc_threshold_beta(F1),
            "ctc_equal_wires_F2": ctc.ctc_threshold_beta(F2),
            "ctc_general": ctc.ctc_threshold_beta_general(F1, F2),
            "negative_time": 1.0 / math.sqrt(F2),
        },
        "round_trip_time": rtt,
        "region": region,
        "required_c_z_beta": c_z_beta,
        "feasibility": feas,
        "classical_assembly": assembly,
    }


def cmd_ctc_check(args) -> tuple[int, str]:
    F1 = _require(args.F1, "F1")
    F2 = F1 if args.F2 is None else args.F2
    beta = _require(args.beta, "beta")
    report = ctc_report(F1, F2, beta, args.L, args.c_v, args.dc, _squid_params(args))
    return EXIT_OK, render_json(report)


def cmd_optics_design(args) -> tuple[int, str]:
    F1 = _require(args.F1, "F1")
    F2 = F1 if args.F2 is None else args.F2
    assembly = optics.design_ctc_assembly(F1, F2, args.beta, args.mode)
    timeline = optics.simulate_wavefront(assembly, args.n_samples, c_v=args.c_v)
    if args.format == "csv":
        return EXIT_OK, render_csv(("time", "x", "image_id", "kind"),
                                   ((e.time, e.x, e.image_id, e.kind.value)
                                    for e in timeline.events))
    return EXIT_OK, render_json({"assembly": assembly.as_dict(),
                                 "timeline": timeline.as_dict()})


def _apply_config(parser, argv) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if not args.config:
        return args
    sub = _subparser(parser, args.command)
    dests = {a.dest for a in sub._actions}
    values = read_config(args.config)
    unknown = sorted(set(values) - dests - {"config"})
    if unknown:
        raise InputError(f"unknown config keys: {', '.join(unknown)}")
    values.pop("config", None)
    sub.set_defaults(**values)
    return parser.parse_args(argv)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = _apply_config(parser, argv)
    except SystemExit as exc:  # argparse usage errors and --help
        return exc.code
    except (InputError, OSError) as exc:
        print(f"ctcsim: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    try:
        status, text = args.handler(args)
    except (InputError, DomainError, OSError) as exc:
        print(f"ctcsim: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CTCConditionError as exc:
        print(f"ctcsim: CTC condition unmet: {exc}", file=sys.stderr)
        return EXIT_NO_CTC
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"ctcsim: error: {exc}", file=sys.stderr)
            return EXIT_INPUT
    else:
        sys.stdout.write(text)
    if status == EXIT_INFEASIBLE:
        print("ctcsim: target is not realisable on the SQUID line", file=sys.stderr)
    return status


if __name__ == "__main__":
    sys.exit(main())
