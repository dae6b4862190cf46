"""Command-line front end: time sweeps, distribution dumps, differential checks.

Three subcommands:

* ``sweep`` - heralded observables over a grid of coupling phases, one row
  per (detected count, phase) pair;
* ``dist`` - the heralded photon-number distribution at a single phase;
* ``verify`` - closed-form vs oracle comparison over a preset grid,
  serialized as a JSON report.

Phases are given in units of pi on every interface.  Output is CSV or JSON
with floats at 17 significant digits; undefined statistics are the literal
``undefined`` in CSV and ``null`` in JSON.  Exit code is 0 only when the
command succeeded and, for ``verify``, every check passed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import TextIO

from .closedform import HeraldRecord
from .fock import MAX_CUTOFF, CutoffError, TruncationConfig
from .scenarios import (
    Coherent,
    ScenarioSpec,
    SqueezedVacuum,
    Thermal,
    VerifyReport,
    run_verify,
    scenario_record,
)

SWEEP_HEADER = "lambda_t_over_pi,herald_n,mean_photons,mandel_q,herald_prob"
DIST_HEADER = "n,p_n"
UNDEFINED = "undefined"
# dist tables omit entries below this floor (numerical dust at exact collapses)
DIST_ROW_FLOOR = 1e-12


class CLIError(Exception):
    """User-facing configuration or input error; message goes to stderr."""


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def _fmt_or_undefined(x: float | None) -> str:
    return UNDEFINED if x is None else _fmt(x)


def _json_safe(x: float | None) -> float | str | None:
    # JSON has no inf/nan literals; only verify error columns can produce them
    if x is None:
        return None
    if math.isinf(x) or math.isnan(x):
        return "inf" if math.isinf(x) else "nan"
    return x


# ---------------------------------------------------------------------------
# flag parsing helpers


def _parse_complex(text: str) -> complex:
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise CLIError(f"--alpha expects re or re,im, got {text!r}")


def _parse_int_list(text: str) -> list[int]:
    try:
        values = [int(p) for p in text.split(",") if p.strip() != ""]
    except ValueError:
        raise CLIError(f"--herald expects comma-separated integers, got {text!r}") from None
    if not values:
        raise CLIError("--herald list is empty")
    if any(v < 0 for v in values):
        raise CLIError("--herald values must be >= 0")
    return values


def _parse_grid(text: str) -> tuple[float, float, int]:
    parts = text.split(",")
    if len(parts) != 3:
        raise CLIError(f"--grid expects start,stop,steps, got {text!r}")
    try:
        start, stop = float(parts[0]), float(parts[1])
        steps = int(parts[2])
    except ValueError:
        raise CLIError(f"--grid expects start,stop,steps, got {text!r}") from None
    if steps < 2:
        raise CLIError("--grid steps must be >= 2")
    if not (0.0 <= start <= stop <= 1.0):
        raise CLIError("--grid range must satisfy 0 <= start <= stop <= 1 (units of pi)")
    return start, stop, steps


def _read_config_file(path: str) -> list[str]:
    """key=value lines -> pseudo argv (file values, later real flags override)."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise CLIError(f"cannot read config file {path}: {exc}") from None
    pseudo: list[str] = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key or not value:
            raise CLIError(f"{path}:{lineno}: expected key=value, got {raw.rstrip()!r}")
        if key == "config":
            raise CLIError(f"{path}:{lineno}: config files cannot nest")
        pseudo.extend([f"--{key}", value])
    return pseudo


def _build_scenario(args: argparse.Namespace) -> ScenarioSpec:
    name = args.scenario
    if name is None:
        raise CLIError("--scenario is required (coherent|thermal|squeezed)")
    if name == "coherent":
        if args.alpha is None:
            raise CLIError("--alpha is required for the coherent scenario")
        return Coherent(_parse_complex(args.alpha))
    if name == "thermal":
        if args.nbar is None:
            raise CLIError("--nbar is required for the thermal scenario")
        if args.nbar < 0.0:
            raise CLIError("--nbar must be >= 0")
        return Thermal(args.nbar)
    if name == "squeezed":
        if args.r is None:
            raise CLIError("--r is required for the squeezed scenario")
        if args.r < 0.0:
            raise CLIError("--r must be >= 0")
        return SqueezedVacuum(args.r)
    raise CLIError(f"unknown scenario {name!r}")


def _truncation_override(ncut: int | None) -> TruncationConfig | None:
    if ncut is None:
        return None
    if ncut < 2:
        raise CLIError("--ncut must be >= 2")
    n = min(ncut, MAX_CUTOFF - 1)
    return TruncationConfig(n, n + 1)


# ---------------------------------------------------------------------------
# subcommands


def _grid_values(grid: tuple[float, float, int]) -> list[float]:
    start, stop, steps = grid
    if steps == 1:
        return [start]
    step = (stop - start) / (steps - 1)
    return [start + k * step for k in range(steps)]


def _sweep_records(
    scenario: ScenarioSpec,
    heralds: list[int],
    grid: tuple[float, float, int],
    ncut: int | None,
) -> list[tuple[float, int, HeraldRecord]]:
    config = _truncation_override(ncut)
    rows = []
    for n_detected in heralds:
        for ltp in _grid_values(grid):
            record = scenario_record(scenario, n_detected, ltp * math.pi, n_cut=ncut, config=config)
            rows.append((ltp, n_detected, record))
    return rows


def _write_sweep(rows: list[tuple[float, int, HeraldRecord]], fmt: str, out: TextIO) -> None:
    if fmt == "csv":
        out.write(SWEEP_HEADER + "\n")
        for ltp, n_detected, rec in rows:
            out.write(
                f"{_fmt(ltp)},{n_detected},{_fmt_or_undefined(rec.mean)},"
                f"{_fmt_or_undefined(rec.mandel_q)},{_fmt(rec.herald_prob)}\n"
            )
    else:
        payload = [
            {
                "lambda_t_over_pi": ltp,
                "herald_n": n_detected,
                "mean_photons": rec.mean,
                "mandel_q": rec.mandel_q,
                "herald_prob": rec.herald_prob,
            }
            for ltp, n_detected, rec in rows
        ]
        out.write(json.dumps(payload, indent=2) + "\n")


def _run_sweep(args: argparse.Namespace, out: TextIO) -> int:
    scenario = _build_scenario(args)
    heralds = _parse_int_list(args.herald)
    grid = _parse_grid(args.grid)
    rows = _sweep_records(scenario, heralds, grid, args.ncut)
    _write_sweep(rows, args.format, out)
    return 0


def _run_dist(args: argparse.Namespace, out: TextIO) -> int:
    scenario = _build_scenario(args)
    heralds = _parse_int_list(args.herald)
    if len(heralds) != 1:
        raise CLIError("dist expects exactly one --herald value")
    if args.lt is None:
        raise CLIError("--lt (coupling phase over pi) is required for dist")
    if not (0.0 <= args.lt <= 1.0):
        raise CLIError("--lt must lie in [0, 1] (units of pi)")
    config = _truncation_override(args.ncut)
    record = scenario_record(scenario, heralds[0], args.lt * math.pi, n_cut=args.ncut, config=config)
    if record.distribution is None:
        rows: list[tuple[int, float]] = []
    else:
        rows = [(n, float(p)) for n, p in enumerate(record.distribution) if p >= DIST_ROW_FLOOR]
    if not rows:
        print("heraldkit: herald probability is 0 at this point; empty distribution", file=sys.stderr)
    if args.format == "csv":
        out.write(DIST_HEADER + "\n")
        for n, p in rows:
            out.write(f"{n},{_fmt(p)}\n")
    else:
        payload = [{"n": n, "p_n": p} for n, p in rows]
        out.write(json.dumps(payload, indent=2) + "\n")
    return 0


def _report_payload(report: VerifyReport) -> dict:
    checks = []
    for check, ok in zip(report.checks, report.passed):
        checks.append(
            {
                "scenario": check.scenario,
                "herald_n": check.n_detected,
                "lambda_t_over_pi": check.lambda_t_over_pi,
                "field": check.field,
                "closed_form": _json_safe(check.closed_form),
                "oracle": _json_safe(check.oracle),
                "abs_error": _json_safe(check.abs_error),
                "rel_error": _json_safe(check.rel_error),
                "pass": ok,
            }
        )
    return {
        "preset": report.preset,
        "tolerance": report.tolerance,
        "total": report.total,
        "passed": report.n_passed,
        "failed": report.n_failed,
        "all_passed": report.all_passed,
        "checks": checks,
    }


def _run_verify(args: argparse.Namespace, out: TextIO) -> int:
    if args.tol < 0.0:
        raise CLIError("--tol must be >= 0")
    report = run_verify(args.preset, args.tol)
    out.write(json.dumps(_report_payload(report), indent=2) + "\n")
    print(
        f"heraldkit verify: {report.n_passed}/{report.total} checks passed"
        f" (preset={report.preset}, tol={report.tolerance:g})",
        file=sys.stderr,
    )
    return 0 if report.all_passed else 1


# ---------------------------------------------------------------------------
# parser assembly


def _add_common_flags(sub: argparse.ArgumentParser, with_grid: bool) -> None:
    sub.add_argument("--scenario", choices=("coherent", "thermal", "squeezed"))
    sub.add_argument("--alpha", help="coherent amplitude, re or re,im")
    sub.add_argument("--nbar", type=float, help="thermal mean photon number")
    sub.add_argument("--r", type=float, help="squeezing parameter")
    sub.add_argument("--herald", default="1", help="detected photon counts, comma separated")
    if with_grid:
        sub.add_argument("--grid", default="0,1,201", help="phase grid start,stop,steps in units of pi")
    else:
        sub.add_argument("--lt", type=float, help="coupling phase in units of pi")
    sub.add_argument("--ncut", type=int, help="photon-number cutoff override")
    sub.add_argument("--out", help="output path (default stdout)")
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--config", help="key=value file mirroring the flags; flags override")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heraldkit",
        description="Heralded nonclassical photon states from two coupled bosonic modes.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    sweep = subparsers.add_parser("sweep", help="observables over a coupling-phase grid")
    _add_common_flags(sweep, with_grid=True)

    dist = subparsers.add_parser("dist", help="heralded photon distribution at one phase")
    _add_common_flags(dist, with_grid=False)

    verify = subparsers.add_parser("verify", help="closed-form vs oracle differential checks")
    verify.add_argument("--tol", type=float, default=1e-6, help="per-check tolerance")
    verify.add_argument("--preset", choices=("small", "full"), default="full")
    verify.add_argument("--out", help="output path (default stdout)")
    verify.add_argument("--format", choices=("json",), default="json")
    verify.add_argument("--config", help="key=value file mirroring the flags; flags override")
    return parser


def _parse_with_config(parser: argparse.ArgumentParser, argv: list[str]) -> argparse.Namespace:
    args = parser.parse_args(argv)
    config_path = getattr(args, "config", None)
    if config_path is None:
        return args
    pseudo = _read_config_file(config_path)
    # file values sit before the real flags, so explicit flags win
    return parser.parse_args(argv[:1] + pseudo + argv[1:])


def main(argv: list[str] | None = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    parser = build_parser()
    try:
        args = _parse_with_config(parser, list(argv))
    except CLIError as exc:
        print(f"heraldkit: error: {exc}", file=sys.stderr)
        return 2

    runner = {"sweep": _run_sweep, "dist": _run_dist, "verify": _run_verify}[args.command]
    out_path = getattr(args, "out", None)
    try:
        if out_path:
            with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
                return runner(args, fh)
        return runner(args, sys.stdout)
    except (CLIError, CutoffError, ValueError) as exc:
        print(f"heraldkit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
