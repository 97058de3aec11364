"""Command-line front end.

    terrain-search evaluate --model beacon:s=2 --strategy doubling --d 1024.000001 --side worst
    terrain-search sweep --model valley:c=2 --d-max 1e6 --format csv
    terrain-search optimize --model history:s=2 --objective simulated
    terrain-search verify all

Options may also come from ``--config FILE`` holding ``key=value`` lines
(e.g. ``model=hill:c=2``); flags given on the command line win.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import analysis, verify
from .errors import SearchError, SimulationError
from .models import LEFT, RIGHT, parse_model
from .optimizer import FAMILIES, OBJECTIVES, minimize_cr
from .simulator import Trajectory
from .strategy import parse_strategy

THREADS_ENV = "TERRAIN_SEARCH_THREADS"

DEFAULTS = {
    "model": "classic",
    "strategy": "doubling",
    "side": "worst",
    "d_max": 2.0 ** 20,
    "grid_density": 32,
    "format": "table",
    "family": None,
    "bracket": (1.01, 4.0),
    "objective": "closed-form",
}


def _descriptor(parse):
    def convert(text):
        try:
            return parse(text)
        except SearchError as exc:
            raise argparse.ArgumentTypeError(str(exc)) from None
    convert.__name__ = parse.__name__
    return convert


def _bracket(text):
    try:
        lo, hi = (float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bracket must be 'lo,hi', got {text!r}") from None
    return lo, hi


def _positive(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be > 0, got {text!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="terrain-search", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--model", type=_descriptor(parse_model))
        p.add_argument("--strategy", type=_descriptor(parse_strategy))
        p.add_argument("--format", choices=("table", "csv", "json"))
        p.add_argument("--output", help="write to this file instead of stdout")
        p.add_argument("--config", help="key=value file supplying default options")

    p = sub.add_parser("evaluate", help="time to find one target")
    common(p)
    p.add_argument("--d", type=_positive, required=False)
    p.add_argument("--side", choices=(LEFT, RIGHT, "worst"))

    p = sub.add_parser("sweep", help="ratio over a distance grid and its supremum")
    common(p)
    p.add_argument("--d-max", type=float)
    p.add_argument("--grid-density", type=int)

    p = sub.add_parser("optimize", help="minimize the ratio over the expansion factor")
    common(p)
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--bracket", type=_bracket)
    p.add_argument("--objective", choices=OBJECTIVES)
    p.add_argument("--d-max", type=float)
    p.add_argument("--grid-density", type=int)

    p = sub.add_parser("verify", help="run numerical cross-checks")
    p.add_argument("suite", choices=verify.SUITES + ("all",))
    p.add_argument("--output")
    return parser


def read_config(path: str) -> dict[str, str]:
    out = {}
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            key, eq, value = line.partition("=")
            if not eq:
                raise ValueError(f"{path}:{lineno}: expected key=value")
            out[key.strip().replace("-", "_")] = value.strip()
    return out


def _apply_config(parser, args):
    sub = parser._subparsers._group_actions[0].choices[args.command]
    actions = {a.dest: a for a in sub._actions}
    if getattr(args, "config", None):
        for key, raw in read_config(args.config).items():
            if key not in actions or key in ("config", "output"):
                parser.error(f"unknown config key {key!r}")
            if getattr(args, key) is None:
                conv = actions[key].type or str
                try:
                    setattr(args, key, conv(raw))
                except (argparse.ArgumentTypeError, ValueError) as exc:
                    parser.error(f"config {key}: {exc}")
    if args.command == "optimize" and args.d_max is None:
        args.d_max = 2.0 ** 16
    for key, value in DEFAULTS.items():
        if key in actions and getattr(args, key) is None:
            conv = {"model": parse_model, "strategy": parse_strategy}.get(key)
            setattr(args, key, conv(value) if conv else value)


def _fmt(x):
    return format(x, ".17g") if isinstance(x, float) else str(x)


def _human(x):
    return format(x, ".6g") if isinstance(x, float) else str(x)


def _threads():
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def sweep_rows(model, strat, grid, threads=1):
    """(d, side, time, opt, ratio) per grid point, in grid order."""
    def work(chunk):
        traj = Trajectory(model, strat)
        rows = []
        for d, side in chunk:
            o = traj.outcome(d, side)
            rows.append((d, side, o.total_time, o.opt_time, o.ratio))
        return rows

    n = max(1, min(threads, len(grid)))
    size = math.ceil(len(grid) / n) if grid else 1
    chunks = [grid[i:i + size] for i in range(0, len(grid), size)]
    with ThreadPoolExecutor(max_workers=n) as pool:
        return [row for rows in pool.map(work, chunks) for row in rows]


COLUMNS = ("d", "side", "time", "opt", "ratio")


def render_rows(rows, report, fmt):
    if fmt == "json":
        return json.dumps({"rows": [dict(zip(COLUMNS, r)) for r in rows],
                           "report": vars(report)}, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(COLUMNS)
        w.writerows([_fmt(v) for v in r] for r in rows)
        buf.write(f"# sup_ratio={_fmt(report.sup_ratio)} argmax_d={_fmt(report.argmax_d)} "
                  f"argmax_side={report.argmax_side}\n")
        return buf.getvalue()
    lines = ["{:>14} {:>6} {:>14} {:>14} {:>12}".format(*COLUMNS)]
    lines += ["{:>14} {:>6} {:>14} {:>14} {:>12}".format(*map(_human, r)) for r in rows]
    lines.append(f"sup ratio {_human(report.sup_ratio)} at d={_human(report.argmax_d)} "
                 f"({report.argmax_side})")
    return "\n".join(lines) + "\n"


def render_record(record: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(record, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(record.keys())
        w.writerow([_fmt(v) for v in record.values()])
        return buf.getvalue()
    width = max(map(len, record))
    return "".join(f"{k:<{width}}  {_human(v)}\n" for k, v in record.items())


def cmd_evaluate(args):
    traj = Trajectory(args.model, args.strategy)
    sides = (LEFT, RIGHT) if args.side == "worst" else (args.side,)
    outcomes = [(traj.outcome(args.d, side), side) for side in sides]
    o, side = max(outcomes, key=lambda t: t[0].ratio)
    return render_record({
        "model": str(args.model), "strategy": str(args.strategy), "d": args.d, "side": side,
        "total_time": o.total_time, "opt_time": o.opt_time, "ratio": o.ratio,
        "found_on_run": o.found_on_run,
    }, args.format)


def cmd_sweep(args):
    grid = analysis.sup_grid(args.strategy, args.d_max, args.grid_density)
    rows = sweep_rows(args.model, args.strategy, grid, _threads())
    best = max(rows, key=lambda r: r[4])
    report = analysis.CrReport(best[4], best[0], best[1], len(rows), args.d_max)
    return render_rows(rows, report, args.format)


def cmd_optimize(args):
    family = args.family or ("tailwind-balanced" if args.model.kind == "tailwind" else "geom")
    res = minimize_cr(args.model, family, args.bracket, args.objective,
                      d_max=args.d_max, grid_density=args.grid_density)
    record = {"model": str(args.model), "family": family, "objective": args.objective,
              "r": res.r, "alpha": res.alpha if res.alpha is not None else "",
              "best_cr": res.best_cr, "evaluations": res.evaluations,
              "bracket_lo": res.bracket[0], "bracket_hi": res.bracket[1]}
    return render_record(record, args.format)


def cmd_verify(args):
    checks = verify.run_suite(args.suite)
    failed = [c for c in checks if not c.passed]
    summary = {"suite": args.suite, "passed": not failed, "n_checks": len(checks),
               "n_failed": len(failed), "checks": [c.to_dict() for c in checks]}
    return json.dumps(summary, indent=2) + "\n", (1 if failed else 0)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "verify":
        _apply_config(parser, args)
    if args.command == "evaluate" and args.d is None:
        parser.error("evaluate: --d is required")
    if args.command == "sweep" and not args.d_max >= 2:
        parser.error("--d-max must be >= 2")
    handlers = {"evaluate": cmd_evaluate, "sweep": cmd_sweep, "optimize": cmd_optimize}
    try:
        if args.command == "verify":
            text, code = cmd_verify(args)
        else:
            text, code = handlers[args.command](args), 0
    except (SearchError, SimulationError) as exc:
        print(f"terrain-search: error: {exc}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
