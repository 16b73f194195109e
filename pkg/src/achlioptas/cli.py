"""Command-line entry point: ``achlioptas {simulate,ode,bound,batch}``.

Output files default to the directory named by ``$ACHLIOPTAS_OUTPUT_DIR``
(current directory if unset). Exit status is 2 for bad arguments, 1 for
runtime failures and 0 otherwise.
"""
from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import density, experiments, ode
from .process import AchlioptasProcess, ProcessConfig, SamplingMode, emergence_time, run
from .strategies import parse_strategy

OUTPUT_DIR_ENV = "ACHLIOPTAS_OUTPUT_DIR"


def _out_path(given, default_name):
    if given:
        return Path(given)
    return Path(os.environ.get(OUTPUT_DIR_ENV, ".")) / default_name


def _fmt(x):
    return "none" if x is None else f"{x:.10g}"


def _strategy(parser, spec):
    try:
        return parse_strategy(spec)
    except ValueError as exc:
        parser.error(str(exc))


def _config(parser, args, **kw):
    try:
        return ProcessConfig(n=args.n, t_max=args.t_max, seed=args.seed,
                             sampling_mode=SamplingMode(args.sampling_mode),
                             sample_interval=args.sample_interval, **kw)
    except ValueError as exc:
        parser.error(str(exc))


def _add_process_args(p, n_required=True):
    p.add_argument("--strategy", default="minp1",
                   help="minp1 | first-edge | bohman-frieze | bounded:K=<k>;w=<w1,...,wK,wBig>")
    p.add_argument("--n", type=int, required=n_required, default=None)
    p.add_argument("--t-max", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--sampling-mode", choices=[m.value for m in SamplingMode],
                   default=SamplingMode.UNIFORM_PAIR.value)
    p.add_argument("--sample-interval", type=float, default=0.001)


def cmd_simulate(parser, args):
    strategy = _strategy(parser, args.strategy)
    config = _config(parser, args)
    traj = run(config, strategy)
    out = _out_path(args.out, "trajectory.csv")
    traj.to_csv(out)
    t, iso, mx, red, steps = traj.final
    print(f"strategy {strategy.name}  n {config.n}  steps {steps}")
    print(f"final isolated_fraction {iso:.10g}")
    print(f"final max_fraction {mx:.10g}")
    print(f"redundant_added {red}")
    print(f"emergence_time(threshold={args.threshold:g}) {_fmt(emergence_time(traj, args.threshold))}")
    print(f"wrote {out}")
    return 0


def cmd_ode(parser, args):
    try:
        sol = ode.solve(args.h, args.t_end)
    except ValueError as exc:
        parser.error(str(exc))
    out = _out_path(args.out, "ode.csv")
    sol.to_csv(out, stride=args.stride)
    for t in args.report_at or [min(0.9455, args.t_end)]:
        try:
            print(f"i({t:g}) = {sol.eval(t):.10g}")
        except ValueError as exc:
            parser.error(str(exc))
    print(f"wrote {out}")
    return 0


def cmd_bound(parser, args):
    if any(e <= 0 for e in args.epsilon):
        parser.error("epsilon values must be positive")
    if not 0 < args.t <= 1:
        parser.error("--t must lie in (0, 1]")
    try:
        sol = ode.solve(args.h, 1.0)
    except ValueError as exc:
        parser.error(str(exc))
    i_t = sol.eval(args.t)
    reports = []
    for eps in args.epsilon:
        crit = density.critical_time(sol, eps)
        rep = density.density_report(eps, args.t, i_t, critical_time=crit)
        reports.append(rep)
        line = f"epsilon {eps:g}  delta(eps, t={args.t:g}) {rep.delta:.6g}  "
        if crit is None:
            line += "critical_time none (inequality never violated)"
        else:
            line += f"critical_time {crit:.10g}"
        print(line)

    if args.audit:
        if args.n is None:
            parser.error("--audit needs --n")
        strategy = _strategy(parser, args.strategy)
        config = _config(parser, args)
        times = sorted(args.audit_at or [args.t_max])
        if any(not 0 < t <= config.t_max for t in times):
            parser.error("--audit-at times must lie in (0, t_max]")
        proc = AchlioptasProcess(config, strategy)
        for t in times:
            proc.advance_to(t)
            for eps in args.epsilon:
                rep = density.audit_process(proc, eps)
                reports.append(rep)
                print(f"audit t {rep.t:.6g}  epsilon {eps:g}  violations {len(rep.violations)}  "
                      f"inequality_holds {rep.inequality_holds}  "
                      f"redundant_fraction {rep.redundant_fraction:.6g}  max_fraction {rep.max_fraction:.6g}")
    out = _out_path(args.out, "bound.json")
    density.reports_to_json(reports, out)
    print(f"wrote {out}")
    return 0


def cmd_batch(parser, args):
    if args.trials < 1:
        parser.error("--trials must be >= 1")
    if args.workers < 1:
        parser.error("--workers must be >= 1")
    if not 0 < args.threshold < 1:
        parser.error("--threshold must lie in (0, 1)")
    strategy = _strategy(parser, args.strategy)
    marks = (args.report_at,) if args.report_at <= args.t_max else ()
    config = _config(parser, args, marks=marks)
    batch = experiments.run_batch(config, strategy, args.trials, args.seed, workers=args.workers)
    prefix = _out_path(args.out, "batch")
    json_path = prefix.with_suffix(".json")
    csv_path = prefix.with_suffix(".csv")
    batch.to_json(json_path, threshold=args.threshold,
                  report_at=args.report_at if marks else None)
    batch.to_csv(csv_path)
    summ = experiments.emergence_summary(batch, args.threshold)
    print(f"strategy {batch.strategy}  n {batch.n}  trials {batch.trials}")
    print(f"max deviation from ODE {batch.max_deviation:.6g}")
    if marks:
        k = batch.at(args.report_at)
        print(f"mean isolated at t={batch.t[k]:g} {batch.mean_isolated[k]:.6g}")
    print(f"emergence min {_fmt(summ.min)}  median {_fmt(summ.median)}  max {_fmt(summ.max)}  "
          f"censored {summ.censored}")
    print(f"wrote {json_path} {csv_path}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="achlioptas", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="run one process and write its trajectory CSV")
    _add_process_args(p)
    p.add_argument("--threshold", type=float, default=experiments.DEFAULT_THRESHOLD)
    p.add_argument("--out")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("ode", help="integrate the isolated-vertex ODE with RK4")
    p.add_argument("--h", type=float, default=ode.DEFAULT_STEP)
    p.add_argument("--t-end", type=float, default=1.0)
    p.add_argument("--report-at", type=float, action="append")
    p.add_argument("--stride", type=int, default=100)
    p.add_argument("--out")
    p.set_defaults(func=cmd_ode)

    p = sub.add_parser("bound", help="density bound: delta(eps), critical times, optional audit")
    p.add_argument("--epsilon", type=float, nargs="+", required=True)
    p.add_argument("--t", type=float, default=0.9455)
    p.add_argument("--h", type=float, default=ode.DEFAULT_STEP)
    p.add_argument("--audit", action="store_true")
    p.add_argument("--audit-at", type=float, action="append")
    _add_process_args(p, n_required=False)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("batch", help="run seeded trials and summarise them")
    _add_process_args(p)
    p.add_argument("--trials", type=int, default=10)
    p.add_argument("--threshold", type=float, default=experiments.DEFAULT_THRESHOLD)
    p.add_argument("--report-at", type=float, default=0.9455)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="output prefix; .json and .csv are appended")
    p.set_defaults(func=cmd_batch)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except SystemExit:
        raise
    except Exception as exc:  # runtime failure
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
