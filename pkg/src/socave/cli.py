"""Command-line front end.

Subcommands:
  solve   -- integrate the dynamical system for a problem, write CSV + report
  verify  -- test a candidate solution via the residual
  suite   -- reproduce the reference experiment suite

Exit codes: 0 success, 1 malformed input, 2 non-convergence / failed
suite criterion, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

import numpy as np

from .dynamics import DynamicsConfig
from .integrator import IntegratorOptions, integrate, time_to_tolerance
from .model import (
    load_problem,
    residual,
    residual_projection_form,
    solvability_certificate,
)
from .problems import example_toy, example_tridiag, initial_grid
from .reporting import SolveReport, termination_ok, write_trajectory_csv


class InputError(Exception):
    pass


def _load_cli_problem(args):
    """(problem, known x_star or None) from --problem or --builtin."""
    if getattr(args, "problem", None):
        try:
            return load_problem(args.problem)
        except (OSError, ValueError) as e:
            raise InputError(str(e)) from e
    name = args.builtin
    if name == "tridiag":
        if args.n is None:
            raise InputError("--builtin tridiag requires --n")
        try:
            return example_tridiag(args.n)
        except ValueError as e:
            raise InputError(str(e)) from e
    try:
        return example_toy(name), None
    except ValueError as e:
        raise InputError(str(e)) from e


def _load_vector_file(path) -> np.ndarray:
    try:
        with open(path) as fh:
            data = json.load(fh)
        return np.asarray(data, dtype=float).reshape(-1)
    except (OSError, ValueError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read vector from {path}: {e}") from e


def _resolve_starts(spec: str, n: int, x_star) -> np.ndarray:
    """x0 sources: 'zeros', 'grid:<k>', a file path, or a comma list."""
    if spec == "zeros":
        return np.zeros((1, n))
    if spec.startswith("grid:"):
        try:
            k = int(spec.split(":", 1)[1])
        except ValueError as e:
            raise InputError(f"bad grid spec {spec!r}") from e
        center = x_star if x_star is not None else np.zeros(n)
        return initial_grid(center, k)
    if os.path.exists(spec):
        return _load_vector_file(spec).reshape(1, -1)
    try:
        vals = [float(v) for v in spec.split(",")]
    except ValueError as e:
        raise InputError(f"cannot parse x0 {spec!r}") from e
    return np.asarray(vals).reshape(1, -1)


def _parse_tspan(text: str) -> tuple[float, float]:
    try:
        t0, tf = (float(v) for v in text.split(","))
    except ValueError as e:
        raise InputError(f"bad tspan {text!r}, expected T0,TF") from e
    if not t0 < tf:
        raise InputError("tspan must satisfy t0 < tf")
    return t0, tf


def _indexed_path(path: str, idx: int, total: int) -> str:
    if total == 1:
        return path
    stem, ext = os.path.splitext(path)
    return f"{stem}_{idx:03d}{ext}"


def cmd_solve(args) -> int:
    p, x_star = _load_cli_problem(args)
    tspan = _parse_tspan(args.tspan)
    starts = _resolve_starts(args.x0, p.n, x_star)
    if starts.shape[1] != p.n:
        raise InputError(f"x0 dimension {starts.shape[1]} != problem dimension {p.n}")
    cfg = DynamicsConfig(args.gamma)
    opts = IntegratorOptions(rtol=args.rtol, atol=args.atol,
                             stop_on_residual=args.stop_residual,
                             record_stride=args.record_stride)
    cert = solvability_certificate(p)
    report_tols = [float(v) for v in args.time_to_tol.split(",")] if args.time_to_tol else []

    reports = []
    ok = True
    for i, x0 in enumerate(starts):
        t_start = time.perf_counter()
        traj = integrate(p, cfg, x0, tspan, opts)
        wall = time.perf_counter() - t_start
        xf = traj.final_state
        reports.append(SolveReport(
            problem=p.name or (args.problem or args.builtin),
            certificate={"sigma_min": cert.sigma_min, "verdict": cert.verdict.value},
            gamma=args.gamma,
            tspan=tspan,
            termination=traj.termination.value,
            final_state=xf.tolist(),
            # recomputed from the final state, not copied from the trajectory
            final_residual_norm=float(np.linalg.norm(residual(p, xf))),
            time_to_tolerance={format(tol, "g"): time_to_tolerance(traj, tol)
                               for tol in report_tols},
            wall_time_s=wall,
            n_accepted=traj.n_accepted,
            n_rejected=traj.n_rejected,
        ).to_dict())
        write_trajectory_csv(_indexed_path(args.out, i, len(starts)), traj)
        ok = ok and termination_ok(traj.termination)

    with open(args.report, "w") as fh:
        json.dump(reports[0] if len(reports) == 1 else reports, fh, indent=2)
        fh.write("\n")
    for rep in reports:
        print(f"{rep['problem']}: termination={rep['termination']} "
              f"final_residual={rep['final_residual_norm']:.3e}")
    return 0 if ok else 2


def cmd_verify(args) -> int:
    p, _ = _load_cli_problem(args)
    x = _load_vector_file(args.x)
    if x.shape[0] != p.n:
        raise InputError(f"candidate dimension {x.shape[0]} != problem dimension {p.n}")
    if args.tol <= 0:
        raise InputError("tol must be > 0")
    r_direct = residual(p, x)
    r_proj = residual_projection_form(p, x)
    rnorm = float(np.linalg.norm(r_direct))
    agreement = float(np.max(np.abs(r_direct - r_proj)))
    print(f"residual_norm={rnorm:.17g}")
    print(f"residual_form_agreement={agreement:.3e}")
    if rnorm <= args.tol:
        print("solution: yes")
        return 0
    print("solution: no")
    return 3


def cmd_suite(args) -> int:
    if args.name != "paper-examples":
        raise InputError(f"unknown suite {args.name!r}")
    from .experiments import run_paper_suite

    os.makedirs(args.out_dir, exist_ok=True)
    summary = run_paper_suite(out_dir=args.out_dir)
    path = os.path.join(args.out_dir, "summary.json")
    with open(path, "w") as fh:
        json.dump(summary, fh, indent=2)
        fh.write("\n")
    for name, passed in summary["criteria"].items():
        print(f"{'PASS' if passed else 'FAIL'}  {name}")
    print(f"summary written to {path}")
    return 0 if summary["all_ok"] else 2


def _add_problem_source(sp):
    group = sp.add_mutually_exclusive_group(required=True)
    group.add_argument("--problem", help="problem JSON file")
    group.add_argument("--builtin", choices=["tridiag", "multi", "unique", "none"],
                       help="built-in problem")
    sp.add_argument("--n", type=int, help="dimension for --builtin tridiag")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="socave",
        description="Dynamical-system solver for absolute value equations "
                    "over second-order cones",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="integrate the dynamical system")
    _add_problem_source(sp)
    sp.add_argument("--gamma", type=float, required=True)
    sp.add_argument("--tspan", required=True, help="T0,TF")
    sp.add_argument("--x0", default="zeros",
                    help="'zeros', 'grid:<k>', comma list, or JSON file")
    sp.add_argument("--rtol", type=float, default=1e-6)
    sp.add_argument("--atol", type=float, default=1e-9)
    sp.add_argument("--stop-residual", type=float, default=None)
    sp.add_argument("--record-stride", type=int, default=1)
    sp.add_argument("--time-to-tol", default="",
                    help="comma list of residual tolerances to time")
    sp.add_argument("--out", required=True, help="trajectory CSV path")
    sp.add_argument("--report", required=True, help="report JSON path")
    sp.set_defaults(func=cmd_solve)

    sp = sub.add_parser("verify", help="check a candidate solution")
    _add_problem_source(sp)
    sp.add_argument("--x", required=True, help="candidate vector JSON file")
    sp.add_argument("--tol", type=float, required=True)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("suite", help="run the reference experiment suite")
    sp.add_argument("--name", required=True)
    sp.add_argument("--out-dir", required=True)
    sp.set_defaults(func=cmd_suite)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
