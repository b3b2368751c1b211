"""Command-line surface: report, trace, bound, simulate, verify.

Exit codes: 0 on success, 1 on verification failure, 2 on argument or
parameter errors (the message names the offending flag). All flags are
long-form ``--name value``; no environment variables are consulted.

Defaults, when parameter flags are omitted: sigma2=1, rho=0.5, power=1,
n1=1, n2=2. A negative --rho is accepted and normalized to its absolute
value with an informational notice on stderr; simulation runs then apply
the exact sign-flip symmetry, so results are unchanged.

The trace CSV contract is stable: columns
``alpha,d1,d2_uncoded,d2_converse,a1_star,a2_star,optimal_flag`` in that
order, header always present, ``,`` separator, ``\\n`` terminators,
floats printed with 17 significant digits (round-trip exact), absent
converse values as empty fields.
"""

from __future__ import annotations

import argparse
import csv
import sys

from . import closed_forms, montecarlo, rate_distortion, region
from .errors import GaussianBcError
from .params import (
    ChannelParams,
    SourceParams,
    UncodedCoeffs,
    negate_rho_transform,
    validate_problem,
)

_ORACLE_GRID = 12
_ORACLE_TOL_BITS = 1e-4

_FLAG_NAMES = {
    "sigma2": "--sigma2",
    "rho": "--rho",
    "power": "--power",
    "n1": "--n1",
    "n2": "--n2",
    "alpha": "--alpha",
    "beta": "--alpha",  # beta is derived as 1 - alpha
    "d1": "--d1",
    "d1_target": "--d1-target",
    "samples": "--samples",
    "seed": "--seed",
    "num_points": "--points",
    "grid_size": "--grid",
    "tol": "--tol",
}


def _flagged(message: str) -> str:
    head, sep, tail = message.partition(" ")
    return _FLAG_NAMES.get(head, head) + sep + tail


def _fmt6(value: float) -> str:
    return f"{value:.6g}"


def _fmt17(value: float) -> str:
    return f"{value:.17g}"


def _bool(value: bool) -> str:
    return "true" if value else "false"


def _add_problem_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--sigma2", type=float, default=1.0, help="source component variance (default 1)")
    parser.add_argument("--rho", type=float, default=0.5, help="source correlation in (-1, 1) (default 0.5)")
    parser.add_argument("--power", type=float, default=1.0, help="transmit power budget (default 1)")
    parser.add_argument("--n1", type=float, default=1.0, help="receiver-1 noise variance (default 1)")
    parser.add_argument("--n2", type=float, default=2.0, help="receiver-2 noise variance, > n1 (default 2)")


def _resolve_problem(args) -> tuple[SourceParams, ChannelParams, bool]:
    source, sign_flip = negate_rho_transform(SourceParams(args.sigma2, args.rho))
    if sign_flip:
        print(
            f"note: rho={args.rho:g} treated as |rho|={source.rho:g} with a "
            "sign-flipped first stream; distortions are unchanged",
            file=sys.stderr,
        )
    channel = ChannelParams(args.power, args.n1, args.n2)
    validate_problem(source, channel)
    return source, channel, sign_flip


def _cmd_report(args, out) -> int:
    source, channel, _ = _resolve_problem(args)
    p, n1, n2 = channel.power, channel.n1, channel.n2
    floor = closed_forms.simple_snr_threshold(source)
    rows = [
        ("sigma2", _fmt6(source.sigma2)),
        ("rho", _fmt6(source.rho)),
        ("power", _fmt6(p)),
        ("n1", _fmt6(n1)),
        ("n2", _fmt6(n2)),
        ("D1_min", _fmt6(closed_forms.d_min(source, channel, 1))),
        ("D2_min", _fmt6(closed_forms.d_min(source, channel, 2))),
        ("D1_star_at_D2_min", _fmt6(closed_forms.d1_min_at_d2min(source, channel))),
        ("D2_star_at_D1_min", _fmt6(closed_forms.d2_min_at_d1min(source, channel))),
        ("simple_threshold", _fmt6(floor)),
        ("snr_rx1", _fmt6(p / n1)),
        ("capacity_rx1", _fmt6(rate_distortion.channel_capacity(p, n1))),
        ("capacity_rx2", _fmt6(rate_distortion.channel_capacity(p, n2))),
        ("uncoded_optimal_everywhere", _bool(p / n1 <= floor)),
    ]
    for key, value in rows:
        print(f"{key}={value}", file=out)
    return 0


def _trace_row(point: region.BoundaryPoint) -> list[str]:
    if point.d2_converse is None:
        converse = a1 = a2 = ""
    else:
        converse = _fmt17(point.d2_converse)
        a1 = _fmt17(point.witness.a1)
        a2 = _fmt17(point.witness.a2)
    return [
        _fmt17(point.alpha),
        _fmt17(point.d1),
        _fmt17(point.d2_achievable),
        converse,
        a1,
        a2,
        _bool(point.optimal_flag),
    ]


def _cmd_trace(args, out) -> int:
    source, channel, _ = _resolve_problem(args)
    points = region.trace_uncoded_boundary(source, channel, args.points)
    sink = open(args.output, "w", encoding="utf-8", newline="") if args.output else out
    try:
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(["alpha", "d1", "d2_uncoded", "d2_converse", "a1_star", "a2_star", "optimal_flag"])
        for point in points:
            writer.writerow(_trace_row(point))
    finally:
        if args.output:
            sink.close()
    return 0


def _cmd_bound(args, out) -> int:
    source, channel, _ = _resolve_problem(args)
    d2_floor = closed_forms.d2_min_at_rx1(source, channel, args.d1)
    witness = closed_forms.optimal_witness(source, channel, args.d1)
    eta = closed_forms.combiner_mse_bound(source, channel, args.d1, witness)
    psi = closed_forms.d2_converse_bound(source, channel, args.d1, witness)
    for key, value in [
        ("d1", args.d1),
        ("d2_min_rx1", d2_floor),
        ("combiner_mse_bound", eta),
        ("a1_star", witness.a1),
        ("a2_star", witness.a2),
        ("d2_converse", psi),
    ]:
        print(f"{key}={_fmt17(value)}", file=out)
    return 0


def _cmd_simulate(args, out) -> int:
    source, channel, sign_flip = _resolve_problem(args)
    if args.d1_target is not None:
        alpha = closed_forms.solve_alpha_for_d1(source, channel, args.d1_target)
    else:
        alpha = 0.5 if args.alpha is None else args.alpha
        if not 0.0 <= alpha <= 1.0:
            raise GaussianBcError("alpha must be in [0, 1]")
    coeffs = UncodedCoeffs(alpha, 1.0 - alpha)
    config = montecarlo.SimulationConfig(samples=args.samples, seed=args.seed, coeffs=coeffs)
    report = montecarlo.simulate(source, channel, config, sign_flip=sign_flip)
    analytic = montecarlo.analytic_distortions(source, channel, coeffs)
    fields = [
        ("alpha", _fmt17(alpha)),
        ("beta", _fmt17(1.0 - alpha)),
        ("samples", str(report.samples)),
        ("seed", str(report.seed)),
        ("empirical_d1", _fmt17(report.empirical_d1)),
        ("empirical_d2", _fmt17(report.empirical_d2)),
        ("empirical_power", _fmt17(report.empirical_power)),
        ("ci_half_width_d1", _fmt17(report.ci_half_width_d1)),
        ("ci_half_width_d2", _fmt17(report.ci_half_width_d2)),
        ("analytic_d1", _fmt17(analytic.d1)),
        ("analytic_d2", _fmt17(analytic.d2)),
    ]
    for key, value in fields:
        print(f"{key}={value}", file=out)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="") as sink:
            writer = csv.writer(sink, lineterminator="\n")
            writer.writerow([key for key, _ in fields])
            writer.writerow([value for _, value in fields])
    return 0


def _cmd_verify(args, out) -> int:
    source, channel, _ = _resolve_problem(args)
    match = region.verify_matching(source, channel, args.grid, args.tol)

    lo = closed_forms.d_min(source, channel, 1)
    hi = closed_forms.d1_min_at_d2min(source, channel)
    capacity = rate_distortion.channel_capacity(channel.power, channel.n1)
    oracle_max = 0.0
    oracle_points = 0
    for i in range(_ORACLE_GRID):
        d1 = lo + (hi - lo) * (i + 1) / (_ORACLE_GRID + 1)
        if not closed_forms.is_uncoded_optimal(source, channel, d1):
            continue
        d2_floor = closed_forms.d2_min_at_rx1(source, channel, d1)
        err = abs(rate_distortion.r_joint_numeric(source, d1, d2_floor) - capacity)
        oracle_max = max(oracle_max, err)
        oracle_points += 1
    oracle_ok = oracle_max <= _ORACLE_TOL_BITS

    print(f"matched_points={match.covered_count}", file=out)
    print(f"excluded_points={match.excluded_count}", file=out)
    residual = 0.0 if match.max_residual is None else match.max_residual
    print(f"max_residual={_fmt17(residual)}", file=out)
    print(f"matching={_bool(match.passed)}", file=out)
    print(f"oracle_points={oracle_points}", file=out)
    print(f"oracle_max_error_bits={_fmt17(oracle_max)}", file=out)
    print(f"oracle_consistent={_bool(oracle_ok)}", file=out)
    ok = match.passed and oracle_ok
    print(f"verify={'PASS' if ok else 'FAIL'}", file=out)
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gaussian-bc",
        description=(
            "Distortion-region toolkit for uncoded transmission of a correlated "
            "Gaussian pair over a two-receiver AWGN broadcast channel."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_report = sub.add_parser("report", help="print the closed-form summary of a configuration")
    _add_problem_flags(p_report)
    p_report.set_defaults(handler=_cmd_report)

    p_trace = sub.add_parser("trace", help="CSV trace of the achievability/converse boundary")
    _add_problem_flags(p_trace)
    p_trace.add_argument("--points", type=int, default=101, help="number of alpha samples (>= 2, default 101)")
    p_trace.add_argument("--output", type=str, default=None, help="write CSV to this path instead of stdout")
    p_trace.set_defaults(handler=_cmd_trace)

    p_bound = sub.add_parser("bound", help="converse bound, optimal witness and companion floor at one d1")
    _add_problem_flags(p_bound)
    p_bound.add_argument("--d1", type=float, required=True, help="receiver-1 distortion to bound at")
    p_bound.set_defaults(handler=_cmd_bound)

    p_sim = sub.add_parser("simulate", help="Monte-Carlo run of the uncoded scheme")
    _add_problem_flags(p_sim)
    group = p_sim.add_mutually_exclusive_group()
    group.add_argument("--alpha", type=float, default=None, help="mixing weight in [0, 1] (default 0.5)")
    group.add_argument("--d1-target", type=float, default=None, help="solve alpha so the analytic d1 hits this value")
    p_sim.add_argument("--samples", type=int, default=200_000, help="number of source symbols (default 200000)")
    p_sim.add_argument("--seed", type=int, default=1, help="64-bit reproducibility seed (default 1)")
    p_sim.add_argument("--output", type=str, default=None, help="also write the report as a one-row CSV")
    p_sim.set_defaults(handler=_cmd_simulate)

    p_verify = sub.add_parser("verify", help="machine-check boundary matching and the joint-rate oracle")
    _add_problem_flags(p_verify)
    p_verify.add_argument("--grid", type=int, default=50, help="d1 grid size for the matching check (default 50)")
    p_verify.add_argument("--tol", type=float, default=1e-9, help="matching residual tolerance (default 1e-9)")
    p_verify.set_defaults(handler=_cmd_verify)

    return parser


def run(argv: list[str] | None = None, out=None) -> int:
    """Parse argv and execute one subcommand; returns the process exit code."""
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on argument errors
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.handler(args, out)
    except GaussianBcError as exc:
        print(f"error: {_flagged(str(exc))}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
