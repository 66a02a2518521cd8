"""Command-line front end.

Subcommands: ``denoise`` (shrink one matrix file), ``asymptotics`` (one-shot
calculator), and the three experiments ``curves``, ``ratio-sweep``,
``blp-convergence`` (CSV curve tables).  Every command is deterministic given
its flags; seeds default to a fixed constant.  Exit codes: 0 success, 2 file
or format problems, 3 configuration or domain problems.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from ._version import __version__
from .asymptotics import bulk_edge
from .denoiser import DEFAULT_DETECTION_TOLERANCE, DataMatrix, denoise
from .errors import MatrixFormatError, OpshrinkError
from .harness import (
    DEFAULT_BLP_N_GRID,
    DEFAULT_BLP_STRENGTH,
    DEFAULT_SEED,
    blp_convergence_config,
    experiment_config_from_text,
    ratio_sweep_config,
    run_experiment,
    shrinker_curves_config,
    write_curve_table,
)
from .matio import read_matrix, write_matrix
from .shrinker import ShrinkerKind, shrinkage_summary

EXIT_OK = 0
EXIT_IO = 2
EXIT_CONFIG = 3

_ASYMPTOTICS_COLUMNS = (
    "sigma",
    "gamma",
    "detectable",
    "t",
    "c",
    "c_tilde",
    "q_optimal",
    "loss_optimal",
    "loss_gd",
)


class _Parser(argparse.ArgumentParser):
    """argparse parser whose usage errors exit with the configuration code."""

    def error(self, message):
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="opshrink",
        description="Low-rank matrix denoising by operator-norm-optimal singular value shrinkage.",
    )
    parser.add_argument("--version", action="version", version=f"opshrink {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser(
        "denoise",
        help="denoise a matrix file by singular value shrinkage",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    d.add_argument("input", help="input matrix file (rows = features)")
    d.add_argument("output", help="output file for the denoised matrix, same format")
    d.add_argument(
        "--shrinker",
        choices=["optimal", "oracle-t", "none", "hard"],
        default="optimal",
        help="singular value rule applied to retained components",
    )
    d.add_argument(
        "--noise-scale",
        type=float,
        default=1.0,
        help="per-entry noise standard deviation times sqrt(n); 1 = noise variance 1/n",
    )
    d.add_argument(
        "--tolerance",
        type=float,
        default=DEFAULT_DETECTION_TOLERANCE,
        help="relative slack above the bulk edge for rank detection (dimensionless)",
    )
    d.add_argument("--format", choices=["csv", "bin"], default="csv", help="matrix file format")
    d.add_argument(
        "--csv-header",
        action="store_true",
        help="CSV files carry a single header line (read and written)",
    )
    d.add_argument("--report", default=None, help="also write a plain-text report to this path")

    a = sub.add_parser(
        "asymptotics",
        help="print the asymptotic quantities for one observed singular value",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    a.add_argument("--sigma", type=float, required=True, help="observed singular value (noise units)")
    a.add_argument("--gamma", type=float, required=True, help="aspect ratio p/n (dimensionless)")

    def add_experiment_common(p):
        p.add_argument("--out", default=None, help="output CSV path")
        p.add_argument(
            "--seed",
            type=int,
            default=None,
            help=f"unsigned 64-bit experiment seed (default {DEFAULT_SEED})",
        )
        p.add_argument(
            "--config",
            default=None,
            help="read the experiment configuration from a key=value file "
            "(excludes all other configuration flags)",
        )

    c = sub.add_parser(
        "curves",
        help="analytic shrinker and loss curves versus the observed singular value",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    c.add_argument("--gamma", type=float, default=None, help="aspect ratio p/n (default 0.5)")
    c.add_argument("--sigma-min", type=float, default=None, help="grid start (default 1.05x bulk edge)")
    c.add_argument("--sigma-max", type=float, default=None, help="grid end (default 3x bulk edge)")
    c.add_argument("--sigma-points", type=int, default=None, help="grid size (default 100)")
    add_experiment_common(c)

    r = sub.add_parser(
        "ratio-sweep",
        help="error ratio of the optimal rule over q=t across aspect ratios",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    r.add_argument("--gamma-min", type=float, default=None, help="sweep start (default 0.05)")
    r.add_argument("--gamma-max", type=float, default=None, help="sweep end, at most 1 (default 1.0)")
    r.add_argument("--gamma-points", type=int, default=None, help="grid size (default 20)")
    r.add_argument("--p", type=int, default=None, help="feature count for Monte Carlo columns (default 100)")
    r.add_argument(
        "--replicates",
        type=int,
        default=None,
        help="Monte Carlo replicates per grid point; 0 keeps the sweep analytic (default 0)",
    )
    add_experiment_common(r)

    b = sub.add_parser(
        "blp-convergence",
        help="convergence of shrinkers toward the best linear predictor as n grows",
        formatter_class=argparse.ArgumentDefaultsHelpFormatter,
    )
    b.add_argument("--p", type=int, default=None, help="feature count (default 50; 100 with --paper-scale)")
    b.add_argument("--t", type=float, default=None, help=f"spike strength (default {DEFAULT_BLP_STRENGTH})")
    b.add_argument(
        "--n-grid",
        default=None,
        help="comma-separated sample counts (default "
        + ",".join(str(n) for n in DEFAULT_BLP_N_GRID)
        + ")",
    )
    b.add_argument(
        "--replicates",
        type=int,
        default=None,
        help="replicates per grid point (default 200; 4000 with --paper-scale)",
    )
    b.add_argument(
        "--paper-scale",
        action="store_true",
        help="restore the original p=100 / 4000-replicate settings",
    )
    add_experiment_common(b)

    return parser


def _read_input_matrix(path, fmt, header) -> np.ndarray:
    values = read_matrix(path, fmt=fmt, header=header)
    if not np.all(np.isfinite(values)):
        raise MatrixFormatError(f"{path}: matrix contains non-finite entries")
    return values


def _write_report(path, report, noise_scale) -> None:
    lines = [
        f"detected_rank = {report.detected_rank}",
        f"gamma_used = {_fmt(report.gamma_used)}",
        f"shrinker = {report.shrinker.value}",
        f"noise_scale = {_fmt(noise_scale)}",
        f"predicted_loss = {_fmt(report.predicted_loss)}",
    ]
    for k, comp in enumerate(report.per_component, start=1):
        lines.append(f"component_{k}_sigma = {_fmt(comp.sigma_observed)}")
        lines.append(f"component_{k}_t_hat = {_fmt(comp.t_hat)}")
        lines.append(f"component_{k}_c = {_fmt(comp.c_hat)}")
        lines.append(f"component_{k}_c_tilde = {_fmt(comp.c_tilde_hat)}")
        lines.append(f"component_{k}_q = {_fmt(comp.q_applied)}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")


def _cmd_denoise(args) -> int:
    values = _read_input_matrix(args.input, args.format, args.csv_header)
    y = DataMatrix(values, noise_scale=args.noise_scale)
    x_hat, report = denoise(y, ShrinkerKind(args.shrinker), tolerance=args.tolerance)
    write_matrix(x_hat.values, args.output, fmt=args.format, header=args.csv_header)
    if args.report is not None:
        _write_report(args.report, report, args.noise_scale)
    return EXIT_OK


def _cmd_asymptotics(args) -> int:
    summary = shrinkage_summary(args.sigma, args.gamma)
    fields = []
    for name in _ASYMPTOTICS_COLUMNS:
        value = summary[name]
        fields.append(("true" if value else "false") if name == "detectable" else _fmt(value))
    print(",".join(fields))
    return EXIT_OK


def _reject_flags_with_config(parser, args, flag_names) -> None:
    given = [name for name in flag_names if getattr(args, name.strip("-").replace("-", "_")) not in (None, False)]
    if given:
        parser.error(f"--config cannot be combined with {', '.join(given)}")


def _experiment_config(parser, args, build_default):
    if args.config is not None:
        with open(args.config, "r", encoding="utf-8") as fh:
            return experiment_config_from_text(fh.read())
    return build_default()


def _cmd_curves(parser, args) -> int:
    default_out = "shrinker_curves.csv"
    if args.config is not None:
        _reject_flags_with_config(parser, args, ["--gamma", "--sigma-min", "--sigma-max", "--sigma-points", "--seed"])

    def build():
        gamma = 0.5 if args.gamma is None else args.gamma
        seed = DEFAULT_SEED if args.seed is None else args.seed
        grid = None
        if args.sigma_min is not None or args.sigma_max is not None or args.sigma_points is not None:
            edge = bulk_edge(gamma)
            lo = 1.05 * edge if args.sigma_min is None else args.sigma_min
            hi = 3.0 * edge if args.sigma_max is None else args.sigma_max
            points = 100 if args.sigma_points is None else args.sigma_points
            grid = tuple(np.linspace(lo, hi, points))
        return shrinker_curves_config(gamma=gamma, grid=grid, seed=seed)

    cfg = _experiment_config(parser, args, build)
    write_curve_table(run_experiment(cfg), args.out or default_out)
    return EXIT_OK


def _cmd_ratio_sweep(parser, args) -> int:
    default_out = "ratio_sweep.csv"
    if args.config is not None:
        _reject_flags_with_config(
            parser, args, ["--gamma-min", "--gamma-max", "--gamma-points", "--p", "--replicates", "--seed"]
        )

    def build():
        seed = DEFAULT_SEED if args.seed is None else args.seed
        grid = None
        if args.gamma_min is not None or args.gamma_max is not None or args.gamma_points is not None:
            lo = 0.05 if args.gamma_min is None else args.gamma_min
            hi = 1.0 if args.gamma_max is None else args.gamma_max
            points = 20 if args.gamma_points is None else args.gamma_points
            grid = tuple(np.linspace(lo, hi, points))
        return ratio_sweep_config(
            grid=grid,
            p=100 if args.p is None else args.p,
            replicates=0 if args.replicates is None else args.replicates,
            seed=seed,
        )

    cfg = _experiment_config(parser, args, build)
    write_curve_table(run_experiment(cfg), args.out or default_out)
    return EXIT_OK


def _cmd_blp_convergence(parser, args) -> int:
    default_out = "blp_convergence.csv"
    if args.config is not None:
        _reject_flags_with_config(
            parser, args, ["--p", "--t", "--n-grid", "--replicates", "--paper-scale", "--seed"]
        )

    def build():
        seed = DEFAULT_SEED if args.seed is None else args.seed
        n_grid = DEFAULT_BLP_N_GRID
        if args.n_grid is not None:
            try:
                n_grid = tuple(int(x) for x in args.n_grid.split(",") if x.strip())
            except ValueError:
                parser.error(f"--n-grid must be comma-separated integers, got {args.n_grid!r}")
        return blp_convergence_config(
            p=args.p,
            strength=DEFAULT_BLP_STRENGTH if args.t is None else args.t,
            n_grid=n_grid,
            replicates=args.replicates,
            paper_scale=args.paper_scale,
            seed=seed,
        )

    cfg = _experiment_config(parser, args, build)
    write_curve_table(run_experiment(cfg), args.out or default_out)
    return EXIT_OK


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "denoise":
            return _cmd_denoise(args)
        if args.command == "asymptotics":
            return _cmd_asymptotics(args)
        if args.command == "curves":
            return _cmd_curves(parser, args)
        if args.command == "ratio-sweep":
            return _cmd_ratio_sweep(parser, args)
        if args.command == "blp-convergence":
            return _cmd_blp_convergence(parser, args)
        parser.error(f"unknown command {args.command!r}")
    except MatrixFormatError as exc:
        print(f"opshrink: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OSError as exc:
        print(f"opshrink: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except OpshrinkError as exc:
        print(f"opshrink: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_CONFIG


def entry_point() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry_point()
