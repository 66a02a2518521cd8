"""Seeded spiked-model generation and the Monte Carlo experiment suite.

Every experiment is a pure function of its configuration: the seed is part of
the config, replicate ``j`` of grid point ``i`` draws from the substream
``substream_seed(substream_seed(seed, i), j)``, and results are accumulated
into slots indexed by replicate, so outputs are identical under any execution
schedule.  Randomness comes from numpy's counter-based Philox generator keyed
by the derived seed; normals use numpy's ziggurat sampler, which is fixed for
a given numpy release.
"""

from __future__ import annotations

import enum
import math
import os
from dataclasses import dataclass

import numpy as np

from ._version import __version__
from .asymptotics import bulk_edge, component_from_sigma, cosine_left, cosine_right
from .denoiser import (
    DataMatrix,
    GroundTruthFactors,
    blp_predict,
    denoise,
    operator_norm_error,
)
from .errors import ConfigError, DomainError, OpshrinkError
from .shrinker import BlockParams, ShrinkerKind, error_ratio, gd_loss, optimal_loss, optimal_q_from_sigma

__all__ = [
    "DEFAULT_SEED",
    "FactorLaw",
    "SpikedModelConfig",
    "ExperimentKind",
    "ExperimentConfig",
    "CurveTable",
    "substream_seed",
    "generate_spiked",
    "run_shrinker_curves",
    "run_ratio_sweep",
    "run_blp_convergence",
    "run_experiment",
    "write_curve_table",
    "read_curve_table",
    "render_curve_table",
    "experiment_config_to_text",
    "experiment_config_from_text",
    "shrinker_curves_config",
    "ratio_sweep_config",
    "blp_convergence_config",
]

# Fixed default seed: bare invocations are reproducible, randomness is opt-in.
DEFAULT_SEED = 0x5EEDBA5E

_MASK64 = (1 << 64) - 1
_GOLDEN64 = 0x9E3779B97F4A7C15

# Desk-scale and paper-scale settings for the linear-predictor experiment.
DESK_BLP_P = 50
DESK_BLP_REPLICATES = 200
PAPER_BLP_P = 100
PAPER_BLP_REPLICATES = 4000
DEFAULT_BLP_STRENGTH = 1.1
DEFAULT_BLP_N_GRID = (100, 200, 400, 800, 1600, 3200)

# Spike strength swept in the ratio experiment sits this far above threshold.
RATIO_SWEEP_MARGIN = 0.05


def substream_seed(seed: int, index: int) -> int:
    """Derive an independent 64-bit substream key: SplitMix64 finalizer of
    ``seed + (index + 1) * golden_gamma`` (all mod 2**64)."""
    x = (seed + (index + 1) * _GOLDEN64) & _MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK64
    return x ^ (x >> 31)


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=seed))


def _check_seed(seed) -> int:
    if not isinstance(seed, (int, np.integer)) or not 0 <= int(seed) < (1 << 64):
        raise ConfigError(f"seed must be an unsigned 64-bit integer, got {seed!r}")
    return int(seed)


class FactorLaw(enum.Enum):
    """Law of the random factors on the sample side of the signal."""

    GAUSSIAN = "gaussian"
    RADEMACHER = "rademacher"


@dataclass(frozen=True)
class SpikedModelConfig:
    """One draw of the spiked model: p-by-n signal-plus-noise observation."""

    p: int
    n: int
    strengths: tuple[float, ...]
    factor_law: FactorLaw = FactorLaw.GAUSSIAN
    deterministic_signal: bool = False
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if not (isinstance(self.p, (int, np.integer)) and isinstance(self.n, (int, np.integer))):
            raise ConfigError("p and n must be integers")
        object.__setattr__(self, "p", int(self.p))
        object.__setattr__(self, "n", int(self.n))
        if self.p < 2 or self.n < 2:
            raise ConfigError(f"p and n must be at least 2, got p={self.p}, n={self.n}")
        strengths = tuple(float(t) for t in self.strengths)
        object.__setattr__(self, "strengths", strengths)
        if any(not math.isfinite(t) or t <= 0.0 for t in strengths):
            raise ConfigError("strengths must be finite and positive")
        if any(a <= b for a, b in zip(strengths, strengths[1:])):
            raise ConfigError("strengths must be strictly decreasing")
        if len(strengths) > min(self.p, self.n):
            raise ConfigError(
                f"rank {len(strengths)} exceeds min(p, n) = {min(self.p, self.n)}"
            )
        if not isinstance(self.factor_law, FactorLaw):
            raise ConfigError(f"factor_law must be a FactorLaw, got {self.factor_law!r}")
        object.__setattr__(self, "seed", _check_seed(self.seed))


def _orthonormal_columns(a: np.ndarray) -> np.ndarray:
    # QR with the sign of each diagonal of R fixed, so the frame is unique.
    q, r = np.linalg.qr(a)
    signs = np.sign(np.diag(r))
    signs[signs == 0.0] = 1.0
    return q * signs


def generate_spiked(cfg: SpikedModelConfig) -> tuple[DataMatrix, DataMatrix, GroundTruthFactors]:
    """Draw (signal X, observation Y, ground truth) from the spiked model.

    The signal is ``X = sum_k t_k u_k v_k^T`` with orthonormal frames: by
    default ``u`` is Haar-distributed (QR of Gaussian columns) and ``v`` is the
    orthonormalization of an n-by-r matrix of iid unit-variance factors drawn
    per ``factor_law``, so columns of X follow the sampled-factor model with
    exactly orthonormal frames.  With ``deterministic_signal`` both frames are
    canonical basis vectors.  Noise is iid N(0, 1/n) per entry
    (``noise_scale = 1``).  Draw order is fixed (left frame, factors, noise),
    so identical configs give bit-identical output.
    """
    rng = _rng(cfg.seed)
    p, n = cfg.p, cfg.n
    strengths = np.asarray(cfg.strengths, dtype=float)
    r = strengths.shape[0]

    if r == 0:
        u = np.zeros((p, 0))
        v = np.zeros((n, 0))
    elif cfg.deterministic_signal:
        u = np.eye(p, r)
        v = np.eye(n, r)
    else:
        u = _orthonormal_columns(rng.standard_normal((p, r)))
        if cfg.factor_law is FactorLaw.GAUSSIAN:
            z = rng.standard_normal((n, r))
        else:
            z = rng.integers(0, 2, size=(n, r)).astype(float) * 2.0 - 1.0
        v = _orthonormal_columns(z)

    x = (u * strengths) @ v.T
    y = x + rng.standard_normal((p, n)) / math.sqrt(n)
    truth = GroundTruthFactors(components=u, strengths=strengths)
    return DataMatrix(x), DataMatrix(y), truth


class ExperimentKind(enum.Enum):
    SHRINKER_CURVES = "curves"
    RATIO_SWEEP = "ratio-sweep"
    BLP_CONVERGENCE = "blp-convergence"


@dataclass(frozen=True)
class ExperimentConfig:
    """Description of one experiment run, seed included.

    ``grid`` is experiment-specific: observed singular values for the shrinker
    curves, aspect ratios for the ratio sweep, sample counts for the
    linear-predictor convergence experiment.  ``replicates = 0`` keeps the
    ratio sweep analytic; the convergence experiment requires at least 1.
    """

    experiment: ExperimentKind
    grid: tuple[float, ...]
    replicates: int = 0
    gamma: float = 0.5
    p: int = DESK_BLP_P
    strengths: tuple[float, ...] = (DEFAULT_BLP_STRENGTH,)
    factor_law: FactorLaw = FactorLaw.GAUSSIAN
    deterministic_signal: bool = False
    seed: int = DEFAULT_SEED

    def __post_init__(self) -> None:
        if not isinstance(self.experiment, ExperimentKind):
            raise ConfigError(f"experiment must be an ExperimentKind, got {self.experiment!r}")
        grid = tuple(float(g) for g in self.grid)
        object.__setattr__(self, "grid", grid)
        if len(grid) == 0:
            raise ConfigError("grid must be nonempty")
        if any(not math.isfinite(g) for g in grid):
            raise ConfigError("grid entries must be finite")
        if any(a >= b for a, b in zip(grid, grid[1:])):
            raise ConfigError("grid must be strictly increasing")
        if not isinstance(self.replicates, (int, np.integer)) or self.replicates < 0:
            raise ConfigError(f"replicates must be a nonnegative integer, got {self.replicates!r}")
        object.__setattr__(self, "replicates", int(self.replicates))
        if not (math.isfinite(self.gamma) and self.gamma > 0.0):
            raise ConfigError(f"gamma must be finite and positive, got {self.gamma!r}")
        if not isinstance(self.p, (int, np.integer)) or self.p < 2:
            raise ConfigError(f"p must be an integer >= 2, got {self.p!r}")
        object.__setattr__(self, "p", int(self.p))
        strengths = tuple(float(t) for t in self.strengths)
        object.__setattr__(self, "strengths", strengths)
        if any(not math.isfinite(t) or t <= 0.0 for t in strengths):
            raise ConfigError("strengths must be finite and positive")
        if any(a <= b for a, b in zip(strengths, strengths[1:])):
            raise ConfigError("strengths must be strictly decreasing")
        if not isinstance(self.factor_law, FactorLaw):
            raise ConfigError(f"factor_law must be a FactorLaw, got {self.factor_law!r}")
        object.__setattr__(self, "seed", _check_seed(self.seed))


@dataclass(frozen=True)
class CurveTable:
    """Rectangular numeric table with named columns and ordered metadata."""

    columns: tuple[str, ...]
    rows: tuple[tuple[float, ...], ...]
    metadata: tuple[tuple[str, str], ...] = ()

    def __post_init__(self) -> None:
        columns = tuple(str(c) for c in self.columns)
        rows = tuple(tuple(float(x) for x in row) for row in self.rows)
        object.__setattr__(self, "columns", columns)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "metadata", tuple((str(k), str(v)) for k, v in self.metadata))
        if len(set(columns)) != len(columns):
            raise ConfigError("column names must be unique")
        for row in rows:
            if len(row) != len(columns):
                raise ConfigError("rows must all match the column count")
            if any(not math.isfinite(x) for x in row):
                raise ConfigError("table entries must be finite")

    def column(self, name: str) -> np.ndarray:
        try:
            j = self.columns.index(name)
        except ValueError:
            raise KeyError(f"no column named {name!r}; have {self.columns}") from None
        return np.array([row[j] for row in self.rows])


# ---------------------------------------------------------------------------
# flat key=value configuration format (also used as table metadata echo)

_CONFIG_KEYS = frozenset(
    {
        "experiment",
        "grid",
        "replicates",
        "gamma",
        "p",
        "strengths",
        "factor_law",
        "deterministic_signal",
        "seed",
    }
)
_REQUIRED_KEYS = ("experiment", "grid")


def _format_float(x: float) -> str:
    return format(float(x), ".17g")


def _config_items(cfg: ExperimentConfig) -> tuple[tuple[str, str], ...]:
    return (
        ("experiment", cfg.experiment.value),
        ("grid", ",".join(_format_float(g) for g in cfg.grid)),
        ("replicates", str(cfg.replicates)),
        ("gamma", _format_float(cfg.gamma)),
        ("p", str(cfg.p)),
        ("strengths", ",".join(_format_float(t) for t in cfg.strengths)),
        ("factor_law", cfg.factor_law.value),
        ("deterministic_signal", "true" if cfg.deterministic_signal else "false"),
        ("seed", str(cfg.seed)),
    )


def experiment_config_to_text(cfg: ExperimentConfig) -> str:
    """Render a config as flat ``key = value`` lines (one field per line)."""
    return "\n".join(f"{k} = {v}" for k, v in _config_items(cfg)) + "\n"


def _parse_bool(value: str, key: str) -> bool:
    lowered = value.strip().lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise ConfigError(f"{key}: expected a boolean, got {value!r}")


def experiment_config_from_text(text: str) -> ExperimentConfig:
    """Parse the flat ``key = value`` format back into a config.

    Blank lines and ``#`` comments are ignored; unknown or duplicate keys are
    rejected.  ``experiment`` and ``grid`` are required, everything else
    defaults as in :class:`ExperimentConfig`.
    """
    seen: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key in seen:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        seen[key] = value.strip()

    unknown = set(seen) - _CONFIG_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    missing = [k for k in _REQUIRED_KEYS if k not in seen]
    if missing:
        raise ConfigError(f"missing required config keys: {missing}")

    kwargs: dict = {}
    try:
        kwargs["experiment"] = ExperimentKind(seen["experiment"])
    except ValueError:
        raise ConfigError(f"unknown experiment {seen['experiment']!r}") from None
    try:
        kwargs["grid"] = tuple(float(x) for x in seen["grid"].split(",") if x.strip())
        if "replicates" in seen:
            kwargs["replicates"] = int(seen["replicates"])
        if "gamma" in seen:
            kwargs["gamma"] = float(seen["gamma"])
        if "p" in seen:
            kwargs["p"] = int(seen["p"])
        if "strengths" in seen:
            kwargs["strengths"] = tuple(float(x) for x in seen["strengths"].split(",") if x.strip())
        if "seed" in seen:
            kwargs["seed"] = int(seen["seed"])
    except ValueError as exc:
        raise ConfigError(f"bad numeric value in config: {exc}") from exc
    if "factor_law" in seen:
        try:
            kwargs["factor_law"] = FactorLaw(seen["factor_law"])
        except ValueError:
            raise ConfigError(f"unknown factor_law {seen['factor_law']!r}") from None
    if "deterministic_signal" in seen:
        kwargs["deterministic_signal"] = _parse_bool(seen["deterministic_signal"], "deterministic_signal")
    return ExperimentConfig(**kwargs)


def _table_metadata(cfg: ExperimentConfig) -> tuple[tuple[str, str], ...]:
    return (*_config_items(cfg), ("version", __version__))


# ---------------------------------------------------------------------------
# experiment constructors with desk-scale defaults


def shrinker_curves_config(
    gamma: float = 0.5,
    grid=None,
    seed: int = DEFAULT_SEED,
) -> ExperimentConfig:
    """Analytic shrinker-versus-loss curves at a fixed aspect ratio.

    The default grid spans 1.05 to 3 times the bulk edge with 100 points.
    """
    if grid is None:
        edge = bulk_edge(gamma)
        grid = tuple(np.linspace(1.05 * edge, 3.0 * edge, 100))
    return ExperimentConfig(
        experiment=ExperimentKind.SHRINKER_CURVES, grid=tuple(grid), gamma=gamma, seed=seed
    )


def ratio_sweep_config(
    grid=None,
    p: int = 100,
    replicates: int = 0,
    seed: int = DEFAULT_SEED,
) -> ExperimentConfig:
    """Error-ratio sweep over aspect ratios in (0, 1]; default grid 0.05..1."""
    if grid is None:
        grid = tuple(np.linspace(0.05, 1.0, 20))
    return ExperimentConfig(
        experiment=ExperimentKind.RATIO_SWEEP,
        grid=tuple(grid),
        replicates=replicates,
        p=p,
        seed=seed,
    )


def blp_convergence_config(
    p: int | None = None,
    strength: float = DEFAULT_BLP_STRENGTH,
    n_grid=DEFAULT_BLP_N_GRID,
    replicates: int | None = None,
    paper_scale: bool = False,
    seed: int = DEFAULT_SEED,
) -> ExperimentConfig:
    """Fixed-p convergence of shrinkers toward the best linear predictor.

    Desk scale is p=50 with 200 replicates; ``paper_scale`` restores p=100
    with 4000 replicates.  Explicit ``p`` or ``replicates`` win over both.
    """
    if p is None:
        p = PAPER_BLP_P if paper_scale else DESK_BLP_P
    if replicates is None:
        replicates = PAPER_BLP_REPLICATES if paper_scale else DESK_BLP_REPLICATES
    return ExperimentConfig(
        experiment=ExperimentKind.BLP_CONVERGENCE,
        grid=tuple(float(n) for n in n_grid),
        replicates=replicates,
        p=p,
        strengths=(strength,),
        seed=seed,
    )


# ---------------------------------------------------------------------------
# experiment runners


def _require_kind(cfg: ExperimentConfig, kind: ExperimentKind) -> None:
    if cfg.experiment is not kind:
        raise ConfigError(f"config is for {cfg.experiment.value!r}, expected {kind.value!r}")


def run_shrinker_curves(cfg: ExperimentConfig) -> CurveTable:
    """Purely analytic curves: retained values and losses versus the observed
    singular value, for the optimal rule and the q = t baseline."""
    _require_kind(cfg, ExperimentKind.SHRINKER_CURVES)
    edge = bulk_edge(cfg.gamma)
    rows = []
    for sigma in cfg.grid:
        if sigma <= edge:
            raise DomainError(
                f"grid point sigma={sigma} is at or below the bulk edge {edge}"
            )
        comp = component_from_sigma(sigma, cfg.gamma)
        b = BlockParams(comp.t, comp.c, comp.c_tilde)
        rows.append(
            (
                sigma,
                optimal_q_from_sigma(sigma, cfg.gamma),
                comp.t,
                optimal_loss(b),
                gd_loss(b),
            )
        )
    return CurveTable(
        columns=("sigma", "q_optimal", "q_gd", "loss_optimal", "loss_gd"),
        rows=tuple(rows),
        metadata=_table_metadata(cfg),
    )


def run_ratio_sweep(cfg: ExperimentConfig) -> CurveTable:
    """Relative errors and their ratio along aspect ratios in (0, 1].

    The swept spike strength is ``gamma**0.25 + 0.05``, just above the
    detection threshold.  With ``replicates > 0`` two Monte Carlo columns are
    appended with empirical mean relative losses at the configured ``p``
    (rank detection runs with zero tolerance there, because the swept spike
    sits too close to the bulk edge for the default finite-sample slack).
    """
    _require_kind(cfg, ExperimentKind.RATIO_SWEEP)
    if cfg.grid[0] <= 0.0 or cfg.grid[-1] > 1.0:
        raise ConfigError("ratio-sweep grid must lie in (0, 1]")
    monte_carlo = cfg.replicates > 0
    rows = []
    for i, gamma in enumerate(cfg.grid):
        t = gamma**0.25 + RATIO_SWEEP_MARGIN
        b = BlockParams(t, cosine_left(t, gamma), cosine_right(t, gamma))
        row = [
            gamma,
            t,
            optimal_loss(b) / t,
            gd_loss(b) / t,
            error_ratio(gamma, t),
        ]
        if monte_carlo:
            n = max(cfg.p, int(round(cfg.p / gamma)))
            loss_opt = np.zeros(cfg.replicates)
            loss_gd = np.zeros(cfg.replicates)
            for j in range(cfg.replicates):
                sub = SpikedModelConfig(
                    p=cfg.p,
                    n=n,
                    strengths=(t,),
                    factor_law=cfg.factor_law,
                    deterministic_signal=cfg.deterministic_signal,
                    seed=substream_seed(substream_seed(cfg.seed, i), j),
                )
                x, y, _ = generate_spiked(sub)
                x_opt, _ = denoise(y, ShrinkerKind.OPTIMAL, tolerance=0.0)
                x_gd, _ = denoise(y, ShrinkerKind.ORACLE_TRUTH, tolerance=0.0)
                loss_opt[j] = operator_norm_error(x_opt, x) / t
                loss_gd[j] = operator_norm_error(x_gd, x) / t
            row.extend([float(np.mean(loss_opt)), float(np.mean(loss_gd))])
        rows.append(tuple(row))
    columns = ["gamma", "t", "rel_err_optimal", "rel_err_gd", "ratio"]
    if monte_carlo:
        columns += ["mc_rel_err_optimal", "mc_rel_err_gd"]
    return CurveTable(columns=tuple(columns), rows=tuple(rows), metadata=_table_metadata(cfg))


def run_blp_convergence(cfg: ExperimentConfig) -> CurveTable:
    """Mean errors of the best linear predictor and both shrinkers as n grows.

    For each grid value of n, averages over replicates: operator-norm errors
    of the known-components best linear predictor, the optimal shrinker, and
    the q = t baseline; the Frobenius gap between the optimal shrinker and the
    predictor; and the fraction of replicates where the baseline loses to the
    optimal rule.
    """
    _require_kind(cfg, ExperimentKind.BLP_CONVERGENCE)
    if cfg.replicates < 1:
        raise ConfigError("blp-convergence requires at least one replicate")
    n_grid = []
    for g in cfg.grid:
        if g != int(g) or int(g) < cfg.p:
            raise ConfigError(f"n-grid entries must be integers >= p={cfg.p}, got {g}")
        n_grid.append(int(g))

    rows = []
    for i, n in enumerate(n_grid):
        err_blp = np.zeros(cfg.replicates)
        err_opt = np.zeros(cfg.replicates)
        err_gd = np.zeros(cfg.replicates)
        gap = np.zeros(cfg.replicates)
        for j in range(cfg.replicates):
            sub = SpikedModelConfig(
                p=cfg.p,
                n=n,
                strengths=cfg.strengths,
                factor_law=cfg.factor_law,
                deterministic_signal=cfg.deterministic_signal,
                seed=substream_seed(substream_seed(cfg.seed, i), j),
            )
            x, y, truth = generate_spiked(sub)
            x_blp = blp_predict(y, truth)
            x_opt, _ = denoise(y, ShrinkerKind.OPTIMAL)
            x_gd, _ = denoise(y, ShrinkerKind.ORACLE_TRUTH)
            err_blp[j] = operator_norm_error(x_blp, x)
            err_opt[j] = operator_norm_error(x_opt, x)
            err_gd[j] = operator_norm_error(x_gd, x)
            gap[j] = float(np.linalg.norm(x_opt.values - x_blp.values))
        rows.append(
            (
                float(n),
                float(np.mean(err_blp)),
                float(np.mean(err_opt)),
                float(np.mean(err_gd)),
                float(np.mean(gap)),
                float(np.mean(err_gd > err_opt)),
            )
        )
    return CurveTable(
        columns=(
            "n",
            "err_blp",
            "err_optimal",
            "err_gd",
            "gap_optimal_blp",
            "frac_gd_above_optimal",
        ),
        rows=tuple(rows),
        metadata=_table_metadata(cfg),
    )


_RUNNERS = {
    ExperimentKind.SHRINKER_CURVES: run_shrinker_curves,
    ExperimentKind.RATIO_SWEEP: run_ratio_sweep,
    ExperimentKind.BLP_CONVERGENCE: run_blp_convergence,
}


def run_experiment(cfg: ExperimentConfig) -> CurveTable:
    """Dispatch to the runner named by ``cfg.experiment``."""
    return _RUNNERS[cfg.experiment](cfg)


# ---------------------------------------------------------------------------
# table serialization


def render_curve_table(table: CurveTable) -> str:
    """Deterministic CSV text: '#'-prefixed metadata, header, 17-digit reals."""
    lines = [f"# {k} = {v}" for k, v in table.metadata]
    lines.append(",".join(table.columns))
    for row in table.rows:
        lines.append(",".join(_format_float(x) for x in row))
    return "\n".join(lines) + "\n"


def write_curve_table(table: CurveTable, path) -> None:
    """Write the table as CSV; atomic, so failures leave no partial file."""
    text = render_curve_table(table)
    path = os.fspath(path)
    tmp = path + ".tmp"
    try:
        with open(tmp, "wb") as fh:
            fh.write(text.encode("utf-8"))
        os.replace(tmp, path)
    except OSError as exc:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise OpshrinkError(f"failed to write curve table to {path}: {exc}") from exc


def read_curve_table(path) -> CurveTable:
    """Parse a CSV written by :func:`write_curve_table`."""
    metadata = []
    header: tuple[str, ...] | None = None
    rows = []
    with open(path, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.rstrip("\n")
            if not line:
                continue
            if line.startswith("#"):
                key, _, value = line[1:].strip().partition("=")
                metadata.append((key.strip(), value.strip()))
            elif header is None:
                header = tuple(line.split(","))
            else:
                rows.append(tuple(float(x) for x in line.split(",")))
    if header is None:
        raise ConfigError(f"{path}: no header row found")
    return CurveTable(columns=header, rows=tuple(rows), metadata=tuple(metadata))
