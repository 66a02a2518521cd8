"""The 2-by-2 block loss behind singular value shrinkage under operator norm.

In suitable bases the asymptotic error of a shrinkage estimator decomposes
into independent 2-by-2 blocks, one per spiked component.  Each block is
parameterized by the spike strength ``t`` and the singular-vector cosines
``(c, c_tilde)``; the shrinker assigns one retained singular value ``q`` per
block.  This module evaluates the squared operator norm of a block, gives the
analytic minimizer and the resulting losses, the baseline rule that keeps the
population singular value (``q = t``), error-ratio formulas comparing the two,
and a grid-plus-golden-section oracle that minimizes the block loss without
using the analytic formulas.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .asymptotics import (
    bulk_edge,
    component_from_sigma,
    cosine_left,
    cosine_right,
    detection_threshold,
    invert_sigma,
)
from .errors import ConfigError, DomainError, InternalError

__all__ = [
    "BlockParams",
    "ShrinkerKind",
    "LossReport",
    "block_matrix",
    "block_loss",
    "optimal_q",
    "optimal_q_from_sigma",
    "optimal_loss",
    "gd_loss",
    "asymptotic_loss",
    "error_ratio",
    "classical_limit_ratio",
    "top_singular_value_sq_2x2",
    "brute_force_optimal_q",
]

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0  # golden-section step ratio


@dataclass(frozen=True)
class BlockParams:
    """Parameters of one error block: spike strength and the two cosines.

    Arbitrary combinations with ``t > 0`` and ``c, c_tilde in [0, 1]`` are
    accepted; the triple need not arise from the spiked-model formulas.
    """

    t: float
    c: float
    c_tilde: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.t) and self.t > 0.0):
            raise DomainError(f"block strength t must be finite and positive, got {self.t!r}")
        for name, value in (("c", self.c), ("c_tilde", self.c_tilde)):
            if not (math.isfinite(value) and 0.0 <= value <= 1.0):
                raise DomainError(f"cosine {name} must lie in [0, 1], got {value!r}")

    @property
    def s(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.c * self.c))

    @property
    def s_tilde(self) -> float:
        return math.sqrt(max(0.0, 1.0 - self.c_tilde * self.c_tilde))


class ShrinkerKind(enum.Enum):
    """Which rule chooses the retained singular value for each component.

    OPTIMAL        minimizes the asymptotic operator-norm loss.
    ORACLE_TRUTH   plugs in the estimated population singular value (q = t).
    NO_SHRINK      keeps the observed singular value of each retained component.
    HARD_THRESHOLD keeps observed singular values above the bulk edge, zero below;
                   identical to NO_SHRINK once rank truncation has been applied.
    CUSTOM         caller supplies one finite q >= 0 per retained component.
    """

    OPTIMAL = "optimal"
    ORACLE_TRUTH = "oracle-t"
    NO_SHRINK = "none"
    HARD_THRESHOLD = "hard"
    CUSTOM = "custom"


@dataclass(frozen=True)
class LossReport:
    """Per-component asymptotic losses and their maximum.

    Operator norm decomposes over blocks as a maximum, so the overall loss is
    the largest per-component loss.
    """

    per_component_loss: tuple[float, ...]
    overall_loss: float


def block_matrix(q: float, b: BlockParams) -> np.ndarray:
    """Explicit 2-by-2 error block D(q) for retained singular value ``q``."""
    c, ct, s, st = b.c, b.c_tilde, b.s, b.s_tilde
    return np.array(
        [
            [b.t - q * c * ct, -q * c * st],
            [-q * s * ct, -q * s * st],
        ]
    )


def block_loss(q: float, b: BlockParams) -> float:
    """Squared operator norm of the error block D(q).

    Evaluated in closed form as ``(A + sqrt(A**2 - 4*B**2)) / 2`` with
    ``A = q**2 + t**2 - 2*q*t*c*c_tilde`` and ``B = -t*q*s*s_tilde``.
    The radicand is nonnegative in exact arithmetic; rounding dust is clamped
    to zero while genuinely negative values raise :class:`InternalError`.
    """
    q = float(q)
    if not math.isfinite(q):
        raise DomainError(f"q must be finite, got {q!r}")
    a = q * q + b.t * b.t - 2.0 * q * b.t * b.c * b.c_tilde
    bb = -b.t * q * b.s * b.s_tilde
    radicand = a * a - 4.0 * bb * bb
    if radicand < 0.0:
        if radicand < -1e-12 * max(1.0, a * a):
            raise InternalError(
                f"block-loss radicand {radicand} negative beyond rounding at q={q}, {b}"
            )
        radicand = 0.0
    return (a + math.sqrt(radicand)) / 2.0


def optimal_q(b: BlockParams) -> float:
    """Retained singular value minimizing the block loss.

    Equals ``t * min(c, c_tilde) / max(c, c_tilde)`` when either cosine is
    positive.  When both are zero every ``|q| <= t`` is a minimizer and 0 is
    returned, matching the undetectable branch of the observed-value rule.
    """
    hi = max(b.c, b.c_tilde)
    if hi <= 0.0:
        return 0.0
    return b.t * min(b.c, b.c_tilde) / hi


def optimal_q_from_sigma(sigma: float, gamma: float) -> float:
    """Optimal retained singular value as a function of the observed one.

    For ``sigma`` above the bulk edge this is
    ``t * sqrt((t**2 + min(1, gamma)) / (t**2 + max(1, gamma)))`` with
    ``t = invert_sigma(sigma, gamma)``; at or below the edge it is 0.
    """
    sigma = float(sigma)
    if not math.isfinite(sigma) or sigma <= 0.0:
        raise DomainError(f"sigma must be a finite positive real, got {sigma!r}")
    if sigma <= bulk_edge(gamma):
        return 0.0
    t = invert_sigma(sigma, gamma)
    t2 = t * t
    return t * math.sqrt((t2 + min(1.0, gamma)) / (t2 + max(1.0, gamma)))


def optimal_loss(b: BlockParams) -> float:
    """Operator-norm loss attained by the optimal rule on one block:
    ``t * sqrt(1 - min(c, c_tilde)**2)``."""
    lo = min(b.c, b.c_tilde)
    return b.t * math.sqrt(max(0.0, 1.0 - lo * lo))


def gd_loss(b: BlockParams) -> float:
    """Operator-norm loss of the keep-the-population-value rule (q = t):
    ``t * sqrt(1 - c*c_tilde + |c - c_tilde|)``."""
    return b.t * math.sqrt(max(0.0, 1.0 - b.c * b.c_tilde + abs(b.c - b.c_tilde)))


def asymptotic_loss(spectrum: Sequence[BlockParams], q: Sequence[float]) -> LossReport:
    """Per-component losses for a choice of retained values, and their max."""
    if len(spectrum) != len(q):
        raise ConfigError(
            f"spectrum has {len(spectrum)} components but {len(q)} retained values were given"
        )
    per = tuple(math.sqrt(block_loss(qk, bk)) for bk, qk in zip(spectrum, q))
    return LossReport(per_component_loss=per, overall_loss=max(per, default=0.0))


def error_ratio(gamma: float, t: float) -> float:
    """Asymptotic loss ratio of the optimal rule over the q = t rule.

    For a detectable rank-1 signal this equals
    ``sqrt((1 + min(c, c_tilde)) / (1 + max(c, c_tilde)))`` and lies in (0, 1].
    """
    t = float(t)
    if not math.isfinite(t) or t <= detection_threshold(gamma):
        raise DomainError(
            f"t={t!r} must exceed the detection threshold gamma**0.25 for the ratio to be defined"
        )
    c = cosine_left(t, gamma)
    ct = cosine_right(t, gamma)
    return math.sqrt((1.0 + min(c, ct)) / (1.0 + max(c, ct)))


def classical_limit_ratio(t: float) -> float:
    """Limit of :func:`error_ratio` as the aspect ratio tends to zero:
    ``sqrt((1 + sqrt(t**2 / (t**2 + 1))) / 2)``."""
    t = float(t)
    if not math.isfinite(t) or t <= 0.0:
        raise DomainError(f"t must be finite and positive, got {t!r}")
    t2 = t * t
    return math.sqrt(0.5 * (1.0 + math.sqrt(t2 / (t2 + 1.0))))


def shrinkage_summary(sigma: float, gamma: float) -> dict:
    """One-shot calculator: everything the asymptotics imply for one observed
    singular value, including both shrinkers' retained values and losses.

    Undetectable components report zeros for the recovered quantities.
    """
    comp = component_from_sigma(sigma, gamma)
    if not comp.detectable:
        return {
            "sigma": float(sigma),
            "gamma": float(gamma),
            "detectable": False,
            "t": 0.0,
            "c": 0.0,
            "c_tilde": 0.0,
            "s": 1.0,
            "s_tilde": 1.0,
            "q_optimal": 0.0,
            "loss_optimal": 0.0,
            "loss_gd": 0.0,
        }
    b = BlockParams(comp.t, comp.c, comp.c_tilde)
    return {
        "sigma": float(sigma),
        "gamma": float(gamma),
        "detectable": True,
        "t": comp.t,
        "c": comp.c,
        "c_tilde": comp.c_tilde,
        "s": comp.s,
        "s_tilde": comp.s_tilde,
        "q_optimal": optimal_q_from_sigma(sigma, gamma),
        "loss_optimal": optimal_loss(b),
        "loss_gd": gd_loss(b),
    }


def top_singular_value_sq_2x2(m11, m12, m21, m22):
    """Squared largest singular value of [[m11, m12], [m21, m22]].

    Uses the closed form ``s_max = (hypot(m11 + m22, m12 - m21)
    + hypot(m11 - m22, m12 + m21)) / 2``, which shares nothing with the
    A/B expression in :func:`block_loss`.  Accepts scalars or numpy arrays.
    """
    q1 = np.hypot(m11 + m22, m12 - m21)
    q2 = np.hypot(m11 - m22, m12 + m21)
    smax = (q1 + q2) / 2.0
    return smax * smax


def _oracle_loss(q: float, b: BlockParams) -> float:
    d = block_matrix(q, b)
    return float(top_singular_value_sq_2x2(d[0, 0], d[0, 1], d[1, 0], d[1, 1]))


def brute_force_optimal_q(
    b: BlockParams, q_max: float, grid_points: int = 4001
) -> tuple[float, float]:
    """Numerically minimize the squared block operator norm over q in [0, q_max].

    Scans a uniform grid of explicit 2-by-2 blocks using
    :func:`top_singular_value_sq_2x2`, then refines with golden-section search
    inside the winning grid cell (the loss is continuous but not assumed
    unimodal globally).  Returns ``(argmin, min)``.
    """
    if not (math.isfinite(q_max) and q_max >= b.t):
        raise ConfigError(f"q_max must be finite and at least t={b.t}, got {q_max!r}")
    if grid_points < 1000:
        raise ConfigError(f"grid_points must be at least 1000, got {grid_points}")

    qs = np.linspace(0.0, q_max, int(grid_points))
    c, ct, s, st = b.c, b.c_tilde, b.s, b.s_tilde
    losses = top_singular_value_sq_2x2(
        b.t - qs * (c * ct), -qs * (c * st), -qs * (s * ct), -qs * (s * st)
    )
    i = int(np.argmin(losses))
    lo = qs[max(i - 1, 0)]
    hi = qs[min(i + 1, len(qs) - 1)]

    # golden-section refinement within the bracket around the best grid point
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1 = _oracle_loss(x1, b)
    f2 = _oracle_loss(x2, b)
    while hi - lo > 1e-12 * max(1.0, q_max):
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = _oracle_loss(x1, b)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = _oracle_loss(x2, b)
    q_best = float((lo + hi) / 2.0)
    return q_best, _oracle_loss(q_best, b)
