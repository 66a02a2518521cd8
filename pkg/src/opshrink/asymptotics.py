"""Closed-form spiked-model limits for a low-rank signal in white noise.

For a p-by-n observation with iid N(0, 1/n) noise and aspect ratio
``gamma = p/n``, these maps connect the population spike strength ``t``,
the limiting observed singular value ``sigma``, and the limiting cosines
between observed and population singular vectors.  A spike is detectable
only when ``t > gamma**0.25``, equivalently when ``sigma`` exceeds the
noise bulk edge ``1 + sqrt(gamma)``.

All functions are pure and thread-safe; aspect ratios are plain positive
floats validated at entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BelowBulkEdgeError, DomainError, InternalError

__all__ = [
    "ComponentAsymptotics",
    "bulk_edge",
    "detection_threshold",
    "forward_sigma",
    "invert_sigma",
    "cosine_left",
    "cosine_right",
    "component_from_sigma",
]

# Radicand more negative than this (relative to its leading term) is a bug,
# anything smaller is floating-point dust near the bulk edge.
_RADICAND_DUST = 1e-12


def _check_gamma(gamma: float) -> float:
    gamma = float(gamma)
    if not math.isfinite(gamma) or gamma <= 0.0:
        raise DomainError(f"aspect ratio must be a finite positive real, got {gamma!r}")
    return gamma


def _check_spike(t: float) -> float:
    t = float(t)
    if not math.isfinite(t) or t < 0.0:
        raise DomainError(f"spike strength must be a finite nonnegative real, got {t!r}")
    return t


def bulk_edge(gamma: float) -> float:
    """Largest singular value produced by pure noise in the limit: 1 + sqrt(gamma)."""
    return 1.0 + math.sqrt(_check_gamma(gamma))


def detection_threshold(gamma: float) -> float:
    """Smallest spike strength visible above the noise bulk: gamma**(1/4)."""
    return _check_gamma(gamma) ** 0.25


def forward_sigma(t: float, gamma: float) -> float:
    """Limiting observed singular value for a spike of strength ``t``.

    Returns ``sqrt((t**2 + 1) * (1 + gamma / t**2))`` for a detectable spike
    (``t > gamma**0.25``) and the bulk edge ``1 + sqrt(gamma)`` otherwise,
    including ``t = 0``.
    """
    t = _check_spike(t)
    gamma = _check_gamma(gamma)
    if t <= detection_threshold(gamma):
        return bulk_edge(gamma)
    t2 = t * t
    return math.sqrt((t2 + 1.0) * (1.0 + gamma / t2))


def invert_sigma(sigma: float, gamma: float) -> float:
    """Spike strength whose limiting observed singular value is ``sigma``.

    Inverts :func:`forward_sigma` on its detectable branch:

        t = sqrt((sigma**2 - 1 - gamma + sqrt((sigma**2 - 1 - gamma)**2 - 4*gamma)) / 2)

    Raises
    ------
    BelowBulkEdgeError
        If ``sigma <= 1 + sqrt(gamma)``.  The comparison is strict and
        tolerance-free; finite-sample slack belongs to rank detection, not
        to this asymptotic map.
    """
    gamma = _check_gamma(gamma)
    sigma = float(sigma)
    if not math.isfinite(sigma):
        raise DomainError(f"sigma must be finite, got {sigma!r}")
    edge = bulk_edge(gamma)
    if sigma <= edge:
        raise BelowBulkEdgeError(
            f"sigma={sigma} is at or below the bulk edge {edge}; "
            "the component is undetectable and cannot be inverted"
        )
    m = sigma * sigma - 1.0 - gamma
    radicand = m * m - 4.0 * gamma
    if radicand < 0.0:
        # Above the edge the radicand is positive in exact arithmetic.
        if radicand < -_RADICAND_DUST * max(1.0, m * m):
            raise InternalError(
                f"radicand {radicand} is negative beyond rounding for sigma={sigma}, gamma={gamma}"
            )
        radicand = 0.0
    return math.sqrt((m + math.sqrt(radicand)) / 2.0)


def _cosine_sq_numerator(t2: float, gamma: float) -> float:
    # 1 - gamma / t**4, clamped against rounding just above the threshold
    return max(0.0, 1.0 - gamma / (t2 * t2))


def cosine_left(t: float, gamma: float) -> float:
    """Limiting cosine between observed and population left singular vectors.

    Returns ``sqrt((1 - gamma/t**4) / (1 + gamma/t**2))`` for a detectable
    spike and 0 at or below the detection threshold.  The nonnegative root is
    taken; signs of individual vectors are arbitrary but their product is not.
    """
    t = _check_spike(t)
    gamma = _check_gamma(gamma)
    if t <= detection_threshold(gamma):
        return 0.0
    t2 = t * t
    return math.sqrt(_cosine_sq_numerator(t2, gamma) / (1.0 + gamma / t2))


def cosine_right(t: float, gamma: float) -> float:
    """Limiting cosine between observed and population right singular vectors.

    As :func:`cosine_left` with formula ``sqrt((1 - gamma/t**4) / (1 + 1/t**2))``.
    """
    t = _check_spike(t)
    gamma = _check_gamma(gamma)
    if t <= detection_threshold(gamma):
        return 0.0
    t2 = t * t
    return math.sqrt(_cosine_sq_numerator(t2, gamma) / (1.0 + 1.0 / t2))


@dataclass(frozen=True)
class ComponentAsymptotics:
    """Limiting quantities for one spiked component at a given aspect ratio.

    ``s`` and ``s_tilde`` are the sines paired with the cosines ``c`` and
    ``c_tilde``; an undetectable component has ``c = c_tilde = 0`` and its
    ``sigma`` pinned at the bulk edge.
    """

    t: float
    sigma: float
    c: float
    c_tilde: float
    s: float
    s_tilde: float
    detectable: bool


def component_from_sigma(sigma: float, gamma: float) -> ComponentAsymptotics:
    """Full set of limiting quantities recovered from one observed singular value.

    Above the bulk edge the spike strength is recovered with
    :func:`invert_sigma` and the cosines follow; at or below the edge the
    undetectable record is returned with ``t = 0`` and ``sigma`` set to the
    edge itself.
    """
    gamma = _check_gamma(gamma)
    sigma = float(sigma)
    if not math.isfinite(sigma) or sigma <= 0.0:
        raise DomainError(f"sigma must be a finite positive real, got {sigma!r}")
    edge = bulk_edge(gamma)
    if sigma <= edge:
        return ComponentAsymptotics(
            t=0.0, sigma=edge, c=0.0, c_tilde=0.0, s=1.0, s_tilde=1.0, detectable=False
        )
    t = invert_sigma(sigma, gamma)
    c = cosine_left(t, gamma)
    c_tilde = cosine_right(t, gamma)
    return ComponentAsymptotics(
        t=t,
        sigma=sigma,
        c=c,
        c_tilde=c_tilde,
        s=math.sqrt(max(0.0, 1.0 - c * c)),
        s_tilde=math.sqrt(max(0.0, 1.0 - c_tilde * c_tilde)),
        detectable=True,
    )
