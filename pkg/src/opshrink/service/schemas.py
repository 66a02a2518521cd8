"""Pydantic request/response models for the HTTP service."""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from ..harness import DEFAULT_SEED


class AsymptoticsRequest(BaseModel):
    sigma: float = Field(gt=0, description="observed singular value, in noise units")
    gamma: float = Field(gt=0, description="aspect ratio p/n")


class AsymptoticsResponse(BaseModel):
    sigma: float
    gamma: float
    detectable: bool
    t: float
    c: float
    c_tilde: float
    s: float
    s_tilde: float
    q_optimal: float
    loss_optimal: float
    loss_gd: float


class ComponentReport(BaseModel):
    sigma_observed: float
    t_hat: float
    c_hat: float
    c_tilde_hat: float
    q_applied: float


class DenoiseReportModel(BaseModel):
    detected_rank: int
    per_component: list[ComponentReport]
    predicted_loss: float
    shrinker: str
    gamma_used: float


class DenoiseRequest(BaseModel):
    values: list[list[float]] = Field(description="matrix rows (features)")
    noise_scale: float = Field(default=1.0, gt=0)
    shrinker: Literal["optimal", "oracle-t", "none", "hard", "custom"] = "optimal"
    tolerance: float = Field(default=0.02, ge=0)
    custom_q: list[float] | None = Field(
        default=None, description="retained values for the custom shrinker, one per detected component"
    )


class DenoiseResponse(BaseModel):
    values: list[list[float]]
    report: DenoiseReportModel


class CurveTableModel(BaseModel):
    columns: list[str]
    rows: list[list[float]]
    metadata: dict[str, str]


class ShrinkerCurvesRequest(BaseModel):
    gamma: float = Field(default=0.5, gt=0)
    sigma_grid: list[float] = Field(min_length=1, description="strictly increasing, above the bulk edge")
    seed: int = Field(default=DEFAULT_SEED, ge=0)


class RatioSweepRequest(BaseModel):
    gamma_grid: list[float] = Field(min_length=1, description="strictly increasing, within (0, 1]")
    p: int = Field(default=100, ge=2)
    replicates: int = Field(default=0, ge=0, description="0 keeps the sweep analytic")
    seed: int = Field(default=DEFAULT_SEED, ge=0)


class BlpConvergenceRequest(BaseModel):
    n_grid: list[int] = Field(min_length=1, description="strictly increasing sample counts, each >= p")
    p: int | None = Field(default=None, ge=2)
    strength: float = Field(default=1.1, gt=0)
    replicates: int | None = Field(default=None, ge=1)
    paper_scale: bool = False
    seed: int = Field(default=DEFAULT_SEED, ge=0)


class HealthResponse(BaseModel):
    status: str
    version: str
