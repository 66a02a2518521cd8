"""FastAPI service wrapping the denoising library.

Stateless endpoints: a one-shot asymptotics calculator, matrix denoising, and
the three curve-table experiments.  Domain and configuration errors from the
library surface as HTTP 422 responses.
"""

from __future__ import annotations

import numpy as np
from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .._version import __version__
from ..denoiser import DataMatrix, denoise
from ..errors import OpshrinkError
from ..harness import (
    CurveTable,
    blp_convergence_config,
    ratio_sweep_config,
    run_experiment,
    shrinker_curves_config,
)
from ..shrinker import ShrinkerKind, shrinkage_summary
from .schemas import (
    AsymptoticsRequest,
    AsymptoticsResponse,
    BlpConvergenceRequest,
    CurveTableModel,
    DenoiseRequest,
    DenoiseResponse,
    HealthResponse,
    RatioSweepRequest,
    ShrinkerCurvesRequest,
)

__all__ = ["create_app", "app"]


def _table_response(table: CurveTable) -> CurveTableModel:
    return CurveTableModel(
        columns=list(table.columns),
        rows=[list(row) for row in table.rows],
        metadata=dict(table.metadata),
    )


def create_app() -> FastAPI:
    app = FastAPI(
        title="opshrink",
        version=__version__,
        description="Low-rank matrix denoising by operator-norm-optimal singular value shrinkage.",
    )

    @app.exception_handler(OpshrinkError)
    async def _library_error(request: Request, exc: OpshrinkError) -> JSONResponse:
        return JSONResponse(status_code=422, content={"detail": str(exc)})

    @app.get("/health", response_model=HealthResponse)
    def health() -> HealthResponse:
        return HealthResponse(status="ok", version=__version__)

    @app.post("/asymptotics", response_model=AsymptoticsResponse)
    def asymptotics(req: AsymptoticsRequest) -> AsymptoticsResponse:
        return AsymptoticsResponse(**shrinkage_summary(req.sigma, req.gamma))

    @app.post("/denoise", response_model=DenoiseResponse)
    def denoise_matrix(req: DenoiseRequest) -> DenoiseResponse:
        y = DataMatrix(np.array(req.values, dtype=float), noise_scale=req.noise_scale)
        x_hat, report = denoise(
            y, ShrinkerKind(req.shrinker), tolerance=req.tolerance, custom_q=req.custom_q
        )
        return DenoiseResponse(
            values=x_hat.values.tolist(),
            report={
                "detected_rank": report.detected_rank,
                "per_component": [vars(c) for c in report.per_component],
                "predicted_loss": report.predicted_loss,
                "shrinker": report.shrinker.value,
                "gamma_used": report.gamma_used,
            },
        )

    @app.post("/experiments/shrinker-curves", response_model=CurveTableModel)
    def shrinker_curves(req: ShrinkerCurvesRequest) -> CurveTableModel:
        cfg = shrinker_curves_config(gamma=req.gamma, grid=tuple(req.sigma_grid), seed=req.seed)
        return _table_response(run_experiment(cfg))

    @app.post("/experiments/ratio-sweep", response_model=CurveTableModel)
    def ratio_sweep(req: RatioSweepRequest) -> CurveTableModel:
        cfg = ratio_sweep_config(
            grid=tuple(req.gamma_grid), p=req.p, replicates=req.replicates, seed=req.seed
        )
        return _table_response(run_experiment(cfg))

    @app.post("/experiments/blp-convergence", response_model=CurveTableModel)
    def blp_convergence(req: BlpConvergenceRequest) -> CurveTableModel:
        cfg = blp_convergence_config(
            p=req.p,
            strength=req.strength,
            n_grid=tuple(req.n_grid),
            replicates=req.replicates,
            paper_scale=req.paper_scale,
            seed=req.seed,
        )
        return _table_response(run_experiment(cfg))

    return app


app = create_app()
