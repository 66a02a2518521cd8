"""Low-rank matrix denoising by operator-norm-optimal singular value shrinkage.

The package splits into closed-form spiked-model asymptotics
(:mod:`opshrink.asymptotics`), the 2-by-2 block loss with its optimal and
baseline shrinkage rules (:mod:`opshrink.shrinker`), the finite-sample
denoising pipeline and linear predictors (:mod:`opshrink.denoiser`), matrix
file formats (:mod:`opshrink.matio`), and the seeded Monte Carlo experiment
harness (:mod:`opshrink.harness`).  A CLI (:mod:`opshrink.cli`) and a FastAPI
service (:mod:`opshrink.service`) expose the same core.
"""

from ._version import __version__
from .asymptotics import (
    ComponentAsymptotics,
    bulk_edge,
    component_from_sigma,
    cosine_left,
    cosine_right,
    detection_threshold,
    forward_sigma,
    invert_sigma,
)
from .denoiser import (
    DEFAULT_DETECTION_TOLERANCE,
    ComponentEstimate,
    DataMatrix,
    DenoiseReport,
    GroundTruthFactors,
    SVDFactors,
    blp_predict,
    denoise,
    detect_rank,
    empirical_linear_predictor,
    operator_norm_error,
    thin_svd,
)
from .errors import (
    BelowBulkEdgeError,
    ConfigError,
    DegenerateSpectrumError,
    DomainError,
    InternalError,
    MatrixFormatError,
    OpshrinkError,
)
from .harness import (
    DEFAULT_SEED,
    CurveTable,
    ExperimentConfig,
    ExperimentKind,
    FactorLaw,
    SpikedModelConfig,
    blp_convergence_config,
    experiment_config_from_text,
    experiment_config_to_text,
    generate_spiked,
    ratio_sweep_config,
    read_curve_table,
    run_blp_convergence,
    run_experiment,
    run_ratio_sweep,
    run_shrinker_curves,
    shrinker_curves_config,
    substream_seed,
    write_curve_table,
)
from .shrinker import (
    BlockParams,
    LossReport,
    ShrinkerKind,
    asymptotic_loss,
    block_loss,
    block_matrix,
    brute_force_optimal_q,
    classical_limit_ratio,
    error_ratio,
    gd_loss,
    optimal_loss,
    optimal_q,
    optimal_q_from_sigma,
    shrinkage_summary,
    top_singular_value_sq_2x2,
)

__all__ = [
    "__version__",
    # asymptotics
    "ComponentAsymptotics",
    "bulk_edge",
    "component_from_sigma",
    "cosine_left",
    "cosine_right",
    "detection_threshold",
    "forward_sigma",
    "invert_sigma",
    # shrinker
    "BlockParams",
    "LossReport",
    "ShrinkerKind",
    "asymptotic_loss",
    "block_loss",
    "block_matrix",
    "brute_force_optimal_q",
    "classical_limit_ratio",
    "error_ratio",
    "gd_loss",
    "optimal_loss",
    "optimal_q",
    "optimal_q_from_sigma",
    "shrinkage_summary",
    "top_singular_value_sq_2x2",
    # denoiser
    "DEFAULT_DETECTION_TOLERANCE",
    "ComponentEstimate",
    "DataMatrix",
    "DenoiseReport",
    "GroundTruthFactors",
    "SVDFactors",
    "blp_predict",
    "denoise",
    "detect_rank",
    "empirical_linear_predictor",
    "operator_norm_error",
    "thin_svd",
    # harness
    "DEFAULT_SEED",
    "CurveTable",
    "ExperimentConfig",
    "ExperimentKind",
    "FactorLaw",
    "SpikedModelConfig",
    "blp_convergence_config",
    "experiment_config_from_text",
    "experiment_config_to_text",
    "generate_spiked",
    "ratio_sweep_config",
    "read_curve_table",
    "run_blp_convergence",
    "run_experiment",
    "run_ratio_sweep",
    "run_shrinker_curves",
    "shrinker_curves_config",
    "substream_seed",
    "write_curve_table",
    # errors
    "BelowBulkEdgeError",
    "ConfigError",
    "DegenerateSpectrumError",
    "DomainError",
    "InternalError",
    "MatrixFormatError",
    "OpshrinkError",
]
