"""Exception hierarchy shared across the package.

The split mirrors the CLI exit-code contract: file/format problems map to
exit 2, configuration and mathematical-domain problems to exit 3.
"""


class OpshrinkError(Exception):
    """Base class for all errors raised by opshrink."""


class DomainError(OpshrinkError, ValueError):
    """An input lies outside the mathematical domain of an operation."""


class BelowBulkEdgeError(DomainError):
    """Observed singular value at or below the noise bulk edge 1 + sqrt(gamma).

    Such a component carries no recoverable signal and must not be inverted;
    callers should treat it as undetectable instead.
    """


class DegenerateSpectrumError(DomainError):
    """A retained singular value is zero, so a linear predictor is undefined."""


class ConfigError(OpshrinkError, ValueError):
    """Invalid configuration: bad shapes, grids, lengths, or option values."""


class MatrixFormatError(OpshrinkError, ValueError):
    """A matrix file does not conform to the declared on-disk format."""


class InternalError(OpshrinkError):
    """A mathematically impossible intermediate value; signals a bug."""
