"""Exception types raised by the numerical routines."""


class StableLrdError(Exception):
    """Base class for all library-specific failures."""


class EmbeddingFailure(StableLrdError):
    """Circulant embedding produced negative eigenvalue mass beyond tolerance."""


class NonPositiveDefinite(StableLrdError):
    """Covariance matrix is numerically singular or not positive definite."""


class NoConvergence(StableLrdError):
    """A scalar root solve failed to reach the requested residual."""


class NonConvergence(StableLrdError):
    """Node-doubling did not stabilize a brute-force expectation estimate."""


class QuadratureFailure(StableLrdError):
    """Adaptive quadrature could not certify the requested absolute error."""


class DomainError(StableLrdError):
    """Argument outside the mathematical domain of an operation."""


class RankUndetermined(StableLrdError):
    """All expansion coefficients up to the search limit are below tolerance."""


class DegenerateSample(StableLrdError):
    """Replication sample has zero spread; standardization undefined."""
