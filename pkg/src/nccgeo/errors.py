"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Matrix/vector shapes are incompatible with the operation."""


class DomainError(ValueError):
    """Input violates a mathematical precondition (wrong subspace, singular
    group element, unsupported family, ...)."""


class ConsistencyError(RuntimeError):
    """A computed quantity left the space it must live in (coordinate
    extraction residual too large, factor off its graded subspace, ...)."""


class NumericError(ArithmeticError):
    """A numerical routine failed (non-convergence, spectrum that cannot be
    classified, indefinite operator that should be positive, ...)."""


class AtlasError(ValueError):
    """The embedded classification table is malformed or violates one of its
    rank relations."""
