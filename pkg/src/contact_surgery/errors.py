"""Exception hierarchy shared by all modules."""


class SurgeryError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(SurgeryError, ValueError):
    """Matrix or vector has the wrong shape for the requested operation."""


class SingularMatrixError(SurgeryError, ArithmeticError):
    """Linking matrix is singular: the surgered manifold is not a rational homology sphere."""


class UnsupportedManifoldError(SurgeryError):
    """The query needs a rational homology sphere."""


class ConsistencyError(SurgeryError):
    """Two independent computations of the same quantity disagree."""


class FormulaInapplicableError(SurgeryError):
    """A formula's hypotheses are not met (e.g. tb = 0 on a contact (+1)-component)."""


class DomainError(SurgeryError, ValueError):
    """Argument outside the domain of a number-theoretic operation."""


class DegenerateSlopeError(DomainError):
    """Slope 0 cannot be normalised to a dividing slope <= -1."""


class InvalidGluingError(DomainError):
    """Gluing matrix is not unimodular or does not describe a lens space."""


class InvalidParameterError(SurgeryError, ValueError):
    """Catalog or lens-space parameters out of range."""


class DiagramParseError(SurgeryError):
    """Syntax or semantic error in a diagram file."""

    def __init__(self, lineno: int, token: str, message: str):
        self.lineno = lineno
        self.token = token
        self.message = message
        super().__init__(f"line {lineno}: {message} (at {token!r})")
