"""Exception hierarchy for Cramer."""


class CramerError(Exception):
    """Base class for all toolkit errors."""


class DimensionError(CramerError, ValueError):
    """Shapes of matrices or points do not fit the operation."""


class SingularMatrixError(CramerError, ArithmeticError):
    """A matrix that must be invertible has zero determinant."""


class SamplingError(CramerError, RuntimeError):
    """Random sampling ran out of retries."""


class TableError(CramerError, ValueError):
    """Polynomials from different variable tables were combined."""


class UnknownVariableError(CramerError, KeyError):
    """A variable is not part of the table."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else "unknown variable"


class ParameterError(CramerError, ValueError):
    """Invalid (r, s) or other numeric parameter."""


class PreconditionError(CramerError, ValueError):
    """An operation was called on a point outside its domain."""


class ChartDomainError(PreconditionError):
    """A pivot minor vanishes at the point."""


class LimitError(CramerError, ArithmeticError):
    """A one-parameter path has negative powers of t."""


class VerificationError(CramerError, AssertionError):
    """An internal consistency assertion failed."""


class ConfigurationError(CramerError, ValueError):
    """Bad or missing configuration or data files."""
