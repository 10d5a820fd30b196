"""Exception types shared across the package."""

from __future__ import annotations


class EigenshiftError(Exception):
    """Base class for all package-specific errors."""


class MixedFieldError(EigenshiftError):
    """Arithmetic or matrix operation mixing incompatible scalar fields."""


# Matrix-level field mismatches are the same failure mode.
FieldMismatchError = MixedFieldError


class NonRealDiagonalError(EigenshiftError):
    """A diagonal entry of a Hermitian matrix has a nonzero imaginary part."""


class DimensionMismatchError(EigenshiftError):
    """Operands have incompatible shapes."""


class EmptySelectionError(EigenshiftError):
    """A principal submatrix selection contained no indices."""


class ConvergenceFailureError(EigenshiftError):
    """The eigenvalue iteration did not converge within its sweep cap."""


class NotPositiveDefiniteError(EigenshiftError):
    """Cholesky pivot failure; carries the first failing pivot index."""

    def __init__(self, pivot_index: int, message: str | None = None):
        self.pivot_index = pivot_index
        super().__init__(message or f"matrix is not positive definite (pivot {pivot_index})")


class IncompatibleOperatorError(EigenshiftError):
    """Requested operator kind does not fit the graph's record kinds."""


class NotGeneralizedLaplacianError(EigenshiftError):
    """Diagonal dominance fails; carries the first violating row."""

    def __init__(self, row: int, message: str | None = None):
        self.row = row
        super().__init__(message or f"matrix is not a generalized Laplacian (row {row})")


class UnexpectedDifferenceShapeError(EigenshiftError):
    """Operator difference is not the expected rank-2 block."""


class MethodDisagreementError(EigenshiftError):
    """Two independent verdict routes disagreed; carries both reports."""

    def __init__(self, spectral_report, counting_report, message: str | None = None):
        self.spectral_report = spectral_report
        self.counting_report = counting_report
        super().__init__(message or "spectral and counting routes disagree")


class ShapeMismatchError(EigenshiftError):
    """Verifier inputs violate the hypotheses of the checked statement."""


class GapUnreachableError(EigenshiftError):
    """Could not generate a matrix with the requested spectral gap."""


class FormatError(EigenshiftError):
    """Malformed input file; carries file name, line number, and token."""

    def __init__(self, source: str, line: int, token: str, message: str):
        self.source = source
        self.line = line
        self.token = token
        super().__init__(f"{source}:{line}: {message} (near {token!r})")
