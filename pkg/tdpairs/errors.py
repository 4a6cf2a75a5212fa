from __future__ import annotations

"""
Exception hierarchy for the toolkit.

Library code raises these; only the CLI layer (`tdpairs.main`) turns them
into exit codes.
"""

from typing import Any, Optional


class TDPairError(Exception):
    """Base class for every error raised by the toolkit."""


class BadParameter(TDPairError, ValueError):
    """A construction parameter or spec string violates its constraints."""


class NotDiagonalizable(TDPairError, ValueError):
    """The minimal polynomial of a matrix is not squarefree."""


class IrrationalSpectrum(TDPairError, ValueError):
    """The minimal polynomial has an irreducible factor of degree > 1 over QQ."""


class NotAPath(TDPairError, ValueError):
    """The eigenspace support graph is not a simple path."""


class Rho0NotOne(TDPairError, ValueError):
    """A split sequence was requested but U_0 is not one-dimensional."""

    def __init__(self, dimension: int) -> None:
        super().__init__(f"U_0 has dimension {dimension}, expected 1.")
        self.dimension = dimension


class InternalInvariantViolation(TDPairError, RuntimeError):
    """An invariant that must hold for every TD pair failed to hold."""


class ConstructionRejected(TDPairError, RuntimeError):
    """A generated pair failed verification; the report is attached."""

    def __init__(self, message: str, report: Optional[Any] = None) -> None:
        super().__init__(message)
        self.report = report


class FormSpaceDimension(TDPairError, RuntimeError):
    """The invariant bilinear forms do not form a one-dimensional space."""

    def __init__(self, dimension: int) -> None:
        super().__init__(f"Invariant form space has dimension {dimension}, expected 1.")
        self.dimension = dimension


class SolutionSpaceDimension(TDPairError, RuntimeError):
    """An intertwiner space has dimension > 1 between irreducible pairs."""

    def __init__(self, dimension: int) -> None:
        super().__init__(f"Intertwiner space has dimension {dimension}, expected at most 1.")
        self.dimension = dimension


class DocumentError(TDPairError, ValueError):
    """A pair document or spec list could not be parsed."""


__all__ = [
    "TDPairError",
    "BadParameter",
    "NotDiagonalizable",
    "IrrationalSpectrum",
    "NotAPath",
    "Rho0NotOne",
    "InternalInvariantViolation",
    "ConstructionRejected",
    "FormSpaceDimension",
    "SolutionSpaceDimension",
    "DocumentError",
]
