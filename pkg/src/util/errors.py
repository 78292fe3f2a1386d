"""
Exception hierarchy shared by every fusionkk package.

All errors derive from FusionKKError so the command line front end can map
them onto exit codes in one place (see main.py):

    exit 1  VerificationFailedError          (a check failed)
    exit 2  ModelParseError, UnknownModelError, SectorIndexError,
            DimensionMismatchError, ConfigError (usage or input error)

Axiom failures found by a verify_* operation are NOT exceptions; they are
report content (see report.py). Only loading turns a failing report into
VerificationFailedError, because a bad model must never be used downstream.
"""

from typing import Any, Optional


class FusionKKError(Exception):
    """Base class of all fusionkk errors."""


class DimensionMismatchError(FusionKKError, ValueError):
    """Operands have incompatible ranks, shapes or lengths."""


class OrderMismatchError(FusionKKError, ValueError):
    """Two cyclotomic numbers of different order were combined without embedding."""


class CyclotomicZeroDivisionError(FusionKKError, ZeroDivisionError):
    """Inverse of the zero element of a cyclotomic field was requested."""


class SectorIndexError(FusionKKError, IndexError):
    """A sector index or label does not exist in the fusion ring."""


class InvalidModularDataError(FusionKKError):
    """Modular data is internally inconsistent (e.g. Verlinde output not in ℕ)."""


class DegenerateBraidingError(InvalidModularDataError):
    """The S matrix is singular, so the braiding is degenerate."""


class ModelParseError(FusionKKError):
    """A model file is not well-formed JSON or violates the model schema."""


class UnknownModelError(FusionKKError):
    """A builtin model name is unknown or its parameters are out of range."""


class ConfigError(FusionKKError):
    """A configuration value is invalid."""


class VerificationFailedError(FusionKKError):
    """
    A verification report did not pass.

    Attributes:
        report: The failing VerificationReport, kept for diagnostics
    """

    def __init__(self, message: str, report: Optional[Any] = None) -> None:
        super().__init__(message)
        self.report = report
