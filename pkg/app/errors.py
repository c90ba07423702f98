"""
Exception hierarchy for the Bessel-Struve toolkit.

Every error carries the process exit code the CLI reports for it:
1 for numerical or verification failures, 2 for usage errors.
"""


class BesselStruveError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class NumericalError(BesselStruveError):
    """A computation could not be carried out reliably."""

    exit_code = 1


class UsageError(BesselStruveError, ValueError):
    """Invalid input supplied by the caller."""

    exit_code = 2


# Numerical failures

class PoleError(NumericalError):
    """Gamma evaluated at a non-positive integer."""


class PrecisionLossError(NumericalError):
    """Series argument outside the window where cancellation is acceptable."""


class WindowError(NumericalError):
    """Transform or scan requested outside the kernel evaluation window."""


class DegenerateError(NumericalError):
    """Envelope fit over samples that all vanish."""


class CapError(NumericalError):
    """No candidate within the search cap majorizes the samples."""


class SmoothnessError(NumericalError):
    """Function lacks the derivatives a formula requires."""


class VerificationFailure(NumericalError):
    """One or more verification properties exceeded tolerance."""


# Usage errors

class SizeError(UsageError):
    """Quadrature size out of range."""


class InvalidExponentError(UsageError):
    """Jacobi weight exponent not integrable."""


class DomainError(UsageError):
    """Point outside the domain where an operator is defined."""


class OrderError(UsageError):
    """Order parameter or derivative order out of range."""


class EvennessError(UsageError):
    """Function required to be even is not."""


class ConfigurationError(UsageError):
    """Invalid configuration value."""


class DescriptorError(UsageError):
    """Unparseable or unknown function descriptor."""


class GridSpecError(UsageError):
    """Invalid grid or rectangle specification."""


__all__ = [
    'BesselStruveError',
    'NumericalError',
    'UsageError',
    'PoleError',
    'PrecisionLossError',
    'WindowError',
    'DegenerateError',
    'CapError',
    'SmoothnessError',
    'VerificationFailure',
    'SizeError',
    'InvalidExponentError',
    'DomainError',
    'OrderError',
    'EvennessError',
    'ConfigurationError',
    'DescriptorError',
    'GridSpecError',
]
