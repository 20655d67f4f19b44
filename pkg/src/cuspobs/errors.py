"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class CuspObsError(Exception):
    exit_code = 2


class DescriptorError(CuspObsError, ValueError):
    """Malformed cusp descriptor (bad gcd, bad characteristic, bad gap set)."""


class InputError(CuspObsError, ValueError):
    """Request or config file that cannot be interpreted."""


class InvalidSurface(CuspObsError, ValueError):
    """Surface data failing a validation finding the requested mode depends on."""

    def __init__(self, message, findings=()):
        super().__init__(message)
        self.findings = list(findings)


class ParityError(CuspObsError, ValueError):
    """An intersection number that must be even is odd (K is not characteristic)."""


class InvariantViolation(CuspObsError, RuntimeError):
    exit_code = 3

    def __init__(self, invariant, message):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class LargenessError(CuspObsError, ValueError):
    """Surgery coefficient q <= 2g, outside the closed-form d-invariant regime."""

    exit_code = 4


class SearchCapExceeded(CuspObsError, RuntimeError):
    exit_code = 5
