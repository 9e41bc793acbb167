class PrimalDynError(Exception):
    """Base class for errors raised by primaldyn."""


class IndexOutOfRange(PrimalDynError, ValueError):
    pass


class EmptyDomain(PrimalDynError, ValueError):
    pass


class DomainTooLarge(PrimalDynError):
    """Exhaustive enumeration requested above the configured cap."""


class BudgetExceeded(PrimalDynError):
    pass


class LimitExceeded(PrimalDynError):
    """More complete preorbits than the caller allowed.

    ``count`` holds the number found before giving up (a lower bound).
    """

    def __init__(self, message, count):
        super().__init__(message)
        self.count = count


class CertificateFailure(PrimalDynError, AssertionError):
    """A stability inclusion failed. Indicates a bug, never a property of f."""


class InvariantViolation(PrimalDynError, AssertionError):
    """Two independent evaluations of the same property disagreed."""
