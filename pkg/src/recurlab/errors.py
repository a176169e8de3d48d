"""Exception types shared across recurlab."""


class RecurlabError(Exception):
    pass


class ZeroOrNegative(RecurlabError, ValueError):
    pass


class FactorizationFailure(RecurlabError):
    pass


class NotPrime(RecurlabError, ValueError):
    pass


class UnlistedPrime(RecurlabError, KeyError):
    pass


class CriterionHolds(RecurlabError):
    """Raised when an obstruction is requested for a family that satisfies a | b(b-1)."""


class Unsupported(RecurlabError):
    pass


class DuplicateAbsoluteValue(RecurlabError, ValueError):
    pass


class DuplicateShift(RecurlabError, ValueError):
    pass


class NonSquareDeterminant(RecurlabError, ValueError):
    pass


class BudgetExceeded(RecurlabError):
    pass


class EmptyPrefix(RecurlabError, ValueError):
    pass


class SumIsZero(RecurlabError, ValueError):
    pass


class SizeShortfall(RecurlabError):
    def __init__(self, message, best_size=None, required=None):
        super().__init__(message)
        self.best_size = best_size
        self.required = required


class VerificationFailure(RecurlabError):
    """A constructed certificate failed its exhaustive re-check."""


class DescriptorError(RecurlabError, ValueError):
    """Malformed family / coloring descriptor; carries the offending position."""

    def __init__(self, message, text="", position=0):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position
