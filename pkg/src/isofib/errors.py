"""Exception types shared across the package."""


class IsofibError(Exception):
    """Base class for every error raised deliberately by isofib."""


class InvalidInput(IsofibError, ValueError):
    pass


class NotIrreducible(InvalidInput):
    pass


class InvalidAutomorphism(InvalidInput):
    pass


class SingularCurve(InvalidInput):
    pass


class DegenerateDerivation(InvalidInput):
    pass


class UnsupportedSubgroup(IsofibError):
    pass


class ResourceLimit(IsofibError):
    """An exhaustive search would exceed its configured cap."""


class NonExtendable(IsofibError):
    pass


class ClassificationRejected(IsofibError):
    """Raised by the classifier; carries the diagnostics that failed."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics
