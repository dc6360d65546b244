"""Exception hierarchy shared across the package."""


class SkeinKitError(Exception):
    """Base class for all package errors."""


class ZeroPolynomialError(SkeinKitError):
    """Degree query on the zero polynomial (always an upstream engine bug)."""


class DiagramError(SkeinKitError):
    """Malformed diagram data or an invalid crossing/component reference."""


class BudgetExceededError(SkeinKitError):
    """A computation ran out of its node or wall-clock budget.

    Carries partial statistics; never a wrong polynomial.
    """

    def __init__(self, message, *, nodes=None, elapsed=None, memo_size=None):
        super().__init__(message)
        self.nodes = nodes
        self.elapsed = elapsed
        self.memo_size = memo_size


class ResourceLimitError(SkeinKitError):
    """An engine refused an input that would exceed its memory ceiling."""


class CacheCorruptionError(SkeinKitError):
    """A memo or disk-cache entry would be overwritten with a different value."""
