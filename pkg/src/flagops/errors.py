"""Exception types shared across the package."""


class FlagopsError(Exception):
    """Base class for package errors."""


class ModulusMismatchError(FlagopsError):
    """Operands living over different moduli n."""


class BoundExceededError(FlagopsError):
    """A requested computation exceeds a configured bound."""


class InternalInconsistencyError(FlagopsError):
    """A structural guarantee failed; indicates a bug, not bad input."""
