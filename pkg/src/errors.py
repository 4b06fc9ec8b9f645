"""Exception types raised across the package."""


class SequenceError(ValueError):
    """Raised for invalid symbols, lengths, moduli or violated preconditions."""


class NotEulerianError(SequenceError):
    """Raised when a graph cannot be traversed by a single Eulerian circuit."""


class SearchCapExceeded(SequenceError):
    """Raised when an exhaustive search or scan would exceed the state cap."""


class SequenceFileError(SequenceError):
    """Raised for malformed sequence files."""


class VerificationError(RuntimeError):
    """Raised when a generated sequence fails its own verifier."""


class LiftError(VerificationError):
    """Raised when a lift or a recursion stage cannot produce a valid sequence."""
