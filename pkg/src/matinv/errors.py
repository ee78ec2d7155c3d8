"""Exception types shared across the package."""


class MatinvError(Exception):
    """Base class for all errors raised by matinv."""


class PartitionParseError(MatinvError, ValueError):
    """Raised when partition text cannot be parsed."""


class InputFormatError(MatinvError, ValueError):
    """Raised for malformed matrix-tuple input; the message names field and position."""


class ContractError(MatinvError, ValueError):
    """A precondition of an operation was violated by the caller."""


class UnsupportedError(MatinvError, NotImplementedError):
    """The requested parameters are outside what the operation covers."""


class ConsistencyError(MatinvError, RuntimeError):
    """An internal identity failed.  This always means a bug, never bad input."""
