"""Exception hierarchy for the Saddlepoint toolkit."""


class SaddlepointError(Exception):
    """Base class for all toolkit errors."""


class ContractError(SaddlepointError, ValueError):
    """A caller broke an operation's precondition."""


class InvariantError(SaddlepointError, RuntimeError):
    """An internal invariant failed; signals an implementation bug."""


class MatrixFileError(SaddlepointError, ValueError):
    """A matrix file could not be parsed."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        if line:
            message = f"line {line}: {message}"
        super().__init__(message)
