"""Exception hierarchy shared by every toolkit module."""


class ToolkitError(Exception):
    """Base exception for toolkit errors."""
    exit_code = 3


class ConfigError(ToolkitError, ValueError):
    """Raised for invalid configuration or CLI usage."""
    exit_code = 1


class DataError(ToolkitError, ValueError):
    """Raised when the dataset or an input file is malformed or invalid."""
    exit_code = 2

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ClusteringError(ToolkitError, ValueError):
    """Raised when fuzzy c-means cannot run on the given points."""
    exit_code = 2


class GenomeError(ToolkitError, ValueError):
    """Raised when a gene vector does not fit its layout."""
    exit_code = 2


class ModelFormatError(ToolkitError, ValueError):
    """Raised when a saved model file is malformed or from another version."""
    exit_code = 2


class StageError(ToolkitError):
    """Wraps an upstream error with the experiment stage it happened in."""

    def __init__(self, stage: str, cause: BaseException):
        self.stage = stage
        self.cause = cause
        self.exit_code = getattr(cause, 'exit_code', 3)
        super().__init__(f"[{stage}] {cause}")
