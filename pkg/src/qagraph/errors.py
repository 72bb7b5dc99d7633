"""Exception hierarchy shared by every qagraph module.

The CLI maps these onto exit codes: data-shaped problems (bad files,
unknown nodes, conflicting inserts) exit 2, computation-shaped problems
(non-convergence, violated algorithm preconditions) exit 3.
"""


class QagraphError(Exception):
    """Base class for all qagraph errors."""


class DataError(QagraphError):
    """Input data cannot be read or does not satisfy structural contracts."""


class ParseError(DataError):
    """A file failed to parse; message carries the offending line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class FormatMismatchError(DataError):
    """The file content does not look like the declared format."""


class NotFoundError(DataError):
    """A referenced node does not exist in the graph."""


class ConflictError(DataError):
    """An insert contradicts an existing record (e.g. node kind change)."""


class DanglingEdgeError(DataError):
    """An edge references a missing endpoint."""


class ComputationError(QagraphError):
    """An algorithm cannot produce a result on this input."""


class DomainError(ComputationError):
    """Arguments are outside an operation's domain."""


class UnsupportedInputError(DomainError):
    """The operation is not defined for this graph class (e.g. directed)."""


class NoPathError(ComputationError):
    """No path exists between the requested endpoints."""


class ConvergenceError(ComputationError):
    """An iterative solver exhausted its iteration budget."""

    def __init__(self, message, residual=None):
        if residual is not None:
            message = f"{message} (last residual {residual:.3e})"
        super().__init__(message)
        self.residual = residual
