"""Exception hierarchy shared by all hgirth modules."""


class HgirthError(Exception):
    """Base class for all toolkit errors."""


class GraphParseError(HgirthError, ValueError):
    """Malformed edge-list document.  Subclasses pinpoint the violation."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class MalformedLineError(GraphParseError):
    pass


class SelfLoopError(GraphParseError):
    pass


class DuplicateEdgeError(GraphParseError):
    pass


class VertexRangeError(GraphParseError):
    pass


class CopyCapExceededError(HgirthError):
    """Subgraph-copy enumeration hit the configured cap."""

    def __init__(self, cap):
        super().__init__(f"copy enumeration exceeded cap of {cap}")
        self.cap = cap


class SearchBudgetError(HgirthError):
    """An exhaustive search exceeded its explored-state budget."""

    def __init__(self, explored, budget, what="search"):
        super().__init__(f"{what} exceeded budget ({explored} states explored, budget {budget})")
        self.explored = explored
        self.budget = budget


class PartitionCoverageError(HgirthError, ValueError):
    """Partition does not cover the host vertex set exactly."""


class PreconditionError(HgirthError, ValueError):
    """An operation's stated precondition is violated."""

    def __init__(self, message, vertex=None):
        super().__init__(message)
        self.vertex = vertex


class ArityMismatchError(HgirthError, ValueError):
    """Hypergraph arity does not match the pattern order."""


class CertificateFormatError(HgirthError, ValueError):
    """Certificate file cannot be parsed."""


class ConstructionError(HgirthError):
    """All construction attempts failed verification."""

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics
