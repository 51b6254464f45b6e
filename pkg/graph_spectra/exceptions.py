"""
Error types raised by the toolkit services.

All of them derive from ValueError so callers that only care about bad input
can catch one type; commands turn them into CommandError.
"""


class SpectraError(ValueError):
    """Base class for toolkit errors."""


class GraphFormatError(SpectraError):
    """Malformed graph6 line or edge-list text."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        location = ''
        if line is not None:
            location = f" (line {line}" + (f", column {column})" if column is not None else ')')
        super().__init__(f"{message}{location}")


class GraphCapacityError(SpectraError):
    """Vertex count above the configured cap or the graph6 short form."""


class InvalidGraphError(SpectraError):
    """Loops, out-of-range vertices or broken adjacency invariants."""


class PolynomialError(SpectraError):
    """Zero polynomial or a polynomial that is not squarefree where required."""


class PreconditionError(SpectraError):
    """Inputs outside the domain of a recognizer or witness search."""


class NotAnEigenvalueError(SpectraError):
    """The requested value is not an eigenvalue of the graph."""


class TheoremViolation(SpectraError):
    """A search that must always succeed came back empty."""


class ReportWriteError(SpectraError):
    """A report could not be written; `salvage` names the copy that was saved instead."""

    def __init__(self, message, salvage=None):
        self.salvage = salvage
        super().__init__(message if salvage is None else f"{message}; partial report saved to {salvage}")
