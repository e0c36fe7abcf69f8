"""Exceptions raised by the dsi-bounds package.

Exceptions with extra constructor arguments define __reduce__ so they survive
the trip back from corpus worker processes.
"""

from __future__ import annotations


class DSIError(Exception):
    """Base class for every error raised by dsi-bounds."""


class GraphInputError(DSIError, ValueError):
    """Error to indicate malformed graph input or invalid parameters."""


class Graph6ParseError(GraphInputError):
    """Error to indicate a malformed graph6 string."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte offset {offset})")
        self.message = message
        self.offset = offset

    def __reduce__(self):
        return type(self), (self.message, self.offset)


class CapacityError(DSIError):
    """Error to indicate a graph is too large for the requested computation."""


class PreconditionError(DSIError):
    """Error to indicate a closed-form bound was requested outside its hypotheses."""

    def __init__(self, clause: str, detail: str) -> None:
        super().__init__(f"Precondition '{clause}' violated: {detail}")
        self.clause = clause
        self.detail = detail

    def __reduce__(self):
        return type(self), (self.clause, self.detail)


class NoIndexError(DSIError):
    """Error to indicate that no k in 0..n satisfies a DSI index condition."""


class ChainFailure(DSIError):
    """Error to indicate that a verified inequality did not hold."""

    def __init__(self, graph6: str, check: str, detail: str) -> None:
        super().__init__(f"Check '{check}' failed on graph {graph6}: {detail}")
        self.graph6 = graph6
        self.check = check
        self.detail = detail

    def __reduce__(self):
        return type(self), (self.graph6, self.check, self.detail)
