"""Degree Sequence Index bounds on j-independence and j-domination numbers.

Exact exhaustive oracles sit next to the degree-sequence bounds so every
inequality can be checked on concrete graphs.
"""

from __future__ import annotations

from .config import DEFAULT_GUARDS, OracleGuards
from .exceptions import (
    CapacityError,
    ChainFailure,
    DSIError,
    Graph6ParseError,
    GraphInputError,
    NoIndexError,
    PreconditionError,
)
from .graph import DegreeSequence, Graph, VertexSet, degree_sequence, from_edge_list
from .graph6 import parse_graph6, to_graph6

__version__ = "1.0.0"

__all__ = [
    "DEFAULT_GUARDS",
    "CapacityError",
    "ChainFailure",
    "DSIError",
    "DegreeSequence",
    "Graph",
    "Graph6ParseError",
    "GraphInputError",
    "NoIndexError",
    "OracleGuards",
    "PreconditionError",
    "VertexSet",
    "__version__",
    "degree_sequence",
    "from_edge_list",
    "parse_graph6",
    "to_graph6",
]
