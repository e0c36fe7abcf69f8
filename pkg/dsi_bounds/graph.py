"""Simple-graph representation and degree bookkeeping.

Graphs are immutable. Vertices are 0..n-1, a vertex set is an int bit mask
(bit v set when v is a member), and row v of the adjacency holds the neighbors
of v as such a mask. Capacity is fixed at MAX_VERTICES so every set is one word.

Edge-list text format: first line "n m", then one "u v" pair per line, 0-indexed.
"""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from .const import MAX_VERTICES
from .exceptions import CapacityError, GraphInputError
from .helpers import iter_bits

_LOGGER = logging.getLogger(__name__)

VertexSet = int


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph on vertices 0..n-1 stored as adjacency bit rows."""

    n: int
    adj: tuple[int, ...]
    certificates: frozenset[str] = field(default=frozenset(), compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise CapacityError(f"Graph order {self.n} outside supported range 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise GraphInputError(f"Adjacency has {len(self.adj)} rows, expected {self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphInputError(f"Row {v} references a vertex outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphInputError(f"Self-loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphInputError(f"Adjacency not symmetric: {v}->{u} without {u}->{v}")

    @cached_property
    def m(self) -> int:
        """Number of edges."""
        return sum(row.bit_count() for row in self.adj) // 2

    @property
    def full_mask(self) -> VertexSet:
        """The vertex set V as a mask."""
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        """Return the degree of vertex v."""
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        """Return the degrees in vertex order."""
        return [row.bit_count() for row in self.adj]

    @property
    def min_degree(self) -> int:
        """delta(G)."""
        return min(self.degrees())

    @property
    def max_degree(self) -> int:
        """Delta(G)."""
        return max(self.degrees())

    def neighbors(self, v: int) -> list[int]:
        """Return the neighbors of v in increasing order."""
        return list(iter_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        """Return True when u and v are adjacent."""
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield every edge once as (u, v) with u < v, lexicographically."""
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def degree_sum(self, mask: VertexSet) -> int:
        """Return the sum of the degrees of the vertices in mask."""
        return sum(self.adj[v].bit_count() for v in iter_bits(mask))

    def with_certificates(self, *certificates: str) -> Graph:
        """Return the same graph carrying additional structural certificates."""
        return Graph(self.n, self.adj, self.certificates | frozenset(certificates))


@dataclass(frozen=True)
class DegreeSequence:
    """Degrees sorted non-decreasingly, with prefix sums.

    prefix[k] is the sum of the k smallest degrees; the sum of the k largest is
    prefix[n] - prefix[n - k].
    """

    degrees: tuple[int, ...]
    prefix: tuple[int, ...]

    @classmethod
    def from_degrees(cls, degrees: Iterable[int]) -> DegreeSequence:
        """Build a sequence from degrees given in any order."""
        ordered = tuple(sorted(degrees))
        prefix = [0]
        for d in ordered:
            prefix.append(prefix[-1] + d)
        return cls(ordered, tuple(prefix))

    @property
    def n(self) -> int:
        """Number of degrees."""
        return len(self.degrees)

    @property
    def total(self) -> int:
        """Sum of all degrees (2m)."""
        return self.prefix[-1]

    def smallest_sum(self, k: int) -> int:
        """Return d_1 + ... + d_k."""
        return self.prefix[k]

    def largest_sum(self, k: int) -> int:
        """Return d_n + d_{n-1} + ... + d_{n-k+1}."""
        return self.prefix[-1] - self.prefix[self.n - k]

    def multiset(self) -> dict[int, int]:
        """Return {degree: multiplicity}."""
        counts: dict[int, int] = {}
        for d in self.degrees:
            counts[d] = counts.get(d, 0) + 1
        return counts


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; duplicate pairs collapse into one edge.

    Raises:
        GraphInputError: On a self-loop or an endpoint outside 0..n-1.
        CapacityError: If n is outside 1..MAX_VERTICES.
    """
    if not 1 <= n <= MAX_VERTICES:
        raise CapacityError(f"Graph order {n} outside supported range 1..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphInputError(f"Self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def to_networkx(graph: Graph) -> nx.Graph:
    """Return graph as a networkx Graph on the same vertex labels."""
    result = nx.Graph()
    result.add_nodes_from(range(graph.n))
    result.add_edges_from(graph.edges())
    return result


def from_networkx(graph: nx.Graph) -> Graph:
    """Return a networkx graph whose nodes are 0..n-1 as a Graph.

    Raises:
        GraphInputError: A node label is not an integer in 0..n-1.
    """
    n = graph.number_of_nodes()
    if set(graph.nodes) != set(range(n)):
        raise GraphInputError(f"networkx graph nodes must be 0..{n - 1}")
    return from_edge_list(n, graph.edges())


def degree_sequence(graph: Graph) -> DegreeSequence:
    """Return the sorted degree sequence of graph with its prefix sums."""
    return DegreeSequence.from_degrees(graph.degrees())


def induced_edge_count(graph: Graph, subset: VertexSet) -> int:
    """Return m[S], the number of edges with both endpoints in subset."""
    return sum((graph.adj[v] & subset).bit_count() for v in iter_bits(subset)) // 2


def cut_edge_count(graph: Graph, subset: VertexSet) -> int:
    """Return m(S, V-S), the number of edges with exactly one endpoint in subset."""
    outside = graph.full_mask & ~subset
    return sum((graph.adj[v] & outside).bit_count() for v in iter_bits(subset))


def _check_combined_order(g: Graph, h: Graph, operation: str) -> None:
    if g.n + h.n > MAX_VERTICES:
        raise CapacityError(f"{operation} of orders {g.n} and {h.n} exceeds {MAX_VERTICES} vertices")


def union(g: Graph, h: Graph) -> Graph:
    """Return the disjoint union; vertices of h follow those of g."""
    _check_combined_order(g, h, "Union")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def join(g: Graph, h: Graph) -> Graph:
    """Return G + H: the disjoint union plus every edge between the two parts."""
    _check_combined_order(g, h, "Join")
    g_mask = g.full_mask
    h_mask = h.full_mask << g.n
    rows = tuple(row | h_mask for row in g.adj) + tuple((row << g.n) | g_mask for row in h.adj)
    result = Graph(g.n + h.n, rows)
    _LOGGER.debug("Join of n=%d,m=%d with n=%d,m=%d has m=%d", g.n, g.m, h.n, h.m, result.m)
    return result


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format: "n m" header then m lines "u v".

    Blank lines and lines starting with '#' are ignored.

    Raises:
        GraphInputError: If the header or a pair is malformed or the pair count
            does not match the header.
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line and not line.startswith("#")]
    if not lines:
        raise GraphInputError("Edge list is empty: expected an 'n m' header")
    try:
        n, m = (int(tok) for tok in lines[0].split())
    except ValueError as e:
        raise GraphInputError(f"Malformed edge-list header {lines[0]!r}: expected 'n m'") from e
    pairs: list[tuple[int, int]] = []
    for lineno, line in enumerate(lines[1:], start=2):
        try:
            u, v = (int(tok) for tok in line.split())
        except ValueError as e:
            raise GraphInputError(f"Malformed edge on line {lineno}: {line!r}") from e
        pairs.append((u, v))
    if len(pairs) != m:
        raise GraphInputError(f"Edge-list header announces {m} edges but {len(pairs)} were given")
    return from_edge_list(n, pairs)


def to_edge_list(graph: Graph) -> str:
    """Render graph in the edge-list text format, edges in lexicographic order."""
    lines = [f"{graph.n} {graph.m}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"
