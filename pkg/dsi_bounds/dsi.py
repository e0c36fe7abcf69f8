"""Degree Sequence Index bounds.

The generic step: given the sorted degree sequence d_1 <= ... <= d_n, a
k-dependent offset and the target m(G), find the extremal k whose prefix (or
suffix) degree sum plus the offset stays on the right side of m(G). Every
bound below is that search with a particular offset.

All conditions are multiplied by two so half-integers stay integral: an
OffsetFunction returns twice the offset and the comparison is against 2m.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from dataclasses import dataclass
from fractions import Fraction
from math import comb, floor

from .const import CERT_PLANAR, KIND_DOMINATION, KIND_INDEPENDENCE
from .exceptions import GraphInputError, NoIndexError, PreconditionError
from .graph import DegreeSequence, Graph, degree_sequence
from .oracle import FStats

_LOGGER = logging.getLogger(__name__)

OffsetFunction = Callable[[int], int]


def constant_offset(offset2: int) -> OffsetFunction:
    """Return an OffsetFunction that ignores k."""
    return lambda _k: offset2


@dataclass(frozen=True)
class RationalBound:
    """An exact rational bound value and its floor."""

    value: Fraction

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    @property
    def floor(self) -> int:
        return floor(self.value)

    def as_dict(self) -> dict[str, int]:
        return {"num": self.numerator, "den": self.denominator, "floor": self.floor}

    def __str__(self) -> str:
        return f"{self.numerator}/{self.denominator} (floor {self.floor})"


def dsi_upper_index(sequence: DegreeSequence, offset2: OffsetFunction, m: int) -> int:
    """Return max k in 0..n with 2*(d_1 + ... + d_k) + offset2(k) <= 2m.

    Every k is tested; offsets need not be monotone.

    Raises:
        NoIndexError: No k qualifies.
    """
    best = None
    for k in range(sequence.n + 1):
        if 2 * sequence.smallest_sum(k) + offset2(k) <= 2 * m:
            best = k
    if best is None:
        raise NoIndexError(f"No k in 0..{sequence.n} satisfies the upper index condition against m={m}")
    return best


def dsi_lower_index(sequence: DegreeSequence, offset2: OffsetFunction, m: int) -> int:
    """Return min k in 0..n with 2*(d_n + ... + d_{n-k+1}) + offset2(k) >= 2m.

    Raises:
        NoIndexError: No k qualifies.
    """
    for k in range(sequence.n + 1):
        if 2 * sequence.largest_sum(k) + offset2(k) >= 2 * m:
            return k
    raise NoIndexError(f"No k in 0..{sequence.n} satisfies the lower index condition against m={m}")


def annihilation(graph: Graph) -> int:
    """a(G): largest k whose k smallest degrees sum to at most m."""
    value = dsi_upper_index(degree_sequence(graph), constant_offset(0), graph.m)
    if value < graph.n // 2:
        raise AssertionError(f"annihilation number {value} below floor(n/2) = {graph.n // 2}")
    return value


def upper_j_annihilation(graph: Graph, j: int, stats: FStats) -> int:
    """a_j(G), the upper j-annihilation number, from independence statistics."""
    stats.require(KIND_INDEPENDENCE, j)
    return dsi_upper_index(degree_sequence(graph), constant_offset(2 * stats.max_diff), graph.m)


def lower_j_annihilation(graph: Graph, j: int, stats: FStats) -> int:
    """c_j(G), the lower j-annihilation number, from independence statistics."""
    stats.require(KIND_INDEPENDENCE, j)
    return dsi_lower_index(degree_sequence(graph), constant_offset(2 * stats.min_diff), graph.m)


def weak_upper(graph: Graph, j: int) -> int:
    """a'_j(G): sum d_1..d_k - k(j-1)/2 <= m. Equals a(G) at j = 1."""
    _check_j(j)
    return dsi_upper_index(degree_sequence(graph), lambda k: -k * (j - 1), graph.m)


def weak_lower(graph: Graph) -> int:
    """c'(G): top-k sum + (1/2) sum over the n-k largest degrees of (d - 1) >= m.

    The second sum runs over the n-k largest degrees, exactly as defined; the
    value does not depend on j.
    """
    sequence = degree_sequence(graph)
    n = sequence.n

    def offset2(k: int) -> int:
        return sequence.largest_sum(n - k) - (n - k)

    return dsi_lower_index(sequence, offset2, graph.m)


def chromatic_dsi_bound(graph: Graph, j: int, chi: int) -> int:
    """max k with sum d_1..d_k + C(chi-1, 2) - k(j-1)/2 <= m, for chi = chi_j(G)."""
    _check_j(j)
    if chi < 1:
        raise GraphInputError(f"chi must be a positive integer, got {chi}")
    pairs2 = 2 * comb(chi - 1, 2)
    return dsi_upper_index(degree_sequence(graph), lambda k: pairs2 - k * (j - 1), graph.m)


def claw_w(graph: Graph, p: int) -> int:
    """w(G): sum d_1..d_k + (1/2) sum d_{k+1}..d_n - (n-k)(p-1)/2 <= m.

    Computable for any graph; it bounds alpha only on K_(1,p)-free graphs.
    """
    _check_p(p)
    sequence = degree_sequence(graph)
    n = sequence.n

    def offset2(k: int) -> int:
        return (sequence.total - sequence.smallest_sum(k)) - (n - k) * (p - 1)

    return dsi_upper_index(sequence, offset2, graph.m)


def planar_bound(graph: Graph, j: int, certified: bool | None = None) -> RationalBound:
    """(2n-4)/(delta-j+1) for a maximal planar graph with delta <= 5 and 1 <= j <= delta.

    Planarity is not tested: it comes from the graph's "planar" certificate or
    from certified=True.

    Raises:
        PreconditionError: Naming the first failed clause.
    """
    n, m, delta = graph.n, graph.m, graph.min_degree
    if m != 3 * n - 6:
        raise PreconditionError("m = 3n-6", f"m={m} but 3n-6={3 * n - 6}")
    planar = CERT_PLANAR in graph.certificates if certified is None else certified
    if not planar:
        raise PreconditionError("planar", "graph carries no planarity certificate")
    if delta > 5:
        raise PreconditionError("delta <= 5", f"delta={delta}")
    if not 1 <= j <= delta:
        raise PreconditionError("1 <= j <= delta", f"j={j}, delta={delta}")
    return RationalBound(Fraction(2 * n - 4, delta - j + 1))


def planar_delta5_bound(graph: Graph, certified: bool | None = None) -> RationalBound:
    """(2n-4)/5 for a maximal planar graph with delta = 5."""
    if graph.min_degree != 5:
        raise PreconditionError("delta = 5", f"delta={graph.min_degree}")
    return planar_bound(graph, 1, certified)


def k1p_free_bound(graph: Graph, j: int, p: int) -> RationalBound:
    """j(p-1)n / (j(p-1) + delta - (j-1)); bounds alpha_j on K_(1,p)-free graphs with delta >= j-1."""
    _check_j(j)
    _check_p(p)
    delta = graph.min_degree
    if delta < j - 1:
        raise PreconditionError("delta >= j-1", f"delta={delta}, j={j}")
    return RationalBound(Fraction(j * (p - 1) * graph.n, j * (p - 1) + delta - (j - 1)))


def faudree_bound(graph: Graph, p: int) -> RationalBound:
    """(p-1)n / (delta+p-1); bounds alpha on K_(1,p)-free graphs."""
    _check_p(p)
    return RationalBound(Fraction((p - 1) * graph.n, graph.min_degree + p - 1))


def dom_upper_z(graph: Graph, j: int, stats: FStats) -> int:
    """z_j(G), the upper index from minimum j-dominating set statistics."""
    stats.require(KIND_DOMINATION, j)
    return dsi_upper_index(degree_sequence(graph), constant_offset(2 * stats.max_diff), graph.m)


def dom_lower_w(graph: Graph, j: int, stats: FStats) -> int:
    """w_j(G), the lower index from minimum j-dominating set statistics."""
    stats.require(KIND_DOMINATION, j)
    return dsi_lower_index(degree_sequence(graph), constant_offset(2 * stats.min_diff), graph.m)


def dom_weak_lower(graph: Graph, j: int) -> int:
    """w'_j(G): top-k sum + (1/2) sum over the n-k smallest degrees of (d - j) >= m.

    Raises:
        NoIndexError: No k qualifies; the value is never clamped.
    """
    _check_j(j)
    sequence = degree_sequence(graph)
    n = sequence.n

    def offset2(k: int) -> int:
        return sequence.smallest_sum(n - k) - (n - k) * j

    return dsi_lower_index(sequence, offset2, graph.m)


def _check_j(j: int) -> None:
    if j < 1:
        raise GraphInputError(f"j must be a positive integer, got {j}")


def _check_p(p: int) -> None:
    if p < 3:
        raise GraphInputError(f"p must be at least 3, got {p}")
