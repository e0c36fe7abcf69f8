"""Exact exhaustive oracles for j-independence, j-domination and related quantities.

Every routine enumerates vertex subsets as bit masks; none of them is clever.
Each one refuses graphs above its OracleGuards limit instead of running for hours.
"""

from __future__ import annotations

import logging
from collections.abc import Iterator
from dataclasses import dataclass
from itertools import combinations

from .config import DEFAULT_GUARDS, OracleGuards
from .const import KIND_DOMINATION, KIND_INDEPENDENCE
from .exceptions import CapacityError, GraphInputError
from .graph import Graph, VertexSet, induced_edge_count
from .helpers import iter_bits, masks_of_size

_LOGGER = logging.getLogger(__name__)

_KINDS = (KIND_INDEPENDENCE, KIND_DOMINATION)


@dataclass(frozen=True)
class FStats:
    """Statistics over the family F of optimal sets (maximum j-independent or minimum j-dominating).

    max_diff and min_diff range m[V-S] - m[S] over S in F; max_inner_edges is
    the largest m[S] and min_degree_sum the smallest degree sum of a member.
    """

    kind: str
    j: int
    optimum: int
    max_diff: int
    min_diff: int
    family_size: int
    max_inner_edges: int
    min_degree_sum: int
    witness: VertexSet

    def require(self, kind: str, j: int) -> None:
        """Raise GraphInputError unless these stats were computed for (kind, j)."""
        if self.kind != kind or self.j != j:
            raise GraphInputError(f"Statistics are for {self.kind} with j={self.j}, but {kind} with j={j} was required")


@dataclass(frozen=True)
class OracleResult:
    """An exact optimum, one optimal set certifying it, and optionally F statistics."""

    value: int
    witness: VertexSet
    stats: FStats | None = None


def _check_j(j: int) -> None:
    if j < 1:
        raise GraphInputError(f"j must be a positive integer, got {j}")


def is_j_independent(graph: Graph, subset: VertexSet, j: int) -> bool:
    """Return True when every vertex of subset has fewer than j neighbors inside subset."""
    adj = graph.adj
    return all((adj[v] & subset).bit_count() < j for v in iter_bits(subset))


def is_j_dominating(graph: Graph, subset: VertexSet, j: int) -> bool:
    """Return True when every vertex outside subset has at least j neighbors in subset."""
    adj = graph.adj
    return all((adj[v] & subset).bit_count() >= j for v in iter_bits(graph.full_mask & ~subset))


def _predicate(kind: str):
    if kind == KIND_INDEPENDENCE:
        return is_j_independent
    if kind == KIND_DOMINATION:
        return is_j_dominating
    raise GraphInputError(f"Unknown set kind '{kind}'. Available: {', '.join(_KINDS)}")


def _optimum(graph: Graph, j: int, kind: str) -> tuple[int, VertexSet]:
    """Return (optimum size, first optimal mask) by a subset scan in size order."""
    accepts = _predicate(kind)
    n = graph.n
    if kind == KIND_DOMINATION:
        for k in range(n + 1):
            for mask in masks_of_size(n, k):
                if accepts(graph, mask, j):
                    return k, mask
        raise AssertionError("V is always j-dominating")
    if j > graph.max_degree:
        return n, graph.full_mask
    # j-independence is hereditary: once a size has no member, no larger size has one.
    best, witness = 0, 0
    for k in range(1, n + 1):
        found = next((mask for mask in masks_of_size(n, k) if accepts(graph, mask, j)), None)
        if found is None:
            break
        best, witness = k, found
    return best, witness


def alpha_j(graph: Graph, j: int, guards: OracleGuards = DEFAULT_GUARDS, *, with_stats: bool = False) -> OracleResult:
    """Return the j-independence number with a witness (and F statistics when requested).

    Raises:
        CapacityError: n exceeds guards.single (or guards.family with stats).
    """
    _check_j(j)
    guards.check("single", graph.n, "alpha_j")
    if with_stats:
        stats = f_stats(graph, j, KIND_INDEPENDENCE, guards)
        return OracleResult(stats.optimum, stats.witness, stats)
    value, witness = _optimum(graph, j, KIND_INDEPENDENCE)
    return OracleResult(value, witness)


def gamma_j(graph: Graph, j: int, guards: OracleGuards = DEFAULT_GUARDS, *, with_stats: bool = False) -> OracleResult:
    """Return the j-domination number with a witness (and F statistics when requested).

    Raises:
        CapacityError: n exceeds guards.single (or guards.family with stats).
    """
    _check_j(j)
    guards.check("single", graph.n, "gamma_j")
    if with_stats:
        stats = f_stats(graph, j, KIND_DOMINATION, guards)
        return OracleResult(stats.optimum, stats.witness, stats)
    value, witness = _optimum(graph, j, KIND_DOMINATION)
    return OracleResult(value, witness)


def f_stats(graph: Graph, j: int, kind: str, guards: OracleGuards = DEFAULT_GUARDS) -> FStats:
    """Enumerate the whole family F of optimal sets and summarise m[V-S] - m[S] over it.

    Raises:
        CapacityError: n exceeds guards.family.
        GraphInputError: j < 1 or unknown kind.
    """
    _check_j(j)
    accepts = _predicate(kind)
    guards.check("family", graph.n, "f_stats")
    optimum, _ = _optimum(graph, j, kind)
    full = graph.full_mask
    adj = graph.adj

    max_diff = min_diff = None
    family_size = 0
    max_inner = 0
    min_degree_sum = None
    witness = 0
    for mask in masks_of_size(graph.n, optimum):
        if not accepts(graph, mask, j):
            continue
        inner = induced_edge_count(graph, mask)
        diff = induced_edge_count(graph, full & ~mask) - inner
        degree_sum = sum(adj[v].bit_count() for v in iter_bits(mask))
        if family_size == 0:
            witness = mask
            max_diff = min_diff = diff
            min_degree_sum = degree_sum
        else:
            max_diff = max(max_diff, diff)
            min_diff = min(min_diff, diff)
            min_degree_sum = min(min_degree_sum, degree_sum)
        max_inner = max(max_inner, inner)
        family_size += 1

    stats = FStats(
        kind=kind,
        j=j,
        optimum=optimum,
        max_diff=max_diff,
        min_diff=min_diff,
        family_size=family_size,
        max_inner_edges=max_inner,
        min_degree_sum=min_degree_sum,
        witness=witness,
    )
    _LOGGER.debug("f_stats %s j=%d: %s", kind, j, stats)
    return stats


def chi_j(graph: Graph, j: int, guards: OracleGuards = DEFAULT_GUARDS) -> int:
    """Return the j-chromatic number: fewest j-independent sets partitioning V.

    Iterative deepening from ceil(n / alpha_j); vertices are placed in index
    order and a vertex may open at most one new part, so part labels are never
    permuted.

    Raises:
        CapacityError: n exceeds guards.chromatic.
    """
    _check_j(j)
    guards.check("chromatic", graph.n, "chi_j")
    n = graph.n
    adj = graph.adj
    largest, _ = _optimum(graph, j, KIND_INDEPENDENCE)
    lower = -(-n // largest)

    def fits(v: int, part: int) -> bool:
        inner = adj[v] & part
        if inner.bit_count() >= j:
            return False
        return all((adj[u] & part).bit_count() + 1 < j for u in iter_bits(inner))

    def place(v: int, parts: list[int], used: int, limit: int) -> bool:
        if v == n:
            return True
        for index in range(min(used + 1, limit)):
            if index < used and not fits(v, parts[index]):
                continue
            parts[index] |= 1 << v
            if place(v + 1, parts, max(used, index + 1), limit):
                return True
            parts[index] &= ~(1 << v)
        return False

    for limit in range(lower, n + 1):
        if place(0, [0] * limit, 0, limit):
            _LOGGER.debug("chi_%d = %d (search started at %d)", j, limit, lower)
            return limit
    raise AssertionError("n singleton parts always form a valid partition")


def find_induced_star(graph: Graph, p: int) -> tuple[int, tuple[int, ...]] | None:
    """Return (center, leaves) of an induced K_{1,p}, or None when there is none.

    Raises:
        GraphInputError: p < 2.
    """
    if p < 2:
        raise GraphInputError(f"K_(1,p)-freeness needs p >= 2, got {p}")
    adj = graph.adj
    for center in range(graph.n):
        neighborhood = list(iter_bits(adj[center]))
        if len(neighborhood) < p:
            continue
        for leaves in combinations(neighborhood, p):
            leaf_mask = 0
            for leaf in leaves:
                leaf_mask |= 1 << leaf
            if all(not adj[leaf] & leaf_mask for leaf in leaves):
                return center, leaves
    return None


def is_K1p_free(graph: Graph, p: int) -> bool:
    """Return True when no vertex has p pairwise non-adjacent neighbors."""
    return find_induced_star(graph, p) is None


def is_upper_j_annihilating(graph: Graph, subset: VertexSet, j: int, stats: FStats) -> bool:
    """Return True when deg(A) + max_F(m[V-S] - m[S]) <= m."""
    stats.require(KIND_INDEPENDENCE, j)
    return graph.degree_sum(subset) + stats.max_diff <= graph.m


def is_lower_j_annihilating(graph: Graph, subset: VertexSet, j: int, stats: FStats) -> bool:
    """Return True when deg(A) + min_F(m[V-S] - m[S]) >= m."""
    stats.require(KIND_INDEPENDENCE, j)
    return graph.degree_sum(subset) + stats.min_diff >= graph.m


def _subset_degree_sums(graph: Graph) -> list[int]:
    """Degree sum of every mask, indexed by mask."""
    degrees = graph.degrees()
    sums = [0] * (1 << graph.n)
    for mask in range(1, 1 << graph.n):
        low = mask & -mask
        sums[mask] = sums[mask ^ low] + degrees[low.bit_length() - 1]
    return sums


def max_upper_annihilating_size(graph: Graph, j: int, stats: FStats, guards: OracleGuards = DEFAULT_GUARDS) -> int:
    """Return the largest order of an upper j-annihilating set, by scanning all 2^n subsets."""
    stats.require(KIND_INDEPENDENCE, j)
    guards.check("family", graph.n, "max_upper_annihilating_size")
    budget = graph.m - stats.max_diff
    sums = _subset_degree_sums(graph)
    return max(mask.bit_count() for mask, total in enumerate(sums) if total <= budget)


def min_lower_annihilating_size(graph: Graph, j: int, stats: FStats, guards: OracleGuards = DEFAULT_GUARDS) -> int:
    """Return the smallest order of a lower j-annihilating set, by scanning all 2^n subsets."""
    stats.require(KIND_INDEPENDENCE, j)
    guards.check("family", graph.n, "min_lower_annihilating_size")
    target = graph.m - stats.min_diff
    sums = _subset_degree_sums(graph)
    return min(mask.bit_count() for mask, total in enumerate(sums) if total >= target)


def labeled_graph_count(n: int) -> int:
    """Return 2^(n(n-1)/2), the number of labeled simple graphs on n vertices."""
    return 1 << (n * (n - 1) // 2)


def enumerate_labeled_graphs(
    n: int,
    start: int = 0,
    stop: int | None = None,
    guards: OracleGuards = DEFAULT_GUARDS,
    step: int = 1,
) -> Iterator[Graph]:
    """Yield every labeled simple graph on n vertices, edge mask ascending.

    Bit b of the edge mask stands for the b-th pair in lexicographic order
    (0,1), (0,2), ..., (n-2,n-1). start/stop select a slice of the mask range
    so that disjoint slices can be consumed in parallel; step > 1 samples every
    step-th mask of the slice.

    Raises:
        CapacityError: n exceeds guards.corpus.
        GraphInputError: n < 1 or an invalid slice.
    """
    if n < 1:
        raise GraphInputError(f"Corpus order must be positive, got {n}")
    if n > guards.corpus:
        raise CapacityError(f"Corpus enumeration refused: n={n} exceeds the 'corpus' guard of {guards.corpus}")
    total = labeled_graph_count(n)
    stop = total if stop is None else stop
    if not 0 <= start <= stop <= total or step < 1:
        raise GraphInputError(f"Invalid corpus slice [{start}, {stop}) step {step} for {total} graphs")
    pairs = list(combinations(range(n), 2))
    for edge_mask in range(start, stop, step):
        rows = [0] * n
        for b in iter_bits(edge_mask):
            u, v = pairs[b]
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        yield Graph(n, tuple(rows))
