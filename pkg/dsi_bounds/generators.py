"""Generators for every graph family used by the catalog and the CLI.

Labelings are canonical so that graph6 output is stable:

* complete/empty/path/cycle(r): vertices 0..r-1, path and cycle edges (i, i+1).
* star(p): center 0, leaves 1..p.
* complete_split(p, q) = E_p + K_q: empty part 0..p-1, clique p..p+q-1.
* union_split(p, q) = E_p u K_q: same vertex order, no cross edges.
* matched_cliques(p): K_p on 0..p-1, K_p on p..2p-1, matching i -- p+i.
* prop1(j) = (j K_j) + (j K_j): each side is j consecutive blocks of size j.
* prop2(p, j) = (p K_{p^2}) + ((p+1) K_j): clique blocks first, K_j blocks after.
* prop3(p) = E_{p^2} + K_p.
* prop4(p, q, r, j): hub clique K_q on 0..q-1; copy i of (p K_r) + ((p+1) K_j)
  occupies the next block and is joined to hub i.
* double_hub_wheel(p): cycle c_0..c_{3p-1} on 0..3p-1, inner hub 3p, outer hub 3p+1.
* delta5_triangulation(r): a_1..a_r on 0..r-1, b_1..b_r on r..2r-1,
  c_1..c_{r-1} on 2r..3r-2, u = 3r-1 (joined to A), v = 3r (joined to B).
* dodecahedron: LCF [10, 7, 4, -4, -7, 10, -4, 7, -7, 4]^2 on 0..19.

The three planar constructions carry the "planar" certificate; nothing here
tests planarity.
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from functools import reduce

import voluptuous as vol

from .const import CERT_PLANAR, MAX_VERTICES
from .exceptions import CapacityError, GraphInputError
from .graph import Graph, from_edge_list, join, union
from .helpers import split_generator_spec

_LOGGER = logging.getLogger(__name__)

DODECAHEDRON_EDGES = (
    (0, 1), (0, 10), (0, 19), (1, 2), (1, 8), (2, 3), (2, 6), (3, 4), (3, 19), (4, 5),
    (4, 17), (5, 6), (5, 15), (6, 7), (7, 8), (7, 14), (8, 9), (9, 10), (9, 13), (10, 11),
    (11, 12), (11, 18), (12, 13), (12, 16), (13, 14), (14, 15), (15, 16), (16, 17), (17, 18), (18, 19),
)  # fmt: skip


def _positive(minimum: int = 1) -> vol.All:
    return vol.All(int, vol.Range(min=minimum))


def _check_shape(
    graph: Graph,
    family: str,
    *,
    n: int | None = None,
    m: int | None = None,
    regular: int | None = None,
    min_degree: int | None = None,
) -> Graph:
    """Assert the order/size/degree facts a construction promises."""
    facts = {
        "n": (n, graph.n),
        "m": (m, graph.m),
        "regular degree": (regular, graph.min_degree if graph.min_degree == graph.max_degree else None),
        "minimum degree": (min_degree, graph.min_degree),
    }
    for label, (expected, actual) in facts.items():
        if expected is not None and expected != actual:
            raise AssertionError(f"{family}: expected {label} {expected}, built {actual}")
    return graph


def _require_order(family: str, n: int) -> None:
    if n > MAX_VERTICES:
        raise CapacityError(f"{family} would have {n} vertices, above the {MAX_VERTICES}-vertex capacity")


def complete(r: int) -> Graph:
    """K_r."""
    _require_order("complete", r)
    full = (1 << r) - 1
    return Graph(r, tuple(full & ~(1 << v) for v in range(r)))


def empty(r: int) -> Graph:
    """E_r."""
    _require_order("empty", r)
    return Graph(r, (0,) * r)


def path(r: int) -> Graph:
    """P_r."""
    _require_order("path", r)
    return from_edge_list(r, ((i, i + 1) for i in range(r - 1)))


def cycle(r: int) -> Graph:
    """C_r, r >= 3."""
    _require_order("cycle", r)
    return _check_shape(from_edge_list(r, ((i, (i + 1) % r) for i in range(r))), "cycle", m=r, regular=2)


def star(p: int) -> Graph:
    """K_{1,p}."""
    _require_order("star", p + 1)
    return from_edge_list(p + 1, ((0, leaf) for leaf in range(1, p + 1)))


def disjoint_copies(graph: Graph, count: int) -> Graph:
    """Return the disjoint union of count copies of graph."""
    _require_order("disjoint copies", graph.n * count)
    return reduce(union, [graph] * count)


def complete_split(p: int, q: int) -> Graph:
    """E_p + K_q."""
    _require_order("complete_split", p + q)
    graph = join(empty(p), complete(q))
    return _check_shape(graph, "complete_split", n=p + q, m=q * (q - 1) // 2 + p * q)


def union_split(p: int, q: int) -> Graph:
    """E_p u K_q."""
    _require_order("union_split", p + q)
    return _check_shape(union(empty(p), complete(q)), "union_split", m=q * (q - 1) // 2)


def matched_cliques(p: int) -> Graph:
    """Two copies of K_p joined by a perfect matching."""
    _require_order("matched_cliques", 2 * p)
    base = union(complete(p), complete(p))
    rows = list(base.adj)
    for i in range(p):
        rows[i] |= 1 << (p + i)
        rows[p + i] |= 1 << i
    return _check_shape(Graph(2 * p, tuple(rows)), "matched_cliques", n=2 * p, m=p * p, regular=p)


def prop1(j: int) -> Graph:
    """(j K_j) + (j K_j): regular of degree j^2+j-1, alpha_j = j^2."""
    _require_order("prop1", 2 * j * j)
    side = disjoint_copies(complete(j), j)
    graph = join(side, side)
    return _check_shape(graph, "prop1", n=2 * j * j, regular=j * j + j - 1)


def prop2(p: int, j: int) -> Graph:
    """(p K_{p^2}) + ((p+1) K_j)."""
    _require_order("prop2", p**3 + (p + 1) * j)
    graph = join(disjoint_copies(complete(p * p), p), disjoint_copies(complete(j), p + 1))
    expected_m = p**3 * (p * p - 1) // 2 + j * (j - 1) * (p + 1) // 2 + p**3 * (p + 1) * j
    return _check_shape(graph, "prop2", n=p**3 + (p + 1) * j, m=expected_m)


def prop3(p: int) -> Graph:
    """E_{p^2} + K_p."""
    return complete_split(p * p, p)


def prop4(p: int, q: int, r: int, j: int) -> Graph:
    """G(p, q, r, j): a hub K_q, each hub vertex joined to its own copy of (p K_r) + ((p+1) K_j)."""
    block = join(disjoint_copies(complete(r), p), disjoint_copies(complete(j), p + 1))
    n = q + q * block.n
    _require_order("prop4", n)
    rows = list(complete(q).adj) + [0] * (q * block.n)
    for hub in range(q):
        start = q + hub * block.n
        block_mask = ((1 << block.n) - 1) << start
        for v, row in enumerate(block.adj):
            rows[start + v] = (row << start) | (1 << hub)
        rows[hub] |= block_mask
    graph = Graph(n, tuple(rows))
    expected_m = q * (q - 1) // 2 + q * (block.m + block.n)
    return _check_shape(graph, "prop4", n=n, m=expected_m)


def double_hub_wheel(p: int) -> Graph:
    """C_{3p} with an inner and an outer hub joined to every cycle vertex; maximal planar, delta = 4."""
    size = 3 * p
    _require_order("double_hub_wheel", size + 2)
    u, v = size, size + 1
    edges = [(i, (i + 1) % size) for i in range(size)]
    edges += [(hub, i) for hub in (u, v) for i in range(size)]
    graph = from_edge_list(size + 2, edges).with_certificates(CERT_PLANAR)
    return _check_shape(graph, "double_hub_wheel", n=size + 2, m=9 * p, min_degree=4)


def delta5_triangulation(r: int) -> Graph:
    """Maximal planar graph on 3r+1 vertices with delta = 5, built from paths A, B (order r) and C (order r-1)."""
    n = 3 * r + 1
    _require_order("delta5_triangulation", n)

    def a(i: int) -> int:
        return i - 1

    def b(i: int) -> int:
        return r + i - 1

    def c(i: int) -> int:
        return 2 * r + i - 1

    u, v = 3 * r - 1, 3 * r
    edges = [(a(i), a(i + 1)) for i in range(1, r)]
    edges += [(b(i), b(i + 1)) for i in range(1, r)]
    edges += [(c(i), c(i + 1)) for i in range(1, r - 1)]
    edges += [(a(1), b(1)), (a(r), b(r))]
    for i in range(1, r):
        edges += [(c(i), a(i)), (c(i), a(i + 1)), (c(i), b(i)), (c(i), b(i + 1))]
    edges += [(u, a(i)) for i in range(1, r + 1)]
    edges += [(v, b(i)) for i in range(1, r + 1)]
    edges += [(a(1), a(r)), (b(1), b(r)), (a(1), b(r))]
    graph = from_edge_list(n, edges).with_certificates(CERT_PLANAR)
    return _check_shape(graph, "delta5_triangulation", n=n, m=3 * n - 6, min_degree=5)


def delta5_published_witness(r: int) -> int:
    """Return the 3-independent set (A - a_1) u (B - b_r) of delta5_triangulation(r) as a mask."""
    a_rest = ((1 << r) - 1) & ~1
    b_rest = ((1 << (r - 1)) - 1) << r
    return a_rest | b_rest


def dodecahedron() -> Graph:
    """The graph of the regular dodecahedron."""
    graph = from_edge_list(20, DODECAHEDRON_EDGES).with_certificates(CERT_PLANAR)
    return _check_shape(graph, "dodecahedron", n=20, m=30, regular=3)


_FAMILIES: dict[str, tuple[Callable[..., Graph], vol.Schema]] = {
    "complete": (complete, vol.Schema(vol.ExactSequence([_positive()]))),
    "empty": (empty, vol.Schema(vol.ExactSequence([_positive()]))),
    "path": (path, vol.Schema(vol.ExactSequence([_positive()]))),
    "cycle": (cycle, vol.Schema(vol.ExactSequence([_positive(3)]))),
    "star": (star, vol.Schema(vol.ExactSequence([_positive()]))),
    "complete_split": (complete_split, vol.Schema(vol.ExactSequence([_positive(), _positive()]))),
    "union_split": (union_split, vol.Schema(vol.ExactSequence([_positive(), _positive()]))),
    "matched_cliques": (matched_cliques, vol.Schema(vol.ExactSequence([_positive()]))),
    "prop1": (prop1, vol.Schema(vol.ExactSequence([_positive()]))),
    "prop2": (prop2, vol.Schema(vol.ExactSequence([_positive(), _positive()]))),
    "prop3": (prop3, vol.Schema(vol.ExactSequence([_positive()]))),
    "prop4": (prop4, vol.Schema(vol.ExactSequence([_positive(), _positive(), _positive(), _positive()]))),
    "double_hub_wheel": (double_hub_wheel, vol.Schema(vol.ExactSequence([_positive(2)]))),
    "delta5_triangulation": (delta5_triangulation, vol.Schema(vol.ExactSequence([_positive(5)]))),
    "dodecahedron": (dodecahedron, vol.Schema(vol.ExactSequence([]))),
}

FAMILY_NAMES = tuple(_FAMILIES)


def generate_named(family: str, params: list[int] | tuple[int, ...] = ()) -> Graph:
    """Build the named family member.

    Args:
        family: One of FAMILY_NAMES.
        params: The family's integer parameters, in the order of its signature.

    Returns:
        The constructed graph with its canonical labeling.

    Raises:
        GraphInputError: Unknown family, wrong parameter count, or a parameter
            violating the construction's precondition.
        CapacityError: The construction would exceed MAX_VERTICES.
    """
    if family not in _FAMILIES:
        raise GraphInputError(f"Unknown graph family '{family}'. Available: {', '.join(FAMILY_NAMES)}")
    builder, schema = _FAMILIES[family]
    try:
        validated = schema(list(params))
    except vol.Invalid as e:
        raise GraphInputError(f"Invalid parameters {list(params)} for {family}: {e}") from e
    graph = builder(*validated)
    _LOGGER.debug("Generated %s%s: n=%d m=%d", family, list(params), graph.n, graph.m)
    return graph


def generate_from_spec(spec: str) -> Graph:
    """Build a graph from the CLI form "family:p1:p2"."""
    try:
        family, params = split_generator_spec(spec)
    except ValueError as e:
        raise GraphInputError(str(e)) from e
    return generate_named(family, params)
