"""graph6 encoder and decoder on top of networkx.

graph6 stores the order in a header (one byte n+63 for n <= 62, otherwise '~'
followed by three bytes of six bits) and then the upper triangle of the
adjacency matrix column by column, six bits per byte offset by 63. The bytes
are validated here first so errors carry the offending byte offset; networkx
does the bit packing.
"""

from __future__ import annotations

import logging

import networkx as nx

from .const import GRAPH6_HEADER, GRAPH6_MAX_BYTE, GRAPH6_OFFSET, MAX_VERTICES
from .exceptions import CapacityError, Graph6ParseError
from .graph import Graph, from_networkx, to_networkx

_LOGGER = logging.getLogger(__name__)

_LONG_ORDER_MARK = 126  # '~'


def to_graph6(graph: Graph) -> str:
    """Return the graph6 encoding of graph (without the optional >>graph6<< header)."""
    encoded = nx.to_graph6_bytes(to_networkx(graph), nodes=range(graph.n), header=False)
    return encoded.decode("ascii").rstrip("\n")


def _byte_value(data: str, offset: int, base: int) -> int:
    code = ord(data[offset])
    if not GRAPH6_OFFSET <= code <= GRAPH6_MAX_BYTE:
        raise Graph6ParseError(f"Byte {data[offset]!r} outside the graph6 range 63..126", base + offset)
    return code - GRAPH6_OFFSET


def _read_order(data: str, base: int) -> tuple[int, int]:
    if ord(data[0]) == _LONG_ORDER_MARK:
        if len(data) < 4:
            raise Graph6ParseError("Truncated long-form order header", base + len(data))
        n = 0
        for offset in range(1, 4):
            n = (n << 6) | _byte_value(data, offset, base)
        return n, 4
    return _byte_value(data, 0, base), 1


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 string.

    Surrounding whitespace and a leading ">>graph6<<" header are ignored.

    Raises:
        Graph6ParseError: On an empty string, a byte outside 63..126, a bit
            stream that is truncated or too long for the announced order, or
            non-zero padding bits in the last byte.
        CapacityError: If the announced order is 0 or exceeds MAX_VERTICES.
    """
    data = text.strip()
    base = 0
    if data.startswith(GRAPH6_HEADER):
        base = len(GRAPH6_HEADER)
        data = data[base:]
    if not data:
        raise Graph6ParseError("Empty graph6 string", base)

    n, pos = _read_order(data, base)
    if not 1 <= n <= MAX_VERTICES:
        raise CapacityError(f"graph6 order {n} outside supported range 1..{MAX_VERTICES}")

    n_bits = n * (n - 1) // 2
    expected = (n_bits + 5) // 6
    body = data[pos:]
    if len(body) < expected:
        raise Graph6ParseError(f"Truncated bit stream: {len(body)} of {expected} bytes for n={n}", base + len(data))
    if len(body) > expected:
        raise Graph6ParseError(f"Trailing bytes after {expected} data bytes for n={n}", base + pos + expected)
    values = [_byte_value(data, pos + offset, base) for offset in range(expected)]
    padding = 6 * expected - n_bits
    if values and values[-1] & ((1 << padding) - 1):
        raise Graph6ParseError(f"Non-zero padding in the last {padding} bit(s)", base + pos + expected - 1)

    try:
        decoded = nx.from_graph6_bytes(data.encode("ascii"))
    except (nx.NetworkXError, ValueError) as err:
        raise Graph6ParseError(f"networkx rejected the string: {err}", base) from err
    graph = from_networkx(decoded)
    _LOGGER.debug("Parsed graph6 %r: n=%d m=%d", data, n, graph.m)
    return graph
