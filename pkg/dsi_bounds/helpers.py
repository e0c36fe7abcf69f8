"""Shared utility functions for the dsi-bounds package."""

from __future__ import annotations

import logging
from collections.abc import Iterable, Iterator

_LOGGER = logging.getLogger(__name__)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    """Return the bit mask holding exactly the given vertex indices."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def masks_of_size(n: int, k: int) -> Iterator[int]:
    """Yield every k-subset of {0..n-1} as a bit mask, in increasing numeric order.

    Uses Gosper's hack, so consecutive masks are produced without building
    index tuples.

    Args:
        n: Ground set size.
        k: Subset size (0 <= k <= n).

    Returns:
        Iterator over the C(n, k) masks.
    """
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return
    mask = (1 << k) - 1
    limit = 1 << n
    while mask < limit:
        yield mask
        low = mask & -mask
        ripple = mask + low
        mask = (((ripple ^ mask) >> 2) // low) | ripple


def parse_int_list(text: str, name: str = "value") -> list[int]:
    """Parse a comma-separated list of positive integers such as "1,2,3".

    Args:
        text: The raw list, items separated by commas; whitespace is ignored.
        name: Option name used in error messages.

    Returns:
        The parsed integers in the given order, duplicates removed.

    Raises:
        ValueError: If an item is empty, not an integer, or not positive.
    """
    values: list[int] = []
    for raw in text.split(","):
        item = raw.strip()
        if not item:
            raise ValueError(f"Empty item in {name} list {text!r}")
        try:
            value = int(item)
        except ValueError as e:
            raise ValueError(f"Invalid {name} {item!r} in {text!r}: expected an integer") from e
        if value < 1:
            raise ValueError(f"Invalid {name} {value} in {text!r}: expected a positive integer")
        if value not in values:
            values.append(value)
    return values


def split_generator_spec(spec: str) -> tuple[str, list[int]]:
    """Split a "family:p1:p2" generator spec into its name and integer parameters.

    Args:
        spec: Family name optionally followed by colon-separated integers
            (e.g. "matched_cliques:3", "dodecahedron").

    Returns:
        Tuple of (family name, parameter list).

    Raises:
        ValueError: If the family name is empty or a parameter is not an integer.
    """
    family, *raw_params = spec.strip().split(":")
    if not family:
        raise ValueError(f"Invalid generator spec {spec!r}: missing family name")
    params: list[int] = []
    for raw in raw_params:
        try:
            params.append(int(raw))
        except ValueError as e:
            raise ValueError(f"Invalid generator spec {spec!r}: parameter {raw!r} is not an integer") from e
    _LOGGER.debug("Generator spec %r -> %s%s", spec, family, params)
    return family, params
