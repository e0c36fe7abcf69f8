"""Oracle size guards and their validation schema."""

from __future__ import annotations

import logging
from collections.abc import Mapping
from dataclasses import dataclass
from typing import Any

import voluptuous as vol

from .const import (
    DEFAULT_GUARD_CHROMATIC,
    DEFAULT_GUARD_CORPUS,
    DEFAULT_GUARD_FAMILY,
    DEFAULT_GUARD_SINGLE,
    LOG_GUARD_EXCEEDED,
    MAX_VERTICES,
)
from .exceptions import CapacityError

_LOGGER = logging.getLogger(__name__)

GUARDS_SCHEMA = vol.Schema(
    {
        vol.Optional("single"): vol.All(int, vol.Range(min=1, max=MAX_VERTICES)),
        vol.Optional("family"): vol.All(int, vol.Range(min=1, max=MAX_VERTICES)),
        vol.Optional("chromatic"): vol.All(int, vol.Range(min=1, max=MAX_VERTICES)),
        vol.Optional("corpus"): vol.All(int, vol.Range(min=1, max=DEFAULT_GUARD_CORPUS)),
    }
)


@dataclass(frozen=True)
class OracleGuards:
    """Largest order each exhaustive computation accepts.

    Exceeding a guard is an error rather than a silent multi-hour run.
    """

    single: int = DEFAULT_GUARD_SINGLE
    family: int = DEFAULT_GUARD_FAMILY
    chromatic: int = DEFAULT_GUARD_CHROMATIC
    corpus: int = DEFAULT_GUARD_CORPUS

    @classmethod
    def from_mapping(cls, overrides: Mapping[str, Any] | None) -> OracleGuards:
        """Build guards from a partial override mapping; None values are ignored.

        Raises:
            vol.Invalid: If a key is unknown or a value is out of range.
        """
        cleaned = {key: value for key, value in (overrides or {}).items() if value is not None}
        return cls(**GUARDS_SCHEMA(cleaned))

    def check(self, guard: str, n: int, operation: str) -> None:
        """Raise CapacityError when n exceeds the named guard."""
        limit = getattr(self, guard)
        if n > limit:
            _LOGGER.debug(LOG_GUARD_EXCEEDED, operation, n, limit)
            raise CapacityError(f"{operation} refused: n={n} exceeds the '{guard}' guard of {limit}")


DEFAULT_GUARDS = OracleGuards()
