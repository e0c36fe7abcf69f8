"""Tests for config.py: oracle guards."""

import logging

import pytest
import voluptuous as vol

from dsi_bounds.config import DEFAULT_GUARDS, OracleGuards
from dsi_bounds.const import DEFAULT_GUARD_CHROMATIC, DEFAULT_GUARD_CORPUS, DEFAULT_GUARD_FAMILY, DEFAULT_GUARD_SINGLE
from dsi_bounds.exceptions import CapacityError


@pytest.mark.unit
class TestOracleGuards:
    """Tests for OracleGuards."""

    def test_defaults(self):
        """Default guards match the documented limits."""
        assert DEFAULT_GUARDS == OracleGuards(
            single=DEFAULT_GUARD_SINGLE,
            family=DEFAULT_GUARD_FAMILY,
            chromatic=DEFAULT_GUARD_CHROMATIC,
            corpus=DEFAULT_GUARD_CORPUS,
        )
        assert (DEFAULT_GUARDS.single, DEFAULT_GUARDS.corpus) == (20, 7)

    def test_from_mapping_partial(self):
        """Unset keys keep their defaults; None is ignored."""
        guards = OracleGuards.from_mapping({"family": 18, "chromatic": None})
        assert guards.family == 18
        assert guards.chromatic == DEFAULT_GUARD_CHROMATIC

    def test_from_mapping_none(self):
        """No overrides at all."""
        assert OracleGuards.from_mapping(None) == DEFAULT_GUARDS

    @pytest.mark.parametrize(
        "overrides",
        [
            {"single": 0},
            {"family": 64},
            {"corpus": 8},
            {"chromatic": "12"},
            {"unknown": 3},
        ],
    )
    def test_from_mapping_invalid(self, overrides):
        """Out-of-range values and unknown keys are rejected."""
        with pytest.raises(vol.Invalid):
            OracleGuards.from_mapping(overrides)

    def test_check_within(self):
        """n at the limit is accepted."""
        DEFAULT_GUARDS.check("single", 20, "alpha_j")

    def test_check_exceeded(self, caplog):
        """n above the limit raises CapacityError and logs at debug level."""
        with caplog.at_level(logging.DEBUG, logger="dsi_bounds.config"):
            with pytest.raises(CapacityError, match="chi_j refused: n=17 exceeds the 'chromatic' guard of 16"):
                DEFAULT_GUARDS.check("chromatic", 17, "chi_j")
        assert "chi_j refused" in caplog.text
