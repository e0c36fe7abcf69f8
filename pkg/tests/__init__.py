"""dsi-bounds test suite."""
