"""Allow ``python -m dsi_bounds``."""

from .cli import main

main()
