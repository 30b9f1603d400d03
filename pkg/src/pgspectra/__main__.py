"""Allow ``python -m pgspectra ...``."""

from .cli import main

main()
