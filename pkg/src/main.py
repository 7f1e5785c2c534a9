"""Entrypoint for `python -m src.main`; the console script calls the same `main`."""

from __future__ import annotations

import sys

from src.cli.app import main

if __name__ == "__main__":
    sys.exit(main())
