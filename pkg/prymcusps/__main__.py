"""Entry point for ``python -m prymcusps``."""

import sys

from prymcusps.cli import main

if __name__ == "__main__":
    sys.exit(main())
