#!/usr/bin/env python3
"""Run the shipped verification corpus and print the aggregate report.

Equivalent to `blockfuse verify`; flags are forwarded.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from blockfuse.cli import main

if __name__ == "__main__":
    raise SystemExit(main(["verify", *sys.argv[1:]]))
