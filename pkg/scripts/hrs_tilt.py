#!/usr/bin/env python
"""
Run the HRS tilt engine from a source checkout.

Usage:
    python scripts/hrs_tilt.py selftest quick
    python scripts/hrs_tilt.py example73 --bound 4 --format json
"""

import os
import sys

# Add project root to path to allow importing
project_root = os.path.abspath(os.path.join(os.path.dirname(__file__), ".."))
sys.path.insert(0, project_root)

from src.cli.main import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
