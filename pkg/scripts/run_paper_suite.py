#!/usr/bin/env python3
"""Run the full reference-experiment suite and write trajectories + summary.

Usage: python scripts/run_paper_suite.py [out_dir]   (default: suite_out/)
"""

import sys

from socave.cli import main

if __name__ == "__main__":
    out_dir = sys.argv[1] if len(sys.argv) > 1 else "suite_out"
    sys.exit(main(["suite", "--name", "paper-examples", "--out-dir", out_dir]))
