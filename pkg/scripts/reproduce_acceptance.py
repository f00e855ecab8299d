#!/usr/bin/env python3
"""Re-run the acceptance suite and the CLI examples it is built on.

Usage: python scripts/reproduce_acceptance.py [--out-dir DIR]
CLI outputs are written to DIR (default ./acceptance_runs) so repeated runs
can be diffed byte for byte.
"""
import argparse
import sys
from pathlib import Path

import pytest

from korobov.cli import run

ROOT = Path(__file__).resolve().parent.parent

CLI_RUNS = {
    "classify_poly4.json": ["classify", "--gamma", "poly:4", "--alpha", "const:1"],
    "complexity_d2.json": ["complexity", "--d", "2", "--eps", "0.45", "--gamma", "list:0.5,0.5", "--alpha", "const:1"],
    "spectrum_d1.csv": ["spectrum", "--d", "1", "--n", "5", "--gamma", "list:0.5", "--alpha", "const:1"],
    "curse.csv": ["curse", "--d-grid", "1..7", "--eps", "0.5"],
    "fit_poly4_d20.json": ["fit", "--d", "20", "--eps-grid", ",".join(repr(2.0**-i) for i in range(2, 11)), "--gamma", "poly:4"],
    "complexity_grid.csv": ["complexity", "--d-grid", "1..4", "--eps-grid", "0.9,0.6,0.45,0.3,0.1", "--gamma", "poly:2", "--alpha", "list:0.6,1,2", "--tau", "1"],
}


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--out-dir", default="acceptance_runs")
    args = parser.parse_args()
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for name, argv in CLI_RUNS.items():
        code = run([*argv, "--out", str(out_dir / name)])
        print(f"{name}: exit {code}")
    return pytest.main([str(ROOT / "tests" / "test_acceptance.py"), "-q"])


if __name__ == "__main__":
    sys.exit(main())
