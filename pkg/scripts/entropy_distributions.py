#!/usr/bin/env python3
"""Entropy histograms at N = 10, N_A = 5: Gaussian ensemble vs Haar-pure.

The Gaussian ensemble produces a broad distribution whose width stays O(1)
in the subsystem fraction, while generic pure states concentrate sharply
near the Page value.  Writes two CSV histograms to scripts/out/.
"""

import pathlib
import sys

from gausspage.cli import main

OUT = pathlib.Path(__file__).resolve().parent / "out"

if __name__ == "__main__":
    OUT.mkdir(exist_ok=True)
    for ensemble, samples in [("gaussian", 50_000), ("haar-pure", 10_000)]:
        path = OUT / f"dist_{ensemble}_N10_NA5.csv"
        code = main([
            "dist", "--N", "10", "--NA", "5",
            "--ensemble", ensemble,
            "--samples", str(samples), "--bins", "60",
            "--out", str(path),
        ])
        if code != 0:
            sys.exit(f"{ensemble}: exit code {code}")
        print(f"wrote {path}")
