"""Reproduce the eigenvalue-crossing figure as CSV and SVG.

Calls the command line entry points in-process.  The CSV holds the
normalized scalar curvature together with the constant and stretched
eigenvalue curves on a t-grid; the SVG adds a dashed vertical at each
degeneracy instant.

Run from the repository root:

    python3 demos/05_figure_export.py
"""

import pathlib

from flagvar import cli

out = pathlib.Path("demo_output")
out.mkdir(exist_ok=True)

jobs = [
    ["figure", "--family", "su", "--n", "2", "--tmin", "0.1",
     "--format", "csv", "--out", str(out / "su3_curves.csv")],
    ["figure", "--family", "su", "--n", "2", "--tmin", "0.1",
     "--format", "svg", "--out", str(out / "su3_curves.svg")],
    ["figure", "--family", "g2", "--tmin", "0.11",
     "--format", "svg", "--out", str(out / "g2_curves.svg")],
    ["instants", "--family", "su", "--n", "2", "--tmin", "0.1",
     "--format", "csv", "--out", str(out / "su3_instants.csv")],
]

for argv in jobs:
    code = cli.main(argv)
    print("flagvar {} -> exit {}, wrote {}".format(
        " ".join(argv[:-2]), code, argv[-1]))

svg = (out / "su3_curves.svg").read_text()
print()
print("dashed verticals in su3_curves.svg:", svg.count("stroke-dasharray"))
