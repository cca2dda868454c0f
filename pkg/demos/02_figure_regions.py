"""
Rate-region figures
===================

Sweep every scheme of each preset configuration and plot the boundaries.
Figures go to ``demos/out`` (or the directory given on the command line).
"""

import pathlib
import sys

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from twrc.presets import PRESETS, figure_regions

out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent / "out")
out.mkdir(parents=True, exist_ok=True)

styles = {"direct": ":", "df": "--", "partial-df": "-", "cf": "-.", "combined": "-", "cutset": (0, (1, 1))}

for name, preset in PRESETS.items():
    # a 41-point split grid is plenty for a picture and keeps this quick
    regions = figure_regions(name, grid=41, resolution=301)
    fig, ax = plt.subplots(figsize=(5, 4))
    for scheme, region in regions.items():
        pts = region.boundary.closed()
        ax.plot([p.r1 for p in pts], [p.r2 for p in pts], linestyle=styles[scheme], label=scheme)
    ch = preset.channel
    ax.set_title(f"P=({ch.p1:g},{ch.p2:g},{ch.pr:g})  N=({ch.n1:g},{ch.n2:g},{ch.nr:g})", fontsize=9)
    ax.set_xlabel("R1 [bits/use]")
    ax.set_ylabel("R2 [bits/use]")
    ax.set_xlim(left=0)
    ax.set_ylim(bottom=0)
    ax.legend(fontsize=8)
    fig.tight_layout()
    fig.savefig(out / f"{name}.png", dpi=120)
    plt.close(fig)

    heights = {s: np.nanmax(np.where(np.isfinite(r.boundary.heights), r.boundary.heights, np.nan)) for s, r in regions.items()}
    print(name, {s: round(float(h), 3) for s, h in heights.items()})

print("figures written to", out)
