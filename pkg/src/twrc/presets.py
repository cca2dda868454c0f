"""Channel configurations of the published rate-region figures."""

from __future__ import annotations

from dataclasses import dataclass

from .core import GaussianTwrc
from .geometry import DEFAULT_RESOLUTION, common_grid
from .sweep import DEFAULT_GRID, region_sweep


@dataclass(frozen=True)
class FigurePreset:
    name: str
    channel: GaussianTwrc
    schemes: tuple[str, ...]
    description: str = ""


PRESETS = {
    p.name: p
    for p in (
        FigurePreset(
            "fig-asym-pdf",
            GaussianTwrc(20, 20, 20, 2, 30, 6),
            ("direct", "df", "partial-df"),
            "partial DF vs DF, asymmetric noise",
        ),
        FigurePreset(
            "fig-sym-pdf",
            GaussianTwrc(20, 20, 20, 12, 12, 6),
            ("direct", "df", "partial-df"),
            "partial DF vs DF, symmetric channel",
        ),
        FigurePreset(
            "fig-asym-combined",
            GaussianTwrc(50, 40, 20, 20, 40, 15),
            ("df", "cf", "combined", "partial-df", "cutset"),
            "combined DF/CF, asymmetric channel",
        ),
        FigurePreset(
            "fig-sym-combined",
            GaussianTwrc(20, 20, 20, 8, 8, 6),
            ("df", "cf", "combined", "partial-df", "cutset"),
            "combined DF/CF, symmetric channel",
        ),
    )
}


def figure_regions(name: str, grid: int = DEFAULT_GRID, resolution: int = DEFAULT_RESOLUTION):
    """Swept regions for every scheme of a preset, boundaries on one ``R1`` grid."""
    preset = PRESETS[name]
    regions = {s: region_sweep(preset.channel, s, grid) for s in preset.schemes}
    common_grid(regions.values(), resolution)
    return regions
