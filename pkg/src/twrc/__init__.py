"""Achievable rate regions and outer bounds for the full-duplex two-way relay channel."""

__version__ = "0.1.0"

from .core import ChannelError, GaussianTwrc, SplitParams, capacity, validate
from .geometry import (
    RatePoint,
    RateRegion,
    common_grid,
    contains,
    convex_hull,
    dominates,
    hull_height,
    max_excess,
    union_boundary,
)
from .schemes import (
    UNBOUNDED,
    IValues,
    RateConstraintSet,
    combined_df_cf,
    compute_forward,
    cutset_bound,
    decode_forward,
    direct_transmission,
    i_values,
    partial_decode_forward,
    pdf_improvement_condition,
)
from .sweep import best_gamma, region_sweep

__all__ = [
    "ChannelError",
    "GaussianTwrc",
    "IValues",
    "RatePoint",
    "RateConstraintSet",
    "RateRegion",
    "SplitParams",
    "UNBOUNDED",
    "best_gamma",
    "capacity",
    "combined_df_cf",
    "common_grid",
    "compute_forward",
    "contains",
    "convex_hull",
    "cutset_bound",
    "decode_forward",
    "direct_transmission",
    "dominates",
    "hull_height",
    "i_values",
    "max_excess",
    "partial_decode_forward",
    "pdf_improvement_condition",
    "region_sweep",
    "union_boundary",
    "validate",
]
