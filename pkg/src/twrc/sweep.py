"""Union of a scheme's pentagons over a grid of split parameters."""

from __future__ import annotations

import numpy as np

from .core import GaussianTwrc, SplitParams
from .geometry import RateRegion
from .schemes import (
    SCHEMES,
    UNBOUNDED,
    combined_bounds,
    combined_df_cf,
    evaluate,
    partial_df_bounds,
)

DEFAULT_GRID = 101


def split_grid(n: int) -> np.ndarray:
    if n < 2:
        raise ValueError(f"grid needs at least 2 points per parameter, got {n}")
    return np.linspace(0.0, 1.0, n)


def region_sweep(ch: GaussianTwrc, scheme: str, grid: int = DEFAULT_GRID) -> RateRegion:
    """Union of ``scheme``'s constraint sets over ``grid`` points per free parameter.

    Parameter-free schemes yield a single pentagon. The grid always includes
    0 and 1, so the endpoint special cases are part of every sweep.
    """
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}; expected one of {', '.join(SCHEMES)}")
    if scheme == "partial-df":
        g = split_grid(grid)
        a, b = np.meshgrid(g, g, indexing="ij")
        a, b = a.ravel(), b.ravel()
        r1, r2, s = partial_df_bounds(ch, a, b)
        params = np.column_stack([a, b, np.zeros_like(a)])
        return RateRegion(r1, r2, s, params)
    if scheme == "combined":
        g = split_grid(grid)
        a, b, c = (x.ravel() for x in np.meshgrid(g, g, g, indexing="ij"))
        r1, r2, s = combined_bounds(ch, a, b, c)
        params = np.column_stack([a, b, c])
        return RateRegion(r1, r2, s, params)
    cs = evaluate(ch, scheme)
    return RateRegion(
        np.array([cs.r1_max]), np.array([cs.r2_max]), np.array([cs.sum_max]), np.zeros((1, 3))
    )


def best_gamma(ch: GaussianTwrc, alpha: float, beta: float, grid: int = DEFAULT_GRID):
    """The ``gamma`` on the grid maximizing ``r1_max + r2_max`` of the combined scheme.

    Ties go to the smallest ``gamma``. Returns ``(gamma, constraint_set)``.
    """
    g = split_grid(grid)
    r1, r2, _ = combined_bounds(ch, alpha, beta, g)
    k = int(np.argmax(r1 + r2))
    gamma = float(g[k])
    return gamma, combined_df_cf(ch, SplitParams(alpha, beta, gamma))


__all__ = ["DEFAULT_GRID", "UNBOUNDED", "best_gamma", "region_sweep", "split_grid"]
