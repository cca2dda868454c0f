"""Rate-region geometry: membership, union boundaries, hulls, dominance.

A region is a union of pentagons. Its boundary is sampled on a grid of
``R1`` values; at each grid value the boundary height is the largest ``R2``
any pentagon admits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .schemes import UNBOUNDED, RateConstraintSet

MEMBERSHIP_TOL = 1e-12
DOMINANCE_TOL = 1e-6
DEFAULT_RESOLUTION = 401

# pentagons processed per block in union_boundary, bounds peak memory
_BLOCK = 8192


@dataclass(frozen=True)
class RatePoint:
    r1: float
    r2: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.r1) and math.isfinite(self.r2) and self.r1 >= 0 and self.r2 >= 0):
            raise ValueError(f"rate point must be finite and nonnegative, got ({self.r1}, {self.r2})")

    def __iter__(self):
        return iter((self.r1, self.r2))


@dataclass
class Boundary:
    """Boundary heights on an ``R1`` grid.

    ``heights[k]`` is ``-inf`` where no pentagon reaches ``grid[k]``;
    ``source[k]`` indexes the pentagon attaining the height (``-1`` if none).
    """

    grid: np.ndarray
    heights: np.ndarray
    source: np.ndarray

    def points(self) -> list[RatePoint]:
        """Pareto-sorted polyline: ``R1`` strictly increasing, ``R2`` nonincreasing."""
        ok = np.isfinite(self.heights)
        return [RatePoint(float(x), float(y)) for x, y in zip(self.grid[ok], self.heights[ok])]

    def closed(self) -> list[RatePoint]:
        """Polyline with the vertical drop to the ``R1`` axis appended."""
        pts = self.points()
        if pts and pts[-1].r2 > 0:
            pts.append(RatePoint(pts[-1].r1, 0.0))
        return pts

    def as_array(self) -> np.ndarray:
        return np.array([[p.r1, p.r2] for p in self.points()]).reshape(-1, 2)


@dataclass
class RateRegion:
    """Union of pentagons stored column-wise.

    ``params`` holds the split parameters ``(alpha, beta, gamma)`` that
    produced each pentagon, when the region came from a sweep.
    """

    r1: np.ndarray
    r2: np.ndarray
    sums: np.ndarray
    params: np.ndarray | None = None
    boundary: Boundary | None = field(default=None, repr=False)

    @classmethod
    def from_sets(cls, sets, params=None) -> "RateRegion":
        sets = list(sets)
        if not sets:
            raise ValueError("a region needs at least one constraint set")
        return cls(
            np.array([s.r1_max for s in sets], dtype=float),
            np.array([s.r2_max for s in sets], dtype=float),
            np.array([s.sum_max for s in sets], dtype=float),
            None if params is None else np.asarray(params, dtype=float),
        )

    def __len__(self) -> int:
        return len(self.r1)

    @property
    def pentagons(self) -> list[RateConstraintSet]:
        return [RateConstraintSet(float(a), float(b), float(c)) for a, b, c in zip(self.r1, self.r2, self.sums)]

    @property
    def r1_extent(self) -> float:
        return float(np.max(np.minimum(self.r1, self.sums)))

    def compute_boundary(self, resolution: int = DEFAULT_RESOLUTION, grid=None) -> Boundary:
        self.boundary = _boundary(self.r1, self.r2, self.sums, resolution, grid)
        return self.boundary

    def contains(self, p, tol: float = MEMBERSHIP_TOL) -> bool:
        r1, r2 = p
        ok = (r1 >= -tol) & (r2 >= -tol) & (r1 <= self.r1 + tol) & (r2 <= self.r2 + tol)
        ok &= r1 + r2 <= self.sums + tol
        return bool(np.any(ok))


def contains(cs: RateConstraintSet, p, tol: float = MEMBERSHIP_TOL) -> bool:
    """Whether ``p = (R1, R2)`` lies in the pentagon, up to ``tol``."""
    r1, r2 = p
    if r1 < -tol or r2 < -tol or r1 > cs.r1_max + tol or r2 > cs.r2_max + tol:
        return False
    return not cs.sum_bounded or r1 + r2 <= cs.sum_max + tol


def r1_grid(r1_max: float, resolution: int) -> np.ndarray:
    if resolution < 2:
        raise ValueError("resolution must be >= 2")
    if r1_max <= 0:
        # a region confined to the R2 axis has a single boundary sample
        return np.zeros(1)
    return np.linspace(0.0, r1_max, resolution)


def _boundary(r1, r2, sums, resolution, grid) -> Boundary:
    if len(r1) == 0:
        raise ValueError("union_boundary needs at least one pentagon")
    if grid is None:
        grid = r1_grid(float(np.max(np.minimum(r1, sums))), resolution)
    grid = np.asarray(grid, dtype=float)
    best = np.full(grid.shape, -np.inf)
    src = np.full(grid.shape, -1, dtype=np.int64)
    for start in range(0, len(r1), _BLOCK):
        sl = slice(start, start + _BLOCK)
        a, b, c = r1[sl, None], r2[sl, None], sums[sl, None]
        h = np.minimum(b, c - grid[None, :])
        h = np.where((grid[None, :] <= a + MEMBERSHIP_TOL) & (h >= -MEMBERSHIP_TOL), np.maximum(h, 0.0), -np.inf)
        k = np.argmax(h, axis=0)
        hk = h[k, np.arange(grid.size)]
        better = hk > best
        best = np.where(better, hk, best)
        src = np.where(better, k + start, src)
    return Boundary(grid, best, src)


def union_boundary(pentagons, resolution: int = DEFAULT_RESOLUTION, grid=None) -> list[RatePoint]:
    """Pareto boundary of a union of pentagons sampled on an ``R1`` grid.

    The grid runs from 0 to the largest reachable ``R1`` unless given
    explicitly. The closing drop to the ``R1`` axis is not included; see
    :meth:`Boundary.closed`.
    """
    pentagons = list(pentagons)
    if not pentagons:
        raise ValueError("union_boundary needs at least one pentagon")
    region = RateRegion.from_sets(pentagons)
    return region.compute_boundary(resolution, grid).points()


def _cross(o, a, b) -> float:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> list[RatePoint]:
    """Upper-right convex hull of rate points, closed to both axes.

    Time sharing between the inputs (and the origin) reaches exactly the
    region under the returned chain. The chain starts at ``(0, max R2)`` and
    ends at ``(max R1, 0)``; collinear interior points are dropped.
    """
    pts = [tuple(map(float, p)) for p in points]
    if not pts:
        raise ValueError("convex_hull needs at least one point")
    top = max(p[1] for p in pts)
    right = max(p[0] for p in pts)
    pts += [(0.0, top), (right, 0.0)]
    pts = sorted(set(pts), key=lambda p: (p[0], -p[1]))
    chain: list[tuple[float, float]] = []
    for p in pts:
        while len(chain) >= 2 and _cross(chain[-2], chain[-1], p) >= 0:
            chain.pop()
        chain.append(p)
    # only the part from (0, top) to (right, 0) belongs to the upper-right hull
    start = chain.index((0.0, top))
    chain = chain[start:]
    return [RatePoint(*p) for p in chain]


def hull_height(hull, r1: float) -> float:
    """Largest ``R2`` under a hull chain at the given ``R1`` (``-inf`` beyond it)."""
    xs = np.array([p.r1 for p in hull])
    ys = np.array([p.r2 for p in hull])
    if r1 < 0 or r1 > xs[-1]:
        return -math.inf
    # vertical segments share an x value; take the upper one
    k = np.searchsorted(xs, r1, side="left")
    if xs[k] == r1:
        return float(ys[k])
    return float(ys[k - 1] + (ys[k] - ys[k - 1]) * (r1 - xs[k - 1]) / (xs[k] - xs[k - 1]))


def dominates(a: RateRegion, b: RateRegion, tol: float = DOMINANCE_TOL) -> bool:
    """True iff region ``a``'s boundary is at least ``b``'s everywhere, within ``tol``.

    Both boundaries must already be computed on the same ``R1`` grid.
    """
    ba, bb = a.boundary, b.boundary
    if ba is None or bb is None:
        raise ValueError("compute boundaries before comparing regions")
    if ba.grid.shape != bb.grid.shape or not np.array_equal(ba.grid, bb.grid):
        raise ValueError("regions were sampled on different R1 grids")
    return bool(np.all(ba.heights >= bb.heights - tol))


def max_excess(a: RateRegion, b: RateRegion) -> float:
    """Largest amount by which ``a``'s boundary exceeds ``b``'s.

    Only grid values where both regions are nonempty are compared.
    """
    ba, bb = a.boundary, b.boundary
    if ba is None or bb is None or not np.array_equal(ba.grid, bb.grid):
        raise ValueError("regions need boundaries on the same R1 grid")
    both = np.isfinite(ba.heights) & np.isfinite(bb.heights)
    if not both.any():
        return -math.inf
    return float(np.max(ba.heights[both] - bb.heights[both]))


def common_grid(regions, resolution: int = DEFAULT_RESOLUTION) -> np.ndarray:
    """An ``R1`` grid covering every region, and compute their boundaries on it."""
    regions = list(regions)
    grid = r1_grid(max(r.r1_extent for r in regions), resolution)
    for r in regions:
        r.compute_boundary(grid=grid)
    return grid


__all__ = [
    "Boundary",
    "RatePoint",
    "RateRegion",
    "UNBOUNDED",
    "common_grid",
    "contains",
    "convex_hull",
    "dominates",
    "hull_height",
    "max_excess",
    "union_boundary",
]
