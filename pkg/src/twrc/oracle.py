"""Feasibility of the raw split-rate inequality systems.

Both achievable schemes are proved by splitting ``R1 = R10 + R11`` and
``R2 = R20 + R22`` and bounding the parts. Deciding whether a rate pair
admits a valid split is an independent check on the eliminated
(``R1``/``R2``/sum) form of each region.

Once the totals are fixed, ``R11 = R1 - R10`` and ``R22 = R2 - R20``, so every
constraint becomes an interval on ``R10`` or ``R20`` plus a single coupling
``R10 + R20 <= mac_sum``. Feasibility is then decided exactly: both intervals
must be nonempty and their lower ends must fit under the coupling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .schemes import IValues, RateConstraintSet

TOL = 1e-12


@dataclass(frozen=True)
class RawBounds1:
    """Mutual-information bounds of the partial decode-forward split system.

    ``b_u1``, ``b_u2``, ``b_u12``: relay MAC bounds on ``R10``, ``R20`` and
    their sum. ``b_x1_given``: bound on ``R11`` at user 2. ``b_x1_total``:
    bound on ``R10 + R11`` at user 2. ``b_x2_*`` mirror these at user 1.
    """

    b_u1: float
    b_u2: float
    b_u12: float
    b_x1_given: float
    b_x1_total: float
    b_x2_given: float
    b_x2_total: float

    def __post_init__(self) -> None:
        for name, v in vars(self).items():
            if v < 0:
                raise ValueError(f"{name} must be >= 0, got {v}")


def _split_feasible(r1, r2, hi10, cap11, hi20, cap22, mac_sum, tol):
    if r1 < -tol or r2 < -tol:
        return False
    # R10 in [max(0, r1 - cap11), min(r1, hi10)], likewise R20
    lo10 = max(0.0, r1 - cap11)
    lo20 = max(0.0, r2 - cap22)
    if lo10 > min(r1, hi10) + tol or lo20 > min(r2, hi20) + tol:
        return False
    return lo10 + lo20 <= mac_sum + tol


def theorem1_raw_feasible(b: RawBounds1, p, tol: float = TOL) -> bool:
    """Whether ``p`` admits a split satisfying the partial-DF decoding constraints."""
    r1, r2 = p
    if r1 > b.b_x1_total + tol or r2 > b.b_x2_total + tol:
        return False
    return _split_feasible(
        r1, r2, b.b_u1, b.b_x1_given, b.b_u2, b.b_x2_given, b.b_u12, tol
    )


def theorem2_raw_feasible(b: IValues, p, tol: float = TOL) -> bool:
    """Whether ``p`` admits a split satisfying the nine combined-scheme constraints."""
    r1, r2 = p
    return _split_feasible(
        r1,
        r2,
        min(b.i1, b.i6),
        min(b.i4, b.i8),
        min(b.i2, b.i7),
        min(b.i5, b.i9),
        b.i3,
        tol,
    )


def theorem1_pentagon(b: RawBounds1) -> RateConstraintSet:
    """Eliminated form of the partial-DF split system."""
    return RateConstraintSet(
        min(b.b_u1 + b.b_x1_given, b.b_x1_total),
        min(b.b_u2 + b.b_x2_given, b.b_x2_total),
        b.b_u12 + b.b_x1_given + b.b_x2_given,
    )
