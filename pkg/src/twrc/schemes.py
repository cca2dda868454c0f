"""Closed-form rate regions for the Gaussian two-way relay channel.

Every scheme at fixed split parameters produces a pentagon
``{R1 <= r1_max, R2 <= r2_max, R1 + R2 <= sum_max}``. The ``*_bounds``
helpers evaluate the same formulas on broadcast numpy arrays of split
fractions so that parameter sweeps do not loop in Python.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, astuple

import numpy as np

from .core import ChannelError, GaussianTwrc, SplitParams, capacity

UNBOUNDED = math.inf
"""Sentinel ``sum_max`` for schemes that impose no sum-rate constraint."""

SCHEMES = ("direct", "df", "partial-df", "cf", "combined", "cutset")

# number of free split parameters per scheme
SCHEME_PARAMS = {
    "direct": (),
    "df": (),
    "partial-df": ("alpha", "beta"),
    "cf": (),
    "combined": ("alpha", "beta", "gamma"),
    "cutset": (),
}


@dataclass(frozen=True)
class RateConstraintSet:
    """Pentagon ``{0 <= R1 <= r1_max, 0 <= R2 <= r2_max, R1 + R2 <= sum_max}``."""

    r1_max: float
    r2_max: float
    sum_max: float = UNBOUNDED

    def __post_init__(self) -> None:
        for name in ("r1_max", "r2_max"):
            v = getattr(self, name)
            if not (math.isfinite(v) and v >= 0):
                raise ChannelError(f"{name} must be finite and >= 0, got {v!r}")
        if not (self.sum_max >= 0 and (math.isfinite(self.sum_max) or self.sum_max == UNBOUNDED)):
            raise ChannelError(f"sum_max must be >= 0 or UNBOUNDED, got {self.sum_max!r}")

    @property
    def sum_bounded(self) -> bool:
        return self.sum_max != UNBOUNDED

    def corners(self) -> list[tuple[float, float]]:
        """Pareto corners ``(R1, R2)`` ordered by increasing ``R1``."""
        top = min(self.r2_max, self.sum_max)
        right = min(self.r1_max, self.sum_max)
        if not self.sum_bounded or self.sum_max - top >= right:
            return [(0.0, top), (right, top)] if right > 0 else [(0.0, top)]
        pts = [(0.0, top)]
        if self.sum_max - top > 0:
            pts.append((self.sum_max - top, top))
        pts.append((right, self.sum_max - right))
        return pts

    def to_dict(self) -> dict:
        return {
            "r1_max": self.r1_max,
            "r2_max": self.r2_max,
            "sum_max": self.sum_max if self.sum_bounded else None,
        }


@dataclass(frozen=True)
class IValues:
    """The nine mutual-information bounds of the combined DF/CF scheme.

    ``i1``-``i3`` relay MAC bounds on the Gaussian layers, ``i4``/``i5`` relay
    computation of the lattice sum, ``i6``/``i7`` Gaussian layers at the users,
    ``i8``/``i9`` lattice layers at the users.
    """

    i1: float
    i2: float
    i3: float
    i4: float
    i5: float
    i6: float
    i7: float
    i8: float
    i9: float

    def as_tuple(self) -> tuple[float, ...]:
        return astuple(self)

    def to_dict(self) -> dict:
        return {f"i{k + 1}": v for k, v in enumerate(self.as_tuple())}

    def pentagon(self) -> RateConstraintSet:
        """Region left after eliminating the split rates."""
        m1 = min(self.i1, self.i6)
        m2 = min(self.i2, self.i7)
        m4 = min(self.i4, self.i8)
        m5 = min(self.i5, self.i9)
        return _pentagon(m1 + m4, m2 + m5, self.i3 + m4 + m5)


def _c(x):
    return 0.5 * np.log2(1.0 + x)


def _clamp(x):
    # rounding can push an exact zero slightly negative
    return np.maximum(x, 0.0)


def _pentagon(r1, r2, s=UNBOUNDED) -> RateConstraintSet:
    s = float(_clamp(s)) if s != UNBOUNDED else UNBOUNDED
    return RateConstraintSet(float(_clamp(r1)), float(_clamp(r2)), s)


def _lattice_rate(own, other, nr):
    """``[0.5 log2(own / (own + other) + own / nr)]^+`` with ``0/0 := 0``."""
    own = np.asarray(own, dtype=float)
    total = own + other
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = np.where(total > 0, own / np.where(total > 0, total, 1.0), 0.0)
        arg = ratio + own / nr
        val = np.where(arg > 1.0, 0.5 * np.log2(np.where(arg > 1.0, arg, 1.0)), 0.0)
    return val


def direct_transmission(ch: GaussianTwrc) -> RateConstraintSet:
    """Users talk over the direct link only; the relay stays silent."""
    return _pentagon(_c(ch.p1 / ch.n2), _c(ch.p2 / ch.n1))


def partial_df_bounds(ch: GaussianTwrc, alpha, beta):
    """Vectorized partial decode-forward bounds ``(r1, r2, sum)``."""
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    a1 = (1.0 - alpha) * ch.p1
    b2 = (1.0 - beta) * ch.p2
    d = a1 + b2 + ch.nr
    r1 = np.minimum(_c(alpha * ch.p1 / d) + _c(a1 / ch.n2), _c((ch.p1 + ch.pr) / ch.n2))
    r2 = np.minimum(_c(beta * ch.p2 / d) + _c(b2 / ch.n1), _c((ch.p2 + ch.pr) / ch.n1))
    s = _c((alpha * ch.p1 + beta * ch.p2) / d) + _c(a1 / ch.n2) + _c(b2 / ch.n1)
    return _clamp(r1), _clamp(r2), _clamp(s)


def partial_decode_forward(ch: GaussianTwrc, sp: SplitParams) -> RateConstraintSet:
    """Relay decodes the ``alpha``/``beta`` layers; the rest rides the direct link.

    ``sp.gamma`` is ignored.
    """
    r1, r2, s = partial_df_bounds(ch, sp.alpha, sp.beta)
    return _pentagon(r1, r2, s)


def decode_forward(ch: GaussianTwrc) -> RateConstraintSet:
    """Relay decodes both messages in full."""
    r1 = np.minimum(_c(ch.p1 / ch.nr), _c((ch.p1 + ch.pr) / ch.n2))
    r2 = np.minimum(_c(ch.p2 / ch.nr), _c((ch.p2 + ch.pr) / ch.n1))
    return _pentagon(r1, r2, _c((ch.p1 + ch.p2) / ch.nr))


def combined_i_values(ch: GaussianTwrc, alpha, beta, gamma):
    """Vectorized ``(i1, ..., i9)`` for the combined DF/CF scheme."""
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    gamma = np.asarray(gamma, dtype=float)
    a1 = (1.0 - alpha) * ch.p1
    b2 = (1.0 - beta) * ch.p2
    gr = (1.0 - gamma) * ch.pr
    d = a1 + b2 + ch.nr
    i1 = _c(alpha * ch.p1 / d)
    i2 = _c(beta * ch.p2 / d)
    i3 = _c((alpha * ch.p1 + beta * ch.p2) / d)
    i4 = _lattice_rate(a1, b2, ch.nr)
    i5 = _lattice_rate(b2, a1, ch.nr)
    i6 = _c((alpha * ch.p1 + gamma * ch.pr) / (a1 + gr + ch.n2))
    i7 = _c((beta * ch.p2 + gamma * ch.pr) / (b2 + gr + ch.n1))
    i8 = _c(gr / (ch.p1 + ch.n2)) + _c(a1 / ch.n2)
    i9 = _c(gr / (ch.p2 + ch.n1)) + _c(b2 / ch.n1)
    return tuple(_clamp(v) for v in (i1, i2, i3, i4, i5, i6, i7, i8, i9))


def combined_bounds(ch: GaussianTwrc, alpha, beta, gamma):
    """Vectorized combined DF/CF bounds ``(r1, r2, sum)``."""
    i1, i2, i3, i4, i5, i6, i7, i8, i9 = combined_i_values(ch, alpha, beta, gamma)
    m4 = np.minimum(i4, i8)
    m5 = np.minimum(i5, i9)
    return np.minimum(i1, i6) + m4, np.minimum(i2, i7) + m5, i3 + m4 + m5


def i_values(ch: GaussianTwrc, sp: SplitParams) -> IValues:
    return IValues(*(float(v) for v in combined_i_values(ch, sp.alpha, sp.beta, sp.gamma)))


def combined_df_cf(ch: GaussianTwrc, sp: SplitParams) -> RateConstraintSet:
    """Gaussian layers decoded at the relay, lattice layers computed as a sum."""
    return i_values(ch, sp).pentagon()


def compute_forward(ch: GaussianTwrc) -> RateConstraintSet:
    """Pure compute-forward: all power on the lattice layers, relay forwards the sum.

    The sum bound is the (redundant) ``r1_max + r2_max`` so the result matches
    the combined scheme at ``alpha = beta = gamma = 0`` field for field.
    """
    r1 = np.minimum(_lattice_rate(ch.p1, ch.p2, ch.nr), _c(ch.pr / (ch.p1 + ch.n2)) + _c(ch.p1 / ch.n2))
    r2 = np.minimum(_lattice_rate(ch.p2, ch.p1, ch.nr), _c(ch.pr / (ch.p2 + ch.n1)) + _c(ch.p2 / ch.n1))
    return _pentagon(r1, r2, _c(0.0) + r1 + r2)


def pdf_improvement_condition(ch: GaussianTwrc) -> bool:
    """True when partial decode-forward strictly enlarges the DF region."""
    noisy_relay, direct_beats_mac = improvement_witnesses(ch)
    return noisy_relay or direct_beats_mac


def improvement_witnesses(ch: GaussianTwrc) -> tuple[bool, bool]:
    """Both disjuncts of the improvement condition, in order."""
    noisy_relay = ch.nr > min(ch.n1, ch.n2)
    direct = capacity(ch.p1 / ch.n2) + capacity(ch.p2 / ch.n1)
    return noisy_relay, direct > capacity((ch.p1 + ch.p2) / ch.nr)


# --- cut-set outer bound -------------------------------------------------

def _conditional_cov(cov, keep, given):
    """Covariance of ``keep`` given ``given`` for a (possibly singular) Gaussian."""
    s_kk = cov[..., keep, :][..., :, keep]
    if not given:
        return s_kk
    s_kg = cov[..., keep, :][..., :, given]
    s_gg = cov[..., given, :][..., :, given]
    # pseudo-inverse of the correlation matrix keeps tiny variances from being cut off
    d = np.sqrt(np.diagonal(s_gg, axis1=-2, axis2=-1))
    d = np.where(d > 0, d, 1.0)
    corr = s_gg / (d[..., :, None] * d[..., None, :])
    s_kg = s_kg / d[..., None, :]
    return s_kk - s_kg @ np.linalg.pinv(corr, hermitian=True) @ np.swapaxes(s_kg, -1, -2)


def gaussian_mi(cov, a, b, c=()):
    """``I(A; B | C)`` in bits for jointly Gaussian variables.

    ``b`` must contain only noisy observations so that its conditional
    covariances stay nonsingular; ``a`` and ``c`` may be degenerate.
    """
    a, b, c = list(a), list(b), list(c)
    _, ld_b_c = np.linalg.slogdet(_conditional_cov(cov, b, c))
    _, ld_b_ac = np.linalg.slogdet(_conditional_cov(cov, b, a + c))
    return np.maximum(0.5 * (ld_b_c - ld_b_ac) / np.log(2.0), 0.0)


# variable order in the joint covariance
X1, X2, XR, Y1, Y2, YR = range(6)


def joint_covariance(ch: GaussianTwrc, rho1, rho2):
    """Covariance of ``(X1, X2, Xr, Y1, Y2, Yr)`` for correlated Gaussian inputs.

    ``X1`` and ``X2`` are independent; ``rho1`` and ``rho2`` are the
    correlation coefficients of the relay input with ``X1`` and ``X2``
    (``rho1**2 + rho2**2 <= 1``). Equivalently ``Xr = a X1 + b X2 + W`` with
    independent innovation ``W``.
    """
    rho1 = np.asarray(rho1, dtype=float)
    rho2 = np.asarray(rho2, dtype=float)
    shape = np.broadcast(rho1, rho2).shape
    k = np.zeros(shape + (3, 3))
    k[..., 0, 0] = ch.p1
    k[..., 1, 1] = ch.p2
    k[..., 2, 2] = ch.pr
    k[..., 0, 2] = k[..., 2, 0] = rho1 * math.sqrt(ch.p1 * ch.pr)
    k[..., 1, 2] = k[..., 2, 1] = rho2 * math.sqrt(ch.p2 * ch.pr)
    h = np.array([[0.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.0]])
    m = np.vstack([np.eye(3), h])
    cov = m @ k @ m.T
    cov[..., 3, 3] += ch.n1
    cov[..., 4, 4] += ch.n2
    cov[..., 5, 5] += ch.nr
    return cov


def cutset_rates(ch: GaussianTwrc, rho1, rho2):
    """Per-correlation cut-set values ``(r1, r2)``, broadcast over the correlations."""
    cov = joint_covariance(ch, rho1, rho2)
    r1 = np.minimum(
        gaussian_mi(cov, [X1], [YR, Y2], [X2, XR]),
        gaussian_mi(cov, [X1, XR], [Y2], [X2]),
    )
    r2 = np.minimum(
        gaussian_mi(cov, [X2], [YR, Y1], [X1, XR]),
        gaussian_mi(cov, [X2, XR], [Y1], [X1]),
    )
    return r1, r2


def correlation_grid(corr_grid: int):
    """Feasible ``(rho1, rho2)`` pairs on a ``corr_grid x corr_grid`` lattice of ``[0, 1]^2``."""
    if corr_grid < 2:
        raise ValueError("corr_grid must be >= 2")
    g = np.linspace(0.0, 1.0, corr_grid)
    r1, r2 = (x.ravel() for x in np.meshgrid(g, g, indexing="ij"))
    ok = r1 * r1 + r2 * r2 <= 1.0 + 1e-12
    return r1[ok], r2[ok]


def cutset_bound(ch: GaussianTwrc, corr_grid: int = 101) -> RateConstraintSet:
    """Rectangle outer bound from the two cuts around each user.

    Inputs are jointly Gaussian with the relay input correlated to both users.
    Each rate is maximized separately over the correlation grid, which gives a
    valid, possibly loose, outer set with no sum constraint.
    """
    rho1, rho2 = correlation_grid(corr_grid)
    r1, r2 = cutset_rates(ch, rho1, rho2)
    return _pentagon(r1.max(), r2.max())


def evaluate(ch: GaussianTwrc, scheme: str, sp: SplitParams | None = None) -> RateConstraintSet:
    """Dispatch a single scheme evaluation by name."""
    sp = sp or SplitParams()
    if scheme == "direct":
        return direct_transmission(ch)
    if scheme == "df":
        return decode_forward(ch)
    if scheme == "partial-df":
        return partial_decode_forward(ch, sp)
    if scheme == "cf":
        return compute_forward(ch)
    if scheme == "combined":
        return combined_df_cf(ch, sp)
    if scheme == "cutset":
        return cutset_bound(ch)
    raise ValueError(f"unknown scheme {scheme!r}; expected one of {', '.join(SCHEMES)}")
