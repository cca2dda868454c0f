"""Channel model types and the Gaussian capacity function.

All powers and noise variances are linear quantities and all rates are in
bits per channel use.
"""

from __future__ import annotations

import math
import numbers
from dataclasses import dataclass


class ChannelError(ValueError):
    """Raised when a channel or parameter set violates its invariants."""


def capacity(snr: float) -> float:
    """Gaussian capacity ``0.5 * log2(1 + snr)`` in bits per channel use."""
    snr = float(snr)
    if not math.isfinite(snr) or snr < 0:
        raise ChannelError(f"snr must be finite and nonnegative, got {snr!r}")
    return 0.5 * math.log2(1.0 + snr)


@dataclass(frozen=True)
class GaussianTwrc:
    """Full-duplex AWGN two-way relay channel.

    ``Y1 = Xr + X2 + Z1``, ``Y2 = Xr + X1 + Z2``, ``Yr = X1 + X2 + Zr`` with
    independent noises of variance ``n1``, ``n2``, ``nr`` and average input
    power constraints ``p1``, ``p2``, ``pr``.
    """

    p1: float
    p2: float
    pr: float
    n1: float
    n2: float
    nr: float

    def __post_init__(self) -> None:
        problem = validate(self)
        if problem is not None:
            raise ChannelError(problem)
        for name in ("p1", "p2", "pr", "n1", "n2", "nr"):
            object.__setattr__(self, name, float(getattr(self, name)))

    @classmethod
    def from_db(cls, p1, p2, pr, n1, n2, nr) -> "GaussianTwrc":
        """Build a channel from values given in dB (``10 log10``)."""
        vals = [10.0 ** (float(v) / 10.0) for v in (p1, p2, pr, n1, n2, nr)]
        return cls(*vals)

    def as_tuple(self) -> tuple[float, ...]:
        return (self.p1, self.p2, self.pr, self.n1, self.n2, self.nr)

    def swapped(self) -> "GaussianTwrc":
        """The same channel with the roles of user 1 and user 2 exchanged."""
        return GaussianTwrc(self.p2, self.p1, self.pr, self.n2, self.n1, self.nr)


def validate(channel) -> str | None:
    """Return ``None`` if ``channel`` is valid, else the first violated invariant.

    Works on anything exposing the six fields, so it can check raw values
    before a :class:`GaussianTwrc` is constructed.
    """
    for name in ("p1", "p2", "pr"):
        v = getattr(channel, name)
        if not isinstance(v, numbers.Real) or not math.isfinite(v):
            return f"power must be finite: {name}={v!r}"
        if v < 0:
            return f"power must be nonnegative: {name}={v!r}"
    for name in ("n1", "n2", "nr"):
        v = getattr(channel, name)
        if not isinstance(v, numbers.Real) or not math.isfinite(v):
            return f"noise variance must be finite: {name}={v!r}"
        if v <= 0:
            return f"noise variance must be positive: {name}={v!r}"
    return None


@dataclass(frozen=True)
class SplitParams:
    """Power-split fractions.

    ``alpha`` and ``beta`` are the shares of user 1 and user 2 power put on
    the layer the relay decodes; ``gamma`` is the share of relay power on its
    Gaussian (decode-forward) codeword.
    """

    alpha: float = 0.0
    beta: float = 0.0
    gamma: float = 0.0

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "gamma"):
            v = getattr(self, name)
            if not (isinstance(v, numbers.Real) and 0.0 <= v <= 1.0):
                raise ChannelError(f"{name} must lie in [0, 1], got {v!r}")
