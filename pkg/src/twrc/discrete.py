"""Partial decode-forward region for discrete-memoryless two-way relay channels.

Joint pmfs are dense numpy arrays with one axis per variable. The full joint
used by the region evaluator has axes ``(U1, X1, U2, X2, Xr, Y1, Y2, Yr)``.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from math import comb

import numpy as np

from .geometry import RateRegion
from .oracle import RawBounds1, theorem1_pentagon
from .schemes import RateConstraintSet

NORM_TOL = 1e-9
MAX_ALPHABET = 4
DEFAULT_MAX_ENUM = 200_000

U1, X1, U2, X2, XR, Y1, Y2, YR = range(8)


class DomainError(ValueError):
    """A pmf or channel table is not a valid probability law."""


class ResourceError(RuntimeError):
    """The requested computation exceeds a configured size limit."""


class ChannelFileError(ValueError):
    def __init__(self, msg: str, lineno: int | None = None):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {msg}" if lineno is not None else msg)


def _check_pmf(p: np.ndarray, what: str) -> np.ndarray:
    p = np.asarray(p, dtype=float)
    if np.any(p < -NORM_TOL) or np.any(p > 1 + NORM_TOL) or not np.all(np.isfinite(p)):
        raise DomainError(f"{what} has entries outside [0, 1]")
    if abs(p.sum() - 1.0) > NORM_TOL:
        raise DomainError(f"{what} sums to {p.sum():.12g}, not 1")
    return np.clip(p, 0.0, 1.0)


def entropy(p: np.ndarray) -> float:
    p = p[p > 0]
    return float(-(p * np.log2(p)).sum())


def _marginal_entropy(joint: np.ndarray, keep) -> float:
    drop = tuple(ax for ax in range(joint.ndim) if ax not in keep)
    return entropy(joint.sum(axis=drop).ravel()) if drop else entropy(joint.ravel())


def mutual_information(joint, a, b, c=(), *, check: bool = True) -> float:
    """Conditional mutual information ``I(A; B | C)`` in bits.

    ``a``, ``b`` and ``c`` are disjoint collections of axes of ``joint``.
    Computed as ``H(A,C) + H(B,C) - H(A,B,C) - H(C)`` with ``0 log 0 = 0``.
    """
    joint = _check_pmf(joint, "joint pmf") if check else joint
    a, b, c = set(a), set(b), set(c)
    if a & b or a & c or b & c:
        raise ValueError("index sets must be disjoint")
    if not a or not b:
        raise ValueError("index sets A and B must be nonempty")
    val = (
        _marginal_entropy(joint, a | c)
        + _marginal_entropy(joint, b | c)
        - _marginal_entropy(joint, a | b | c)
        - _marginal_entropy(joint, c)
    )
    return max(val, 0.0)


@dataclass(frozen=True, eq=False)
class DmTwrc:
    """Transition law ``p(y1, y2, yr | x1, x2, xr)``.

    ``law`` has shape ``(|X1|, |X2|, |Xr|, |Y1|, |Y2|, |Yr|)``.
    """

    law: np.ndarray

    def __post_init__(self) -> None:
        law = np.asarray(self.law, dtype=float)
        if law.ndim != 6:
            raise DomainError("transition law needs six axes (x1, x2, xr, y1, y2, yr)")
        if np.any(law < -NORM_TOL) or np.any(law > 1 + NORM_TOL) or not np.all(np.isfinite(law)):
            raise DomainError("transition law has entries outside [0, 1]")
        rows = law.reshape(law.shape[0] * law.shape[1] * law.shape[2], -1).sum(axis=1)
        bad = np.flatnonzero(np.abs(rows - 1.0) > NORM_TOL)
        if bad.size:
            x = np.unravel_index(bad[0], law.shape[:3])
            raise DomainError(f"output pmf for inputs {tuple(int(v) for v in x)} sums to {rows[bad[0]]:.12g}")
        object.__setattr__(self, "law", np.clip(law, 0.0, 1.0))

    @property
    def input_sizes(self) -> tuple[int, int, int]:
        return self.law.shape[:3]

    @property
    def output_sizes(self) -> tuple[int, int, int]:
        return self.law.shape[3:]

    @classmethod
    def from_function(cls, sizes, fn) -> "DmTwrc":
        """Deterministic channel from ``fn(x1, x2, xr) -> (y1, y2, yr)``."""
        law = np.zeros(tuple(sizes))
        for x in itertools.product(*(range(n) for n in sizes[:3])):
            law[x + tuple(fn(*x))] = 1.0
        return cls(law)


@dataclass(frozen=True, eq=False)
class InputDistribution:
    """Factorized input law ``p(u1, x1) p(u2, x2) p(xr)``."""

    pu1x1: np.ndarray
    pu2x2: np.ndarray
    pxr: np.ndarray

    def __post_init__(self) -> None:
        for name, ndim in (("pu1x1", 2), ("pu2x2", 2), ("pxr", 1)):
            arr = _check_pmf(getattr(self, name), name)
            if arr.ndim != ndim:
                raise DomainError(f"{name} must have {ndim} axes")
            object.__setattr__(self, name, arr)

    @property
    def u_sizes(self) -> tuple[int, int]:
        return self.pu1x1.shape[0], self.pu2x2.shape[0]

    @classmethod
    def identity_aux(cls, px1, px2, pxr) -> "InputDistribution":
        """Auxiliaries equal to the inputs (``U1 = X1``, ``U2 = X2``)."""
        return cls(np.diag(np.asarray(px1, float)), np.diag(np.asarray(px2, float)), np.asarray(pxr, float))

    @classmethod
    def trivial_aux(cls, px1, px2, pxr) -> "InputDistribution":
        """Constant auxiliaries (single-symbol ``U1``, ``U2``)."""
        return cls(np.asarray(px1, float)[None, :], np.asarray(px2, float)[None, :], np.asarray(pxr, float))


def full_joint(dm: DmTwrc, dist: InputDistribution) -> np.ndarray:
    """Joint pmf on ``(U1, X1, U2, X2, Xr, Y1, Y2, Yr)``."""
    nx1, nx2, nxr = dm.input_sizes
    if dist.pu1x1.shape[1] != nx1 or dist.pu2x2.shape[1] != nx2 or dist.pxr.shape[0] != nxr:
        raise DomainError("input distribution alphabets do not match the channel")
    sizes = dist.pu1x1.shape + dist.pu2x2.shape + dist.pxr.shape + dm.output_sizes
    if any(n > MAX_ALPHABET for n in sizes):
        raise ResourceError(f"alphabet sizes {sizes} exceed the cap of {MAX_ALPHABET} symbols")
    inputs = np.einsum("ab,cd,e->abcde", dist.pu1x1, dist.pu2x2, dist.pxr)
    return np.einsum("abcde,bdefgh->abcdefgh", inputs, dm.law)


def theorem1_bounds(dm: DmTwrc, dist: InputDistribution) -> RawBounds1:
    """The seven mutual-information terms of the split system."""
    j = full_joint(dm, dist)

    def mi(a, b, c=()):
        return mutual_information(j, a, b, c, check=False)

    return RawBounds1(
        b_u1=mi([U1], [YR], [U2, XR]),
        b_u2=mi([U2], [YR], [U1, XR]),
        b_u12=mi([U1, U2], [YR], [XR]),
        b_x1_given=mi([X1], [Y2], [U1, X2, XR]),
        b_x1_total=mi([X1, XR], [Y2], [X2]),
        b_x2_given=mi([X2], [Y1], [U2, X1, XR]),
        b_x2_total=mi([X2, XR], [Y1], [X1]),
    )


def theorem1_region(dm: DmTwrc, dist: InputDistribution) -> RateConstraintSet:
    """Partial decode-forward pentagon for one input distribution."""
    return theorem1_pentagon(theorem1_bounds(dm, dist))


# --- exhaustive search ---------------------------------------------------

def compositions(total: int, parts: int):
    """All tuples of ``parts`` nonnegative ints summing to ``total``."""
    for cut in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for c in cut:
            out.append(c - prev - 1)
            prev = c
        out.append(total + parts - 2 - prev)
        yield tuple(out)


def simplex_grid(k: int, size: int) -> np.ndarray:
    """Pmfs on ``size`` symbols with every mass a multiple of ``1/k``."""
    return np.array(list(compositions(k, size)), dtype=float) / k


def enumeration_size(dm: DmTwrc, k: int, u_size: int) -> int:
    nx1, nx2, nxr = dm.input_sizes
    return comb(k + u_size * nx1 - 1, u_size * nx1 - 1) * comb(k + u_size * nx2 - 1, u_size * nx2 - 1) * comb(
        k + nxr - 1, nxr - 1
    )


def max_enum() -> int:
    return int(os.environ.get("TWRC_MAX_ENUM", DEFAULT_MAX_ENUM))


def _steps(quantization) -> int:
    k = 1.0 / float(quantization)
    if k < 1 or abs(k - round(k)) > 1e-9:
        raise ValueError(f"quantization must be 1/k for a positive integer k, got {quantization}")
    return int(round(k))


def exhaustive_search(dm: DmTwrc, quantization: float = 0.5, u_size: int = 2, limit: int | None = None) -> RateRegion:
    """Union of partial-DF pentagons over all quantized factorized input laws.

    Each of ``p(u1, x1)``, ``p(u2, x2)`` and ``p(xr)`` ranges over pmfs whose
    masses are multiples of ``quantization``. Halving the step keeps every
    previous grid point, so finer searches never lose region.
    """
    k = _steps(quantization)
    limit = max_enum() if limit is None else limit
    size = enumeration_size(dm, k, u_size)
    if size > limit:
        raise ResourceError(f"enumeration of {size} input distributions exceeds the cap of {limit}")
    nx1, nx2, nxr = dm.input_sizes
    g1 = simplex_grid(k, u_size * nx1).reshape(-1, u_size, nx1)
    g2 = simplex_grid(k, u_size * nx2).reshape(-1, u_size, nx2)
    gr = simplex_grid(k, nxr)
    sets, params = [], []
    seen = set()
    for i, p1 in enumerate(g1):
        for j, p2 in enumerate(g2):
            for m, pr in enumerate(gr):
                cs = theorem1_region(dm, InputDistribution(p1, p2, pr))
                key = (cs.r1_max, cs.r2_max, cs.sum_max)
                if key in seen:
                    continue
                seen.add(key)
                sets.append(cs)
                params.append((i, j, m))
    return RateRegion.from_sets(sets, params)


# --- channel file format -------------------------------------------------

def parse_channel_text(text: str) -> DmTwrc:
    """Parse a channel table.

    First non-comment line: the six alphabet sizes ``|X1| |X2| |Xr| |Y1| |Y2| |Yr|``.
    Then one line per input triple in lexicographic order (``xr`` fastest),
    each holding the ``|Y1| |Y2| |Yr|`` output probabilities, ``yr`` fastest.
    ``#`` starts a comment.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.replace(",", " ").split()))
    if not rows:
        raise ChannelFileError("empty channel file")
    lineno, head = rows[0]
    try:
        sizes = [int(v) for v in head]
    except ValueError:
        raise ChannelFileError("header must hold six integer alphabet sizes", lineno) from None
    if len(sizes) != 6 or any(n < 1 for n in sizes):
        raise ChannelFileError("header must hold six positive alphabet sizes", lineno)
    n_in = sizes[0] * sizes[1] * sizes[2]
    n_out = sizes[3] * sizes[4] * sizes[5]
    body = rows[1:]
    if len(body) != n_in:
        where = body[n_in][0] if len(body) > n_in else (body[-1][0] if body else lineno)
        raise ChannelFileError(f"expected {n_in} pmf rows, found {len(body)}", where)
    table = np.empty((n_in, n_out))
    for r, (lineno, fields) in enumerate(body):
        if len(fields) != n_out:
            raise ChannelFileError(f"expected {n_out} probabilities, found {len(fields)}", lineno)
        try:
            vals = [float(v) for v in fields]
        except ValueError as exc:
            raise ChannelFileError(str(exc), lineno) from None
        if any(not math.isfinite(v) or v < 0 or v > 1 for v in vals):
            raise ChannelFileError("probabilities must lie in [0, 1]", lineno)
        if abs(sum(vals) - 1.0) > NORM_TOL:
            raise ChannelFileError(f"row sums to {sum(vals):.12g}, not 1", lineno)
        table[r] = vals
    return DmTwrc(table.reshape(sizes))


def load_channel(path) -> DmTwrc:
    with open(path) as fh:
        return parse_channel_text(fh.read())


def format_channel(dm: DmTwrc) -> str:
    sizes = dm.input_sizes + dm.output_sizes
    lines = [" ".join(str(n) for n in sizes)]
    for row in dm.law.reshape(int(np.prod(dm.input_sizes)), -1):
        lines.append(" ".join(repr(float(v)) for v in row))
    return "\n".join(lines) + "\n"
