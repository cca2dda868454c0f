"""Command-line front end.

Subcommands ``region``, ``point``, ``check-improvement`` and ``dm`` emit plot
data (CSV or JSON) for rate regions; rendering is left to other tools.

Exit codes: 0 success, 2 argument or input error, 3 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

import numpy as np

from . import __version__
from .core import ChannelError, GaussianTwrc, SplitParams, capacity
from .discrete import ChannelFileError, DomainError, ResourceError, exhaustive_search, load_channel
from .geometry import DEFAULT_RESOLUTION
from .presets import PRESETS
from .schemes import SCHEME_PARAMS, SCHEMES, evaluate, i_values, improvement_witnesses
from .sweep import DEFAULT_GRID, region_sweep

EXIT_ARGS = 2
EXIT_RESOURCE = 3

_CHANNEL_FIELDS = ("p1", "p2", "pr", "n1", "n2", "nr")


class CliError(Exception):
    def __init__(self, msg: str, code: int = EXIT_ARGS):
        super().__init__(msg)
        self.code = code


def _add_channel_flags(p: argparse.ArgumentParser) -> None:
    g = p.add_argument_group("channel")
    g.add_argument("--preset", choices=sorted(PRESETS), help="start from a published figure configuration")
    for name in _CHANNEL_FIELDS:
        g.add_argument(f"--{name}", type=float, help=f"{name} (linear unless --db)")
    g.add_argument("--db", action="store_true", help="interpret the explicit power/noise flags in dB")


def _add_output_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="write to this path instead of standard output")


def channel_from_args(args) -> GaussianTwrc:
    vals = dict(zip(_CHANNEL_FIELDS, PRESETS[args.preset].channel.as_tuple())) if args.preset else {}
    for name in _CHANNEL_FIELDS:
        v = getattr(args, name)
        if v is not None:
            vals[name] = 10.0 ** (v / 10.0) if args.db else v
    missing = [n for n in _CHANNEL_FIELDS if n not in vals]
    if missing:
        raise CliError("missing channel values: " + ", ".join("--" + m for m in missing))
    try:
        return GaussianTwrc(**vals)
    except ChannelError as exc:
        raise CliError(str(exc)) from None


def _channel_dict(ch: GaussianTwrc) -> dict:
    return dict(zip(_CHANNEL_FIELDS, ch.as_tuple()))


def _csv(points) -> str:
    lines = ["r1,r2"]
    lines += [f"{r1:.9g},{r2:.9g}" for r1, r2 in points]
    return "\n".join(lines) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def parse_quantization(text: str) -> float:
    try:
        q = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"quantization must look like 1/k, got {text!r}") from None
    if q <= 0 or q > 1 or q.numerator != 1:
        raise argparse.ArgumentTypeError(f"quantization must be 1/k for a positive integer k, got {text!r}")
    return float(q)


def cmd_region(args) -> int:
    ch = channel_from_args(args)
    region = region_sweep(ch, args.scheme, args.grid)
    boundary = region.compute_boundary(args.resolution)
    ok = np.isfinite(boundary.heights)
    pts = list(zip(boundary.grid[ok].tolist(), boundary.heights[ok].tolist()))
    if args.format == "csv":
        _emit(_csv(pts), args.out)
        return 0
    free = SCHEME_PARAMS[args.scheme]
    records = []
    for (r1, r2), k in zip(pts, boundary.source[ok].tolist()):
        rec = {"r1": r1, "r2": r2}
        rec.update({name: float(region.params[k][i]) for i, name in enumerate(("alpha", "beta", "gamma")) if name in free})
        records.append(rec)
    doc = {
        "channel": _channel_dict(ch),
        "scheme": args.scheme,
        "grid": args.grid,
        "resolution": args.resolution,
        "points": records,
    }
    _emit(_dumps(doc), args.out)
    return 0


def cmd_point(args) -> int:
    ch = channel_from_args(args)
    free = SCHEME_PARAMS[args.scheme]
    given = {k: getattr(args, k) for k in ("alpha", "beta", "gamma") if getattr(args, k) is not None}
    for k in given:
        if k not in free:
            print(f"warning: --{k} has no effect for scheme {args.scheme}; ignored", file=sys.stderr)
    try:
        sp = SplitParams(**{k: v for k, v in given.items() if k in free})
    except ChannelError as exc:
        raise CliError(str(exc)) from None
    cs = evaluate(ch, args.scheme, sp)
    doc = {"channel": _channel_dict(ch), "scheme": args.scheme, **cs.to_dict()}
    doc.update({k: getattr(sp, k) for k in free})
    if args.scheme == "combined":
        doc["i_values"] = i_values(ch, sp).to_dict()
    _emit(_dumps(doc), args.out)
    return 0


def cmd_check_improvement(args) -> int:
    ch = channel_from_args(args)
    noisy_relay, direct_beats_mac = improvement_witnesses(ch)
    direct = capacity(ch.p1 / ch.n2) + capacity(ch.p2 / ch.n1)
    mac = capacity((ch.p1 + ch.p2) / ch.nr)
    verdict = noisy_relay or direct_beats_mac
    if args.format == "json":
        doc = {
            "channel": _channel_dict(ch),
            "relay_noisier": {"nr": ch.nr, "min_n1_n2": min(ch.n1, ch.n2), "holds": noisy_relay},
            "direct_beats_relay_mac": {"direct_sum": direct, "relay_mac_sum": mac, "holds": direct_beats_mac},
            "partial_df_strictly_better": verdict,
        }
        _emit(_dumps(doc), args.out)
        return 0
    lines = [
        f"nr > min(n1, n2): {ch.nr:.9g} > {min(ch.n1, ch.n2):.9g} -> {str(noisy_relay).lower()}",
        f"C(p1/n2) + C(p2/n1) > C((p1+p2)/nr): {direct:.9g} > {mac:.9g} -> {str(direct_beats_mac).lower()}",
        f"partial DF strictly better than DF: {str(verdict).lower()}",
    ]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_dm(args) -> int:
    try:
        dm = load_channel(args.channel_file)
    except OSError as exc:
        raise CliError(f"cannot read {args.channel_file}: {exc.strerror}") from None
    except (ChannelFileError, DomainError) as exc:
        raise CliError(f"{args.channel_file}: {exc}") from None
    try:
        region = exhaustive_search(dm, args.quantization, args.u_size)
    except ResourceError as exc:
        raise CliError(str(exc), EXIT_RESOURCE) from None
    boundary = region.compute_boundary(args.resolution)
    ok = np.isfinite(boundary.heights)
    pts = list(zip(boundary.grid[ok].tolist(), boundary.heights[ok].tolist()))
    if args.format == "csv":
        _emit(_csv(pts), args.out)
    else:
        doc = {
            "channel_file": args.channel_file,
            "quantization": args.quantization,
            "u_size": args.u_size,
            "resolution": args.resolution,
            "points": [{"r1": a, "r2": b} for a, b in pts],
        }
        _emit(_dumps(doc), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="twrc", description="Rate regions of the full-duplex two-way relay channel.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("region", help="boundary of a scheme's region swept over its split parameters")
    _add_channel_flags(p)
    p.add_argument("--scheme", choices=SCHEMES, required=True)
    p.add_argument("--grid", type=int, default=DEFAULT_GRID, help="points per split parameter (>= 2)")
    p.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION, help="R1 samples on the boundary (>= 2)")
    _add_output_flags(p)
    p.set_defaults(func=cmd_region)

    p = sub.add_parser("point", help="constraint set of a scheme at fixed split parameters")
    _add_channel_flags(p)
    p.add_argument("--scheme", choices=SCHEMES, required=True)
    for name in ("alpha", "beta", "gamma"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_point)

    p = sub.add_parser("check-improvement", help="whether partial DF strictly improves on DF")
    _add_channel_flags(p)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_check_improvement)

    p = sub.add_parser("dm", help="partial-DF region of a discrete-memoryless channel by exhaustive search")
    p.add_argument("--channel-file", required=True)
    p.add_argument("--quantization", type=parse_quantization, default=0.5, help="probability step 1/k")
    p.add_argument("--u-size", type=int, default=2, help="auxiliary alphabet size")
    p.add_argument("--resolution", type=int, default=DEFAULT_RESOLUTION)
    _add_output_flags(p)
    p.set_defaults(func=cmd_dm)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("grid", "resolution", "u_size"):
        v = getattr(args, name, None)
        if v is not None and v < (1 if name == "u_size" else 2):
            parser.error(f"--{name.replace('_', '-')} is too small: {v}")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"twrc: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
