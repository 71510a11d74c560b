"""Command-line entry point.

``qcorr <subcommand> --config <path> [--out <path>] [--seed <u64>]
[--threads <n>]`` runs one experiment family and writes its CSV.  The extra
subcommand ``pair`` reads a two-qubit density matrix from standard input (16
whitespace-separated complex entries like ``0.25+0i``, row-major) and prints
all two-qubit measures.

Exit codes: 0 success, 1 configuration error, 2 capacity error.
"""
from __future__ import annotations

import argparse
import sys

import numpy as np

from .config import KINDS, load_config
from .errors import CapacityError, ConfigError
from .measures import concurrence, discord, mutual_information
from .runner import RUNNERS, format_value
from .states import DensityMatrix


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcorr", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)
    for kind in KINDS:
        p = sub.add_parser(kind, help=f"run the {kind} experiment")
        p.add_argument("--config", required=True, help="path to a key=value config file")
        p.add_argument("--out", default=None, help="output CSV path (overrides the config)")
        p.add_argument("--seed", type=int, default=None, help="master seed (overrides the config)")
        p.add_argument("--threads", type=int, default=1, help="worker processes for sample maps")
    p = sub.add_parser("pair", help="measures of a 4x4 density matrix read from stdin")
    p.add_argument("--measured-side", default="second", choices=("first", "second", "both"))
    return parser


def _parse_complex(token: str) -> complex:
    try:
        return complex(token.replace("i", "j"))
    except ValueError as exc:
        raise ConfigError(f"cannot parse complex entry {token!r}") from exc


def _run_pair(args) -> int:
    tokens = sys.stdin.read().split()
    if len(tokens) != 16:
        raise ConfigError(f"expected 16 matrix entries on stdin, got {len(tokens)}")
    entries = np.array([_parse_complex(token) for token in tokens]).reshape(4, 4)
    try:
        rho = DensityMatrix(4, entries)
    except ValueError as exc:
        raise ConfigError(f"input is not a valid density matrix: {exc}") from exc
    from .measures import DiscordSettings

    settings = DiscordSettings(measured=args.measured_side)
    print(f"discord = {format_value(discord(rho, settings))}")
    print(f"concurrence = {format_value(concurrence(rho))}")
    print(f"mutual_information = {format_value(mutual_information(rho))}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; those are configuration errors here.
        return 0 if exc.code in (0, None) else 1

    try:
        if args.subcommand == "pair":
            return _run_pair(args)
        config = load_config(args.config, kind=args.subcommand, seed_override=args.seed)
        path = RUNNERS[config.kind](config, out=args.out, threads=args.threads)
        print(path)
        return 0
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
