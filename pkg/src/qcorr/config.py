"""Flat key=value experiment configuration.

One ``key = value`` pair per line, '#' starts a comment, lists are
comma-separated and angle ranges may be written ``start:stop:count``
(endpoints inclusive).  Unknown keys are rejected so typos fail loudly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .errors import ConfigError
from .graphs import LatticeCase
from .kicked_top import KickedTopParams
from .measures import DiscordSettings

KINDS = ("random-states", "kicked-top", "lattice", "fully-connected", "random-weighted")

_COMMON_KEYS = {"kind", "seed", "out", "n_alpha", "n_beta", "tolerance", "measured_side"}
_KIND_KEYS = {
    "random-states": {"num_qubits", "samples"},
    "kicked-top": {"num_qubits", "steps", "kick", "rotation", "theta0", "phi0", "half_width", "ordering"},
    "lattice": {"cases", "thetas"},
    "fully-connected": {"ns", "thetas"},
    "random-weighted": {"num_qubits", "samples", "fixed_edge"},
}


def parse_key_values(text: str) -> dict[str, str]:
    """Parse the flat key=value format into a string mapping."""
    mapping: dict[str, str] = {}
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw_line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        if not key or not value:
            raise ConfigError(f"line {lineno}: empty key or value")
        if key in mapping:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        mapping[key] = value
    return mapping


def _parse_int(raw: str, key: str) -> int:
    try:
        return int(raw)
    except ValueError as exc:
        raise ConfigError(f"{key}: expected an integer, got {raw!r}") from exc


def _parse_float(raw: str, key: str) -> float:
    try:
        value = float(raw)
    except ValueError as exc:
        raise ConfigError(f"{key}: expected a number, got {raw!r}") from exc
    if not math.isfinite(value):
        raise ConfigError(f"{key}: value must be finite")
    return value


def _parse_float_grid(raw: str, key: str) -> tuple[float, ...]:
    """Comma list of numbers, or an inclusive 'start:stop:count' range."""
    if ":" in raw:
        parts = raw.split(":")
        if len(parts) != 3:
            raise ConfigError(f"{key}: ranges must look like start:stop:count")
        start = _parse_float(parts[0], key)
        stop = _parse_float(parts[1], key)
        count = _parse_int(parts[2], key)
        if count < 1:
            raise ConfigError(f"{key}: range count must be at least 1")
        return tuple(float(x) for x in np.linspace(start, stop, count))
    values = tuple(_parse_float(part.strip(), key) for part in raw.split(",") if part.strip())
    if not values:
        raise ConfigError(f"{key}: list must not be empty")
    return values


def _parse_int_list(raw: str, key: str) -> tuple[int, ...]:
    values = tuple(_parse_int(part.strip(), key) for part in raw.split(",") if part.strip())
    if not values:
        raise ConfigError(f"{key}: list must not be empty")
    return values


def _parse_cases(raw: str) -> tuple[LatticeCase, ...]:
    cases = []
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" not in part:
            raise ConfigError(f"cases: expected lattice:label entries, got {part!r}")
        lattice, label = (p.strip() for p in part.split(":", 1))
        try:
            cases.append(LatticeCase(lattice, label))
        except ValueError as exc:
            raise ConfigError(f"cases: {exc}") from exc
    if not cases:
        raise ConfigError("cases: list must not be empty")
    return tuple(cases)


def _parse_fixed_edge(raw: str) -> tuple[int, int, float]:
    parts = [p.strip() for p in raw.split(",")]
    if len(parts) != 3:
        raise ConfigError("fixed_edge: expected 'k,l,theta'")
    k = _parse_int(parts[0], "fixed_edge")
    l = _parse_int(parts[1], "fixed_edge")
    theta = _parse_float(parts[2], "fixed_edge")
    if k == l:
        raise ConfigError("fixed_edge: endpoints must differ")
    return k, l, theta


@dataclass(frozen=True)
class SweepConfig:
    """Resolved experiment configuration for one runner invocation."""

    kind: str
    seed: int
    out: str | None
    discord_settings: DiscordSettings
    samples: int | None = None
    num_qubits: int | None = None
    ns: tuple[int, ...] = ()
    thetas: tuple[float, ...] = ()
    cases: tuple[LatticeCase, ...] = ()
    fixed_edge: tuple[int, int, float] | None = None
    kicked: KickedTopParams | None = None
    raw: Mapping[str, str] = None  # original key=value pairs, echoed into CSV output

    def __post_init__(self):
        object.__setattr__(self, "raw", MappingProxyType(dict(self.raw or {})))


def load_config(path: str | Path, kind: str | None = None, seed_override: int | None = None) -> SweepConfig:
    """Read and validate a config file; ``kind`` must match any in-file kind."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return config_from_mapping(parse_key_values(text), kind=kind, seed_override=seed_override)


def config_from_mapping(
    mapping: Mapping[str, str], kind: str | None = None, seed_override: int | None = None
) -> SweepConfig:
    mapping = dict(mapping)
    file_kind = mapping.get("kind")
    if file_kind is None and kind is None:
        raise ConfigError("experiment kind is not specified")
    if file_kind is not None and kind is not None and file_kind != kind:
        raise ConfigError(f"config kind {file_kind!r} does not match requested {kind!r}")
    resolved_kind = kind or file_kind
    if resolved_kind not in KINDS:
        raise ConfigError(f"unknown experiment kind {resolved_kind!r}")

    allowed = _COMMON_KEYS | _KIND_KEYS[resolved_kind]
    unknown = set(mapping) - allowed
    if unknown:
        raise ConfigError(f"unknown keys for kind {resolved_kind!r}: {sorted(unknown)}")

    seed = seed_override if seed_override is not None else _parse_int(mapping.get("seed", "0"), "seed")
    if not (0 <= seed < 2**64):
        raise ConfigError("seed must be an unsigned 64-bit integer")

    try:
        settings = DiscordSettings(
            n_alpha=_parse_int(mapping.get("n_alpha", "64"), "n_alpha"),
            n_beta=_parse_int(mapping.get("n_beta", "128"), "n_beta"),
            tolerance=_parse_float(mapping.get("tolerance", "1e-8"), "tolerance"),
            measured=mapping.get("measured_side", "second"),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc

    common = dict(
        kind=resolved_kind,
        seed=seed,
        out=mapping.get("out"),
        discord_settings=settings,
        raw={k: v for k, v in mapping.items() if k != "out"},
    )

    if resolved_kind == "random-states":
        samples = _parse_int(mapping.get("samples", ""), "samples") if "samples" in mapping else None
        if samples is None or samples < 1:
            raise ConfigError("samples: required, must be at least 1")
        return SweepConfig(
            samples=samples,
            num_qubits=_parse_int(mapping.get("num_qubits", "5"), "num_qubits"),
            **common,
        )

    if resolved_kind == "random-weighted":
        samples = _parse_int(mapping.get("samples", ""), "samples") if "samples" in mapping else None
        if samples is None or samples < 1:
            raise ConfigError("samples: required, must be at least 1")
        num_qubits = _parse_int(mapping.get("num_qubits", "10"), "num_qubits")
        fixed_edge = _parse_fixed_edge(mapping.get("fixed_edge", f"0,1,{math.pi!r}"))
        if not (0 <= fixed_edge[0] < num_qubits and 0 <= fixed_edge[1] < num_qubits):
            raise ConfigError("fixed_edge: endpoints outside the qubit range")
        return SweepConfig(samples=samples, num_qubits=num_qubits, fixed_edge=fixed_edge, **common)

    if resolved_kind == "lattice":
        if "cases" not in mapping or "thetas" not in mapping:
            raise ConfigError("lattice runs require 'cases' and 'thetas'")
        return SweepConfig(
            cases=_parse_cases(mapping["cases"]),
            thetas=_parse_float_grid(mapping["thetas"], "thetas"),
            **common,
        )

    if resolved_kind == "fully-connected":
        if "ns" not in mapping or "thetas" not in mapping:
            raise ConfigError("fully-connected runs require 'ns' and 'thetas'")
        ns = _parse_int_list(mapping["ns"], "ns")
        if any(n < 2 for n in ns):
            raise ConfigError("ns: every size must be at least 2")
        return SweepConfig(ns=ns, thetas=_parse_float_grid(mapping["thetas"], "thetas"), **common)

    # kicked-top
    required = ("num_qubits", "steps", "kick", "rotation", "theta0", "phi0")
    missing = [key for key in required if key not in mapping]
    if missing:
        raise ConfigError(f"kicked-top runs require {missing}")
    try:
        kicked = KickedTopParams(
            num_qubits=_parse_int(mapping["num_qubits"], "num_qubits"),
            kick=_parse_float(mapping["kick"], "kick"),
            rotation=_parse_float(mapping["rotation"], "rotation"),
            theta0=_parse_float(mapping["theta0"], "theta0"),
            phi0=_parse_float(mapping["phi0"], "phi0"),
            steps=_parse_int(mapping["steps"], "steps"),
            smoothing_half_width=_parse_int(mapping.get("half_width", "4"), "half_width"),
            ordering=mapping.get("ordering", "rotate-kick"),
        )
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    return SweepConfig(num_qubits=kicked.num_qubits, kicked=kicked, **common)
