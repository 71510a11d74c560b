"""Experiment orchestration: sweep execution and deterministic CSV output.

Each runner writes one CSV with a '#'-prefixed metadata preamble (tool
version, RNG algorithm, resolved seed, config echo), a fixed header row and
rows whose floating-point fields carry 12 significant digits.  Given the
same config and seed the output is byte-identical, independent of the
worker-process count: per-sample randomness comes from (seed, sample index)
Philox streams and samples are collected in order.
"""
from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .config import SweepConfig
from .errors import CapacityError, ConfigError
from .graphs import (
    build_graph_state,
    fully_connected_ggm,
    fully_connected_pair_rdm,
    lattice_neighborhood,
    pair_rdm,
    square_lattice_ggm,
    subsystem_rdm_general,
)
from .kicked_top import trajectory
from .measures import DiscordSettings, concurrence, discord, ggm, mutual_information
from .sampling import (
    RNG_ALGORITHM,
    SeededRng,
    haar_random_pure,
    pair_statistics,
    random_weighted_complete_graph,
)
from .states import QubitSubset, partial_trace_pure

MAX_KICKED_TOP_QUBITS = 14
MAX_RANDOM_WEIGHTED_QUBITS = 12

COLUMNS = (
    "kind",
    "n",
    "theta",
    "case",
    "sample",
    "step",
    "ggm",
    "discord",
    "concurrence",
    "mutual_information",
    "lambda_max_sq",
    "argmax_k",
    "avg_discord",
    "max_discord",
    "avg_concurrence",
    "max_concurrence",
    "ggm_smooth",
    "discord_smooth",
    "concurrence_smooth",
)


@dataclass(frozen=True)
class ExperimentRecord:
    """One CSV row; fields that do not apply to an experiment stay None."""

    kind: str
    n: int | None = None
    theta: float | None = None
    case: str | None = None
    sample: int | None = None
    step: int | None = None
    ggm: float | None = None
    discord: float | None = None
    concurrence: float | None = None
    mutual_information: float | None = None
    lambda_max_sq: float | None = None
    argmax_k: int | None = None
    avg_discord: float | None = None
    max_discord: float | None = None
    avg_concurrence: float | None = None
    max_concurrence: float | None = None
    ggm_smooth: float | None = None
    discord_smooth: float | None = None
    concurrence_smooth: float | None = None


def format_value(value) -> str:
    """CSV field formatting: 12 significant digits, '' for absent values."""
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    x = float(value)
    if not math.isfinite(x):
        raise ValueError("output fields must be finite")
    if x == 0.0:
        x = 0.0  # normalise -0.0
    return format(x, ".12g")


def _record_row(record: ExperimentRecord) -> str:
    return ",".join(format_value(getattr(record, column)) for column in COLUMNS)


def _preamble(config: SweepConfig) -> list[str]:
    lines = [
        f"# qcorr {__version__}",
        f"# rng = {RNG_ALGORITHM}",
        f"# seed = {config.seed}",
    ]
    for key in sorted(config.raw):
        lines.append(f"# config.{key} = {config.raw[key]}")
    return lines


def write_csv(
    path: str | Path,
    config: SweepConfig,
    records: list[ExperimentRecord],
    footer: list[str] | None = None,
) -> Path:
    path = Path(path)
    lines = _preamble(config)
    lines.append(",".join(COLUMNS))
    lines.extend(_record_row(record) for record in records)
    lines.extend(footer or [])
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text("\n".join(lines) + "\n")
    except OSError as exc:
        raise ConfigError(f"cannot write output {path}: {exc}") from exc
    return path


def _resolve_out(config: SweepConfig, out: str | Path | None) -> Path:
    target = out or config.out
    if target is None:
        raise ConfigError("no output path: set 'out' in the config or pass --out")
    return Path(target)


def _ordered_map(worker, payloads: list, threads: int) -> list:
    if threads <= 1:
        return [worker(payload) for payload in payloads]
    chunk = max(1, len(payloads) // (threads * 8))
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(worker, payloads, chunksize=chunk))


def _random_states_worker(payload) -> ExperimentRecord:
    seed, index, num_qubits, settings = payload
    rng = SeededRng(seed=seed, stream=index).generator()
    state = haar_random_pure(num_qubits, rng)
    result = ggm(state)
    stats = pair_statistics(state, settings)
    return ExperimentRecord(
        kind="random-states",
        n=num_qubits,
        sample=index,
        ggm=result.value,
        lambda_max_sq=result.lambda_max_sq,
        argmax_k=len(result.argmax_bipartition),
        avg_discord=stats.avg_discord,
        max_discord=stats.max_discord,
        avg_concurrence=stats.avg_concurrence,
        max_concurrence=stats.max_concurrence,
    )


def run_random_states(config: SweepConfig, out: str | Path | None = None, threads: int = 1) -> Path:
    """Haar-random survey: one row per sample with GGM and pair statistics."""
    payloads = [
        (config.seed, index, config.num_qubits, config.discord_settings)
        for index in range(config.samples)
    ]
    records = _ordered_map(_random_states_worker, payloads, threads)
    return write_csv(_resolve_out(config, out), config, records)


def _random_weighted_worker(payload) -> tuple[ExperimentRecord, float, float]:
    seed, index, num_qubits, fixed_edge, settings = payload
    rng = SeededRng(seed=seed, stream=index).generator()
    graph = random_weighted_complete_graph(num_qubits, fixed_edge, rng)
    state = build_graph_state(graph)
    result = ggm(state)
    pair = QubitSubset((fixed_edge[0], fixed_edge[1]) if fixed_edge[0] < fixed_edge[1] else (fixed_edge[1], fixed_edge[0]), num_qubits)
    rho = subsystem_rdm_general(graph, pair)
    d = discord(rho, settings)
    record = ExperimentRecord(
        kind="random-weighted",
        n=num_qubits,
        theta=fixed_edge[2],
        sample=index,
        ggm=result.value,
        discord=d,
        concurrence=concurrence(rho),
        mutual_information=mutual_information(rho),
        lambda_max_sq=result.lambda_max_sq,
        argmax_k=len(result.argmax_bipartition),
    )
    return record, result.value, d


def run_random_weighted(config: SweepConfig, out: str | Path | None = None, threads: int = 1) -> Path:
    """Random-weight complete-graph survey with a Pearson summary footer."""
    if config.num_qubits > MAX_RANDOM_WEIGHTED_QUBITS:
        raise CapacityError(
            f"random-weighted supports at most {MAX_RANDOM_WEIGHTED_QUBITS} qubits"
        )
    payloads = [
        (config.seed, index, config.num_qubits, config.fixed_edge, config.discord_settings)
        for index in range(config.samples)
    ]
    results = _ordered_map(_random_weighted_worker, payloads, threads)
    records = [record for record, _, _ in results]
    ggms = np.array([g for _, g, _ in results])
    discords = np.array([d for _, _, d in results])
    if len(results) > 1 and float(np.std(ggms)) > 0.0 and float(np.std(discords)) > 0.0:
        pearson = float(np.corrcoef(discords, ggms)[0, 1])
    else:
        pearson = float("nan")
    footer = [f"# pearson_discord_ggm = {pearson:.12g}"]
    return write_csv(_resolve_out(config, out), config, records, footer=footer)


def run_lattice(config: SweepConfig, out: str | Path | None = None, threads: int = 1) -> Path:
    """Analytic lattice catalog sweep; GGM closed form is filled for square cases."""
    records = []
    for case in config.cases:
        neighborhood = lattice_neighborhood(case)
        for theta in config.thetas:
            rho = pair_rdm(neighborhood, theta)
            records.append(
                ExperimentRecord(
                    kind="lattice",
                    theta=theta,
                    case=f"{case.lattice}:{case.label}",
                    ggm=square_lattice_ggm(theta) if case.lattice == "square" else None,
                    discord=discord(rho, config.discord_settings),
                    concurrence=concurrence(rho),
                    mutual_information=mutual_information(rho),
                )
            )
    return write_csv(_resolve_out(config, out), config, records)


def run_fully_connected(config: SweepConfig, out: str | Path | None = None, threads: int = 1) -> Path:
    """Closed-form fully connected sweep, with and without the direct link."""
    records = []
    for n, theta in itertools.product(config.ns, config.thetas):
        value = fully_connected_ggm(n, theta)
        for case, include_direct in (("with-direct", True), ("no-direct", False)):
            rho = fully_connected_pair_rdm(n, theta, include_direct=include_direct)
            records.append(
                ExperimentRecord(
                    kind="fully-connected",
                    n=n,
                    theta=theta,
                    case=case,
                    ggm=value,
                    discord=discord(rho, config.discord_settings),
                    concurrence=concurrence(rho),
                    mutual_information=mutual_information(rho),
                )
            )
    return write_csv(_resolve_out(config, out), config, records)


def run_kicked_top(config: SweepConfig, out: str | Path | None = None, threads: int = 1) -> Path:
    """Kicked-top trajectory: one row per step, raw and smoothed measures."""
    params = config.kicked
    if params.num_qubits > MAX_KICKED_TOP_QUBITS:
        raise CapacityError(f"kicked-top supports at most {MAX_KICKED_TOP_QUBITS} qubits")
    records = [
        ExperimentRecord(
            kind="kicked-top",
            n=params.num_qubits,
            step=item.step,
            ggm=item.ggm,
            discord=item.discord,
            concurrence=item.concurrence,
            ggm_smooth=item.ggm_smooth,
            discord_smooth=item.discord_smooth,
            concurrence_smooth=item.concurrence_smooth,
        )
        for item in trajectory(params, config.discord_settings)
    ]
    return write_csv(_resolve_out(config, out), config, records)


RUNNERS = {
    "random-states": run_random_states,
    "kicked-top": run_kicked_top,
    "lattice": run_lattice,
    "fully-connected": run_fully_connected,
    "random-weighted": run_random_weighted,
}


def run(config: SweepConfig, out: str | Path | None = None, threads: int = 1) -> Path:
    return RUNNERS[config.kind](config, out=out, threads=threads)
