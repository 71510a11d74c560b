"""Seeded random state and graph generation plus per-pair sweep statistics.

Every random draw goes through a counter-based Philox stream keyed by
(master seed, stream index), so per-sample results are identical no matter
how samples are distributed over processes.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError
from .graphs import TWO_PI, WeightedGraph
from .measures import DiscordSettings, concurrence, discord
from .states import DensityMatrix, PureState, QubitSubset, check_capacity, partial_trace_pure

MAX_SAMPLED_QUBITS = 12

RNG_ALGORITHM = "philox4x64"


@dataclass(frozen=True)
class SeededRng:
    """Deterministic RNG stream: (algorithm, seed, stream) fixes the sequence."""

    seed: int
    stream: int = 0
    algorithm: str = RNG_ALGORITHM

    def __post_init__(self):
        if not (0 <= self.seed < 2**64):
            raise ValueError("seed must be an unsigned 64-bit integer")
        if self.stream < 0:
            raise ValueError("stream index must be nonnegative")
        if self.algorithm != RNG_ALGORITHM:
            raise ValueError(f"unsupported rng algorithm {self.algorithm!r}")

    def generator(self) -> np.random.Generator:
        return np.random.Generator(np.random.Philox(key=self.seed + (self.stream << 64)))


@dataclass(frozen=True)
class PairStatistics:
    """Discord and concurrence for every unordered qubit pair, plus aggregates."""

    pair_discord: dict[tuple[int, int], float]
    pair_concurrence: dict[tuple[int, int], float]
    avg_discord: float
    max_discord: float
    avg_concurrence: float
    max_concurrence: float


def haar_random_pure(n_qubits: int, rng: np.random.Generator) -> PureState:
    """Haar-uniform pure state: normalised vector of standard complex Gaussians."""
    check_capacity(n_qubits, MAX_SAMPLED_QUBITS, "haar_random_pure")
    dim = 2**n_qubits
    z = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    return PureState(n_qubits, z / np.linalg.norm(z))


def random_weighted_complete_graph(
    n: int, fixed_edge: tuple[int, int, float] | None, rng: np.random.Generator
) -> WeightedGraph:
    """Complete graph with i.i.d. uniform [0, 2*pi) weights and one pinned edge.

    The draw order is the sorted edge list and the pinned edge still consumes
    a draw, so the remaining weights do not depend on which edge is pinned.
    """
    weights = {
        (k, l): float(rng.uniform(0.0, TWO_PI))
        for k, l in itertools.combinations(range(n), 2)
    }
    if fixed_edge is not None:
        k, l, theta = fixed_edge
        key = (k, l) if k < l else (l, k)
        if key not in weights:
            raise ValueError(f"fixed edge {key} is outside the graph")
        weights[key] = float(theta)
    return WeightedGraph(n, weights)


def pair_statistics(state: PureState, settings: DiscordSettings | None = None) -> PairStatistics:
    """Discord and concurrence of every two-qubit reduced state, aggregated."""
    n = state.num_qubits
    check_capacity(n, MAX_SAMPLED_QUBITS, "pair_statistics")
    if n < 2:
        raise ValueError("need at least two qubits")
    settings = settings or DiscordSettings()

    pair_discord: dict[tuple[int, int], float] = {}
    pair_concurrence: dict[tuple[int, int], float] = {}
    for i, j in itertools.combinations(range(n), 2):
        if n == 2:  # the pair is the whole register
            rho = DensityMatrix.from_pure(state)
        else:
            rho = partial_trace_pure(state, QubitSubset((i, j), n))
        pair_discord[(i, j)] = discord(rho, settings)
        pair_concurrence[(i, j)] = concurrence(rho)

    discords = np.array(list(pair_discord.values()))
    concurrences = np.array(list(pair_concurrence.values()))
    return PairStatistics(
        pair_discord=pair_discord,
        pair_concurrence=pair_concurrence,
        avg_discord=float(discords.mean()),
        max_discord=float(discords.max()),
        avg_concurrence=float(concurrences.mean()),
        max_concurrence=float(concurrences.max()),
    )
