"""Floquet dynamics of the quantum kicked top in the symmetric subspace.

The collective spin j = N/2 evolves under one kick period as a J_y rotation
followed by a torsion about J_z (the kick), U = exp(-i k J_z^2 / (2j)) *
exp(-i p J_y); the application order can be flipped via the params since
conventions differ between studies.  States live in the (2j+1)-dimensional
|j, m> basis (m = j .. -j) and are expanded to permutation-symmetric N-qubit
states for the correlation measures.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import CapacityError
from .measures import DiscordSettings, concurrence, discord, ggm
from .states import PureState, QubitSubset, check_capacity, partial_trace_pure

MAX_EXPAND_QUBITS = 20


@dataclass(frozen=True, eq=False)
class SymmetricState:
    """Amplitudes over |j, m> with m = j, j-1, .., -j (index i -> m = j - i)."""

    j: float
    amplitudes: np.ndarray

    def __post_init__(self):
        two_j = int(round(2 * self.j))
        if abs(2 * self.j - two_j) > 1e-12 or two_j < 1:
            raise ValueError("j must be a positive half-integer")
        amps = np.array(self.amplitudes, dtype=np.complex128)
        if amps.shape != (two_j + 1,):
            raise ValueError(f"expected {two_j + 1} amplitudes, got {amps.shape}")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > 1e-12:
            raise ValueError("state is not normalised")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)

    @property
    def two_j(self) -> int:
        return int(round(2 * self.j))


@dataclass(frozen=True)
class KickedTopParams:
    """One kicked-top run: system size, drive strengths, start point, length."""

    num_qubits: int
    kick: float
    rotation: float
    theta0: float
    phi0: float
    steps: int
    smoothing_half_width: int = 4
    ordering: str = "rotate-kick"  # or "kick-rotate"

    def __post_init__(self):
        if self.num_qubits < 2:
            raise ValueError("need at least two qubits")
        if self.steps < 1:
            raise ValueError("need at least one step")
        if self.smoothing_half_width < 0:
            raise ValueError("smoothing half-width must be nonnegative")
        if self.ordering not in ("rotate-kick", "kick-rotate"):
            raise ValueError("ordering must be 'rotate-kick' or 'kick-rotate'")


@dataclass(frozen=True)
class StepRecord:
    step: int
    ggm: float
    discord: float
    concurrence: float
    ggm_smooth: float
    discord_smooth: float
    concurrence_smooth: float


def spin_coherent_state(j: float, theta0: float, phi0: float) -> SymmetricState:
    """SU(2) coherent state: |j, j> rotated to Bloch direction (theta0, phi0)."""
    two_j = int(round(2 * j))
    c, s = math.cos(theta0 / 2.0), math.sin(theta0 / 2.0)
    amps = np.array(
        [
            math.sqrt(math.comb(two_j, w)) * c ** (two_j - w) * s**w * np.exp(-1j * w * phi0)
            for w in range(two_j + 1)
        ],
        dtype=np.complex128,
    )
    amps /= np.linalg.norm(amps)
    return SymmetricState(j, amps)


@lru_cache(maxsize=32)
def _jy_matrix(two_j: int) -> np.ndarray:
    """J_y in the |j, m> basis with index i -> m = j - i."""
    j = two_j / 2.0
    dim = two_j + 1
    jy = np.zeros((dim, dim), dtype=np.complex128)
    for i in range(dim):
        m = j - i
        if i > 0:  # raising: m -> m + 1 lives at index i - 1
            jy[i - 1, i] += math.sqrt(j * (j + 1) - m * (m + 1)) / 2j
        if i < dim - 1:
            jy[i + 1, i] -= math.sqrt(j * (j + 1) - m * (m - 1)) / 2j
    jy.setflags(write=False)
    return jy


@lru_cache(maxsize=64)
def _rotation_matrix(two_j: int, angle: float) -> np.ndarray:
    """exp(-i * angle * J_y) via the eigendecomposition of the Hermitian J_y."""
    evals, evecs = np.linalg.eigh(_jy_matrix(two_j))
    rot = (evecs * np.exp(-1j * angle * evals)) @ evecs.conj().T
    rot.setflags(write=False)
    return rot


@lru_cache(maxsize=64)
def _kick_phases(two_j: int, kick: float) -> np.ndarray:
    j = two_j / 2.0
    m = j - np.arange(two_j + 1)
    phases = np.exp(-1j * kick * m**2 / two_j)
    phases.setflags(write=False)
    return phases


def floquet_step(state: SymmetricState, params: KickedTopParams) -> SymmetricState:
    """Advance one kick period; unitary, so the norm is preserved."""
    two_j = state.two_j
    rot = _rotation_matrix(two_j, params.rotation)
    kick = _kick_phases(two_j, params.kick)
    if params.ordering == "rotate-kick":
        amps = kick * (rot @ state.amplitudes)
    else:
        amps = rot @ (kick * state.amplitudes)
    return SymmetricState(state.j, amps / np.linalg.norm(amps))


@lru_cache(maxsize=32)
def _dicke_factors(num_qubits: int) -> tuple[np.ndarray, np.ndarray]:
    """Per-index Hamming weight and 1/sqrt(binomial) for the symmetric expansion."""
    weights = np.array([x.bit_count() for x in range(2**num_qubits)])
    inv_root = np.array([1.0 / math.sqrt(math.comb(num_qubits, w)) for w in range(num_qubits + 1)])
    weights.setflags(write=False)
    inv_root.setflags(write=False)
    return weights, inv_root


def dicke_expand(state: SymmetricState) -> PureState:
    """Map |j, m> components onto binomially weighted N-qubit Dicke states."""
    n = state.two_j
    check_capacity(n, MAX_EXPAND_QUBITS, "dicke_expand")
    weights, inv_root = _dicke_factors(n)
    per_weight = state.amplitudes * inv_root
    amps = per_weight[weights]
    return PureState(n, amps / np.linalg.norm(amps))


def moving_average(series: np.ndarray, half_width: int) -> np.ndarray:
    """Centered moving average, window truncated at the boundaries."""
    if half_width == 0:
        return np.asarray(series, dtype=float).copy()
    x = np.asarray(series, dtype=float)
    out = np.empty_like(x)
    for i in range(x.size):
        lo, hi = max(0, i - half_width), min(x.size, i + half_width + 1)
        out[i] = x[lo:hi].mean()
    return out


def trajectory(params: KickedTopParams, settings: DiscordSettings | None = None) -> list[StepRecord]:
    """Per-step GGM, pair-(0,1) discord and concurrence, raw and smoothed.

    Records cover steps 0 (the initial coherent state) through
    ``params.steps`` inclusive.  Any qubit pair gives the same reduced state
    by permutation symmetry of the expanded states.
    """
    n = params.num_qubits
    check_capacity(n, MAX_EXPAND_QUBITS, "trajectory")
    settings = settings or DiscordSettings()
    pair = QubitSubset((0, 1), n)

    state = spin_coherent_state(n / 2.0, params.theta0, params.phi0)
    raw_g, raw_d, raw_c = [], [], []
    for _ in range(params.steps + 1):
        expanded = dicke_expand(state)
        raw_g.append(ggm(expanded).value)
        pair_state = partial_trace_pure(expanded, pair)
        raw_d.append(discord(pair_state, settings))
        raw_c.append(concurrence(pair_state))
        state = floquet_step(state, params)

    h = params.smoothing_half_width
    smooth_g = moving_average(np.array(raw_g), h)
    smooth_d = moving_average(np.array(raw_d), h)
    smooth_c = moving_average(np.array(raw_c), h)
    return [
        StepRecord(t, raw_g[t], raw_d[t], raw_c[t], smooth_g[t], smooth_d[t], smooth_c[t])
        for t in range(params.steps + 1)
    ]
