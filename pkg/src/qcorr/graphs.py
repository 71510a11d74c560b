"""Weighted graph states and their analytic subsystem reduced density matrices.

A weighted graph state applies a controlled-phase gate of angle phi_kl across
every edge of a graph whose vertices start in |+>.  Subsystem states are
available through three routes that must agree elementwise:

* brute force: build the statevector and partial-trace it,
* the general matrix-element product over external qubits
  (:func:`subsystem_rdm_general`), valid for arbitrary per-edge weights,
* closed-form two-qubit primitives for the equal-weight case
  (:func:`pair_rdm` and the fully connected specialisations).

The closed forms are written so that theta = pi (the stabilizer point) is an
exact, regular point: half-angle cosines are evaluated as sin((pi-theta)/2),
which vanishes identically there, and integer powers are carried in
log-magnitude/phase form so huge link counts neither overflow nor lose the
phase.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from .errors import CapacityError
from .states import DensityMatrix, PureState, QubitSubset, check_capacity

TWO_PI = 2.0 * math.pi
# |cos(theta/2)| below which the eta correction entries diverge.
ETA_SINGULAR_EPS = 1e-6

MAX_STATEVECTOR_QUBITS = 20
MAX_GENERAL_SUBSET = 12


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """Vertex count plus a symmetric edge-weight map (k, l) -> phi_kl.

    Weights are stored mod 2*pi under keys with k < l; an absent entry means
    no link (phi = 0).
    """

    n: int
    weights: Mapping[tuple[int, int], float]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        normalised: dict[tuple[int, int], float] = {}
        for (k, l), phi in self.weights.items():
            if k == l:
                raise ValueError("self-loops are not allowed")
            if not (0 <= k < self.n and 0 <= l < self.n):
                raise ValueError(f"edge ({k}, {l}) outside vertex range")
            key = (k, l) if k < l else (l, k)
            if key in normalised:
                raise ValueError(f"duplicate edge {key}")
            normalised[key] = float(phi) % TWO_PI
        object.__setattr__(self, "weights", MappingProxyType(normalised))

    @classmethod
    def from_edges(cls, n: int, edges) -> "WeightedGraph":
        return cls(n, {(k, l): phi for k, l, phi in edges})

    @classmethod
    def complete(cls, n: int, theta: float) -> "WeightedGraph":
        return cls(n, {(k, l): theta for k in range(n) for l in range(k + 1, n)})

    def edges(self) -> list[tuple[int, int, float]]:
        return [(k, l, phi) for (k, l), phi in sorted(self.weights.items())]

    def weight(self, k: int, l: int) -> float:
        key = (k, l) if k < l else (l, k)
        return self.weights.get(key, 0.0)


@dataclass(frozen=True)
class PairNeighborhood:
    """Connectivity of a two-qubit subsystem inside an equal-weight graph.

    ``n1``/``n2`` count external qubits linked only to the first/second
    subsystem qubit, ``m`` counts external qubits linked to both, and
    ``direct`` records whether the pair shares a direct link (which, in the
    equal-weight setting handled here, carries the same global angle as
    every other link).
    """

    n1: int
    n2: int
    m: int
    direct: bool = False

    def __post_init__(self):
        if self.n1 < 0 or self.n2 < 0 or self.m < 0:
            raise ValueError("link counts must be nonnegative")


@dataclass(frozen=True)
class LatticeCase:
    """A lattice name plus the pair-connectivity case label of its catalog."""

    lattice: str
    label: str

    def __post_init__(self):
        if self.lattice not in ("square", "hexagonal", "triangular"):
            raise ValueError(f"unknown lattice {self.lattice!r}")
        if self.label not in ("A", "B", "C"):
            raise ValueError(f"unknown case label {self.label!r}")
        if self.lattice == "hexagonal" and self.label == "C":
            raise ValueError("the hexagonal lattice admits only cases A and B")


_LATTICE_CATALOG = {
    ("square", "A"): PairNeighborhood(3, 3, 0, direct=True),
    ("square", "B"): PairNeighborhood(3, 3, 1),
    ("square", "C"): PairNeighborhood(2, 2, 2),
    ("hexagonal", "A"): PairNeighborhood(2, 2, 0, direct=True),
    ("hexagonal", "B"): PairNeighborhood(2, 2, 1),
    ("triangular", "A"): PairNeighborhood(3, 3, 2, direct=True),
    ("triangular", "B"): PairNeighborhood(4, 4, 1),
    ("triangular", "C"): PairNeighborhood(4, 4, 2),
}


def lattice_neighborhood(lc: LatticeCase) -> PairNeighborhood:
    """Pair-connectivity descriptor for a catalogued lattice case."""
    return _LATTICE_CATALOG[(lc.lattice, lc.label)]


def half_angle_cos(theta: float) -> float:
    """cos(theta/2) evaluated as sin((pi - theta)/2) so theta = pi gives exactly 0."""
    return math.sin((math.pi - theta) / 2.0)


def phase_cos_power(angle: float, cosine: float, n: int) -> complex:
    """(e^{i*angle} * cosine)^n for integer n >= 0, stable for huge n.

    The magnitude is carried as exp(n * log|cosine|) and the sign of the
    cosine is folded into the phase, so n up to 10**6 neither overflows nor
    drops the phase; 0^0 is 1 by convention.
    """
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    if n == 0:
        return 1.0 + 0.0j
    if cosine == 0.0:
        return 0.0 + 0.0j
    magnitude = math.exp(n * math.log(abs(cosine)))
    if magnitude == 0.0:
        return 0.0 + 0.0j
    total_angle = n * (angle + (math.pi if cosine < 0.0 else 0.0))
    return magnitude * complex(math.cos(total_angle), math.sin(total_angle))


def build_graph_state(g: WeightedGraph) -> PureState:
    """Statevector of the weighted graph state: C_phi on every edge of |+>^n."""
    check_capacity(g.n, MAX_STATEVECTOR_QUBITS, "build_graph_state")
    amps = np.full(2**g.n, 2.0 ** (-g.n / 2.0), dtype=np.complex128).reshape((2,) * g.n)
    for k, l, phi in g.edges():
        sel: list[object] = [slice(None)] * g.n
        sel[k] = 1
        sel[l] = 1
        amps[tuple(sel)] *= np.exp(1j * phi)
    return PureState(g.n, amps.reshape(-1))


def single_qubit_rdm(n: int, theta: float) -> DensityMatrix:
    """Reduced state of one graph-state qubit with n equal-weight external links.

    The diagonal is 1/2 and the coherence magnitude is cos^n(theta/2); the
    (1, 0) element carries the phase e^{i n theta/2} (so the (0, 1) element
    is its conjugate, matching the statevector partial trace for C_phi =
    diag(1, 1, 1, e^{i phi})).
    """
    if n < 0:
        raise ValueError("link count must be nonnegative")
    z = phase_cos_power(theta / 2.0, half_angle_cos(theta), n)
    return DensityMatrix(2, 0.5 * np.array([[1.0, z.conjugate()], [z, 1.0]]))


def eta_correction(m: int, theta: float) -> np.ndarray:
    """Elementwise correction for m external qubits linked to both pair members.

    All entries are 1 except the anti-diagonal corners
    P_m = [cos(theta) / cos^2(theta/2)]^m and the inner swap entries
    Q_m = cos^{-2m}(theta/2).  Diverges as theta -> pi; callers needing that
    regime must use the fused form in :func:`pair_rdm`.
    """
    if m < 0:
        raise ValueError("shared-link count must be nonnegative")
    c = half_angle_cos(theta)
    if abs(c) <= ETA_SINGULAR_EPS:
        raise ValueError(
            "eta correction is singular near theta = pi; use the fused pair_rdm form"
        )
    p = (math.cos(theta) / c**2) ** m
    q = c ** (-2 * m)
    eta = np.ones((4, 4))
    eta[0, 3] = eta[3, 0] = p
    eta[1, 2] = eta[2, 1] = q
    return eta


def _conjugate_by_direct_link(mat: np.ndarray, theta: float) -> np.ndarray:
    phase = np.exp(1j * theta)
    out = mat.copy()
    out[3, :] *= phase
    out[:, 3] *= np.conj(phase)
    return out


def pair_rdm(nb: PairNeighborhood, theta: float) -> DensityMatrix:
    """Two-qubit reduced state of an equal-weight graph via the fused closed form.

    With a = e^{i theta/2} cos(theta/2) and A = e^{i theta} cos(theta), the
    matrix before the direct-link conjugation has diagonal 1/4 and lower
    entries (1,0) = a^{n2+m}/4, (2,0) = a^{n1+m}/4,
    (3,0) = a^{n1+n2} A^m / 4, (2,1) = a^{n1} conj(a)^{n2} / 4,
    (3,1) = a^{n1+m}/4, (3,2) = a^{n2+m}/4 (upper = conjugates).  This is
    algebraically identical to the Hadamard composition
    (rho_1^{n1+m} x rho_1^{n2+m}) * eta_2^m, since a^{2m} P_m = A^m and
    |a|^{2m} Q_m = 1, but stays finite at theta = pi where P_m and Q_m
    individually diverge.
    """
    c_half = half_angle_cos(theta)
    c_full = math.cos(theta)

    def a_pow(n: int) -> complex:
        return phase_cos_power(theta / 2.0, c_half, n)

    n1, n2, m = nb.n1, nb.n2, nb.m
    mat = 0.25 * np.eye(4, dtype=np.complex128)
    mat[1, 0] = 0.25 * a_pow(n2 + m)
    mat[2, 0] = 0.25 * a_pow(n1 + m)
    mat[3, 0] = 0.25 * a_pow(n1 + n2) * phase_cos_power(theta, c_full, m)
    mat[2, 1] = 0.25 * a_pow(n1) * np.conj(a_pow(n2))
    mat[3, 1] = 0.25 * a_pow(n1 + m)
    mat[3, 2] = 0.25 * a_pow(n2 + m)
    lower = np.tril(mat, -1)
    mat = np.diag(np.diag(mat)) + lower + lower.conj().T
    if nb.direct:
        mat = _conjugate_by_direct_link(mat, theta)
    return DensityMatrix(4, mat)


def subsystem_rdm_general(g: WeightedGraph, a: QubitSubset) -> DensityMatrix:
    """Reduced state of an arbitrary subset via the external-qubit product formula.

    Each external qubit l with links into the subset contributes the
    elementwise factor 1 + exp[i * sum_k (m_k - n_k) phi_kl] to the matrix
    element <m|rho'|n>; the unitaries of the subset-internal links are then
    applied and the result is normalised to unit trace.  Arbitrary per-edge
    weights are supported.
    """
    if a.num_qubits != g.n:
        raise ValueError("subset refers to a register of different size")
    size = len(a)
    if size == 0:
        raise ValueError("subset must be nonempty")
    if size > MAX_GENERAL_SUBSET:
        raise CapacityError(
            f"subsystem_rdm_general supports subsets of at most {MAX_GENERAL_SUBSET} qubits"
        )
    members = a.indices
    position = {q: t for t, q in enumerate(members)}
    dim = 2**size
    idx = np.arange(dim)
    # bits[t, m] = bit of subset position t (position 0 = most significant).
    bits = (idx[None, :] >> (size - 1 - np.arange(size))[:, None]) & 1

    rho = np.ones((dim, dim), dtype=np.complex128)
    for l in a.complement():
        phis = np.array([g.weight(q, l) for q in members])
        if not np.any(phis):
            continue
        u = np.exp(1j * (phis @ bits))
        rho *= 1.0 + np.outer(u, u.conj())

    internal = np.zeros(dim)
    for k, l, phi in g.edges():
        if k in position and l in position:
            internal = internal + phi * (bits[position[k]] * bits[position[l]])
    d = np.exp(1j * internal)
    rho = d[:, None] * rho * d.conj()[None, :]
    rho /= np.real(np.trace(rho))
    return DensityMatrix(dim, rho)


def fully_connected_pair_rdm(n_total: int, theta: float, include_direct: bool = True) -> DensityMatrix:
    """Closed-form two-qubit state of the N-qubit equal-weight complete graph.

    The pair sees N - 2 shared external qubits and no exclusive ones, so the
    coherences are A(theta/2)^{N-2} and A(theta)^{N-2}; the direct link adds
    the usual conjugation.  Stable for N up to 10**6.
    """
    if n_total < 2:
        raise ValueError("a fully connected pair needs at least two qubits")
    return pair_rdm(PairNeighborhood(0, 0, n_total - 2, direct=include_direct), theta)


def fully_connected_single_rdm(n_total: int, theta: float) -> DensityMatrix:
    """Single-qubit reduced state of the N-qubit complete graph (n = N - 1 links)."""
    if n_total < 1:
        raise ValueError("need at least one qubit")
    return single_qubit_rdm(n_total - 1, theta)


def fully_connected_ggm(n_total: int, theta: float) -> float:
    """GGM of the equal-weight complete graph: 1/2 - |cos(theta/2)|^{N-1} / 2."""
    if n_total < 2:
        raise ValueError("GGM needs at least two qubits")
    c = abs(half_angle_cos(theta))
    power = 0.0 if c == 0.0 else math.exp((n_total - 1) * math.log(c)) if c < 1.0 else 1.0
    return 0.5 - 0.5 * power


def square_lattice_ggm(theta: float) -> float:
    """GGM of the equal-weight square-lattice cluster state (bulk, degree 4)."""
    return 0.5 - 0.5 * half_angle_cos(theta) ** 4


def embed_neighborhood(nb: PairNeighborhood, theta: float) -> WeightedGraph:
    """Smallest explicit graph realising a pair neighborhood with equal weights.

    Qubits 0 and 1 are the pair; n1 externals link only to 0, n2 only to 1,
    m to both.  Used to validate the analytic closed forms against brute
    force without simulating a full lattice.
    """
    edges: list[tuple[int, int, float]] = []
    next_vertex = 2
    for _ in range(nb.n1):
        edges.append((0, next_vertex, theta))
        next_vertex += 1
    for _ in range(nb.n2):
        edges.append((1, next_vertex, theta))
        next_vertex += 1
    for _ in range(nb.m):
        edges.append((0, next_vertex, theta))
        edges.append((1, next_vertex, theta))
        next_vertex += 1
    if nb.direct:
        edges.append((0, 1, theta))
    return WeightedGraph.from_edges(next_vertex, edges)
