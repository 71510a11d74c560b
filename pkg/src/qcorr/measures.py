"""Correlation quantifiers: GGM, quantum discord, concurrence, mutual information.

The GGM of a pure N-qubit state is one minus the largest squared Schmidt
coefficient over all bipartitions.  Discord of a two-qubit state is computed
by numerical minimisation of the measured conditional entropy over all
rank-1 projective measurements on one qubit: a deterministic coarse grid
followed by Nelder-Mead refinement from the best grid point.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize

from .errors import InternalConsistencyError
from .states import (
    DensityMatrix,
    PureState,
    QubitSubset,
    entropy_of_spectrum,
    reduced_gram_matrix,
    von_neumann_entropy,
)

# Probability below which a measurement outcome contributes nothing.
OUTCOME_EPS = 1e-14
# Eigenvalue gap under which two bipartitions are treated as tied; ties are
# broken toward the smaller bipartition size.
TIE_EPS = 1e-12

_SIGMA_YY = np.kron(
    np.array([[0.0, -1.0j], [1.0j, 0.0]]), np.array([[0.0, -1.0j], [1.0j, 0.0]])
)


@dataclass(frozen=True)
class GgmResult:
    """Outcome of a GGM bipartition scan.

    ``value = 1 - lambda_max_sq`` where ``lambda_max_sq`` is the largest
    eigenvalue found over all scanned reduced density matrices;
    ``per_k_max[k-1]`` holds the largest eigenvalue among bipartitions whose
    smaller side has k qubits.
    """

    value: float
    lambda_max_sq: float
    argmax_bipartition: QubitSubset
    per_k_max: np.ndarray

    def __post_init__(self):
        if abs(self.value - (1.0 - self.lambda_max_sq)) > 1e-12:
            raise ValueError("value and lambda_max_sq are inconsistent")
        if abs(self.lambda_max_sq - float(np.max(self.per_k_max))) > 0.0:
            raise ValueError("lambda_max_sq must equal the maximum of per_k_max")


@dataclass(frozen=True)
class MeasurementBasis:
    """Bloch angles of the projector pair used to measure one qubit.

    The measured basis is {|v>, |v_perp>} with
    |v> = cos(alpha/2)|0> + e^{i beta} sin(alpha/2)|1>.
    """

    alpha: float
    beta: float

    def __post_init__(self):
        if not (0.0 <= self.alpha <= math.pi):
            raise ValueError("alpha must lie in [0, pi]")
        if not (0.0 <= self.beta < 2.0 * math.pi):
            raise ValueError("beta must lie in [0, 2*pi)")


@dataclass(frozen=True)
class DiscordSettings:
    """Grid resolution and refinement control for the discord minimisation."""

    n_alpha: int = 64
    n_beta: int = 128
    tolerance: float = 1e-8
    measured: str = "second"  # "first" | "second" | "both"

    def __post_init__(self):
        if self.n_alpha < 8 or self.n_beta < 8:
            raise ValueError("grid resolution must be at least 8 points per angle")
        if self.tolerance <= 0.0:
            raise ValueError("tolerance must be positive")
        if self.measured not in ("first", "second", "both"):
            raise ValueError("measured side must be 'first', 'second' or 'both'")


def _require_two_qubits(rho: DensityMatrix) -> np.ndarray:
    if rho.dim != 4:
        raise ValueError(f"expected a two-qubit (4x4) density matrix, got dim {rho.dim}")
    return rho.entries


def _basis_vectors(alpha, beta) -> tuple[np.ndarray, np.ndarray]:
    """Projector axis |v> and its orthogonal complement, broadcastable."""
    alpha = np.asarray(alpha, dtype=float)
    beta = np.asarray(beta, dtype=float)
    c, s = np.cos(alpha / 2.0), np.sin(alpha / 2.0)
    phase = np.exp(1j * beta)
    v = np.stack([c + 0j, phase * s], axis=-1)
    v_perp = np.stack([-np.conj(phase) * s, c + 0j], axis=-1)
    return v, v_perp


def _eig2x2(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Analytic eigenvalues of stacked 2x2 Hermitian matrices (..., 2, 2)."""
    a = np.real(m[..., 0, 0])
    b = np.real(m[..., 1, 1])
    half_sum = 0.5 * (a + b)
    radius = np.hypot(0.5 * (a - b), np.abs(m[..., 0, 1]))
    return half_sum + radius, half_sum - radius


def _xlog2x(p: np.ndarray) -> np.ndarray:
    p = np.clip(p, 0.0, 1.0)
    return np.where(p > 0.0, p * np.log2(np.where(p > 0.0, p, 1.0)), 0.0)


def _conditional_entropies(tensor: np.ndarray, v: np.ndarray, v_perp: np.ndarray, measured: str) -> np.ndarray:
    """Sum_i p_i S(rho_{unmeasured|i}) for one or many measurement axes.

    ``tensor`` is the two-qubit state reshaped to (2, 2, 2, 2) with row index
    (a, b) and column index (a', b'); ``v``/``v_perp`` have shape (..., 2).
    """
    if measured == "second":
        spec = "...b,abcd,...d->...ac"
    elif measured == "first":
        spec = "...a,abcd,...c->...bd"
    else:
        raise ValueError("measured side must be 'first' or 'second'")
    total = np.zeros(v.shape[:-1], dtype=float)
    for axis in (v, v_perp):
        cond = np.einsum(spec, axis.conj(), tensor, axis)
        p = np.real(cond[..., 0, 0] + cond[..., 1, 1])
        lam_hi, lam_lo = _eig2x2(cond)
        safe_p = np.where(p > OUTCOME_EPS, p, 1.0)
        entropy = -(_xlog2x(lam_hi / safe_p) + _xlog2x(lam_lo / safe_p))
        total = total + np.where(p > OUTCOME_EPS, p * entropy, 0.0)
    return total


def conditional_entropy(rho2: DensityMatrix, basis: MeasurementBasis, measured: str = "second") -> float:
    """Average post-measurement entropy of the unmeasured qubit, in bits."""
    mat = _require_two_qubits(rho2)
    v, v_perp = _basis_vectors(basis.alpha, basis.beta)
    tensor = mat.reshape(2, 2, 2, 2)
    return float(_conditional_entropies(tensor, v, v_perp, measured))


def _marginal_entropies(mat: np.ndarray) -> tuple[float, float]:
    tensor = mat.reshape(2, 2, 2, 2)
    first = np.einsum("abcb->ac", tensor)
    second = np.einsum("abad->bd", tensor)
    return (
        entropy_of_spectrum(np.linalg.eigvalsh(first)),
        entropy_of_spectrum(np.linalg.eigvalsh(second)),
    )


def minimize_conditional_entropy(rho2: DensityMatrix, settings: DiscordSettings, measured: str) -> float:
    """Deterministic grid seeding plus local simplex refinement."""
    mat = _require_two_qubits(rho2)
    tensor = mat.reshape(2, 2, 2, 2)

    alphas = np.linspace(0.0, math.pi, settings.n_alpha)
    betas = np.linspace(0.0, 2.0 * math.pi, settings.n_beta, endpoint=False)
    grid_a, grid_b = np.meshgrid(alphas, betas, indexing="ij")
    v, v_perp = _basis_vectors(grid_a.ravel(), grid_b.ravel())
    values = _conditional_entropies(tensor, v, v_perp, measured)
    best = int(np.argmin(values))
    best_value = float(values[best])

    def objective(x: np.ndarray) -> float:
        v1, v2 = _basis_vectors(x[0], x[1])
        return float(_conditional_entropies(tensor, v1, v2, measured))

    start = np.array([grid_a.ravel()[best], grid_b.ravel()[best]])
    result = minimize(
        objective,
        start,
        method="Nelder-Mead",
        options={"xatol": 1e-7, "fatol": settings.tolerance, "maxiter": 400},
    )
    return min(best_value, float(result.fun))


def discord(rho2: DensityMatrix, settings: DiscordSettings | None = None) -> float:
    """Quantum discord of a two-qubit state, in bits.

    D = S(rho_measured) - S(rho_AB) + min over projective measurements of the
    conditional entropy of the unmeasured qubit.  With ``measured='both'``
    the minimum of the two one-sided values is returned.
    """
    settings = settings or DiscordSettings()
    mat = _require_two_qubits(rho2)
    joint_entropy = entropy_of_spectrum(np.linalg.eigvalsh(mat))
    s_first, s_second = _marginal_entropies(mat)
    sides = ("first", "second") if settings.measured == "both" else (settings.measured,)

    best = math.inf
    for side in sides:
        measured_entropy = s_first if side == "first" else s_second
        min_ce = minimize_conditional_entropy(rho2, settings, side)
        best = min(best, measured_entropy - joint_entropy + min_ce)

    if best < -1e-6:
        raise InternalConsistencyError(f"discord evaluated to {best:.3e} < -1e-6")
    return 0.0 if best < 0.0 else float(best)


def concurrence(rho2: DensityMatrix) -> float:
    """Wootters concurrence from the spin-flipped spectrum.

    C = max(0, sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4)) with l_i the
    descending eigenvalues of rho (sy x sy) rho* (sy x sy); conjugation is
    taken in the computational basis.  The sqrt(l_i) are evaluated as the
    singular values of sqrt(rho) (sy x sy) conj(sqrt(rho)), which shares the
    nonzero spectrum with the product above but avoids squaring the
    conditioning near zero eigenvalues.
    """
    mat = _require_two_qubits(rho2)
    evals, evecs = np.linalg.eigh(mat)
    root = (evecs * np.sqrt(np.maximum(evals, 0.0))) @ evecs.conj().T
    singular = np.linalg.svd(root @ _SIGMA_YY @ root.conj(), compute_uv=False)
    return float(max(0.0, singular[0] - singular[1] - singular[2] - singular[3]))


def mutual_information(rho2: DensityMatrix) -> float:
    """I(A:B) = S(A) + S(B) - S(AB), in bits."""
    mat = _require_two_qubits(rho2)
    s_first, s_second = _marginal_entropies(mat)
    joint = entropy_of_spectrum(np.linalg.eigvalsh(mat))
    return s_first + s_second - joint


def _bipartitions(num_qubits: int, k: int):
    """Smaller sides of all bipartitions of size k, without double counting."""
    if 2 * k == num_qubits:
        for rest in itertools.combinations(range(1, num_qubits), k - 1):
            yield (0,) + rest
    else:
        yield from itertools.combinations(range(num_qubits), k)


def ggm(state: PureState, assume_symmetric: bool = False) -> GgmResult:
    """Generalised geometric measure via an exhaustive bipartition scan.

    Scans every bipartition with smaller side k = 1 .. floor(N/2) (for
    k = N/2 only subsets containing qubit 0, avoiding double counting),
    takes the largest reduced-state eigenvalue and returns 1 minus it.

    ``assume_symmetric`` restricts the scan to the single representative
    subset {0, .., k-1} per size, valid for permutation-invariant states.
    """
    n = state.num_qubits
    if n < 2:
        raise ValueError("GGM requires at least two qubits")
    amps = state.amplitudes

    per_k_max = np.zeros(n // 2)
    champions: list[tuple[int, ...]] = []
    for k in range(1, n // 2 + 1):
        subsets = [tuple(range(k))] if assume_symmetric else _bipartitions(n, k)
        tops = [
            (float(np.linalg.eigvalsh(reduced_gram_matrix(amps, n, subset))[-1]), subset)
            for subset in subsets
        ]
        k_max = max(val for val, _ in tops)
        per_k_max[k - 1] = k_max
        champions.append(next(s for val, s in tops if val >= k_max - TIE_EPS))

    # Rounding can push a product state's top eigenvalue past 1 by ~1e-16.
    per_k_max = np.minimum(per_k_max, 1.0)
    lambda_max_sq = float(np.max(per_k_max))
    argmax_k = next(
        k for k in range(1, n // 2 + 1) if per_k_max[k - 1] >= lambda_max_sq - TIE_EPS
    )
    argmax_subset = champions[argmax_k - 1]
    return GgmResult(
        value=1.0 - lambda_max_sq,
        lambda_max_sq=lambda_max_sq,
        argmax_bipartition=QubitSubset(argmax_subset, n),
        per_k_max=per_k_max,
    )
