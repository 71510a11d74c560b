"""Dense complex linear algebra and quantum-state primitives.

Conventions fixed here and inherited by every other module:

* Qubit 0 is the most significant bit of a computational-basis index, i.e.
  basis state ``|b0 b1 ... b_{N-1}>`` sits at index ``sum_q b_q * 2**(N-1-q)``.
* All entropies are in bits (base-2 logarithms).

Every operation is a pure function of its inputs; the domain types are
immutable after construction and safe to share between threads.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError

# Tolerances of the domain-type invariants.
NORM_ATOL = 1e-12
HERMITICITY_ATOL = 1e-12
TRACE_ATOL = 1e-10
EIGENVALUE_FLOOR = -1e-10


def _frozen_array(values, dtype) -> np.ndarray:
    arr = np.array(values, dtype=dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class QubitSubset:
    """A strictly increasing set of qubit indices within an N-qubit register."""

    indices: tuple[int, ...]
    num_qubits: int

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(int(i) for i in self.indices))
        n = self.num_qubits
        if n < 1:
            raise ValueError("parent register must hold at least one qubit")
        if any(i < 0 or i >= n for i in self.indices):
            raise ValueError(f"qubit indices must lie in [0, {n})")
        if any(b <= a for a, b in zip(self.indices, self.indices[1:])):
            raise ValueError("qubit indices must be strictly increasing")

    def __len__(self) -> int:
        return len(self.indices)

    def complement(self) -> tuple[int, ...]:
        members = set(self.indices)
        return tuple(i for i in range(self.num_qubits) if i not in members)


@dataclass(frozen=True, eq=False)
class PureState:
    """Unit-norm complex amplitude vector over ``num_qubits`` qubits."""

    num_qubits: int
    amplitudes: np.ndarray

    def __post_init__(self):
        if self.num_qubits < 1:
            raise ValueError("num_qubits must be positive")
        amps = _frozen_array(self.amplitudes, np.complex128)
        if amps.shape != (2**self.num_qubits,):
            raise ValueError(
                f"expected {2**self.num_qubits} amplitudes, got shape {amps.shape}"
            )
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > NORM_ATOL:
            raise ValueError(f"state is not normalised: |norm - 1| = {abs(norm - 1.0):.3e}")
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def plus(cls, num_qubits: int) -> "PureState":
        """|+>^n, the uniform superposition."""
        dim = 2**num_qubits
        return cls(num_qubits, np.full(dim, 1.0 / math.sqrt(dim), dtype=np.complex128))

    @classmethod
    def from_amplitudes(cls, amplitudes) -> "PureState":
        amps = np.asarray(amplitudes, dtype=np.complex128)
        n = int(round(math.log2(amps.size)))
        return cls(n, amps)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite operator."""

    dim: int
    entries: np.ndarray

    def __post_init__(self):
        mat = _frozen_array(self.entries, np.complex128)
        if mat.shape != (self.dim, self.dim):
            raise ValueError(f"expected shape ({self.dim}, {self.dim}), got {mat.shape}")
        herm_defect = float(np.max(np.abs(mat - mat.conj().T)))
        if herm_defect > HERMITICITY_ATOL:
            raise ValueError(f"matrix is not Hermitian: defect {herm_defect:.3e}")
        tr = complex(np.trace(mat))
        if abs(tr - 1.0) > TRACE_ATOL:
            raise ValueError(f"trace must be 1, got {tr}")
        if float(np.min(np.linalg.eigvalsh(mat))) < EIGENVALUE_FLOOR:
            raise ValueError("matrix has a negative eigenvalue beyond tolerance")
        object.__setattr__(self, "entries", mat)

    @classmethod
    def from_pure(cls, state: PureState) -> "DensityMatrix":
        psi = state.amplitudes
        return cls(psi.size, np.outer(psi, psi.conj()))

    @property
    def num_qubits(self) -> int:
        n = int(round(math.log2(self.dim)))
        if 2**n != self.dim:
            raise ValueError("dimension is not a power of two")
        return n


def controlled_phase(state: PureState, k: int, l: int, phi: float) -> PureState:
    """Apply the controlled-phase gate diag(1,1,1,e^{i phi}) to qubits (k, l).

    Amplitudes of basis states with bit k = 1 and bit l = 1 pick up the phase
    e^{i phi}; all others are unchanged.
    """
    n = state.num_qubits
    if k == l:
        raise ValueError("control and target must differ")
    if not (0 <= k < n and 0 <= l < n):
        raise ValueError(f"qubit indices must lie in [0, {n})")
    amps = state.amplitudes.copy().reshape((2,) * n)
    sel: list[object] = [slice(None)] * n
    sel[k] = 1
    sel[l] = 1
    amps[tuple(sel)] *= np.exp(1j * phi)
    return PureState(n, amps.reshape(-1))


def reduced_gram_matrix(amplitudes: np.ndarray, num_qubits: int, keep: tuple[int, ...]) -> np.ndarray:
    """Tr_B |psi><psi| as M M† with M the amplitude vector reshaped to keep x rest.

    Raw-array fast path shared by :func:`partial_trace_pure` and the GGM
    bipartition scan; the result is Hermitian PSD by construction.
    """
    rest = tuple(i for i in range(num_qubits) if i not in set(keep))
    tensor = amplitudes.reshape((2,) * num_qubits)
    m = tensor.transpose(keep + rest).reshape(2 ** len(keep), 2 ** len(rest))
    return m @ m.conj().T


def partial_trace_pure(state: PureState, keep: QubitSubset) -> DensityMatrix:
    """Reduced density matrix of ``keep`` for a pure global state."""
    if keep.num_qubits != state.num_qubits:
        raise ValueError("subset refers to a register of different size")
    if len(keep) == 0:
        raise ValueError("keep must be nonempty")
    if len(keep) == state.num_qubits:
        raise ValueError("keep must be a proper subset")
    gram = reduced_gram_matrix(state.amplitudes, state.num_qubits, keep.indices)
    return DensityMatrix(gram.shape[0], gram)


def partial_trace_mixed(rho: DensityMatrix, num_qubits: int, keep: QubitSubset) -> DensityMatrix:
    """Partial trace of a (possibly mixed) qubit density matrix."""
    if rho.dim != 2**num_qubits:
        raise ValueError(f"dimension {rho.dim} does not match {num_qubits} qubits")
    if keep.num_qubits != num_qubits:
        raise ValueError("subset refers to a register of different size")
    if len(keep) == 0:
        raise ValueError("keep must be nonempty")
    if len(keep) == num_qubits:
        raise ValueError("keep must be a proper subset")
    tensor = rho.entries.reshape((2,) * (2 * num_qubits))
    traced = sorted(keep.complement(), reverse=True)
    n_axes = num_qubits
    for q in traced:
        tensor = np.trace(tensor, axis1=q, axis2=q + n_axes)
        n_axes -= 1
    dim = 2 ** len(keep)
    return DensityMatrix(dim, tensor.reshape(dim, dim))


def hermitian_eigensystem(matrix) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (descending) and matching eigenvector columns of a Hermitian matrix.

    Accepts a :class:`DensityMatrix` or a raw square array; rejects inputs
    whose Hermiticity defect exceeds 1e-10.
    """
    mat = matrix.entries if isinstance(matrix, DensityMatrix) else np.asarray(matrix, dtype=np.complex128)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("expected a square matrix")
    if float(np.max(np.abs(mat - mat.conj().T))) > 1e-10:
        raise ValueError("matrix is not Hermitian within 1e-10")
    evals, evecs = np.linalg.eigh(mat)
    order = np.argsort(evals)[::-1]
    return evals[order], evecs[:, order]


def entropy_of_spectrum(eigenvalues: np.ndarray) -> float:
    """Shannon entropy in bits of a spectrum, with clamping to [0, 1]."""
    lam = np.clip(np.real(eigenvalues), 0.0, 1.0)
    positive = lam[lam > 0.0]
    return float(-np.sum(positive * np.log2(positive)))


def von_neumann_entropy(rho: DensityMatrix) -> float:
    """S(rho) = -Tr rho log2 rho, in bits."""
    return entropy_of_spectrum(np.linalg.eigvalsh(rho.entries))


def tensor_product(a: DensityMatrix, b: DensityMatrix) -> DensityMatrix:
    """Kronecker product of two density matrices."""
    return DensityMatrix(a.dim * b.dim, np.kron(a.entries, b.entries))


def check_capacity(num_qubits: int, limit: int, what: str) -> None:
    if num_qubits > limit:
        raise CapacityError(f"{what} supports at most {limit} qubits, got {num_qubits}")
