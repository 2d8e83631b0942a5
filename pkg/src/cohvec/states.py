"""Tensor-of-coherences state representation and state-level operations.

An n-qubit density operator rho is stored as the real vector of
expectation values

    c[m] = tr(rho Lambda_m),   Lambda_m = lambda_{j1} x ... x lambda_{jn},

indexed by multi-indexes m = j1...jn over digits {0,1,2,3}.  The linear
position of a multi-index is big-endian in qubit order (first qubit most
significant base-4 digit).  Unit trace pins the affine component
c[0...0] = (1/sqrt(2))^n; purity is the plain Euclidean norm squared.
Partial trace, partial transpose and tensor products act directly on the
component vector: tracing collapses slots to digit 0 with a sqrt(2)
rescaling per traced qubit, transposing a qubit flips the sign of every
component carrying digit 2 in that slot.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from . import eigen
from .pauli import SQRT2, lambda_matrix

HERMITICITY_TOL = 1e-12
AFFINE_TOL = 1e-12


def digits_of(index: int, n: int) -> str:
    """Multi-index digit string of a linear component position."""
    if not 0 <= index < 4**n:
        raise ValueError(f"linear index {index} out of range for n={n}")
    return "".join(str((index >> (2 * (n - 1 - k))) & 3) for k in range(n))


def index_of(digits: str) -> int:
    """Linear component position of a multi-index digit string."""
    validate_multi_index(digits)
    return int(digits, 4)


def validate_multi_index(digits: str, n: int | None = None) -> str:
    """Check a digit string over {0,1,2,3}; returns it unchanged."""
    if not digits or any(ch not in "0123" for ch in digits):
        raise ValueError(f"multi-index must be digits over 0..3, got {digits!r}")
    if n is not None and len(digits) != n:
        raise ValueError(f"multi-index {digits!r} has length {len(digits)}, expected {n}")
    return digits


def all_multi_indexes(n: int) -> Iterable[str]:
    """All 4^n digit strings in linear order."""
    for digs in itertools.product("0123", repeat=n):
        yield "".join(digs)


@lru_cache(maxsize=8)
def basis_matrices(n: int) -> tuple[np.ndarray, ...]:
    """All Lambda_m as dense 2^n x 2^n matrices, in linear multi-index order."""
    if not 1 <= n <= 6:
        raise ValueError(f"qubit count must be in 1..6, got {n}")
    single = [lambda_matrix(j) for j in range(4)]
    mats = []
    for digs in all_multi_indexes(n):
        M = np.array([[1.0 + 0j]])
        for ch in digs:
            M = np.kron(M, single[int(ch)])
        M.flags.writeable = False
        mats.append(M)
    return tuple(mats)


def basis_matrix(digits: str) -> np.ndarray:
    """Dense Lambda_m for one multi-index."""
    validate_multi_index(digits)
    return basis_matrices(len(digits))[int(digits, 4)]


@dataclass(frozen=True)
class CoherenceTensor:
    """Immutable coherence vector of an n-qubit state."""

    n: int
    components: np.ndarray

    def __post_init__(self):
        comps = np.asarray(self.components, dtype=float)
        if comps.shape != (4**self.n,):
            raise ValueError(
                f"component vector has shape {comps.shape}, expected ({4**self.n},)"
            )
        comps = comps.copy()
        comps.flags.writeable = False
        object.__setattr__(self, "components", comps)

    def component(self, digits: str) -> float:
        """Component at a multi-index digit string."""
        validate_multi_index(digits, self.n)
        return float(self.components[int(digits, 4)])

    def affine(self) -> float:
        return float(self.components[0])


def from_density(rho: np.ndarray) -> CoherenceTensor:
    """Project a density matrix onto the coherence vector.

    Args:
        rho: Hermitian complex array of shape (2^n, 2^n) with unit trace.

    Raises:
        ValueError: if the shape is not a power of two, or Hermiticity or
            unit trace fail beyond 1e-12.
    """
    rho = np.asarray(rho, dtype=complex)
    dim = rho.shape[0]
    if rho.ndim != 2 or rho.shape != (dim, dim) or dim < 2 or dim & (dim - 1):
        raise ValueError(f"expected a square 2^n x 2^n matrix, got shape {rho.shape}")
    n = dim.bit_length() - 1
    if np.max(np.abs(rho - rho.conj().T)) > HERMITICITY_TOL:
        raise ValueError("density matrix is not Hermitian within 1e-12")
    if abs(np.trace(rho) - 1.0) > HERMITICITY_TOL:
        raise ValueError("density matrix trace differs from 1 beyond 1e-12")
    comps = np.array([np.trace(rho @ L).real for L in basis_matrices(n)])
    return CoherenceTensor(n=n, components=comps)


def to_density(t: CoherenceTensor) -> np.ndarray:
    """Reconstruct the density matrix sum_m c[m] Lambda_m.

    Raises:
        ValueError: if the affine component is not (1/sqrt(2))^n within 1e-12.
    """
    if abs(t.affine() - (1.0 / SQRT2) ** t.n) > AFFINE_TOL:
        raise ValueError(
            f"affine component {t.affine()!r} differs from (1/sqrt2)^{t.n}"
        )
    rho = np.zeros((2**t.n, 2**t.n), dtype=complex)
    for c, L in zip(t.components, basis_matrices(t.n)):
        if c != 0.0:
            rho += c * L
    return rho


def purity(t: CoherenceTensor) -> float:
    """tr(rho^2), the squared Euclidean norm of the component vector."""
    return float(np.dot(t.components, t.components))


def partial_trace(t: CoherenceTensor, traced: Sequence[int]) -> CoherenceTensor:
    """Trace out the given qubits (1-based positions).

    Each surviving component equals (sqrt 2)^|traced| times the input
    component with digit 0 in every traced slot.

    Raises:
        ValueError: if traced is empty, out of range, or covers all qubits.
    """
    traced_set = set(traced)
    if not traced_set:
        raise ValueError("traced set must be nonempty")
    if not traced_set <= set(range(1, t.n + 1)):
        raise ValueError(f"traced positions {sorted(traced_set)} out of range 1..{t.n}")
    if len(traced_set) == t.n:
        raise ValueError("cannot trace out every qubit")
    kept = [p for p in range(1, t.n + 1) if p not in traced_set]
    m = len(kept)
    scale = SQRT2 ** len(traced_set)
    out = np.zeros(4**m)
    for i, digs in enumerate(all_multi_indexes(t.n)):
        if any(digs[p - 1] != "0" for p in traced_set):
            continue
        out[int("".join(digs[p - 1] for p in kept), 4)] = scale * t.components[i]
    return CoherenceTensor(n=m, components=out)


def partial_transpose(t: CoherenceTensor, qubit: int) -> CoherenceTensor:
    """Partial transpose of one qubit: negate components with digit 2 there."""
    if not 1 <= qubit <= t.n:
        raise ValueError(f"qubit position {qubit} out of range 1..{t.n}")
    comps = t.components.copy()
    for i, digs in enumerate(all_multi_indexes(t.n)):
        if digs[qubit - 1] == "2":
            comps[i] = -comps[i]
    return CoherenceTensor(n=t.n, components=comps)


def product(a: CoherenceTensor, b: CoherenceTensor) -> CoherenceTensor:
    """Tensor product state: components compose by outer product."""
    # big-endian linear encoding makes the composition a plain Kronecker product
    return CoherenceTensor(n=a.n + b.n, components=np.kron(a.components, b.components))


def ppt_min_eigenvalue(t: CoherenceTensor, qubit: int) -> float:
    """Minimum eigenvalue of the reconstructed partial transpose.

    A value below -1e-9 certifies entanglement across the cut (NPT); values
    in [-1e-9, 0) count as PPT within numerical tolerance.
    """
    if t.n > 6:
        raise ValueError(f"ppt test supports up to 6 qubits, got n={t.n}")
    return float(eigen.eigvalsh(to_density(partial_transpose(t, qubit)))[0])
