"""Adjoint-representation superoperators for product-operator multi-indexes.

For a basis element Lambda_m the real matrices

    build_ad(m)  = -i ad_{Lambda_m}   (antisymmetric),
    build_aad(m) =  aad_{Lambda_m}    (symmetric),

are assembled from the single-spin blocks by the tensor bracket
decomposition: a commutator of Kronecker products splits into a sum over
all placements of an odd number of single-spin commutators (anticommutator:
even number, the empty placement included), with prefactor 1/2^(n-1).
Reducing each placement to structure constants turns the i factors of the
single-spin commutators into alternating real signs, (-1)^((k-1)/2) on
terms with k commutator slots for the adjoint and (-1)^(k/2) for the
antiadjoint.  A commutator slot holding digit 0 kills its term, so
build_ad of a weight-1 index is (1/sqrt 2)^(n-1) times a single Kronecker
term, and build_ad(0...0) is the zero matrix.

The same contractions of the structure tensors, kept as digit strings
instead of matrices, give bracket_decompose: the expansion of
-i[Lambda_a, Lambda_b] or {Lambda_a, Lambda_b} back in the Lambda basis.
"""

import itertools
from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .pauli import SQRT2, ad_aad, structure_constants
from .states import validate_multi_index

_KINDS = ("adjoint", "antiadjoint")


@dataclass(frozen=True)
class GeneratorMatrix:
    """Sparse real 4^n x 4^n superoperator, stored as sorted triples."""

    n: int
    kind: str
    triples: tuple[tuple[int, int, float], ...]

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}, got {self.kind!r}")

    @property
    def dim(self) -> int:
        return 4**self.n

    def dense(self) -> np.ndarray:
        M = np.zeros((self.dim, self.dim))
        for r, c, v in self.triples:
            M[r, c] = v
        return M


def _from_entries(n: int, kind: str, entries: dict[tuple[int, int], float]) -> GeneratorMatrix:
    triples = tuple(
        (r, c, v) for (r, c), v in sorted(entries.items()) if abs(v) > 1e-15
    )
    return GeneratorMatrix(n=n, kind=kind, triples=triples)


def _sparse_entries(M: np.ndarray) -> list[tuple[int, int, float]]:
    rows, cols = np.nonzero(M)
    return [(int(r), int(c), float(M[r, c])) for r, c in zip(rows, cols)]


def _kron_accumulate(
    acc: dict[tuple[int, int], float],
    factors: list[list[tuple[int, int, float]]],
    coeff: float,
) -> None:
    """Add coeff * kron(factors) into the (row, col) -> value accumulator."""
    dims = [4] * len(factors)
    for combo in itertools.product(*factors):
        r = c = 0
        v = coeff
        for (fr, fc, fv), d in zip(combo, dims):
            r = r * d + fr
            c = c * d + fc
            v *= fv
        if v != 0.0:
            acc[(r, c)] = acc.get((r, c), 0.0) + v


def _build(m: str, kind: str) -> GeneratorMatrix:
    validate_multi_index(m)
    n = len(m)
    digits = [int(ch) for ch in m]
    blocks = [ad_aad(j) for j in range(4)]
    ad_fac = [_sparse_entries(blocks[j].ad) for j in range(4)]
    aad_fac = [_sparse_entries(blocks[j].aad) for j in range(4)]
    parities = range(1, n + 1, 2) if kind == "adjoint" else range(0, n + 1, 2)
    acc: dict[tuple[int, int], float] = {}
    for k in parities:
        sign = (-1.0) ** ((k - 1) // 2) if kind == "adjoint" else (-1.0) ** (k // 2)
        for slots in itertools.combinations(range(n), k):
            if any(digits[i] == 0 for i in slots):
                continue  # commutator against lambda_0 vanishes
            factors = [
                ad_fac[digits[i]] if i in slots else aad_fac[digits[i]]
                for i in range(n)
            ]
            _kron_accumulate(acc, factors, sign / 2.0 ** (n - 1))
    return _from_entries(n, kind, acc)


def build_ad(m: str) -> GeneratorMatrix:
    """Real antisymmetric -i ad_{Lambda_m}; zero matrix for m = 0...0."""
    return _build(m, "adjoint")


def build_aad(m: str) -> GeneratorMatrix:
    """Real symmetric aad_{Lambda_m}; sqrt(2)^n I for m = 0...0."""
    return _build(m, "antiadjoint")


@dataclass(frozen=True)
class HamiltonianCoeffs:
    """Coefficients h^m of a Hamiltonian H = sum_m h^m Lambda_m.

    The 0...0 term may be present but never contributes to dynamics.
    """

    n: int
    terms: Mapping[str, float]

    def __post_init__(self):
        clean = {}
        for m, h in dict(self.terms).items():
            validate_multi_index(m, self.n)
            h = float(h)
            if not np.isfinite(h):
                raise ValueError(f"coefficient for {m!r} is not finite")
            clean[m] = h
        object.__setattr__(self, "terms", clean)


def hamiltonian_generator(h: HamiltonianCoeffs | Mapping[str, float]) -> GeneratorMatrix:
    """Sum of h[m] * build_ad(m); the affine term contributes nothing.

    Accepts either a HamiltonianCoeffs or a plain nonempty mapping of
    equal-length digit strings to coefficients.

    Raises:
        ValueError: on mixed index lengths or an empty plain mapping.
    """
    if isinstance(h, HamiltonianCoeffs):
        n, terms = h.n, h.terms
    else:
        if not h:
            raise ValueError("cannot infer qubit count from an empty coefficient map")
        lengths = {len(m) for m in h}
        if len(lengths) != 1:
            raise ValueError(f"mixed multi-index lengths {sorted(lengths)}")
        n = lengths.pop()
        terms = dict(h)
    acc: dict[tuple[int, int], float] = {}
    for m, coeff in terms.items():
        validate_multi_index(m, n)
        for r, c, v in build_ad(m).triples:
            acc[(r, c)] = acc.get((r, c), 0.0) + coeff * v
    return _from_entries(n, "adjoint", acc)


def bracket_decompose(a: str, b: str, kind: str = "commutator") -> list[tuple[str, float]]:
    """Expand -i[Lambda_a, Lambda_b] (or {Lambda_a, Lambda_b}) in the basis.

    Pure structure-constant contraction: each placement of single-spin
    commutators picks one output digit per slot through F (commutator
    slots) or S (anticommutator slots); a slot with a vanishing bracket
    kills the placement.  Returns (multi-index, coefficient) pairs sorted
    by linear index; the list is empty when the bracket vanishes.

    Raises:
        ValueError: on unequal lengths or an unknown kind.
    """
    validate_multi_index(a)
    validate_multi_index(b, len(a))
    if kind not in ("commutator", "anticommutator"):
        raise ValueError(f"kind must be commutator or anticommutator, got {kind!r}")
    F, S = structure_constants()
    n = len(a)
    parities = range(1, n + 1, 2) if kind == "commutator" else range(0, n + 1, 2)
    acc: dict[str, float] = {}
    for k in parities:
        sign = (-1.0) ** ((k - 1) // 2) if kind == "commutator" else (-1.0) ** (k // 2)
        for slots in itertools.combinations(range(n), k):
            digits_out = []
            coeff = sign / 2.0 ** (n - 1)
            for i in range(n):
                T = F if i in slots else S
                col = T[int(a[i]), int(b[i]), :]
                nz = np.nonzero(col)[0]
                if nz.size == 0:
                    coeff = 0.0
                    break
                digits_out.append(str(int(nz[0])))
                coeff *= float(col[nz[0]])
            if coeff != 0.0:
                m = "".join(digits_out)
                acc[m] = acc.get(m, 0.0) + coeff
    return [
        (m, v) for m, v in sorted(acc.items(), key=lambda kv: int(kv[0], 4))
        if abs(v) > 1e-14
    ]
