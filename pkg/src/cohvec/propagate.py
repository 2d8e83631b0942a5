"""Time evolution of coherence vectors under piecewise-constant Hamiltonians.

Every propagator here is the exponential of a real antisymmetric generator
and is therefore orthogonal, with the affine component row and column left
exactly untouched.  Single-term generators admit the closed Rodrigues form

    exp(t G) = I + sin(w t)/w G + (1 - cos(w t))/w^2 G^2,
    w = 2^((2-n)/2),

valid because every single-index generator satisfies the cubic identity
G^3 = -w^2 G regardless of its weight.  Commuting sets multiply factor by
factor (cartan_exp), weight-1 Hamiltonians factor qubit by qubit
(local_exp), and everything else goes through a scaling-and-squaring
Taylor exponential.  A direct Hilbert-space integration of the same
schedule (hilbert_oracle) serves as an independent cross-check route.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .adjoint import GeneratorMatrix, HamiltonianCoeffs, bracket_decompose, build_ad, hamiltonian_generator
from .pauli import SQRT2, ad_aad
from .states import CoherenceTensor, basis_matrix, validate_multi_index

logger = logging.getLogger(__name__)

DEFAULT_STEPS_PER_SEGMENT = 64
TAYLOR_TERM_TOL = 1e-16


@dataclass(frozen=True)
class Schedule:
    """Ordered piecewise-constant Hamiltonian segments.

    sample_step = None lets each segment default to duration/64.
    """

    n: int
    segments: tuple[tuple[HamiltonianCoeffs, float], ...]
    sample_step: float | None = None

    def __post_init__(self):
        if not self.segments:
            raise ValueError("schedule needs at least one segment")
        segs = []
        for h, duration in self.segments:
            if h.n != self.n:
                raise ValueError(f"segment on {h.n} qubits in a {self.n}-qubit schedule")
            duration = float(duration)
            if not duration > 0.0:
                raise ValueError(f"segment duration must be > 0, got {duration}")
            segs.append((h, duration))
        object.__setattr__(self, "segments", tuple(segs))
        if self.sample_step is not None:
            step = float(self.sample_step)
            shortest = min(d for _, d in self.segments)
            if not 0.0 < step <= shortest + 1e-12:
                raise ValueError(
                    f"sample_step must be in (0, {shortest}] (shortest duration), got {step}"
                )
            object.__setattr__(self, "sample_step", step)


@dataclass(frozen=True)
class Trajectory:
    """Sampled states aligned with sampled times; purity is constant along it."""

    times: np.ndarray
    states: tuple[CoherenceTensor, ...]

    def __post_init__(self):
        times = np.asarray(self.times, dtype=float)
        if times.shape != (len(self.states),):
            raise ValueError("times and states lengths differ")
        times = times.copy()
        times.flags.writeable = False
        object.__setattr__(self, "times", times)


def expm_taylor(A: np.ndarray) -> np.ndarray:
    """Scaling-and-squaring Taylor exponential, real or complex."""
    A = np.asarray(A)
    norm = float(np.linalg.norm(A, np.inf))
    squarings = max(0, math.ceil(math.log2(norm / 0.5))) if norm > 0.5 else 0
    B = A / (2.0**squarings)
    E = np.eye(A.shape[0], dtype=A.dtype)
    term = np.eye(A.shape[0], dtype=A.dtype)
    k = 1
    while True:
        term = term @ B / k
        E = E + term
        if np.linalg.norm(term, np.inf) < TAYLOR_TERM_TOL:
            break
        k += 1
    for _ in range(squarings):
        E = E @ E
    return E


def expm(g: GeneratorMatrix | np.ndarray, t: float) -> np.ndarray:
    """Propagator exp(t g) of a generator, via the Taylor route."""
    dense = g.dense() if isinstance(g, GeneratorMatrix) else np.asarray(g, dtype=float)
    return expm_taylor(t * dense)


def rodrigues_frequency(n: int) -> float:
    return 2.0 ** ((2 - n) / 2)


def rodrigues_exp(m: str, t: float) -> np.ndarray:
    """Closed-form exp(t build_ad(m)) for a single basis multi-index.

    For m = 0...0 the generator is trivial; logs a warning and returns the
    identity.
    """
    validate_multi_index(m)
    n = len(m)
    if set(m) == {"0"}:
        logger.warning("rodrigues_exp called with the trivial generator %s", m)
        return np.eye(4**n)
    G = build_ad(m).dense()
    w = rodrigues_frequency(n)
    return np.eye(4**n) + (np.sin(w * t) / w) * G + ((1.0 - np.cos(w * t)) / w**2) * (G @ G)


def cartan_exp(alphas: dict[str, float]) -> np.ndarray:
    """Product of Rodrigues factors over a pairwise-commuting index set.

    Raises:
        ValueError: naming the offending pair if two indexes fail to commute.
    """
    if not alphas:
        raise ValueError("empty parameter map")
    keys = sorted(alphas, key=lambda m: int(m, 4))
    n = len(keys[0])
    for m in keys:
        validate_multi_index(m, n)
    for i, a in enumerate(keys):
        for b in keys[i + 1:]:
            if bracket_decompose(a, b, "commutator"):
                raise ValueError(f"generators do not commute: ({a}, {b})")
    R = np.eye(4**n)
    for m in keys:
        R = rodrigues_exp(m, float(alphas[m])) @ R
    return R


def local_exp(per_qubit: Sequence[Sequence[float]], t: float) -> np.ndarray:
    """Kronecker product of single-qubit Rodrigues rotations.

    per_qubit holds one (h1, h2, h3) coefficient triple per qubit; the
    weight-1 embedding carries the factor (1/sqrt 2)^(n-1), so each qubit
    block is exp(t (1/sqrt 2)^(n-1) sum_j h_j G_j), computed in closed form
    with frequency sqrt(2) |h| (1/sqrt 2)^(n-1).  Block structure of each
    factor is 1 (+) SO(3).
    """
    n = len(per_qubit)
    if n == 0:
        raise ValueError("need at least one qubit")
    weight = (1.0 / SQRT2) ** (n - 1)
    blocks = [ad_aad(j).ad for j in range(4)]
    out = np.array([[1.0]])
    for coeffs in per_qubit:
        coeffs = [float(c) for c in coeffs]
        if len(coeffs) != 3:
            raise ValueError(f"expected 3 coefficients per qubit, got {len(coeffs)}")
        norm = math.sqrt(sum(c * c for c in coeffs))
        if norm * abs(t) == 0.0:
            factor = np.eye(4)
        else:
            M = weight * sum(c * blocks[j + 1] for j, c in enumerate(coeffs))
            w = SQRT2 * norm * weight
            factor = np.eye(4) + (np.sin(w * t) / w) * M + ((1.0 - np.cos(w * t)) / w**2) * (M @ M)
        out = np.kron(out, factor)
    return out


def _segment_steps(duration: float, sample_step: float | None) -> tuple[float, int, float]:
    """Step length, full-step count and remainder hitting the boundary exactly."""
    dt = duration / DEFAULT_STEPS_PER_SEGMENT if sample_step is None else sample_step
    full = int(math.floor(duration / dt + 1e-9))
    remainder = duration - full * dt
    if remainder < 1e-9 * duration:
        remainder = 0.0
    return dt, full, remainder


def propagate(t0: CoherenceTensor, s: Schedule) -> Trajectory:
    """Integrate a schedule, sampling each segment and its boundary exactly.

    One step exponential is built per distinct step length per segment and
    reused along it.

    Raises:
        ValueError: if the state and schedule qubit counts differ.
    """
    if t0.n != s.n:
        raise ValueError(f"state has n={t0.n} but schedule has n={s.n}")
    times = [0.0]
    states = [t0]
    v = t0.components.copy()
    t_start = 0.0
    for h, duration in s.segments:
        gen = hamiltonian_generator(h) if h.terms else None
        dt, full, remainder = _segment_steps(duration, s.sample_step)
        E = expm(gen, dt) if gen is not None else None
        for i in range(1, full + 1):
            if E is not None:
                v = E @ v
            at_boundary = i == full and remainder == 0.0
            times.append(t_start + duration if at_boundary else t_start + i * dt)
            states.append(CoherenceTensor(n=s.n, components=v))
        if remainder > 0.0:
            if gen is not None:
                v = expm(gen, remainder) @ v
            times.append(t_start + duration)
            states.append(CoherenceTensor(n=s.n, components=v))
        t_start += duration
    return Trajectory(times=np.array(times), states=tuple(states))


def hilbert_oracle(rho0: np.ndarray, s: Schedule) -> list[np.ndarray]:
    """Direct Hilbert-space integration of the same schedule.

    Builds the dense Hamiltonian of each segment, conjugates the density by
    exp(-i H dt) step by step, and returns densities aligned with the
    sampling grid of propagate (initial state included).
    """
    rho = np.asarray(rho0, dtype=complex)
    if rho.shape != (2**s.n, 2**s.n):
        raise ValueError(f"density has shape {rho.shape}, expected {(2**s.n, 2**s.n)}")
    out = [rho.copy()]
    for h, duration in s.segments:
        H = np.zeros((2**s.n, 2**s.n), dtype=complex)
        for m, coeff in h.terms.items():
            H += coeff * basis_matrix(m)
        dt, full, remainder = _segment_steps(duration, s.sample_step)
        U = expm_taylor(-1j * dt * H)
        for _ in range(full):
            rho = U @ rho @ U.conj().T
            out.append(rho.copy())
        if remainder > 0.0:
            Ur = expm_taylor(-1j * remainder * H)
            rho = Ur @ rho @ Ur.conj().T
            out.append(rho.copy())
    return out
