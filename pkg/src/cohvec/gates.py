"""Named gates and initial states used by the worked examples.

The C-NOT Hamiltonian in the product-operator basis is, for two qubits,

    H = (pi/2) (Lambda_00 - Lambda_[3 at control]
                - Lambda_[1 at target] + Lambda_[3 at control, 1 at target]),

realized over unit time.  The qubit holding digit 3 acts as control and the
qubit holding digit 1 as target; the role-to-slot mapping is pinned by the
regression fixture for the 16x16 propagator and by its action on the
computational-basis coherence vectors, a C-NOT controlled by the second
qubit.  Embedding the gate in n qubits pads the indexes with 0 digits and
stretches the duration by (sqrt 2)^(n-2), compensating the weight factor
the extra identity slots put on the generator.  The affine coefficient is
kept in the data but never contributes to dynamics.
"""

from dataclasses import dataclass
from importlib import resources

import numpy as np

from .adjoint import HamiltonianCoeffs, hamiltonian_generator
from .pauli import SQRT2
from .propagate import expm
from .states import CoherenceTensor

RCNOT_FIXTURE_TOL = 1e-12

STATE_NAMES = ("comp_00", "comp_01", "comp_10", "comp_11", "bell_ab", "plus", "cubitt_in")


@dataclass(frozen=True)
class NamedGate:
    name: str
    hamiltonian: HamiltonianCoeffs
    duration: float


def cnot_hamiltonian(control: int, target: int, n: int) -> HamiltonianCoeffs:
    """Four-term C-NOT coefficient map for the given 1-based qubit roles.

    Raises:
        ValueError: on coincident or out-of-range positions.
    """
    if not (1 <= control <= n and 1 <= target <= n):
        raise ValueError(f"positions must lie in 1..{n}, got control={control} target={target}")
    if control == target:
        raise ValueError("control and target must differ")

    def idx(assign: dict[int, str]) -> str:
        return "".join(assign.get(p, "0") for p in range(1, n + 1))

    half_pi = np.pi / 2.0
    terms = {
        idx({}): half_pi,
        idx({control: "3"}): -half_pi,
        idx({target: "1"}): -half_pi,
        idx({control: "3", target: "1"}): half_pi,
    }
    return HamiltonianCoeffs(n=n, terms=terms)


def cnot_gate(control: int, target: int, n: int) -> NamedGate:
    """C-NOT as a named gate; duration (sqrt 2)^(n-2) embeds it in n qubits."""
    return NamedGate(
        name="cnot",
        hamiltonian=cnot_hamiltonian(control, target, n),
        duration=SQRT2 ** (n - 2),
    )


def _load_rcnot_fixture() -> np.ndarray:
    text = resources.files("cohvec.data").joinpath("rcnot_grid.txt").read_text()
    rows = [[int(tok) for tok in line.split()] for line in text.splitlines() if line.strip()]
    M = np.array(rows, dtype=float)
    if M.shape != (16, 16):
        raise RuntimeError(f"fixture grid has shape {M.shape}, expected (16, 16)")
    return M


def r_cnot() -> np.ndarray:
    """The 16x16 two-qubit C-NOT propagator, checked against the fixture.

    Computes the exponential of the gate generator over unit time and
    asserts entrywise agreement with the checked-in integer grid; a
    mismatch signals a convention drift somewhere upstream.

    Raises:
        RuntimeError: if the computed matrix drifts from the fixture.
    """
    gate = cnot_gate(control=2, target=1, n=2)
    R = expm(hamiltonian_generator(gate.hamiltonian), gate.duration)
    fixture = _load_rcnot_fixture()
    dev = float(np.max(np.abs(R - fixture)))
    if dev > RCNOT_FIXTURE_TOL:
        raise RuntimeError(
            f"computed C-NOT propagator deviates from the fixture by {dev:.3e}"
        )
    return R


def named_state(name: str, n: int) -> CoherenceTensor:
    """Reference initial states by name.

    comp_ab are the four 2-qubit computational basis states; bell_ab is the
    maximally entangled 2-qubit state with components +1/2 at multi-indexes
    {00, 11, 23, 32}, the projector onto the ket
    (|00> + i|01> + i|10> + |11>)/2; plus is the single-qubit state
    (lambda_0 + lambda_1)/sqrt(2); cubitt_in is the separable 3-qubit
    mixture with affine component 1/(2 sqrt 2), components +x at
    {003, 110, 113, 330} and -x at {220, 223, 333}, x = 1/(6 sqrt 2).

    Raises:
        ValueError: for an unknown name or a qubit count that does not
            match the named state.
    """
    sizes = {
        "comp_00": 2, "comp_01": 2, "comp_10": 2, "comp_11": 2,
        "bell_ab": 2, "plus": 1, "cubitt_in": 3,
    }
    if name not in sizes:
        raise ValueError(f"unknown state name {name!r}; known: {', '.join(STATE_NAMES)}")
    if n != sizes[name]:
        raise ValueError(f"state {name!r} is defined on {sizes[name]} qubits, got n={n}")
    comps = np.zeros(4**n)
    if name.startswith("comp_"):
        sa = 1.0 if name[5] == "0" else -1.0
        sb = 1.0 if name[6] == "0" else -1.0
        for digs, val in (("00", 0.5), ("03", 0.5 * sb), ("30", 0.5 * sa), ("33", 0.5 * sa * sb)):
            comps[int(digs, 4)] = val
    elif name == "bell_ab":
        for digs in ("00", "11", "23", "32"):
            comps[int(digs, 4)] = 0.5
    elif name == "plus":
        comps[0] = comps[1] = 1.0 / SQRT2
    else:  # cubitt_in
        x = 1.0 / (6.0 * SQRT2)
        comps[0] = 1.0 / (2.0 * SQRT2)
        for digs in ("003", "110", "113", "330"):
            comps[int(digs, 4)] = x
        for digs in ("220", "223", "333"):
            comps[int(digs, 4)] = -x
    return CoherenceTensor(n=n, components=comps)
