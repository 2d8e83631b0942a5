"""A single spin in a z field, worked in the coherence-vector picture.

The density operator of one qubit is four real numbers: its overlaps with
the normalized Pauli matrices.  A Hamiltonian along the z axis rotates the
x and y components into each other at rate sqrt(2) while leaving the z
component and the trace alone.  This script builds the state, evolves it
with the closed-form propagator, and compares against the cosine law.
"""

import numpy as np

from cohvec import (
    HamiltonianCoeffs,
    Schedule,
    from_density,
    propagate,
    purity,
    rodrigues_exp,
)

plus = from_density(np.array([[0.5, 0.5], [0.5, 0.5]], dtype=complex))
print("initial components (affine, x, y, z):", np.round(plus.components, 6))
print("purity:", purity(plus))

sched = Schedule(
    n=1,
    segments=((HamiltonianCoeffs(n=1, terms={"3": 1.0}), 2.0),),
    sample_step=0.25,
)
traj = propagate(plus, sched)

print("\n  t       x component     cos(sqrt2 t)/sqrt2")
for t, state in zip(traj.times, traj.states):
    closed = np.cos(np.sqrt(2) * t) / np.sqrt(2)
    print(f"  {t:4.2f}   {state.component('1'):+.12f}   {closed:+.12f}")

# the same propagator in one shot: a rotation matrix acting on 4 real numbers
e = rodrigues_exp("3", 2.0)
print("\none-shot propagator vs final sampled state:",
      np.max(np.abs(e @ plus.components - traj.states[-1].components)))
