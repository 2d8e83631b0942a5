"""Passing entanglement down a chain with two nonlocal pulses.

Qubits 1 and 2 start maximally entangled; qubit 3 starts in a plus state.
Two piecewise-constant couplings (first acting on qubits 2 and 3, then on
qubits 1 and 2... in index terms: a 033 segment followed by a 220 segment)
move the entanglement so that at the end qubit 2 is disentangled and the
outer pair (1, 3) is maximally entangled across every test we can run.
The negativity of the partial transpose is the witness throughout.
"""

import numpy as np

from cohvec import named_state, partial_trace, ppt_min_eigenvalue, propagate
from cohvec.cli import swap_case

t0, sched = swap_case()
traj = propagate(t0, sched)
total = sum(d for _, d in sched.segments)
print(f"schedule: two segments of {sched.segments[0][1]:.6f}, total {total:.6f}")

landmarks = [0, len(traj.times) // 2, len(traj.times) - 1]
print("\n  t        minPT(1|23)   minPT(2|13)   minPT(3|12)")
for i in landmarks:
    a, b, c = (ppt_min_eigenvalue(traj.states[i], q) for q in (1, 2, 3))
    print(f"  {traj.times[i]:7.4f}  {a:+12.6f}  {b:+12.6f}  {c:+12.6f}")

final = traj.states[-1]
plus = named_state("plus", 1)
rho_2 = partial_trace(final, [1, 3])
print("\nmiddle qubit returns to the plus state, deviation:",
      np.max(np.abs(rho_2.components - plus.components)))

rho_13 = partial_trace(final, [2])
nonzero = {m: round(float(v), 4) for m, v in zip(
    ("00", "01", "02", "03", "10", "11", "12", "13",
     "20", "21", "22", "23", "30", "31", "32", "33"), rho_13.components)
    if abs(v) > 1e-10}
print("outer pair components at the end:", nonzero)
print("outer pair min PT eigenvalue:", round(ppt_min_eigenvalue(rho_13, 1), 6))
