"""The C-NOT gate as a 16x16 rotation of two-qubit coherence vectors.

A C-NOT is generated by a four-term Hamiltonian in the product-operator
basis.  Exponentiating its adjoint matrix for the right duration gives an
orthogonal propagator with integer entries that permutes (and occasionally
flips) the coherence components.  We print the generator, check the truth
table on the computational states, and entangle a product state.
"""

import numpy as np

from cohvec import from_density, named_state, product, r_cnot
from cohvec.gates import cnot_gate

gate = cnot_gate(control=2, target=1, n=2)
print("Hamiltonian coefficients (index: value):")
for m, c in sorted(gate.hamiltonian.terms.items()):
    print(f"  {m}: {c:+.6f}")
print("duration:", gate.duration)

R = np.asarray(r_cnot())
print("\npropagator is orthogonal:", np.max(np.abs(R.T @ R - np.eye(16))) < 1e-12)
print("propagator squares to identity:", np.max(np.abs(R @ R - np.eye(16))) < 1e-12)

print("\ntruth table (control is the second qubit):")
for a in "01":
    for b in "01":
        src = named_state(f"comp_{a}{b}", 2)
        out = R @ src.components
        for a2 in "01":
            for b2 in "01":
                if np.max(np.abs(out - named_state(f"comp_{a2}{b2}", 2).components)) < 1e-10:
                    print(f"  |{a}{b}>  ->  |{a2}{b2}>")

# a superposed control turns a product state into a maximally entangled one
zero = from_density(np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex))
t0 = product(zero, named_state("plus", 1))
out = R @ t0.components
nonzero = {f"{i >> 2}{i & 3}": round(float(v), 6) for i, v in enumerate(out) if abs(v) > 1e-12}
print("\n|0> target with |+> control maps to components:", nonzero)
