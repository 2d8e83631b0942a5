"""Shared oracles for the test suite.

Everything here is independent of the package internals: dense complex
matrix arithmetic over the computational basis, used to cross-check the
real coherence-vector machinery.
"""

import numpy as np

SQRT2 = np.sqrt(2.0)

SIGMA = (
    np.eye(2, dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def lam(j):
    return SIGMA[j] / SQRT2


def kron_chain(mats):
    out = np.array(mats[0])
    for m in mats[1:]:
        out = np.kron(out, m)
    return out


def big_lambda(digits):
    """Dense product-basis element for a digit string like '031'."""
    return kron_chain([lam(int(ch)) for ch in digits])


def random_density(dim, rng, pure=False):
    if pure:
        v = rng.normal(size=dim) + 1j * rng.normal(size=dim)
        v = v / np.linalg.norm(v)
        return np.outer(v, v.conj())
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    rho = a @ a.conj().T
    return rho / np.trace(rho).real


def dense_superop(n, hmat, kind):
    """Matrix of X -> -i[H, X] or X -> {H, X} in the product basis.

    Entry (l, k) is tr(bracket(H, Lam_k) Lam_l); real for Hermitian H.
    """
    from cohvec import basis_matrices

    lams = basis_matrices(n)
    d = 4**n
    out = np.zeros((d, d))
    for k in range(d):
        if kind == "commutator":
            br = -1j * (hmat @ lams[k] - lams[k] @ hmat)
        else:
            br = hmat @ lams[k] + lams[k] @ hmat
        for l in range(d):
            out[l, k] = np.trace(br @ lams[l]).real
    return out
