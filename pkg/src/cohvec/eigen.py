"""Cyclic Jacobi eigenvalue solver for Hermitian matrices.

Complex Hermitian input H = A + iB is embedded as the real symmetric
[[A, -B], [B, A]], whose spectrum is that of H with every eigenvalue
doubled; plain cyclic Jacobi sweeps then drive the off-diagonal norm
below threshold.  Intended for the small matrices of this package
(at most 64x64 before embedding).
"""

import numpy as np

OFF_NORM_THRESHOLD = 1e-13


class NumericalError(RuntimeError):
    """Eigenvalue iteration failed to converge."""


def _jacobi_rotate(A: np.ndarray, p: int, q: int) -> None:
    apq = A[p, q]
    theta = (A[q, q] - A[p, p]) / (2.0 * apq)
    t = np.sign(theta) / (abs(theta) + np.hypot(theta, 1.0)) if theta != 0.0 else 1.0
    c = 1.0 / np.hypot(t, 1.0)
    s = t * c
    rp = A[p, :].copy()
    rq = A[q, :].copy()
    A[p, :] = c * rp - s * rq
    A[q, :] = s * rp + c * rq
    cp = A[:, p].copy()
    cq = A[:, q].copy()
    A[:, p] = c * cp - s * cq
    A[:, q] = s * cp + c * cq


def _off_norm(A: np.ndarray) -> float:
    off = A - np.diag(np.diag(A))
    return float(np.sqrt(np.sum(off * off)))


def eigvalsh(H: np.ndarray, max_sweeps: int = 60) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian matrix by cyclic Jacobi sweeps.

    Raises NumericalError with sweep and residual diagnostics if the
    off-diagonal norm is not below threshold after max_sweeps sweeps.
    """
    H = np.asarray(H)
    n = H.shape[0]
    if H.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {H.shape}")
    if np.iscomplexobj(H):
        A = np.real(H)
        B = np.imag(H)
        M = np.block([[A, -B], [B, A]])
        doubled = True
    else:
        M = H.astype(float).copy()
        doubled = False
    N = M.shape[0]
    # scale-aware threshold: entries of M enter squared in the off norm
    scale = max(1.0, float(np.max(np.abs(M))))
    for sweep in range(max_sweeps):
        if _off_norm(M) < OFF_NORM_THRESHOLD * scale:
            break
        for p in range(N - 1):
            for q in range(p + 1, N):
                if abs(M[p, q]) > 0.0:
                    _jacobi_rotate(M, p, q)
    else:
        raise NumericalError(
            f"Jacobi iteration did not converge: off-diagonal norm "
            f"{_off_norm(M):.3e} after {max_sweeps} sweeps (threshold "
            f"{OFF_NORM_THRESHOLD:.1e}, size {N}x{N})"
        )
    vals = np.sort(np.diag(M))
    # the real embedding lists every eigenvalue twice
    return vals[::2] if doubled else vals
