"""Rescaled Pauli basis, structure constants, and single-spin superoperator blocks.

The basis consists of the four 2x2 matrices lambda_j = sigma_j / sqrt(2)
(sigma_0 the identity), orthonormal under the trace inner product:
tr(lambda_j lambda_k) = delta_jk.  Commutators and anticommutators close on
the basis,

    [lambda_j, lambda_k] = i F_jk^l lambda_l,
    {lambda_j, lambda_k} = S_jk^l lambda_l,

with F and S real.  F is the real form of the purely imaginary commutator
structure constants; every superoperator downstream is therefore real.  The
4x4 blocks returned by :func:`ad_aad` are

    ad  (here)  = -i ad_{lambda_j}   (real, antisymmetric),
    aad         =  aad_{lambda_j}    (real, symmetric),

with the entry T_jk^l of a structure tensor placed at (row l, column k) of
the matrix for generator j, so that blocks act on coherence component
columns by left multiplication.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

SQRT2 = np.sqrt(2.0)

_SIGMA = (
    np.array([[1, 0], [0, 1]], dtype=complex),
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


@dataclass(frozen=True)
class AdAadPair:
    """Real single-spin superoperator blocks for one basis index j.

    ad is -i ad_{lambda_j} (antisymmetric), aad is aad_{lambda_j}
    (symmetric).  For j = 0 the ad block is identically zero and
    aad = sqrt(2) I.  For j in {1,2,3}: ad @ aad = 0, aad^2 - ad^2 = 2 I,
    ad^3 = -2 ad and aad^3 = 2 aad.
    """

    ad: np.ndarray
    aad: np.ndarray


def lambda_matrix(j: int) -> np.ndarray:
    """Return the rescaled Pauli matrix lambda_j = sigma_j / sqrt(2).

    Args:
        j: basis index in {0, 1, 2, 3}.

    Returns:
        A fresh 2x2 complex array with tr(lambda_j lambda_k) = delta_jk.

    Raises:
        ValueError: if the index is out of range.
    """
    if j not in (0, 1, 2, 3):
        raise ValueError(f"basis index must be in 0..3, got {j}")
    return _SIGMA[j] / SQRT2


@lru_cache(maxsize=1)
def structure_constants() -> tuple[np.ndarray, np.ndarray]:
    """Compute the structure tensors (F, S) from dense 2x2 arithmetic.

    Returns:
        F: real 4x4x4 tensor with [lambda_j, lambda_k] = i F_jk^l lambda_l.
        S: real 4x4x4 tensor with {lambda_j, lambda_k} = S_jk^l lambda_l.

    Both arrays are read-only.  F_12^3 = sqrt(2) (cyclic, antisymmetric in
    j,k) and F vanishes whenever any index is 0; S_jk^0 = sqrt(2) delta_jk
    and S_j0^j = S_0j^j = sqrt(2).
    """
    F = np.zeros((4, 4, 4))
    S = np.zeros((4, 4, 4))
    lams = [lambda_matrix(j) for j in range(4)]
    for j in range(4):
        for k in range(4):
            comm = lams[j] @ lams[k] - lams[k] @ lams[j]
            anti = lams[j] @ lams[k] + lams[k] @ lams[j]
            for l in range(4):
                # orthonormal basis: coefficient of lambda_l is a plain trace
                F[j, k, l] = np.trace(comm @ lams[l]).imag
                S[j, k, l] = np.trace(anti @ lams[l]).real
    F.flags.writeable = False
    S.flags.writeable = False
    return F, S


@lru_cache(maxsize=4)
def ad_aad(j: int) -> AdAadPair:
    """Return the real 4x4 superoperator pair for basis index j.

    The (row l, column k) entry of ad is F_jk^l and of aad is S_jk^l; this
    orientation is what makes the blocks act on component columns from the
    left, and it reproduces the known single-spin matrices, e.g. the only
    nonzeros of ad for j = 3 are -sqrt(2) at (1, 2) and +sqrt(2) at (2, 1).

    Raises:
        ValueError: if the index is out of range.
    """
    if j not in (0, 1, 2, 3):
        raise ValueError(f"basis index must be in 0..3, got {j}")
    F, S = structure_constants()
    ad = F[j].T.copy()
    aad = S[j].T.copy()
    ad.flags.writeable = False
    aad.flags.writeable = False
    return AdAadPair(ad=ad, aad=aad)
