import numpy as np
import pytest

from cohvec.pauli import SQRT2, ad_aad, lambda_matrix, structure_constants


def test_lambda_orthonormal_under_trace():
    for j in range(4):
        for k in range(4):
            val = np.trace(lambda_matrix(j) @ lambda_matrix(k))
            expected = 1.0 if j == k else 0.0
            assert abs(val - expected) < 1e-15


@pytest.mark.parametrize("j", [-1, 4, 17])
def test_lambda_matrix_rejects_out_of_range(j):
    with pytest.raises(ValueError):
        lambda_matrix(j)


def test_structure_constants_reproduce_dense_brackets():
    # [l_j, l_k] = i F_jk^l l_l and {l_j, l_k} = S_jk^l l_l, checked entrywise
    F, S = structure_constants()
    lams = [lambda_matrix(j) for j in range(4)]
    for j in range(4):
        for k in range(4):
            comm = lams[j] @ lams[k] - lams[k] @ lams[j]
            anti = lams[j] @ lams[k] + lams[k] @ lams[j]
            from_f = sum(1j * F[j, k, l] * lams[l] for l in range(4))
            from_s = sum(S[j, k, l] * lams[l] for l in range(4))
            assert np.max(np.abs(comm - from_f)) < 1e-14
            assert np.max(np.abs(anti - from_s)) < 1e-14


def test_structure_constant_landmark_values():
    F, S = structure_constants()
    assert abs(F[1, 2, 3] - SQRT2) < 1e-15
    assert abs(F[2, 1, 3] + SQRT2) < 1e-15
    assert abs(S[0, 0, 0] - SQRT2) < 1e-15
    for j in range(1, 4):
        assert abs(S[j, j, 0] - SQRT2) < 1e-15
        assert abs(S[j, 0, j] - SQRT2) < 1e-15
        assert abs(S[0, j, j] - SQRT2) < 1e-15
    assert np.max(np.abs(F + np.swapaxes(F, 0, 1))) < 1e-15
    assert np.max(np.abs(S - np.swapaxes(S, 0, 1))) < 1e-15


def test_structure_constants_are_read_only():
    F, S = structure_constants()
    with pytest.raises(ValueError):
        F[0, 0, 0] = 9.0
    with pytest.raises(ValueError):
        S[0, 0, 0] = 9.0


def test_single_spin_block_identities():
    """The real blocks satisfy G A = A G = 0, A^2 - G^2 = 2I, G^3 = -2G, A^3 = 2A."""
    eye = np.eye(4)
    for j in range(4):
        pair = ad_aad(j)
        G, A = pair.ad, pair.aad
        assert np.max(np.abs(G @ A)) < 1e-14
        assert np.max(np.abs(A @ G)) < 1e-14
        assert np.max(np.abs(A @ A - G @ G - 2 * eye)) < 1e-14
        assert np.max(np.abs(G @ G @ G + 2 * G)) < 1e-14
        assert np.max(np.abs(A @ A @ A - 2 * A)) < 1e-14
        assert np.array_equal(G, -G.T)
        assert np.array_equal(A, A.T)


def test_blocks_match_structure_constants():
    # (row l, column k) holds the coefficient of l_l in the bracket with l_k
    F, S = structure_constants()
    for j in range(4):
        pair = ad_aad(j)
        for k in range(4):
            for l in range(4):
                assert pair.ad[l, k] == F[j, k, l]
                assert pair.aad[l, k] == S[j, k, l]


def test_blocks_are_read_only_and_cached():
    p1 = ad_aad(2)
    p2 = ad_aad(2)
    assert p1 is p2
    with pytest.raises(ValueError):
        p1.ad[0, 0] = 1.0
