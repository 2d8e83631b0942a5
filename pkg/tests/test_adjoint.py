import itertools

import numpy as np
import pytest

from cohvec import basis_matrix
from cohvec.adjoint import (
    HamiltonianCoeffs,
    bracket_decompose,
    build_aad,
    build_ad,
    hamiltonian_generator,
)
from cohvec.pauli import SQRT2, ad_aad
from cohvec.states import all_multi_indexes, index_of

from helpers import big_lambda, dense_superop, kron_chain


def test_affine_index_gives_trivial_adjoint():
    for n in (1, 2, 3):
        g = build_ad("0" * n)
        assert g.kind == "adjoint"
        assert g.triples == ()
        assert np.max(np.abs(g.dense())) == 0.0


def test_affine_index_antiadjoint_is_scaled_identity():
    # {I/2^(n/2), X} = 2^(1-n/2) X, so the matrix is sqrt2^(2-n) I
    for n in (1, 2, 3):
        a = build_aad("0" * n).dense()
        assert np.max(np.abs(a - SQRT2 ** (2 - n) * np.eye(4**n))) < 1e-14


def test_weight_one_adjoint_factorizes():
    got = build_ad("20").dense()
    want = np.kron(ad_aad(2).ad, np.eye(4)) / SQRT2
    assert np.max(np.abs(got - want)) < 1e-15
    got = build_ad("002").dense()
    want = kron_chain([np.eye(4), np.eye(4), ad_aad(2).ad]) / 2.0
    assert np.max(np.abs(got - want)) < 1e-15


def test_two_qubit_adjoint_block_form():
    # "11": half of (G1 x A1 + A1 x G1)
    G, A = ad_aad(1).ad, ad_aad(1).aad
    want = 0.5 * (np.kron(G, A) + np.kron(A, G))
    assert np.max(np.abs(build_ad("11").dense() - want)) < 1e-15


@pytest.mark.parametrize("n", [1, 2, 3])
def test_build_ad_matches_dense_commutator_oracle(n, rng):
    indexes = list(all_multi_indexes(n))
    sample = indexes if n < 3 else [indexes[i] for i in rng.choice(len(indexes), 10, replace=False)]
    for m in sample:
        got = build_ad(m).dense()
        want = dense_superop(n, big_lambda(m), "commutator")
        assert np.max(np.abs(got - want)) < 1e-13, m


@pytest.mark.parametrize("n", [1, 2, 3])
def test_build_aad_matches_dense_anticommutator_oracle(n, rng):
    indexes = list(all_multi_indexes(n))
    sample = indexes if n < 3 else [indexes[i] for i in rng.choice(len(indexes), 10, replace=False)]
    for m in sample:
        got = build_aad(m).dense()
        want = dense_superop(n, big_lambda(m), "anticommutator")
        assert np.max(np.abs(got - want)) < 1e-13, m


def test_generator_symmetry_and_affine_row():
    for m in ("12", "33", "123", "310"):
        g = build_ad(m).dense()
        a = build_aad(m).dense()
        assert np.max(np.abs(g + g.T)) < 1e-14
        assert np.max(np.abs(a - a.T)) < 1e-14
        assert np.max(np.abs(g[0, :])) == 0.0
        assert np.max(np.abs(g[:, 0])) == 0.0


def test_cubic_identity_all_indexes():
    # skew real form: M^3 = -2^(2-n) M; the Hermitian form iM carries the plus sign
    for n in (1, 2, 3):
        w2 = 2.0 ** (2 - n)
        for m in all_multi_indexes(n):
            M = build_ad(m).dense()
            assert np.max(np.abs(M @ M @ M + w2 * M)) < 1e-12, m


def test_triples_sorted_and_deduplicated():
    g = build_ad("123")
    rows_cols = [(r, c) for r, c, _ in g.triples]
    assert rows_cols == sorted(rows_cols)
    assert len(rows_cols) == len(set(rows_cols))
    assert all(abs(v) > 1e-15 for _, _, v in g.triples)


def test_hamiltonian_generator_linearity(rng):
    h1 = HamiltonianCoeffs(n=2, terms={"13": 0.7, "22": -0.2})
    h2 = HamiltonianCoeffs(n=2, terms={"13": 0.1, "30": 1.5})
    lhs = hamiltonian_generator(HamiltonianCoeffs(
        n=2, terms={"13": 2 * 0.7 + 0.1, "22": -0.4, "30": 1.5})).dense()
    rhs = 2 * hamiltonian_generator(h1).dense() + hamiltonian_generator(h2).dense()
    assert np.max(np.abs(lhs - rhs)) < 1e-14


def test_hamiltonian_generator_ignores_affine_term():
    g = hamiltonian_generator(HamiltonianCoeffs(n=2, terms={"00": 5.0}))
    assert np.max(np.abs(g.dense())) == 0.0


def test_hamiltonian_generator_rejects_mixed_lengths():
    with pytest.raises(ValueError):
        hamiltonian_generator({"13": 1.0, "031": 2.0})


def test_generator_against_dense_hamiltonian(rng):
    # random multi-term Hamiltonian vs the dense superoperator of H itself
    n = 2
    indexes = list(all_multi_indexes(n))
    terms = {indexes[i]: float(rng.normal()) for i in rng.choice(16, 5, replace=False)}
    h = HamiltonianCoeffs(n=n, terms=terms)
    hmat = sum(c * big_lambda(m) for m, c in terms.items())
    got = hamiltonian_generator(h).dense()
    want = dense_superop(n, hmat, "commutator")
    assert np.max(np.abs(got - want)) < 1e-12


def test_bracket_decompose_known_cases():
    assert bracket_decompose("10", "01", "commutator") == []
    pairs = bracket_decompose("1", "2", "commutator")
    assert len(pairs) == 1
    assert pairs[0][0] == "3"
    assert abs(pairs[0][1] - SQRT2) < 1e-14
    # anticommutator of an element with itself lands on the affine index
    pairs = bracket_decompose("11", "11", "anticommutator")
    assert ("00" in dict(pairs))


def test_bracket_decompose_rejects_mismatched_lengths():
    with pytest.raises(ValueError):
        bracket_decompose("1", "23", "commutator")


@pytest.mark.parametrize("kind", ["commutator", "anticommutator"])
def test_bracket_decompose_against_dense_oracle(kind, rng):
    cases = [("123", "321"), ("102", "213"), ("33", "12"), ("2", "3")]
    indexes = list(all_multi_indexes(3))
    for _ in range(10):
        a, b = rng.choice(len(indexes), 2)
        cases.append((indexes[a], indexes[b]))
    for a, b in cases:
        la, lb = big_lambda(a), big_lambda(b)
        if kind == "commutator":
            want = -1j * (la @ lb - lb @ la)
        else:
            want = la @ lb + lb @ la
        got = sum(c * big_lambda(m) for m, c in bracket_decompose(a, b, kind))
        if isinstance(got, int):  # empty decomposition
            got = np.zeros_like(want)
        assert np.max(np.abs(got - want)) < 1e-12, (a, b, kind)
        order = [index_of(m) for m, _ in bracket_decompose(a, b, kind)]
        assert order == sorted(order)


def test_bracket_closure_never_reaches_affine(rng):
    # commutators of non-affine elements have no component along 0..0
    for n in (2, 3):
        indexes = [m for m in all_multi_indexes(n) if m != "0" * n]
        for _ in range(40):
            i, j = rng.choice(len(indexes), 2)
            for m, _ in bracket_decompose(indexes[i], indexes[j], "commutator"):
                assert m != "0" * n


def test_jacobi_identity_on_sampled_triples(rng):
    # [[a,b],c] + [[b,c],a] + [[c,a],b] = 0, expanded through the decomposition
    indexes = list(all_multi_indexes(2))
    for _ in range(25):
        a, b, c = (indexes[i] for i in rng.choice(16, 3))
        total = np.zeros((4, 4), dtype=complex)
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            inner = bracket_decompose(x, y, "commutator")  # coefficients of -i[x,y]
            for m, coeff in inner:
                for p, d in bracket_decompose(m, z, "commutator"):
                    total += -coeff * d * big_lambda(p)  # (i)(i) from restoring both brackets
        assert np.max(np.abs(total)) < 1e-11


def test_generator_bracket_consistency():
    # Jacobi at the superoperator level: [M_a, M_b] = M_{-i[a,b]}
    a, b = "13", "22"
    Ma, Mb = build_ad(a).dense(), build_ad(b).dense()
    comm = Ma @ Mb - Mb @ Ma
    terms = {m: c for m, c in bracket_decompose(a, b, "commutator")}
    want = hamiltonian_generator(HamiltonianCoeffs(n=2, terms=terms)).dense()
    assert np.max(np.abs(comm - want)) < 1e-13


def kron_bracket_rhs(a_list, b_list, kind):
    """Bracket of Kronecker products, decomposed slot by slot.

    Commutator: (1/2^(n-1)) times the sum over odd-size slot subsets K of the
    Kronecker product with [a,b] in K slots and {a,b} elsewhere; anticommutator:
    the even-size subsets.  Holds for arbitrary square factors with no extra
    phases; the alternating signs of the real builders come from converting the
    i-carrying commutator constants, not from this identity.
    """
    n = len(a_list)
    parity = 1 if kind == "commutator" else 0
    total = 0
    for r in range(parity, n + 1, 2):
        for subset in itertools.combinations(range(n), r):
            factors = []
            for slot in range(n):
                x, y = a_list[slot], b_list[slot]
                factors.append(x @ y - y @ x if slot in subset else x @ y + y @ x)
            total = total + kron_chain(factors)
    return total / 2 ** (n - 1)


@pytest.mark.parametrize("n", [2, 3])
def test_kron_bracket_decomposition_random_factors(n, rng):
    for _ in range(5):
        a_list = [rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(n)]
        b_list = [rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2)) for _ in range(n)]
        A, B = kron_chain(a_list), kron_chain(b_list)
        for kind, want in (("commutator", A @ B - B @ A), ("anticommutator", A @ B + B @ A)):
            got = kron_bracket_rhs(a_list, b_list, kind)
            scale = max(np.max(np.abs(want)), 1.0)
            assert np.max(np.abs(got - want)) / scale < 1e-12


def test_basis_matrix_helper():
    assert np.max(np.abs(basis_matrix("12") - big_lambda("12"))) < 1e-15
