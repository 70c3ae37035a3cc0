import numpy as np
import pytest

from braidops import (
    BraidWord,
    QuantumState,
    WordOperatorDescriptor,
    apply_generator,
    apply_word,
    build_R,
    compose,
    dense_matrix,
    parse_braid_word,
    sigma,
    virt,
    weighted_trace,
)
from braidops.engine import word_permutation_phase

from conftest import random_params, random_state, random_word


class TestQuantumState:
    def test_normalizes_on_construction(self):
        s = QuantumState(1, [1, 1])
        assert np.allclose(s.amplitudes, [1 / np.sqrt(2), 1 / np.sqrt(2)])
        assert abs(s.norm() - 1) < 1e-12

    def test_rejects_zero_vector(self):
        with pytest.raises(ValueError):
            QuantumState(1, [0, 0])

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            QuantumState(2, [1, 0])

    def test_basis(self):
        s = QuantumState.basis("01")
        assert s.amplitudes[1] == 1
        assert s.basis_labels() == ["00", "01", "10", "11"]
        with pytest.raises(ValueError):
            QuantumState.basis("0a")

    def test_amplitudes_frozen(self):
        s = QuantumState.basis("0")
        with pytest.raises(ValueError):
            s.amplitudes[0] = 0


class TestApplyGenerator:
    def test_action_on_01(self):
        rng = np.random.default_rng(0)
        p = random_params(rng)
        out = apply_generator(QuantumState.basis("01"), sigma(1), p)
        expected = np.zeros(4, dtype=complex)
        expected[2] = p.c
        assert np.allclose(out.amplitudes, expected)

    def test_action_on_00(self):
        rng = np.random.default_rng(1)
        p = random_params(rng)
        out = apply_generator(QuantumState.basis("00"), sigma(1), p)
        assert abs(out.amplitudes[0] - p.a) < 1e-12

    def test_action_on_10_and_11(self):
        rng = np.random.default_rng(2)
        p = random_params(rng)
        out10 = apply_generator(QuantumState.basis("10"), sigma(1), p)
        out11 = apply_generator(QuantumState.basis("11"), sigma(1), p)
        assert abs(out10.amplitudes[1] - p.d) < 1e-12
        assert abs(out11.amplitudes[3] - p.b) < 1e-12

    def test_virtual_swaps_bits(self):
        rng = np.random.default_rng(3)
        p = random_params(rng)
        out = apply_generator(QuantumState.basis("010"), virt(2), p)
        assert out.amplitudes[int("001", 2)] == 1
        unchanged = apply_generator(QuantumState.basis("011"), virt(2), p)
        assert unchanged.amplitudes[int("011", 2)] == 1

    def test_index_out_of_range(self):
        rng = np.random.default_rng(4)
        with pytest.raises(ValueError):
            apply_generator(QuantumState.basis("01"), sigma(2), random_params(rng))


class TestApplyWord:
    def test_inverse_pair_is_identity(self):
        rng = np.random.default_rng(5)
        p = random_params(rng)
        s = random_state(rng, 3)
        w = BraidWord(3, (sigma(2), sigma(2, -1)))
        out = apply_word(s, WordOperatorDescriptor(word=w, params=p))
        assert np.max(np.abs(out.amplitudes - s.amplitudes)) < 1e-12

    def test_braid_relation_on_states(self):
        rng = np.random.default_rng(6)
        p = random_params(rng)
        s = random_state(rng, 3)
        lhs = BraidWord(3, (sigma(1), sigma(2), sigma(1)))
        rhs = BraidWord(3, (sigma(2), sigma(1), sigma(2)))
        out1 = apply_word(s, WordOperatorDescriptor(word=lhs, params=p))
        out2 = apply_word(s, WordOperatorDescriptor(word=rhs, params=p))
        assert np.max(np.abs(out1.amplitudes - out2.amplitudes)) < 1e-12

    def test_hopf_word_on_01(self):
        rng = np.random.default_rng(7)
        p = random_params(rng)
        w = parse_braid_word("B2; s1 s1")
        out = apply_word(QuantumState.basis("01"), WordOperatorDescriptor(word=w, params=p))
        assert abs(out.amplitudes[1] - p.c * p.d) < 1e-12

    def test_homomorphism(self):
        rng = np.random.default_rng(8)
        p = random_params(rng)
        for _ in range(20):
            w1 = random_word(rng, 4, 5, virtual_prob=0.3)
            w2 = random_word(rng, 4, 5, virtual_prob=0.3)
            s = random_state(rng, 4)
            joined = apply_word(s, WordOperatorDescriptor(word=compose(w1, w2), params=p))
            stepped = apply_word(
                apply_word(s, WordOperatorDescriptor(word=w1, params=p)),
                WordOperatorDescriptor(word=w2, params=p),
            )
            assert np.max(np.abs(joined.amplitudes - stepped.amplitudes)) < 1e-12

    def test_norm_preserved(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            p = random_params(rng)
            w = random_word(rng, 5, 8, virtual_prob=0.2)
            out = apply_word(random_state(rng, 5), WordOperatorDescriptor(word=w, params=p))
            assert abs(out.norm() - 1) < 1e-9

    def test_descriptor_validation(self):
        rng = np.random.default_rng(10)
        p = random_params(rng)
        with pytest.raises(ValueError):
            WordOperatorDescriptor(word=BraidWord(3), params=p, qubits=2)
        d = WordOperatorDescriptor(word=BraidWord(3), params=p)
        with pytest.raises(ValueError):
            apply_word(QuantumState.basis("01"), d)

    def test_permutation_phase_closure(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            p = random_params(rng)
            w = random_word(rng, 4, 6, virtual_prob=0.3)
            bits = format(int(rng.integers(0, 16)), "04b")
            out = apply_word(QuantumState.basis(bits), WordOperatorDescriptor(word=w, params=p))
            nonzero = np.abs(out.amplitudes) > 1e-12
            assert np.count_nonzero(nonzero) == 1
            assert abs(np.abs(out.amplitudes[nonzero][0]) - 1) < 1e-9


class TestDenseMatrix:
    def test_identity_word(self):
        rng = np.random.default_rng(12)
        d = WordOperatorDescriptor(word=BraidWord(3), params=random_params(rng))
        assert np.allclose(dense_matrix(d), np.eye(8))

    def test_single_letter_is_R(self):
        rng = np.random.default_rng(13)
        p = random_params(rng)
        d = WordOperatorDescriptor(word=BraidWord(2, (sigma(1),)), params=p)
        assert np.allclose(dense_matrix(d), build_R(p).dense())

    def test_braid_relation_dense(self):
        rng = np.random.default_rng(14)
        for n in (3, 4):
            p = random_params(rng)
            for i in range(1, n - 1):
                lhs = BraidWord(n, (sigma(i), sigma(i + 1), sigma(i)))
                rhs = BraidWord(n, (sigma(i + 1), sigma(i), sigma(i + 1)))
                diff = dense_matrix(WordOperatorDescriptor(word=lhs, params=p)) - dense_matrix(
                    WordOperatorDescriptor(word=rhs, params=p)
                )
                assert np.max(np.abs(diff)) < 1e-12

    def test_sparse_dense_agreement(self):
        rng = np.random.default_rng(15)
        for _ in range(50):
            n = int(rng.integers(2, 7))
            p = random_params(rng)
            w = random_word(rng, n, int(rng.integers(0, 9)), virtual_prob=0.3)
            d = WordOperatorDescriptor(word=w, params=p)
            s = random_state(rng, n)
            sparse = apply_word(s, d).amplitudes
            dense = dense_matrix(d) @ s.amplitudes
            assert np.max(np.abs(sparse - dense)) < 1e-10

    def test_qubit_guard(self):
        rng = np.random.default_rng(16)
        with pytest.raises(ValueError, match="limited"):
            dense_matrix(WordOperatorDescriptor(word=BraidWord(11), params=random_params(rng)))


class TestWeightedTrace:
    def test_identity_single_qubit(self):
        rng = np.random.default_rng(17)
        p = random_params(rng)
        q = np.exp(0.37j)
        d = WordOperatorDescriptor(word=BraidWord(1), params=p)
        assert abs(weighted_trace(d, (q, 1 / q)) - (q + 1 / q)) < 1e-12

    def test_hopf_word_formula(self):
        rng = np.random.default_rng(18)
        p = random_params(rng)
        q = np.exp(0.911j)
        d = WordOperatorDescriptor(word=parse_braid_word("B2; s1 s1"), params=p)
        expected = p.a**2 * q**2 + p.b**2 / q**2 + 2 * p.c * p.d
        assert abs(weighted_trace(d, (q, 1 / q)) - expected) < 1e-12

    def test_matches_dense_diagonal_sum(self):
        rng = np.random.default_rng(19)
        for _ in range(10):
            n = int(rng.integers(2, 5))
            p = random_params(rng)
            w = random_word(rng, n, 6, virtual_prob=0.2)
            d = WordOperatorDescriptor(word=w, params=p)
            mu0, mu1 = np.exp(0.21j), np.exp(-0.21j)
            diag = np.diag(dense_matrix(d))
            expected = 0j
            for x in range(2**n):
                weight = 1.0 + 0j
                for k in range(n):
                    weight *= mu1 if (x >> (n - 1 - k)) & 1 else mu0
                expected += weight * diag[x]
            assert abs(weighted_trace(d, (mu0, mu1)) - expected) < 1e-10

    def test_word_permutation_phase_consistency(self):
        rng = np.random.default_rng(20)
        p = random_params(rng)
        w = random_word(rng, 3, 5, virtual_prob=0.3)
        d = WordOperatorDescriptor(word=w, params=p)
        perm, phase = word_permutation_phase(d)
        dense = dense_matrix(d)
        for x in range(8):
            assert abs(dense[perm[x], x] - phase[x]) < 1e-12
