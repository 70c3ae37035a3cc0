import numpy as np
import pytest

from braidops import (
    Bipartition,
    EngineConsistencyError,
    QuantumState,
    RParams,
    aravind_demo,
    ghz_state,
    lemma_demo,
    measure_qubit,
    product_test_2q,
    schmidt_rank,
)

from conftest import random_params, random_state


def bell() -> QuantumState:
    return QuantumState(2, [1, 0, 0, 1])


class TestProductTest:
    def test_bell_state(self):
        result = product_test_2q(bell())
        assert result.entangled
        assert abs(result.discriminant - 0.5) < 1e-12

    def test_basis_state_is_product(self):
        result = product_test_2q(QuantumState.basis("01"))
        assert not result.entangled
        assert result.discriminant == 0

    def test_discriminant_proportional_to_ab_minus_cd(self):
        rng = np.random.default_rng(0)
        for _ in range(50):
            p = random_params(rng)
            amps = np.array([p.a, p.d, p.c, p.b]) / 2
            result = product_test_2q(QuantumState(2, amps))
            assert abs(result.discriminant - (p.a * p.b - p.c * p.d) / 4) < 1e-12

    def test_wrong_qubit_count(self):
        with pytest.raises(ValueError):
            product_test_2q(ghz_state())


class TestSchmidtRank:
    def test_product_state_rank_one(self):
        for cut in ({1}, {2}, {3}, {1, 2}, {1, 3}):
            assert schmidt_rank(QuantumState.basis("000"), cut) == 1

    def test_ghz_every_single_cut_rank_two(self):
        g = ghz_state()
        for qubit in (1, 2, 3):
            assert schmidt_rank(g, {qubit}) == 2

    def test_singlet_rank_two(self):
        singlet = QuantumState(2, [0, 1, -1, 0])
        assert schmidt_rank(singlet, {1}) == 2

    def test_invalid_cuts(self):
        with pytest.raises(ValueError):
            schmidt_rank(bell(), set())
        with pytest.raises(ValueError):
            schmidt_rank(bell(), {1, 2})
        with pytest.raises(ValueError):
            schmidt_rank(bell(), {3})

    def test_agrees_with_product_test(self):
        rng = np.random.default_rng(1)
        for _ in range(300):
            s = random_state(rng, 2)
            by_rank = schmidt_rank(s, {1}) == 2
            by_det = product_test_2q(s).entangled
            assert by_rank == by_det

    def test_invariant_under_local_phases(self):
        rng = np.random.default_rng(2)
        for _ in range(50):
            s = random_state(rng, 3)
            cut = Bipartition(frozenset({int(rng.integers(1, 4))}))
            before = schmidt_rank(s, cut)
            # apply diag(e^{i alpha}, e^{i beta}) on one qubit
            qubit = int(rng.integers(1, 4))
            alpha, beta = rng.uniform(0, 2 * np.pi, 2)
            tensor = s.amplitudes.reshape([2] * 3).copy()
            index = [slice(None)] * 3
            index[qubit - 1] = 0
            tensor[tuple(index)] *= np.exp(1j * alpha)
            index[qubit - 1] = 1
            tensor[tuple(index)] *= np.exp(1j * beta)
            after = schmidt_rank(QuantumState(3, tensor.reshape(-1)), cut)
            assert before == after


class TestGhzState:
    def test_amplitudes(self):
        g = ghz_state()
        assert abs(g.amplitudes[0] - 1 / np.sqrt(2)) < 1e-12
        assert abs(g.amplitudes[7] + 1 / np.sqrt(2)) < 1e-12
        assert np.count_nonzero(g.amplitudes) == 2
        assert abs(g.norm() - 1) < 1e-12


class TestMeasureQubit:
    def test_ghz_z_disentangles(self):
        g = ghz_state()
        r0, r1 = measure_qubit(g, 1, "Z")
        assert abs(r0.probability - 0.5) < 1e-9
        assert abs(r1.probability - 0.5) < 1e-9
        assert np.allclose(r0.post_state.amplitudes, QuantumState.basis("00").amplitudes)
        assert np.allclose(r1.post_state.amplitudes, QuantumState.basis("11").amplitudes)
        assert schmidt_rank(r0.post_state, {1}) == 1
        assert schmidt_rank(r1.post_state, {1}) == 1

    def test_ghz_x_keeps_entanglement(self):
        g = ghz_state()
        r0, r1 = measure_qubit(g, 1, "X")
        expected0 = np.array([1, 0, 0, -1]) / np.sqrt(2)
        assert np.allclose(r0.post_state.amplitudes, expected0)
        assert schmidt_rank(r0.post_state, {1}) == 2
        assert schmidt_rank(r1.post_state, {1}) == 2

    def test_zero_probability_outcome_flagged(self):
        r0, r1 = measure_qubit(QuantumState.basis("00"), 1, "Z")
        assert r0.probability == 1.0
        assert r1.probability == 0.0
        assert r1.post_state is None
        assert r0.post_state is not None

    def test_probabilities_sum_to_one(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            n = int(rng.integers(2, 5))
            s = random_state(rng, n)
            qubit = int(rng.integers(1, n + 1))
            for basis in ("Z", "X"):
                r0, r1 = measure_qubit(s, qubit, basis)
                assert abs(r0.probability + r1.probability - 1) < 1e-9
                for r in (r0, r1):
                    if r.post_state is not None:
                        assert abs(r.post_state.norm() - 1) < 1e-9

    def test_validation(self):
        with pytest.raises(ValueError):
            measure_qubit(QuantumState.basis("0"), 1, "Z")
        with pytest.raises(ValueError):
            measure_qubit(bell(), 3, "Z")
        with pytest.raises(ValueError):
            measure_qubit(bell(), 1, "Y")


class TestLemmaDemo:
    def test_swap_params_give_product(self):
        result = lemma_demo(RParams(1, 1, 1, 1))
        assert not result.entangled

    def test_phase_params_entangle(self):
        result = lemma_demo(RParams(1j, 1j, 1, 1))
        assert result.entangled
        assert abs(result.discriminant - (-0.5)) < 1e-12

    def test_ab_equals_cd_family_is_product(self):
        for theta in (0.4, 1.3, 2.9):
            p = RParams.from_phases(theta, -theta, 0.0, 0.0)
            assert not lemma_demo(p).entangled

    def test_postcondition_over_random_draws(self):
        rng = np.random.default_rng(4)
        for _ in range(200):
            p = random_params(rng)
            result = lemma_demo(p)
            assert result.entangled == (abs(p.a * p.b - p.c * p.d) > 1e-9)
            assert (schmidt_rank(result.state, {1}) == 2) == result.entangled


class TestAravindDemo:
    def test_report_structure_and_claims(self):
        report = aravind_demo()
        assert [s["basis"] for s in report["sections"]] == ["Z", "X"]
        for section in report["sections"]:
            assert len(section["records"]) == 6
            expected_rank = 1 if section["basis"] == "Z" else 2
            for record in section["records"]:
                assert record["post_rank"] == expected_rank
                assert abs(record["probability"] - 0.5) < 1e-9

    def test_engine_error_type_exists(self):
        assert issubclass(EngineConsistencyError, RuntimeError)
