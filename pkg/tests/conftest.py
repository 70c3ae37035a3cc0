"""Shared helpers: seeded random words, parameters, and states."""

from __future__ import annotations

import numpy as np

from braidops import BraidWord, QuantumState, RParams, sigma, virt


def random_params(rng) -> RParams:
    return RParams.from_phases(*rng.uniform(0.0, 2.0 * np.pi, size=4))


def random_params_cd(rng) -> tuple[RParams, tuple[float, float, float]]:
    """Unit parameters with c = d; returns the params and (ta, tb, tc)."""
    ta, tb, tc = rng.uniform(0.0, 2.0 * np.pi, size=3)
    return RParams.from_phases(ta, tb, tc, tc), (float(ta), float(tb), float(tc))


def random_word(rng, strands: int, length: int, virtual_prob: float = 0.0) -> BraidWord:
    letters = []
    for _ in range(length):
        index = int(rng.integers(1, strands))
        if virtual_prob and rng.random() < virtual_prob:
            letters.append(virt(index))
        else:
            letters.append(sigma(index, 1 if rng.random() < 0.5 else -1))
    return BraidWord(strands, tuple(letters))


def random_state(rng, qubits: int) -> QuantumState:
    size = 2**qubits
    return QuantumState(qubits, rng.normal(size=size) + 1j * rng.normal(size=size))
