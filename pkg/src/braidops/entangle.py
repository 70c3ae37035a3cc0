"""Entanglement detection and the GHZ measurement-basis demonstration.

Two detectors are provided for two-qubit states: the determinant test
(X|00> + Y|01> + Z|10> + W|11> is a product state iff XW = YZ) and the
Schmidt rank across a bipartition (rank 1 iff product). They must agree,
and the test suite holds them to that.

The GHZ demonstration measures one qubit of (|000> - |111>)/sqrt(2) in the
Z and in the X basis: Z outcomes leave the other two qubits in a product
state, X outcomes leave them entangled, with all outcome probabilities 1/2.
Which entanglement pattern the state exhibits depends on the measurement
basis chosen.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .engine import QuantumState, apply_generator
from .rmatrix import RParams
from .braids import sigma

RANK_TOL = 1e-9
ZERO_PROB = 1e-12


class EngineConsistencyError(RuntimeError):
    """A postcondition that only an engine bug can violate failed."""


@dataclass(frozen=True)
class Bipartition:
    """A nonempty proper subset of qubit positions 1..n (the left side)."""

    left: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "left", frozenset(self.left))
        if not self.left:
            raise ValueError("left side of a bipartition cannot be empty")

    def validate(self, qubits: int) -> None:
        if any(p < 1 or p > qubits for p in self.left):
            raise ValueError(f"cut positions {sorted(self.left)} out of range for {qubits} qubits")
        if len(self.left) == qubits:
            raise ValueError("left side of a bipartition must be a proper subset")


@dataclass(frozen=True)
class ProductTestResult:
    entangled: bool
    discriminant: complex


@dataclass(frozen=True)
class MeasurementRecord:
    """One projective outcome: probability and the normalized post-state.

    ``post_state`` is None for a zero-probability outcome (the flagged
    empty record).
    """

    qubit: int
    basis: str
    outcome: int
    probability: float
    post_state: QuantumState | None


@dataclass(frozen=True)
class LemmaDemoResult:
    entangled: bool
    state: QuantumState
    discriminant: complex


def product_test_2q(state: QuantumState, tol: float = RANK_TOL) -> ProductTestResult:
    """Determinant test on a two-qubit state: entangled iff |XW - YZ| > tol."""
    if state.qubits != 2:
        raise ValueError(f"product_test_2q needs a 2-qubit state, got {state.qubits} qubits")
    x, y, z, w = state.amplitudes
    disc = x * w - y * z
    return ProductTestResult(entangled=bool(abs(disc) > tol), discriminant=complex(disc))


def schmidt_rank(state: QuantumState, cut, tol: float = RANK_TOL) -> int:
    """Rank of the amplitude matrix across the cut; 1 iff product state.

    ``cut`` is a Bipartition or an iterable of left-side qubit positions.
    A singular value counts if it exceeds tol times the largest one.
    """
    if not isinstance(cut, Bipartition):
        cut = Bipartition(frozenset(cut))
    cut.validate(state.qubits)
    n = state.qubits
    left = sorted(cut.left)
    right = [p for p in range(1, n + 1) if p not in cut.left]
    tensor = state.amplitudes.reshape([2] * n)
    order = [p - 1 for p in left + right]
    matrix = tensor.transpose(order).reshape(2 ** len(left), 2 ** len(right))
    singular = np.linalg.svd(matrix, compute_uv=False)
    return int(np.sum(singular > tol * singular[0]))


def ghz_state() -> QuantumState:
    """(|000> - |111>)/sqrt(2)."""
    amps = np.zeros(8, dtype=complex)
    amps[0] = 1 / math.sqrt(2)
    amps[7] = -1 / math.sqrt(2)
    return QuantumState(3, amps)


def lemma_demo(params: RParams, tol: float = RANK_TOL) -> LemmaDemoResult:
    """Apply R to (|0>+|1>) tensor (|0>+|1>) and test for entanglement.

    The resulting state is (a|00> + c|10> + d|01> + b|11>)/2, so its
    determinant discriminant is (ab - cd)/4: R entangles exactly when
    ab != cd. That equivalence is asserted here as a postcondition.
    """
    params.validate()
    plus_plus = QuantumState(2, np.ones(4, dtype=complex))
    state = apply_generator(plus_plus, sigma(1), params)
    result = product_test_2q(state, tol / 4.0)
    expected = abs(params.a * params.b - params.c * params.d) > tol
    if result.entangled != expected:
        raise EngineConsistencyError(
            f"determinant test disagrees with ab - cd = "
            f"{params.a * params.b - params.c * params.d}"
        )
    return LemmaDemoResult(entangled=result.entangled, state=state, discriminant=result.discriminant)


def measure_qubit(state: QuantumState, qubit: int, basis: str) -> tuple[MeasurementRecord, MeasurementRecord]:
    """Project one qubit in the Z or X basis; report both outcomes.

    X outcomes: 0 projects onto (|0>+|1>)/sqrt(2), 1 onto (|0>-|1>)/sqrt(2).
    The post-state lives on the remaining n-1 qubits.
    """
    n = state.qubits
    if n < 2:
        raise ValueError("measurement needs at least 2 qubits to leave a post-state")
    if not 1 <= qubit <= n:
        raise ValueError(f"qubit {qubit} out of range for {n} qubits")
    if basis not in ("Z", "X"):
        raise ValueError(f"basis must be 'Z' or 'X', got {basis!r}")

    tensor = state.amplitudes.reshape([2] * n)
    sub0 = np.take(tensor, 0, axis=qubit - 1).reshape(-1)
    sub1 = np.take(tensor, 1, axis=qubit - 1).reshape(-1)
    if basis == "X":
        sub0, sub1 = (sub0 + sub1) / math.sqrt(2), (sub0 - sub1) / math.sqrt(2)

    records = []
    for outcome, vec in ((0, sub0), (1, sub1)):
        prob = float(np.sum(np.abs(vec) ** 2))
        post = QuantumState(n - 1, vec) if prob > ZERO_PROB else None
        records.append(MeasurementRecord(qubit, basis, outcome, prob, post))
    total = records[0].probability + records[1].probability
    if abs(total - 1.0) > 1e-9:
        raise EngineConsistencyError(f"outcome probabilities sum to {total}, not 1")
    return records[0], records[1]


def aravind_demo() -> dict:
    """Measure each GHZ qubit in Z and in X and classify the post-states.

    Asserts that every Z post-state is a product (Schmidt rank 1), every X
    post-state is entangled (rank 2), and all probabilities are 1/2. Returns
    a JSON-friendly report.
    """
    state = ghz_state()
    sections = []
    for basis, expected_rank in (("Z", 1), ("X", 2)):
        rows = []
        for qubit in (1, 2, 3):
            for record in measure_qubit(state, qubit, basis):
                if record.post_state is None:
                    raise EngineConsistencyError(
                        f"zero-probability outcome {record.outcome} for qubit {qubit} in {basis}"
                    )
                if abs(record.probability - 0.5) > 1e-9:
                    raise EngineConsistencyError(
                        f"probability {record.probability} for qubit {qubit} in {basis} is not 1/2"
                    )
                rank = schmidt_rank(record.post_state, {1})
                if rank != expected_rank:
                    raise EngineConsistencyError(
                        f"{basis}-basis post-state rank {rank}, expected {expected_rank}"
                    )
                rows.append(
                    {
                        "qubit": qubit,
                        "outcome": record.outcome,
                        "probability": record.probability,
                        "post_rank": rank,
                    }
                )
        sections.append({"basis": basis, "post_states": "product" if expected_rank == 1 else "entangled", "records": rows})
    return {"state": "(|000> - |111>)/sqrt(2)", "sections": sections}
