"""Sparse n-qubit engine for braid-word operators.

A braid word on n strands acts on n qubits: each classical letter applies
the two-site braiding operator R (or its inverse) to the qubit pair at its
index, each virtual letter swaps the pair. Because R maps every basis state
to a single basis state with a phase, a letter is applied in O(2^n) by index
arithmetic; no matrix is ever built on the fast path. A dense Kronecker
construction is kept as the cross-check oracle.

Qubit 1 is the most significant bit of the basis index, matching the left
to right reading of ket strings like |01>.

Everything here is a pure function over immutable values; descriptors can be
shared across threads, and the basis sweep in :func:`weighted_trace` is a
fixed-order reduction, so results are deterministic however it is chunked.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .braids import BraidWord, Generator
from .rmatrix import RParams, build_P, build_R

DENSE_QUBIT_LIMIT = 10
NORM_TOL = 1e-9


class QuantumState:
    """2^n complex amplitudes, unit norm, qubit 1 = most significant bit.

    Construction normalizes (inputs like |0> + |1> are accepted and scaled);
    a zero vector is rejected. The amplitude array is frozen after
    construction.
    """

    __slots__ = ("qubits", "amplitudes")

    def __init__(self, qubits: int, amplitudes):
        if qubits < 1:
            raise ValueError(f"qubit count must be >= 1, got {qubits}")
        amps = np.asarray(amplitudes, dtype=complex).reshape(-1).copy()
        if amps.shape[0] != 2**qubits:
            raise ValueError(f"expected {2**qubits} amplitudes, got {amps.shape[0]}")
        norm = float(np.linalg.norm(amps))
        if norm < 1e-12:
            raise ValueError("cannot normalize a zero state")
        amps /= norm
        amps.setflags(write=False)
        self.qubits = qubits
        self.amplitudes = amps

    @classmethod
    def basis(cls, bits: str) -> QuantumState:
        """The computational basis state |bits>, e.g. basis("01")."""
        if not bits or any(ch not in "01" for ch in bits):
            raise ValueError(f"bits must be a nonempty 0/1 string, got {bits!r}")
        amps = np.zeros(2 ** len(bits), dtype=complex)
        amps[int(bits, 2)] = 1.0
        return cls(len(bits), amps)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def basis_labels(self) -> list[str]:
        return [format(x, f"0{self.qubits}b") for x in range(2**self.qubits)]

    def __repr__(self) -> str:
        return f"QuantumState(qubits={self.qubits})"


@dataclass(frozen=True)
class WordOperatorDescriptor:
    """A braid word together with the R parameters it acts with."""

    word: BraidWord
    params: RParams
    qubits: int = 0

    def __post_init__(self):
        if self.qubits == 0:
            object.__setattr__(self, "qubits", self.word.strands)
        if self.word.strands != self.qubits:
            raise ValueError(
                f"word on {self.word.strands} strands cannot act on {self.qubits} qubits"
            )


def _letter_tables(g: Generator, params: RParams):
    """Phase lookup by input bit pair (b_k, b_k+1) -> index 2*b_k + b_k+1."""
    if not g.is_classical:
        return None
    a, b, c, d = params.a, params.b, params.c, params.d
    if g.sign == 1:
        return np.array([a, c, d, b], dtype=complex)
    return np.array([1 / a, 1 / d, 1 / c, 1 / b], dtype=complex)


def apply_generator(state: QuantumState, g: Generator, params: RParams) -> QuantumState:
    """Apply one letter to the qubit pair (g.index, g.index + 1)."""
    n = state.qubits
    if g.index > n - 1:
        raise ValueError(f"generator index {g.index} out of range for {n} qubits")
    sk = n - g.index          # bit position of qubit g.index, counted from LSB
    sk1 = sk - 1
    idx = np.arange(2**n)
    bk = (idx >> sk) & 1
    bk1 = (idx >> sk1) & 1
    swapped = idx ^ ((bk ^ bk1) * ((1 << sk) | (1 << sk1)))
    out = np.empty(2**n, dtype=complex)
    table = _letter_tables(g, params)
    if table is None:
        out[swapped] = state.amplitudes
    else:
        out[swapped] = state.amplitudes * table[(bk << 1) | bk1]
    return QuantumState(n, out)


def apply_word(state: QuantumState, descriptor: WordOperatorDescriptor) -> QuantumState:
    """Left-to-right fold of :func:`apply_generator` over the word."""
    if descriptor.qubits != state.qubits:
        raise ValueError(
            f"descriptor acts on {descriptor.qubits} qubits, state has {state.qubits}"
        )
    out = state
    for g in descriptor.word.letters:
        out = apply_generator(out, g, descriptor.params)
    return out


def word_permutation_phase(descriptor: WordOperatorDescriptor) -> tuple[np.ndarray, np.ndarray]:
    """The word operator as a basis permutation with phases.

    Returns (perm, phase) with operator |x> = phase[x] |perm[x]> for every
    basis index x. O(2^n * word length).
    """
    n = descriptor.qubits
    perm = np.arange(2**n)
    phase = np.ones(2**n, dtype=complex)
    for g in descriptor.word.letters:
        sk = n - g.index
        sk1 = sk - 1
        bk = (perm >> sk) & 1
        bk1 = (perm >> sk1) & 1
        table = _letter_tables(g, descriptor.params)
        if table is not None:
            phase = phase * table[(bk << 1) | bk1]
        perm = perm ^ ((bk ^ bk1) * ((1 << sk) | (1 << sk1)))
    return perm, phase


def dense_matrix(descriptor: WordOperatorDescriptor) -> np.ndarray:
    """Explicit Kronecker-product construction of the word operator.

    Oracle for the sparse path; guarded to n <= 10 qubits.
    """
    n = descriptor.qubits
    if n > DENSE_QUBIT_LIMIT:
        raise ValueError(f"dense construction limited to {DENSE_QUBIT_LIMIT} qubits, got {n}")
    total = np.eye(2**n, dtype=complex)
    r = build_R(descriptor.params)
    r_dense = r.dense()
    r_inv_dense = r.inverse().dense()
    p_dense = build_P().dense()
    for g in descriptor.word.letters:
        if not g.is_classical:
            site = p_dense
        elif g.sign == 1:
            site = r_dense
        else:
            site = r_inv_dense
        full = np.kron(np.eye(2 ** (g.index - 1)), np.kron(site, np.eye(2 ** (n - g.index - 1))))
        total = full @ total
    return total


def weighted_trace(descriptor: WordOperatorDescriptor, mu: tuple[complex, complex]) -> complex:
    """Sum over basis states x of (prod_k mu[bit_k(x)]) <x| word |x>.

    Only basis states fixed by the word's underlying permutation contribute;
    their diagonal entries are the accumulated phases, so the whole trace
    costs O(2^n * word length).
    """
    n = descriptor.qubits
    mu0, mu1 = complex(mu[0]), complex(mu[1])
    perm, phase = word_permutation_phase(descriptor)
    idx = np.arange(2**n)
    weights = np.ones(2**n, dtype=complex)
    for k in range(n):
        bit = (idx >> (n - 1 - k)) & 1
        weights = weights * np.where(bit == 1, mu1, mu0)
    fixed = perm == idx
    return complex(np.sum(weights[fixed] * phase[fixed]))
