"""The two-site braiding operator R, the swap P, the phase gate tau.

R on a pair of d-level sites sends |kl> to M[l][k] |lk> for a matrix M of
unit-modulus entries; it is unitary and solves the Yang-Baxter equation

    (R x I)(I x R)(R x I) = (I x R)(R x I)(I x R)

for every such M. The qubit case d = 2 uses the four parameters

    R|00> = a|00>,  R|01> = c|10>,  R|10> = d|01>,  R|11> = b|11>,

i.e. M = [[a, d], [c, b]]. Every operator built here has exactly one
nonzero, unit-modulus entry per column (a basis permutation with phases),
which is what the sparse state engine exploits.

Composition order note: words of gates are read left to right elsewhere in
this package, so "R then P" is the map x -> P(R(x)). In that reading
tau = R then P is the diagonal (a, c, d, b), equivalently R = P @ tau as
numpy matrices. The two orders agree when c = d.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

UNIT_MODULUS_TOL = 1e-9


class NonUnitParameterError(ValueError):
    """A parameter or matrix entry strays from the unit circle."""


@dataclass(frozen=True)
class RParams:
    """Four unit-modulus complex parameters defining the qubit R."""

    a: complex
    b: complex
    c: complex
    d: complex

    @classmethod
    def from_phases(cls, theta_a: float, theta_b: float, theta_c: float, theta_d: float) -> RParams:
        return cls(
            np.exp(1j * theta_a),
            np.exp(1j * theta_b),
            np.exp(1j * theta_c),
            np.exp(1j * theta_d),
        )

    def max_unit_deviation(self) -> float:
        return max(abs(abs(x) - 1.0) for x in (self.a, self.b, self.c, self.d))

    def validate(self, tol: float = UNIT_MODULUS_TOL) -> None:
        dev = self.max_unit_deviation()
        if dev > tol:
            raise NonUnitParameterError(f"parameters deviate from unit modulus by {dev:.3e}")


@dataclass(frozen=True)
class TwoSiteOperator:
    """Permutation-with-phase operator on (C^dim) tensor (C^dim).

    ``target[col]`` is the row of the single nonzero entry in basis column
    ``col`` and ``phase[col]`` its value. Dense materialization is on demand.
    """

    dim: int
    target: tuple[int, ...]
    phase: tuple[complex, ...]

    def __post_init__(self):
        size = self.dim * self.dim
        if len(self.target) != size or len(self.phase) != size:
            raise ValueError("descriptor length must be dim^2")
        if sorted(self.target) != list(range(size)):
            raise ValueError("target must be a permutation of the basis")

    @classmethod
    def identity(cls, dim: int = 2) -> TwoSiteOperator:
        size = dim * dim
        return cls(dim, tuple(range(size)), (1.0 + 0.0j,) * size)

    def dense(self) -> np.ndarray:
        size = self.dim * self.dim
        mat = np.zeros((size, size), dtype=complex)
        for col, (row, ph) in enumerate(zip(self.target, self.phase)):
            mat[row, col] = ph
        return mat

    def inverse(self) -> TwoSiteOperator:
        size = self.dim * self.dim
        target = [0] * size
        phase: list[complex] = [0j] * size
        for col, (row, ph) in enumerate(zip(self.target, self.phase)):
            target[row] = col
            phase[row] = 1.0 / ph
        return TwoSiteOperator(self.dim, tuple(target), tuple(phase))

    def __matmul__(self, other: TwoSiteOperator) -> TwoSiteOperator:
        """Standard composition: (self @ other) x = self(other(x))."""
        if self.dim != other.dim:
            raise ValueError("local dimension mismatch")
        target = tuple(self.target[t] for t in other.target)
        phase = tuple(self.phase[t] * p for t, p in zip(other.target, other.phase))
        return TwoSiteOperator(self.dim, target, phase)


def _validated(params: RParams, nonunit: str) -> None:
    if nonunit not in ("reject", "warn"):
        raise ValueError(f"nonunit must be 'reject' or 'warn', got {nonunit!r}")
    dev = params.max_unit_deviation()
    if dev > UNIT_MODULUS_TOL:
        if nonunit == "reject":
            raise NonUnitParameterError(f"parameters deviate from unit modulus by {dev:.3e}")
        warnings.warn(f"non-unit braiding parameters (deviation {dev:.3e})", stacklevel=3)


def build_R(params: RParams, nonunit: str = "reject") -> TwoSiteOperator:
    """The 4x4 braiding operator for the given parameters."""
    _validated(params, nonunit)
    # columns indexed |00>, |01>, |10>, |11>
    target = (0, 2, 1, 3)
    phase = (params.a, params.c, params.d, params.b)
    return TwoSiteOperator(2, target, phase)


def build_R_from_M(M) -> TwoSiteOperator:
    """Braiding operator on d-level pairs: |kl> -> M[l][k] |lk>."""
    mat = np.asarray(M, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("M must be a square matrix")
    dev = float(np.max(np.abs(np.abs(mat) - 1.0)))
    if dev > UNIT_MODULUS_TOL:
        raise NonUnitParameterError(f"matrix entries deviate from unit modulus by {dev:.3e}")
    n = mat.shape[0]
    target = []
    phase = []
    for k in range(n):
        for l in range(n):
            target.append(l * n + k)
            phase.append(complex(mat[l, k]))
    return TwoSiteOperator(n, tuple(target), tuple(phase))


def build_P(dim: int = 2) -> TwoSiteOperator:
    """The swap |kl> -> |lk> on a pair of d-level sites."""
    target = []
    for k in range(dim):
        for l in range(dim):
            target.append(l * dim + k)
    return TwoSiteOperator(dim, tuple(target), (1.0 + 0.0j,) * (dim * dim))


def build_tau(params: RParams, nonunit: str = "reject") -> TwoSiteOperator:
    """The diagonal phase gate diag(a, c, d, b), i.e. R followed by P."""
    _validated(params, nonunit)
    return TwoSiteOperator(2, (0, 1, 2, 3), (params.a, params.c, params.d, params.b))


def check_unitary(op: TwoSiteOperator) -> float:
    """Max-norm residual of op^dagger op - I; 0 for exactly unitary op."""
    mat = op.dense()
    size = mat.shape[0]
    return float(np.max(np.abs(mat.conj().T @ mat - np.eye(size))))


def check_yang_baxter(op) -> float:
    """Max-norm residual of the two triple products on three sites.

    Accepts a TwoSiteOperator or a dense two-site matrix.
    """
    mat = op.dense() if isinstance(op, TwoSiteOperator) else np.asarray(op, dtype=complex)
    d = round(mat.shape[0] ** 0.5)
    if d * d != mat.shape[0]:
        raise ValueError("operator size is not a perfect square")
    eye = np.eye(d)
    left = np.kron(mat, eye)
    right = np.kron(eye, mat)
    return float(np.max(np.abs(left @ right @ left - right @ left @ right)))
