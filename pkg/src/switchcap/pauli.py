"""Exact algebra of Pauli operators, Pauli channels, and small density matrices.

Conventions used throughout the package:

* Pauli operators are indexed ``0..3`` for ``I, X, Y, Z``.
* Products carry a phase ``i**k`` with ``k`` in ``0..3``; the sign table is
  fixed by the convention ``X @ Z == -i * Y`` (equivalently ``Y == i * X @ Z``).
  Any consistent convention produces the same channels, because conjugation
  ``s @ rho @ s.conj().T`` is blind to global phase.
* Multi-qubit states live on tensor factors ordered left to right, so qubit 0
  is the leftmost (most significant) factor of every ``np.kron`` product.
* Bell states are indexed by the decimal value of a two-bit label ``b0 b1``,
  where ``b0`` toggles a Z on the first qubit and ``b1`` toggles an X::

      0 -> |Phi+>   1 -> |Psi+>   2 -> |Phi->   3 -> |Psi->

  Under that labelling, an X error on the first qubit flips ``b1``, a Z error
  flips ``b0``, and a Y error flips both.

Density matrices and Bell-outcome distributions are plain ``np.ndarray``
values; ``check_density_matrix`` / ``check_distribution`` enforce their
invariants at module boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "PAULI_MATRICES",
    "BELL_VECTORS",
    "OUTCOME_OF_PAULI",
    "SignedPauli",
    "PauliChannel",
    "pauli_product",
    "anticommutes",
    "check_density_matrix",
    "check_distribution",
    "epr_state",
    "bell_projector",
    "bell_measure",
    "channel_apply",
    "epr_transition",
]

_I = np.eye(2, dtype=np.complex128)
_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)

PAULI_MATRICES = np.stack([_I, _X, _Y, _Z])
PAULI_MATRICES.flags.writeable = False

# sigma_a @ sigma_b = i**PRODUCT_PHASE[a,b] * sigma_{PRODUCT_INDEX[a,b]},
# with the X @ Z = -i Y convention.  Validated against PAULI_MATRICES in the
# test suite.
PRODUCT_INDEX = np.array(
    [
        [0, 1, 2, 3],
        [1, 0, 3, 2],
        [2, 3, 0, 1],
        [3, 2, 1, 0],
    ],
    dtype=np.int64,
)
PRODUCT_PHASE = np.array(
    [
        [0, 0, 0, 0],
        [0, 0, 1, 3],
        [0, 3, 0, 1],
        [0, 1, 3, 0],
    ],
    dtype=np.int64,
)
PRODUCT_INDEX.flags.writeable = False
PRODUCT_PHASE.flags.writeable = False

# Bell cell hit by each Pauli error on the first EPR qubit: I keeps the label,
# X flips b1, Y flips both bits, Z flips b0.
OUTCOME_OF_PAULI = np.array([0, 1, 3, 2], dtype=np.int64)
OUTCOME_OF_PAULI.flags.writeable = False

NORMALIZATION_ATOL = 1e-12
CONSTRUCTION_ATOL = 1e-9
PSD_EIGENVALUE_FLOOR = -1e-10


def _check_index(a: int) -> int:
    a = int(a)
    if a not in (0, 1, 2, 3):
        raise ValueError(f"Pauli index must be in 0..3, got {a}")
    return a


@dataclass(frozen=True)
class SignedPauli:
    """A Pauli operator together with a phase exponent: ``i**phase * sigma_index``."""

    index: int
    phase: int

    def __post_init__(self) -> None:
        _check_index(self.index)
        if self.phase not in (0, 1, 2, 3):
            raise ValueError(f"phase exponent must be in 0..3, got {self.phase}")

    def matrix(self) -> np.ndarray:
        return (1j**self.phase) * PAULI_MATRICES[self.index]


def pauli_product(a: int, b: int) -> SignedPauli:
    """Multiply two Pauli operators: ``sigma_a @ sigma_b = i**k * sigma_c``."""
    a, b = _check_index(a), _check_index(b)
    return SignedPauli(int(PRODUCT_INDEX[a, b]), int(PRODUCT_PHASE[a, b]))


def anticommutes(a: int, b: int) -> bool:
    """True iff ``sigma_a`` and ``sigma_b`` anti-commute (distinct, neither identity)."""
    a, b = _check_index(a), _check_index(b)
    return a != b and a != 0 and b != 0


@dataclass(frozen=True)
class PauliChannel:
    """A qubit channel applying I, X, Y, Z with probabilities ``probs``.

    Construction rejects probability vectors whose sum is off by more than
    1e-9 and silently renormalizes smaller float drift; entries must be
    nonnegative.  The stored array is read-only, so instances are safe to
    share between threads.
    """

    probs: np.ndarray

    def __post_init__(self) -> None:
        probs = np.asarray(self.probs, dtype=np.float64)
        if probs.shape != (4,):
            raise ValueError(f"channel needs a probability 4-vector, got shape {probs.shape}")
        if np.any(probs < 0):
            raise ValueError(f"channel probabilities must be nonnegative: {probs}")
        total = float(probs.sum())
        if abs(total - 1.0) > CONSTRUCTION_ATOL:
            raise ValueError(f"channel probabilities sum to {total}, not 1")
        probs = probs.copy()
        if abs(total - 1.0) > NORMALIZATION_ATOL:
            probs /= total
        probs.flags.writeable = False
        object.__setattr__(self, "probs", probs)

    @classmethod
    def identity(cls) -> "PauliChannel":
        return cls(np.array([1.0, 0.0, 0.0, 0.0]))

    @classmethod
    def bit_flip(cls, p: float) -> "PauliChannel":
        """Applies X with probability ``p``."""
        return cls(np.array([1.0 - p, p, 0.0, 0.0]))

    @classmethod
    def phase_flip(cls, p: float) -> "PauliChannel":
        """Applies Z with probability ``p``."""
        return cls(np.array([1.0 - p, 0.0, 0.0, p]))

    @classmethod
    def depolarizing(cls, p: float) -> "PauliChannel":
        """Applies each of X, Y, Z with probability ``p/3``."""
        return cls(np.array([1.0 - p, p / 3.0, p / 3.0, p / 3.0]))

    @classmethod
    def xy_mixture(cls, p: float) -> "PauliChannel":
        """Applies X with probability ``1-p`` and Y with probability ``p``.

        Entanglement breaking at ``p = 1/2``.
        """
        return cls(np.array([0.0, 1.0 - p, p, 0.0]))


def check_distribution(t: np.ndarray, *, atol: float = NORMALIZATION_ATOL) -> np.ndarray:
    """Validate a Bell-outcome probability 4-vector and return it as float64."""
    t = np.asarray(t, dtype=np.float64)
    if t.shape != (4,):
        raise ValueError(f"expected a probability 4-vector, got shape {t.shape}")
    if np.any(t < -atol):
        raise ValueError(f"negative probability in {t}")
    if abs(float(t.sum()) - 1.0) > atol:
        raise ValueError(f"probabilities sum to {t.sum()}, not 1")
    return t


def check_density_matrix(rho: np.ndarray) -> np.ndarray:
    """Validate Hermiticity, unit trace, and positivity of a 1-3 qubit state."""
    rho = np.asarray(rho, dtype=np.complex128)
    dim = rho.shape[0]
    if rho.ndim != 2 or rho.shape != (dim, dim) or dim not in (2, 4, 8):
        raise ValueError(f"expected a 2/4/8-dimensional square matrix, got shape {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > NORMALIZATION_ATOL:
        raise ValueError("density matrix is not Hermitian")
    if abs(np.trace(rho).real - 1.0) > NORMALIZATION_ATOL:
        raise ValueError(f"density matrix has trace {np.trace(rho)}, not 1")
    eigs = np.linalg.eigvalsh(rho)
    if eigs.min() < PSD_EIGENVALUE_FLOOR:
        raise ValueError(f"density matrix has negative eigenvalue {eigs.min()}")
    return rho


def _bell_vectors() -> np.ndarray:
    phi_plus = np.array([1, 0, 0, 1], dtype=np.complex128) / np.sqrt(2.0)
    vecs = []
    for label in range(4):
        b0, b1 = (label >> 1) & 1, label & 1
        u = np.linalg.matrix_power(_X, b1) @ np.linalg.matrix_power(_Z, b0)
        vecs.append(np.kron(u, _I) @ phi_plus)
    out = np.stack(vecs)
    out.flags.writeable = False
    return out


BELL_VECTORS = _bell_vectors()


def epr_state() -> np.ndarray:
    """Density matrix of the maximally entangled pair |Phi+><Phi+|."""
    v = BELL_VECTORS[0]
    return np.outer(v, v.conj())


def bell_projector(label: int) -> np.ndarray:
    """Projector onto the Bell state with two-bit label ``label``."""
    v = BELL_VECTORS[_check_index(label)]
    return np.outer(v, v.conj())


def bell_measure(rho: np.ndarray) -> np.ndarray:
    """Outcome distribution of a Bell-basis measurement on a two-qubit state."""
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape != (4, 4):
        raise ValueError(f"Bell measurement needs a 4x4 state, got shape {rho.shape}")
    probs = np.array([np.einsum("i,ij,j->", v.conj(), rho, v).real for v in BELL_VECTORS])
    return np.clip(probs, 0.0, None)


def channel_apply(ch: PauliChannel, rho: np.ndarray, target: int = 0) -> np.ndarray:
    """Apply a Pauli channel to one qubit of a 1-3 qubit density matrix.

    Computes ``sum_i p_i S_i rho S_i`` with ``S_i`` the Pauli ``sigma_i`` on
    ``target`` (counted from the leftmost tensor factor) and identity
    elsewhere.
    """
    rho = np.asarray(rho, dtype=np.complex128)
    dim = rho.shape[0]
    if rho.ndim != 2 or rho.shape != (dim, dim) or dim not in (2, 4, 8):
        raise ValueError(f"expected a 2/4/8-dimensional square matrix, got shape {rho.shape}")
    n_qubits = dim.bit_length() - 1
    if not 0 <= target < n_qubits:
        raise ValueError(f"target {target} out of range for {n_qubits} qubit(s)")
    out = np.zeros_like(rho)
    for k in range(4):
        p = ch.probs[k]
        if p == 0.0:
            continue
        op = np.eye(1, dtype=np.complex128)
        for pos in range(n_qubits):
            op = np.kron(op, PAULI_MATRICES[k] if pos == target else _I)
        out += p * (op @ rho @ op)
    return out


def epr_transition(ch: PauliChannel) -> np.ndarray:
    """Bell-outcome distribution after one EPR qubit crosses the channel.

    The channel's I/X/Y/Z weights land on Bell labels 0/1/3/2: X flips the
    low label bit, Z the high bit, Y both.
    """
    t = np.zeros(4)
    t[OUTCOME_OF_PAULI] = ch.probs
    return t
