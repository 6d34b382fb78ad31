"""Exact density-matrix simulation of superdense coding through both trajectories.

This module is the ground-truth engine: it never touches the closed-form
composition coefficients.  States are explicit complex matrices, channels act
as explicit operator sums, the switch is the full sixteen-term extended Kraus
decomposition on (carrier qubit, control qubit), and Bell statistics come
from projector traces.  Agreement between this engine and the closed forms in
:mod:`switchcap.trajectory` / :mod:`switchcap.capacity` is the central
anti-drift check of the package.

Simulated protocol, per encoded two-bit symbol: prepare |Phi+> on (A, B),
apply the symbol's encoding Pauli on A, send A through the composite channel,
then Bell-measure (A, B).  For the switch, the control starts in ``|+>`` and
is measured in the Hadamard basis first; its outcome is assumed to reach the
decoder for free, so the reported capacity is the outcome-probability-weighted
mixture of the two conditional capacities.  No explicit recovery operation is
applied on the minus branch: conditioning on the outcome already credits the
decoder with that correction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .capacity import capacity_from_transition
from .pauli import BELL_VECTORS, PAULI_MATRICES, PauliChannel, bell_measure, channel_apply

__all__ = [
    "SwitchOracleResult",
    "switch_kraus_operators",
    "oracle_classical",
    "oracle_switch",
    "mutual_information",
]

_ROW_AGREEMENT_ATOL = 1e-12
_ZERO_BRANCH_ATOL = 1e-14

_PLUS = np.array([1.0, 1.0], dtype=np.complex128) / np.sqrt(2.0)
_MINUS = np.array([1.0, -1.0], dtype=np.complex128) / np.sqrt(2.0)
_P0 = np.diag([1.0, 0.0]).astype(np.complex128)
_P1 = np.diag([0.0, 1.0]).astype(np.complex128)
_I2 = np.eye(2, dtype=np.complex128)


@dataclass(frozen=True)
class SwitchOracleResult:
    """Branch statistics of the simulated switch.

    ``transition_plus`` / ``transition_minus`` are conditional Bell-outcome
    rows re-centred on the sent symbol; a branch of probability zero carries
    ``None``.  ``capacity`` is the mixture of the two conditional capacities.
    """

    p_plus: float
    transition_plus: np.ndarray | None
    transition_minus: np.ndarray | None
    capacity: float


def switch_kraus_operators(d: PauliChannel, e: PauliChannel) -> list[np.ndarray]:
    """The sixteen extended Kraus operators of the switch on (carrier, control).

    Each operator applies one Kraus pair in the order E_j D_i on the
    control's ``|0>`` component and D_i E_j on its ``|1>`` component.
    """
    ops = []
    for i in range(4):
        for j in range(4):
            w = np.sqrt(d.probs[i] * e.probs[j])
            ji = PAULI_MATRICES[j] @ PAULI_MATRICES[i]
            ij = PAULI_MATRICES[i] @ PAULI_MATRICES[j]
            ops.append(w * (np.kron(ji, _P0) + np.kron(ij, _P1)))
    return ops


def _encoded_epr(symbol: int) -> np.ndarray:
    v = BELL_VECTORS[symbol]
    return np.outer(v, v.conj())


def _recentred(row: np.ndarray, symbol: int) -> np.ndarray:
    # Outcome y for sent symbol x becomes offset y XOR x; the error-free cell
    # is then always index 0.
    return np.array([row[offset ^ symbol] for offset in range(4)])


def oracle_classical(d: PauliChannel, e: PauliChannel) -> np.ndarray:
    """Transition row of superdense coding through D then E, simulated exactly.

    All four encodings are simulated; their re-centred rows must agree, which
    is what licenses quoting a single row for the capacity.
    """
    rows = []
    for symbol in range(4):
        rho = _encoded_epr(symbol)
        rho = channel_apply(e, channel_apply(d, rho, target=0), target=0)
        rows.append(_recentred(bell_measure(rho), symbol))
    rows = np.array(rows)
    spread = np.max(np.abs(rows - rows[0]))
    assert spread < _ROW_AGREEMENT_ATOL, f"encoded inputs disagree by {spread}"
    return rows[0]


def oracle_switch(d: PauliChannel, e: PauliChannel) -> SwitchOracleResult:
    """Branch probabilities, conditional transitions, and capacity of the switch."""
    small_ops = switch_kraus_operators(d, e)
    # Expand to (A, B, control) with identity on B.
    big_ops = []
    for op in small_ops:
        t = op.reshape(2, 2, 2, 2)  # (a, c | a', c')
        big = np.einsum("acbd,ef->aecbfd", t, _I2).reshape(8, 8)
        big_ops.append(big)

    branch_stats: list[dict[str, tuple[float, np.ndarray | None]]] = []
    for symbol in range(4):
        rho = np.kron(_encoded_epr(symbol), np.outer(_PLUS, _PLUS.conj()))
        out = np.zeros((8, 8), dtype=np.complex128)
        for big in big_ops:
            out += big @ rho @ big.conj().T
        r = out.reshape(2, 2, 2, 2, 2, 2)  # (a, b, c | a', b', c')
        stats: dict[str, tuple[float, np.ndarray | None]] = {}
        for name, v in (("plus", _PLUS), ("minus", _MINUS)):
            cond = np.einsum("c,abcxyz,z->abxy", v.conj(), r, v).reshape(4, 4)
            prob = float(np.trace(cond).real)
            if prob > _ZERO_BRANCH_ATOL:
                stats[name] = (prob, _recentred(bell_measure(cond / prob), symbol))
            else:
                stats[name] = (max(prob, 0.0), None)
        branch_stats.append(stats)

    for symbol in range(1, 4):
        for name in ("plus", "minus"):
            p0, t0 = branch_stats[0][name]
            p1, t1 = branch_stats[symbol][name]
            assert abs(p0 - p1) < _ROW_AGREEMENT_ATOL
            if t0 is not None and t1 is not None:
                assert np.max(np.abs(t0 - t1)) < _ROW_AGREEMENT_ATOL

    p_plus, t_plus = branch_stats[0]["plus"]
    p_minus, t_minus = branch_stats[0]["minus"]
    cap = 0.0
    if t_plus is not None:
        cap += p_plus * capacity_from_transition(4, t_plus)
    if t_minus is not None:
        cap += p_minus * capacity_from_transition(4, t_minus)
    return SwitchOracleResult(
        p_plus=p_plus, transition_plus=t_plus, transition_minus=t_minus, capacity=cap
    )


def mutual_information(joint: np.ndarray) -> float:
    """Mutual information in bits of a joint (sent, received) distribution."""
    joint = np.asarray(joint, dtype=np.float64)
    if joint.ndim != 2:
        raise ValueError(f"joint distribution must be a matrix, got shape {joint.shape}")
    if np.any(joint < 0) or abs(float(joint.sum()) - 1.0) > 1e-9:
        raise ValueError("joint distribution must be nonnegative and sum to 1")
    px = joint.sum(axis=1)
    py = joint.sum(axis=0)
    indep = np.outer(px, py)
    mask = joint > 0
    return float(np.sum(joint[mask] * np.log2(joint[mask] / indep[mask])))
