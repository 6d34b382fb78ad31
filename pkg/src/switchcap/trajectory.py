"""Composition of two Pauli channels in definite and indefinite causal order.

``compose_classical`` gives the resultant Pauli channel when the carrier
traverses channel D then channel E in a fixed order.  ``compose_switch``
gives the branch decomposition when the two orders are put in superposition,
controlled by a qubit prepared in ``|+>``: every Kraus pair made of
anti-commuting Paulis flips the control to ``|->``, so measuring the control
in the Hadamard basis splits the resultant channel into a "plus" and a
"minus" branch.  Other control states are out of scope and not representable
here.

All coefficients are closed forms in the two probability vectors; the test
suite cross-checks them against a Kraus-pair enumeration and against the
exact density-matrix engine in :mod:`switchcap.oracle`.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .pauli import NORMALIZATION_ATOL, PauliChannel

__all__ = [
    "ControlOutcome",
    "SwitchComposition",
    "ZeroProbabilityBranchError",
    "compose_classical",
    "compose_switch",
    "collapse",
]


class ControlOutcome(enum.Enum):
    """Hadamard-basis measurement result on the order-controlling qubit."""

    PLUS = "plus"
    MINUS = "minus"


class ZeroProbabilityBranchError(ValueError):
    """Raised when collapsing onto a control outcome of probability zero."""


@dataclass(frozen=True)
class SwitchComposition:
    """Branch-decomposed resultant channel of the two-channel switch.

    ``a0`` is the weight of the identity error, ``a_plus[k-1]`` the weight of
    error ``sigma_k`` in the plus branch, ``a_minus[k-1]`` the weight of
    error ``sigma_k`` in the minus branch.  The seven weights sum to one and
    ``p_plus = a0 + sum(a_plus)``.
    """

    a0: float
    a_plus: np.ndarray
    a_minus: np.ndarray

    def __post_init__(self) -> None:
        a_plus = np.asarray(self.a_plus, dtype=np.float64)
        a_minus = np.asarray(self.a_minus, dtype=np.float64)
        if a_plus.shape != (3,) or a_minus.shape != (3,):
            raise ValueError("branch weights must be 3-vectors")
        if self.a0 < 0 or np.any(a_plus < 0) or np.any(a_minus < 0):
            raise ValueError("branch weights must be nonnegative")
        total = self.a0 + float(a_plus.sum()) + float(a_minus.sum())
        if abs(total - 1.0) > NORMALIZATION_ATOL:
            raise ValueError(f"branch weights sum to {total}, not 1")
        a_plus = a_plus.copy()
        a_minus = a_minus.copy()
        a_plus.flags.writeable = False
        a_minus.flags.writeable = False
        object.__setattr__(self, "a_plus", a_plus)
        object.__setattr__(self, "a_minus", a_minus)

    @property
    def p_plus(self) -> float:
        # 1 - p_minus rather than a0 + sum(a_plus): bitwise exact (H(1) = 0)
        # whenever the minus branch is empty, and within one ulp otherwise.
        return 1.0 - float(self.a_minus.sum())

    @property
    def p_minus(self) -> float:
        return float(self.a_minus.sum())


def compose_classical(d: PauliChannel, e: PauliChannel) -> PauliChannel:
    """Resultant Pauli channel of D followed by E (order does not matter).

    Each coefficient is grouped as (identity-pair terms) + (anti-commuting
    pair terms): with that grouping the result is bitwise symmetric in the
    two arguments, and each coefficient is bitwise the sum of the matching
    plus- and minus-branch weights of :func:`compose_switch`.
    """
    p = d.probs
    q = e.probs
    return PauliChannel(
        np.array(
            [
                (p[0] * q[0] + p[1] * q[1]) + (p[2] * q[2] + p[3] * q[3]),
                (p[0] * q[1] + p[1] * q[0]) + (p[2] * q[3] + p[3] * q[2]),
                (p[0] * q[2] + p[2] * q[0]) + (p[3] * q[1] + p[1] * q[3]),
                (p[0] * q[3] + p[3] * q[0]) + (p[1] * q[2] + p[2] * q[1]),
            ]
        )
    )


def compose_switch(d: PauliChannel, e: PauliChannel) -> SwitchComposition:
    """Branch decomposition of D and E traversed in superposed order.

    Pairs involving the identity (or equal Paulis) commute and stay in the
    plus branch; the three anti-commuting pair families feed the minus
    branch, each pair contributing the third Pauli as the effective error.
    """
    p = d.probs
    q = e.probs
    a0 = (p[0] * q[0] + p[1] * q[1]) + (p[2] * q[2] + p[3] * q[3])
    a_plus = np.array(
        [
            p[0] * q[1] + p[1] * q[0],
            p[0] * q[2] + p[2] * q[0],
            p[0] * q[3] + p[3] * q[0],
        ]
    )
    a_minus = np.array(
        [
            p[2] * q[3] + p[3] * q[2],
            p[3] * q[1] + p[1] * q[3],
            p[1] * q[2] + p[2] * q[1],
        ]
    )
    return SwitchComposition(float(a0), a_plus, a_minus)


def collapse(s: SwitchComposition, outcome: ControlOutcome) -> tuple[float, PauliChannel]:
    """Probability and conditional channel after measuring the control qubit.

    Raises :class:`ZeroProbabilityBranchError` when the requested branch has
    probability zero; capacity code treats that branch's contribution as
    exactly zero instead of collapsing onto it.  The channel is normalized by
    the branch's own weight mass, which can differ from the reported
    probability by at most one ulp.
    """
    if outcome is ControlOutcome.PLUS:
        weights = np.concatenate(([s.a0], s.a_plus))
        p = s.p_plus
    else:
        weights = np.concatenate(([0.0], s.a_minus))
        p = s.p_minus
    mass = float(weights.sum())
    if mass <= 0.0 or p <= 0.0:
        raise ZeroProbabilityBranchError(f"{outcome.value} branch has probability 0")
    return p, PauliChannel(weights / mass)
