"""Entanglement-assisted capacity formulas for Pauli channels.

Classical capacities are in bits per channel use and live in ``[0, 2]``
(superdense coding trades one channel use plus one shared EPR pair for two
bits); quantum capacities are exactly half the classical ones, in qubits per
use.  The convention ``0 * log2(0) = 0`` applies everywhere, which keeps all
formulas finite on the closed parameter square.

Two independent routes exist for the switch capacity: the direct closed form
over the seven branch weights, and the mixture of the two collapsed-branch
capacities weighted by the control-outcome probabilities.  The direct route
is the production path; the mixture is checked against it on every call.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .pauli import PauliChannel, check_distribution
from .trajectory import (
    ControlOutcome,
    SwitchComposition,
    collapse,
    compose_classical,
    compose_switch,
)

__all__ = [
    "Trajectory",
    "Family",
    "CapacityReport",
    "xlog2x",
    "binary_entropy",
    "capacity_from_transition",
    "capacity_pauli",
    "capacity_classical_trajectory",
    "capacity_quantum_trajectory",
    "capacity_quantum_trajectory_mixture",
    "bottleneck",
    "gain_and_violation",
    "family_channels",
    "family_capacity",
    "depolarizing_reference_curves",
    "quantum_bounds_bitphase",
]

_COMPARE_ATOL = 1e-12


class Trajectory(enum.Enum):
    CLASSICAL = "classical"
    QUANTUM = "quantum"


class Family(enum.Enum):
    """Named two-parameter channel pairs swept by the CLI."""

    BIT_PHASE_FLIP = "bitphase"
    ENTANGLEMENT_BREAKING = "eb"
    DEPOLARIZING = "depolarizing"

    @classmethod
    def parse(cls, name: str) -> "Family":
        key = name.strip().lower().replace("_", "-")
        aliases = {
            "bitphase": cls.BIT_PHASE_FLIP,
            "bit-phase": cls.BIT_PHASE_FLIP,
            "bit-phase-flip": cls.BIT_PHASE_FLIP,
            "eb": cls.ENTANGLEMENT_BREAKING,
            "entanglement-breaking": cls.ENTANGLEMENT_BREAKING,
            "depolarizing": cls.DEPOLARIZING,
            "depol": cls.DEPOLARIZING,
        }
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown channel family {name!r}") from None


def xlog2x(x: float) -> float:
    """``x * log2(x)`` extended continuously with ``0 -> 0``."""
    if x < 0:
        raise ValueError(f"xlog2x needs a nonnegative argument, got {x}")
    if x == 0.0:
        return 0.0
    return x * math.log2(x)


def _wlog2(w: float, x: float) -> float:
    # w * log2(x) with the weight-zero term dropped; w == 0 must imply the
    # term vanishes in the enclosing formula.
    return w * math.log2(x) if w > 0.0 else 0.0


def binary_entropy(a: float) -> float:
    """Entropy in bits of a coin with bias ``a``."""
    if a < -_COMPARE_ATOL or a > 1.0 + _COMPARE_ATOL:
        raise ValueError(f"binary_entropy needs a probability, got {a}")
    a = min(max(a, 0.0), 1.0)
    return -(xlog2x(a) + xlog2x(1.0 - a))


def capacity_from_transition(m: int, t: np.ndarray) -> float:
    """Capacity of a symmetric m-ary channel from one transition row."""
    if m < 1:
        raise ValueError(f"alphabet size must be positive, got {m}")
    t = check_distribution(t)
    return math.log2(m) + sum(xlog2x(max(v, 0.0)) for v in t)


def capacity_pauli(ch: PauliChannel) -> float:
    """Entanglement-assisted classical capacity of a single Pauli channel."""
    p = ch.probs
    return 2.0 + xlog2x(p[0]) + xlog2x(p[1]) + xlog2x(p[2]) + xlog2x(p[3])


def capacity_classical_trajectory(d: PauliChannel, e: PauliChannel) -> float:
    """Capacity of D and E traversed in a definite order."""
    return capacity_pauli(compose_classical(d, e))


def _quantum_capacity_direct(s: SwitchComposition) -> float:
    c = 2.0 + binary_entropy(s.p_plus) + xlog2x(s.a0)
    for v in s.a_plus:
        c += xlog2x(v)
    for v in s.a_minus:
        c += xlog2x(v)
    return c


def _quantum_capacity_mixture(s: SwitchComposition) -> float:
    # Branch contributions keyed on the branch's own weight mass: a branch
    # whose weights are exactly zero contributes exactly zero even when the
    # complementary probability rounds to 1 - ulp.
    cap = 0.0
    if s.a0 + float(s.a_plus.sum()) > 0.0 and s.p_plus > 0.0:
        p, ch = collapse(s, ControlOutcome.PLUS)
        cap += p * capacity_pauli(ch)
    if s.p_minus > 0.0:
        p, ch = collapse(s, ControlOutcome.MINUS)
        cap += p * capacity_pauli(ch)
    return cap


def capacity_quantum_trajectory(d: PauliChannel, e: PauliChannel) -> float:
    """Capacity of D and E traversed in superposed order, control in ``|+>``."""
    s = compose_switch(d, e)
    c = _quantum_capacity_direct(s)
    assert abs(c - _quantum_capacity_mixture(s)) < 1e-11, "branch-mixture route diverged"
    return c


def capacity_quantum_trajectory_mixture(d: PauliChannel, e: PauliChannel) -> float:
    """Switch capacity via the collapsed-branch mixture (cross-check route)."""
    return _quantum_capacity_mixture(compose_switch(d, e))


def bottleneck(d: PauliChannel, e: PauliChannel) -> float:
    """Smaller of the two individual capacities; caps any definite-order composite."""
    return min(capacity_pauli(d), capacity_pauli(e))


@dataclass(frozen=True)
class CapacityReport:
    """All capacities, gain, and bottleneck violation for one channel pair."""

    c_ec: float
    c_eq: float
    c_eb: float
    gain: float
    violation: float

    @property
    def q_ec(self) -> float:
        return self.c_ec / 2.0

    @property
    def q_eq(self) -> float:
        return self.c_eq / 2.0

    @property
    def q_eb(self) -> float:
        return self.c_eb / 2.0

    def validate(self, atol: float = _COMPARE_ATOL) -> None:
        for name in ("c_ec", "c_eq", "c_eb"):
            v = getattr(self, name)
            if not -atol <= v <= 2.0 + atol:
                raise ValueError(f"{name} = {v} outside [0, 2]")
        if self.gain < -atol:
            raise ValueError(f"negative gain {self.gain}")
        if self.violation < 0.0:
            raise ValueError(f"negative violation {self.violation}")


def gain_and_violation(d: PauliChannel, e: PauliChannel) -> CapacityReport:
    """Compare the switch against the definite order and the bottleneck."""
    c_ec = capacity_classical_trajectory(d, e)
    c_eq = capacity_quantum_trajectory(d, e)
    c_eb = bottleneck(d, e)
    return CapacityReport(
        c_ec=c_ec,
        c_eq=c_eq,
        c_eb=c_eb,
        gain=c_eq - c_ec + 0.0,
        violation=max(0.0, c_eq - c_eb),
    )


def _check_unit_interval(name: str, v: float) -> float:
    if not 0.0 <= v <= 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {v}")
    return float(v)


def family_channels(family: Family, p: float, q: float) -> tuple[PauliChannel, PauliChannel]:
    """The channel pair described by a named family at parameters (p, q)."""
    _check_unit_interval("p", p)
    _check_unit_interval("q", q)
    if family is Family.BIT_PHASE_FLIP:
        return PauliChannel.bit_flip(p), PauliChannel.phase_flip(q)
    if family is Family.ENTANGLEMENT_BREAKING:
        return PauliChannel.xy_mixture(p), PauliChannel.xy_mixture(q)
    if family is Family.DEPOLARIZING:
        return PauliChannel.depolarizing(p), PauliChannel.depolarizing(q)
    raise ValueError(f"unknown family {family}")


def family_capacity(family: Family, p: float, q: float, trajectory: Trajectory) -> float:
    """Closed family form of the composite capacity, bypassing the general route.

    Kept as an independent expression per family so the general composition
    code can be cross-checked against it.
    """
    _check_unit_interval("p", p)
    _check_unit_interval("q", q)
    if family is Family.BIT_PHASE_FLIP:
        base = (
            2.0
            + xlog2x((1.0 - p) * (1.0 - q))
            + xlog2x(p * (1.0 - q))
            + xlog2x((1.0 - p) * q)
            + xlog2x(p * q)
        )
        if trajectory is Trajectory.CLASSICAL:
            return base
        return base + binary_entropy(1.0 - p * q)
    if family is Family.ENTANGLEMENT_BREAKING:
        if trajectory is Trajectory.CLASSICAL:
            stay = 1.0 - p - q + 2.0 * p * q
            return 2.0 + xlog2x(stay) + xlog2x(1.0 - stay)
        return 2.0
    if family is Family.DEPOLARIZING:
        stay = 1.0 - p - q + 4.0 * p * q / 3.0
        if trajectory is Trajectory.CLASSICAL:
            flip = p + q - 4.0 * p * q / 3.0
            return 2.0 + xlog2x(stay) + _wlog2(flip, (3.0 * p + 3.0 * q - 4.0 * p * q) / 9.0)
        plus = p + q - 2.0 * p * q
        minus = 2.0 * p * q / 3.0
        return (
            2.0
            + binary_entropy(1.0 - 2.0 * p * q / 3.0)
            + xlog2x(stay)
            + _wlog2(plus, plus / 3.0)
            + _wlog2(minus, 2.0 * p * q / 9.0)
        )
    raise ValueError(f"unknown family {family}")


def depolarizing_reference_curves(p: float) -> tuple[float, float, float]:
    """Single-depolarizing-channel reference capacities (symbol, bit, unassisted).

    The symbol-based capacity treats the two encoded bits jointly; the
    bit-based one sums the two marginal binary channels; the unassisted
    capacity is exactly half of the bit-based value.
    """
    _check_unit_interval("p", p)
    c_symbol = 2.0 + xlog2x(1.0 - p) + _wlog2(p, p / 3.0)
    c_unassisted = 1.0 + xlog2x(1.0 - 2.0 * p / 3.0) + xlog2x(2.0 * p / 3.0)
    c_bit = 2.0 * c_unassisted
    return c_symbol, c_bit, c_unassisted


def quantum_bounds_bitphase(p: float) -> tuple[float, float, float, float]:
    """Quantum-capacity bounds for the bit-flip/phase-flip pair on the diagonal.

    Returns ``(q_lb, q_ub, q_eb, q_eq)``: the unassisted coherent-information
    lower bound, the two-way-assisted upper bound, the halved bottleneck, and
    the achievable switch rate, all for q = p.
    """
    _check_unit_interval("p", p)
    h = binary_entropy(p)
    q_lb = p * p + max(0.0, 1.0 - p * p - 2.0 * h + binary_entropy(p * p))
    q_ub = 1.0 - (1.0 - p) * h
    q_eb = 1.0 - h / 2.0
    q_eq = family_capacity(Family.BIT_PHASE_FLIP, p, p, Trajectory.QUANTUM) / 2.0
    return q_lb, q_ub, q_eb, q_eq
