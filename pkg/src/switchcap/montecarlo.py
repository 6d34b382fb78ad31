"""Seeded Monte Carlo sampling of the switch's (branch, Bell-cell) statistics.

Relies on a structural fact of Pauli Kraus pairs: each sampled pair (i, j)
leaves the control qubit in a pure ``|+>`` or ``|->`` (minus exactly when the
two Paulis anti-commute), and the effective carrier error is their product.
No interference survives across distinct pairs in the mixture, so sampling
pairs i ~ D, j ~ E reproduces the exact branch statistics; the test suite
verifies this once against the density-matrix engine, after which the sampler
relies on it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ._kernels import mc_tally
from .capacity import capacity_from_transition
from .oracle import SwitchOracleResult
from .pauli import OUTCOME_OF_PAULI, PRODUCT_INDEX, PauliChannel, anticommutes

__all__ = ["MonteCarloEstimate", "monte_carlo_switch"]

_CHUNK = 1 << 20

# branch (0 = plus, 1 = minus) and Bell cell reached by Kraus pair (i, j).
_BRANCH_TABLE = np.array(
    [[1 if anticommutes(i, j) else 0 for j in range(4)] for i in range(4)], dtype=np.int64
)
_CELL_TABLE = OUTCOME_OF_PAULI[PRODUCT_INDEX.T].copy()
_BRANCH_TABLE.flags.writeable = False
_CELL_TABLE.flags.writeable = False


@dataclass(frozen=True)
class MonteCarloEstimate:
    """Empirical (branch, Bell-cell) frequencies with per-cell standard errors."""

    samples: int
    joint: np.ndarray
    standard_error: np.ndarray
    estimate: SwitchOracleResult


def monte_carlo_switch(
    d: PauliChannel, e: PauliChannel, n: int, seed: int
) -> MonteCarloEstimate:
    """Sample ``n`` Kraus pairs and tally branch and Bell-cell frequencies.

    Reproducible for a fixed 64-bit ``seed``; independent seeds give
    independent streams.
    """
    if n < 1:
        raise ValueError(f"sample count must be positive, got {n}")
    cdf_d = np.cumsum(d.probs)
    cdf_e = np.cumsum(e.probs)
    cdf_d[-1] = 1.0  # uniforms are < 1, so lookups stay in range
    cdf_e[-1] = 1.0
    rng = np.random.default_rng(seed)
    counts = np.zeros((2, 4), dtype=np.int64)
    remaining = n
    while remaining > 0:
        m = min(remaining, _CHUNK)
        u = rng.random((2, m))
        counts += mc_tally(u[0], u[1], cdf_d, cdf_e, _BRANCH_TABLE, _CELL_TABLE)
        remaining -= m

    joint = counts / n
    stderr = np.sqrt(joint * (1.0 - joint) / n)
    p_plus = float(joint[0].sum())
    t_plus = joint[0] / p_plus if p_plus > 0 else None
    p_minus = float(joint[1].sum())
    t_minus = joint[1] / p_minus if p_minus > 0 else None
    cap = 0.0
    if t_plus is not None:
        cap += p_plus * capacity_from_transition(4, t_plus)
    if t_minus is not None:
        cap += p_minus * capacity_from_transition(4, t_minus)
    return MonteCarloEstimate(
        samples=n,
        joint=joint,
        standard_error=stderr,
        estimate=SwitchOracleResult(
            p_plus=p_plus, transition_plus=t_plus, transition_minus=t_minus, capacity=cap
        ),
    )
