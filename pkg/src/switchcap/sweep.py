"""Parameter sweeps over channel families, boundary location, and file emission.

Sweeps are deterministic: records are ordered row-major by grid index (p
outer, q inner), numbers are rendered with 12 significant digits, and files
use LF line endings, so a fixed configuration always produces byte-identical
output regardless of scheduling.  The 12-digit rendering is the compatibility
contract for golden files across platforms with standard double arithmetic.
"""

from __future__ import annotations

import enum
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .capacity import (
    Family,
    Trajectory,
    bottleneck,
    capacity_quantum_trajectory,
    family_channels,
    gain_and_violation,
    quantum_bounds_bitphase,
)
from .montecarlo import monte_carlo_switch
from .pauli import OUTCOME_OF_PAULI
from .trajectory import compose_switch

__all__ = [
    "CSV_HEADER",
    "Mode",
    "SweepConfig",
    "SweepRecord",
    "BoundaryError",
    "run_sweep",
    "find_violation_boundary",
    "render",
    "emit",
]

CSV_HEADER = "p,q,c_ec,c_eq,c_eb,g,v,q_ec,q_eq,q_eb,q_lb,q_ub"
_FIELDS = CSV_HEADER.split(",")


class Mode(enum.Enum):
    CURVE = "curve"
    GRID = "grid"
    POINT = "point"
    BOUNDARY = "boundary"


class BoundaryError(RuntimeError):
    """No usable sign change of (switch capacity - bottleneck) on the curve."""

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class SweepConfig:
    family: Family
    mode: Mode
    p_range: tuple[float, float] = (0.0, 1.0)
    q_range: tuple[float, float] = (0.0, 1.0)
    steps: int = 101
    output_format: str = "csv"
    output_path: str | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        for name, (lo, hi) in (("p", self.p_range), ("q", self.q_range)):
            if not (0.0 <= lo <= hi <= 1.0):
                raise ValueError(f"{name} range [{lo}, {hi}] must be ordered within [0, 1]")
        if self.mode in (Mode.CURVE, Mode.GRID) and self.steps < 2:
            raise ValueError(f"{self.mode.value} mode needs at least 2 steps, got {self.steps}")
        if self.output_format not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.output_format!r}")


@dataclass(frozen=True)
class SweepRecord:
    p: float
    q: float
    c_ec: float
    c_eq: float
    c_eb: float
    g: float
    v: float
    q_ec: float
    q_eq: float
    q_eb: float
    q_lb: float | None
    q_ub: float | None

    def validate(self) -> None:
        atol = 1e-12
        for name in ("c_ec", "c_eq", "c_eb"):
            val = getattr(self, name)
            if not -atol <= val <= 2.0 + atol:
                raise ValueError(f"{name} = {val} outside [0, 2] at (p={self.p}, q={self.q})")
        if self.g < -atol or self.v < 0.0:
            raise ValueError(f"negative gain/violation at (p={self.p}, q={self.q})")
        for c_name, q_name in (("c_ec", "q_ec"), ("c_eq", "q_eq"), ("c_eb", "q_eb")):
            if getattr(self, q_name) != getattr(self, c_name) / 2.0:
                raise ValueError(f"{q_name} is not half of {c_name}")
        for name in ("q_lb", "q_ub"):
            val = getattr(self, name)
            if val is not None and not -atol <= val <= 1.0 + atol:
                raise ValueError(f"{name} = {val} outside [0, 1]")


def _record(family: Family, p: float, q: float) -> SweepRecord:
    d, e = family_channels(family, p, q)
    rep = gain_and_violation(d, e)
    q_lb = q_ub = None
    if family is Family.BIT_PHASE_FLIP and p == q:
        q_lb, q_ub, _, _ = quantum_bounds_bitphase(p)
    return SweepRecord(
        p=p,
        q=q,
        c_ec=rep.c_ec,
        c_eq=rep.c_eq,
        c_eb=rep.c_eb,
        g=rep.gain,
        v=rep.violation,
        q_ec=rep.q_ec,
        q_eq=rep.q_eq,
        q_eb=rep.q_eb,
        q_lb=q_lb,
        q_ub=q_ub,
    )


def _grid_points(cfg: SweepConfig) -> list[tuple[float, float]]:
    if cfg.mode is Mode.POINT:
        return [(cfg.p_range[0], cfg.q_range[0])]
    ps = np.linspace(cfg.p_range[0], cfg.p_range[1], cfg.steps)
    if cfg.mode is Mode.CURVE:
        return [(float(p), float(p)) for p in ps]
    qs = np.linspace(cfg.q_range[0], cfg.q_range[1], cfg.steps)
    return [(float(p), float(q)) for p in ps for q in qs]


def run_sweep(cfg: SweepConfig, workers: int = 1) -> list[SweepRecord]:
    """Evaluate all capacities over the configured points, in row-major order.

    ``workers`` only parallelizes evaluation; record order is fixed by the
    configuration, never by scheduling.
    """
    if cfg.mode is Mode.BOUNDARY:
        raise ValueError("boundary mode is served by find_violation_boundary, not run_sweep")
    points = _grid_points(cfg)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(lambda pq: _record(cfg.family, *pq), points))
    else:
        records = [_record(cfg.family, p, q) for p, q in points]
    if cfg.seed is not None:
        _spot_check_sampling(cfg.family, records, cfg.seed)
    return records


def _spot_check_sampling(family: Family, records: list[SweepRecord], seed: int) -> None:
    # Opt-in tripwire: sample a few records and require the Monte Carlo joint
    # frequencies to sit within 6 sigma of the closed-form branch weights.
    picks = sorted({0, len(records) // 2, len(records) - 1})
    n = 200_000
    for idx in picks:
        rec = records[idx]
        d, e = family_channels(family, rec.p, rec.q)
        s = compose_switch(d, e)
        expected = np.zeros((2, 4))
        expected[0, OUTCOME_OF_PAULI] = np.concatenate(([s.a0], s.a_plus))
        expected[1, OUTCOME_OF_PAULI] = np.concatenate(([0.0], s.a_minus))
        est = monte_carlo_switch(d, e, n, seed + idx)
        band = 6.0 * np.maximum(est.standard_error, np.sqrt(0.25 / n) * 0.05)
        if np.any(np.abs(est.joint - expected) > band):
            raise RuntimeError(
                f"sampling spot-check failed at (p={rec.p}, q={rec.q}): "
                f"max deviation {np.max(np.abs(est.joint - expected)):.3e}"
            )


def find_violation_boundary(
    family: Family,
    tolerance: float,
    trajectory_kind: Trajectory = Trajectory.CLASSICAL,
    scan_points: int = 1001,
) -> float:
    """Bisect the p = q curve for the onset of bottleneck violation.

    Brackets from a coarse scan first, because the capacity difference can be
    flat near zero.  Raises :class:`BoundaryError` when the difference never
    changes sign on the open interval: either the violation covers the whole
    interior (reason ``"violation-everywhere"``, effective boundary 0) or
    there is none (reason ``"no-violation"``).
    """
    if tolerance <= 0:
        raise ValueError(f"tolerance must be positive, got {tolerance}")

    half = 0.5 if trajectory_kind is Trajectory.QUANTUM else 1.0

    def diff(p: float) -> float:
        d, e = family_channels(family, p, p)
        return half * (capacity_quantum_trajectory(d, e) - bottleneck(d, e))

    ps = np.linspace(0.0, 1.0, scan_points)
    vals = np.array([diff(float(p)) for p in ps])
    interior = vals[1:-1]
    if np.all(interior > 0):
        raise BoundaryError(
            "violation-everywhere",
            f"{family.value}: violation is positive on the whole open interval; "
            "effective boundary 0",
        )
    bracket = None
    for k in range(1, scan_points - 2):
        if (vals[k] <= 0.0) != (vals[k + 1] <= 0.0):
            bracket = (float(ps[k]), float(ps[k + 1]))
            break
    if bracket is None:
        raise BoundaryError(
            "no-violation", f"{family.value}: no sign change found on the p = q curve"
        )
    lo, hi = bracket
    lo_nonpos = diff(lo) <= 0.0
    while hi - lo > tolerance:
        mid = 0.5 * (lo + hi)
        if (diff(mid) <= 0.0) == lo_nonpos:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _fmt(v: float | None) -> str:
    return "" if v is None else format(v + 0.0, ".12g")


def render(records: list[SweepRecord], output_format: str) -> str:
    """Serialize records to CSV or JSON text with 12-significant-digit values."""
    if not records:
        raise ValueError("no records to emit")
    for rec in records:
        rec.validate()
    if output_format == "csv":
        lines = [CSV_HEADER]
        for rec in records:
            lines.append(",".join(_fmt(getattr(rec, name)) for name in _FIELDS))
        return "\n".join(lines) + "\n"
    if output_format == "json":
        rows = []
        for rec in records:
            row = {}
            for name in _FIELDS:
                val = getattr(rec, name)
                row[name] = None if val is None else float(format(val + 0.0, ".12g"))
            rows.append(row)
        return json.dumps(rows, indent=2) + "\n"
    raise ValueError(f"unknown output format {output_format!r}")


def emit(records: list[SweepRecord], output_format: str, path: str) -> None:
    """Write records as CSV or JSON; byte-identical for identical inputs."""
    payload = render(records, output_format)
    with open(path, "w", newline="\n") as fh:
        fh.write(payload)
