"""Command-line driver: sweeps, point queries, boundary search, verification.

Exit status is 0 on success and nonzero with a one-line diagnostic on stderr
for any failure, including a ``verify`` run whose worst closed-form deviation
exceeds 1e-9.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .capacity import Family, capacity_quantum_trajectory
from .oracle import oracle_classical, oracle_switch, switch_kraus_operators
from .pauli import PauliChannel, epr_transition
from .sweep import (
    BoundaryError,
    Mode,
    SweepConfig,
    emit,
    render,
    run_sweep,
    find_violation_boundary,
)
from .trajectory import compose_classical, compose_switch

VERIFY_TOLERANCE = 1e-9


def _parse_range(text: str) -> tuple[float, float]:
    parts = text.split(":")
    if len(parts) == 1:
        v = float(parts[0])
        return v, v
    if len(parts) == 2:
        return float(parts[0]), float(parts[1])
    raise argparse.ArgumentTypeError(f"expected VALUE or LO:HI, got {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="switchcap",
        description="Entanglement-assisted capacities of Pauli channels in "
        "definite and superposed causal order.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    family_kw = dict(
        type=Family.parse,
        required=True,
        help="channel family: bitphase, eb, or depolarizing",
    )

    p_sweep = sub.add_parser("sweep", help="evaluate capacities over a curve or grid")
    p_sweep.add_argument("--family", **family_kw)
    p_sweep.add_argument(
        "--mode", choices=["curve", "grid"], required=True, help="curve fixes q = p"
    )
    p_sweep.add_argument("--p", type=_parse_range, default=(0.0, 1.0), metavar="LO:HI")
    p_sweep.add_argument("--q", type=_parse_range, default=(0.0, 1.0), metavar="LO:HI")
    p_sweep.add_argument("--steps", type=int, default=101)
    p_sweep.add_argument("--format", choices=["csv", "json"], default="csv")
    p_sweep.add_argument("--out", required=True)
    p_sweep.add_argument(
        "--seed", type=int, default=None, help="enable the Monte Carlo spot-check"
    )

    p_point = sub.add_parser("point", help="evaluate capacities at one (p, q)")
    p_point.add_argument("--family", **family_kw)
    p_point.add_argument("--p", type=float, required=True)
    p_point.add_argument("--q", type=float, required=True)
    p_point.add_argument("--format", choices=["csv", "json"], default="csv")
    p_point.add_argument("--out", default=None, help="output path (default: stdout)")

    p_boundary = sub.add_parser(
        "boundary", help="locate the bottleneck-violation onset on the p = q curve"
    )
    p_boundary.add_argument("--family", **family_kw)
    p_boundary.add_argument("--tol", type=float, default=1e-6)

    p_verify = sub.add_parser(
        "verify", help="compare closed forms against the exact simulation engine"
    )
    p_verify.add_argument("--seed", type=int, default=20240901)
    p_verify.add_argument("--pairs", type=int, default=100)

    return parser


def _cmd_sweep(args: argparse.Namespace) -> int:
    cfg = SweepConfig(
        family=args.family,
        mode=Mode(args.mode),
        p_range=args.p,
        q_range=args.q,
        steps=args.steps,
        output_format=args.format,
        output_path=args.out,
        seed=args.seed,
    )
    records = run_sweep(cfg)
    emit(records, cfg.output_format, cfg.output_path)
    return 0


def _cmd_point(args: argparse.Namespace) -> int:
    cfg = SweepConfig(
        family=args.family,
        mode=Mode.POINT,
        p_range=(args.p, args.p),
        q_range=(args.q, args.q),
        output_format=args.format,
        output_path=args.out,
    )
    records = run_sweep(cfg)
    if args.out is None:
        sys.stdout.write(render(records, args.format))
    else:
        emit(records, args.format, args.out)
    return 0


def _cmd_boundary(args: argparse.Namespace) -> int:
    p_star = find_violation_boundary(args.family, args.tol)
    print(format(p_star, ".12g"))
    return 0


def max_closed_form_deviation(seed: int, pairs: int = 100) -> float:
    """Worst absolute disagreement between closed forms and the exact engine.

    Covers both composed transition rows, the control-outcome probability,
    the switch capacity, and the Kraus completeness sum, over ``pairs``
    seeded random channel pairs.
    """
    rng = np.random.default_rng(seed)
    worst = 0.0
    eye = np.eye(4)
    for _ in range(pairs):
        d = PauliChannel(rng.dirichlet(np.ones(4)))
        e = PauliChannel(rng.dirichlet(np.ones(4)))
        worst = max(
            worst,
            float(np.max(np.abs(oracle_classical(d, e) - epr_transition(compose_classical(d, e))))),
        )
        result = oracle_switch(d, e)
        comp = compose_switch(d, e)
        worst = max(worst, abs(result.p_plus - comp.p_plus))
        worst = max(worst, abs(result.capacity - capacity_quantum_trajectory(d, e)))
        total = sum(op.conj().T @ op for op in switch_kraus_operators(d, e))
        worst = max(worst, float(np.max(np.abs(total - eye))))
    return worst


def _cmd_verify(args: argparse.Namespace) -> int:
    worst = max_closed_form_deviation(args.seed, args.pairs)
    print(f"checked {args.pairs} random channel pairs (seed {args.seed})")
    print(f"max deviation: {worst:.3e}")
    if worst > VERIFY_TOLERANCE:
        print(f"error: deviation exceeds {VERIFY_TOLERANCE:g}", file=sys.stderr)
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "sweep": _cmd_sweep,
        "point": _cmd_point,
        "boundary": _cmd_boundary,
        "verify": _cmd_verify,
    }
    try:
        return handlers[args.command](args)
    except BoundaryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
