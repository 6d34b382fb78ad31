#!/usr/bin/env python3
"""Time the Monte Carlo tally kernel on the numba and numpy backends.

Run with ``python3 benchmarks/bench_mc_backends.py``.  Both backends consume
identical pre-drawn uniforms and must produce identical tallies; the numbers
here justify (or indict) the default numba path.
"""

import time

import numpy as np

from switchcap._kernels import mc_tally_numba, mc_tally_numpy
from switchcap.montecarlo import _BRANCH_TABLE, _CELL_TABLE
from switchcap.pauli import PauliChannel

REPEATS = 5
SIZES = (100_000, 1_000_000, 4_000_000)


def best_of(fn, *args):
    best = float("inf")
    for _ in range(REPEATS):
        start = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    d = PauliChannel.depolarizing(0.62)
    e = PauliChannel(np.array([0.5, 0.2, 0.2, 0.1]))
    cdf_d = np.cumsum(d.probs)
    cdf_e = np.cumsum(e.probs)
    cdf_d[-1] = cdf_e[-1] = 1.0

    backends = [("numpy", mc_tally_numpy)]
    if mc_tally_numba is not None:
        warm = np.random.default_rng(0).random((2, 16))
        mc_tally_numba(warm[0], warm[1], cdf_d, cdf_e, _BRANCH_TABLE, _CELL_TABLE)
        backends.append(("numba", mc_tally_numba))
    else:
        print("numba unavailable; timing the numpy fallback only")

    print(f"{'samples':>10}  " + "".join(f"{name + ' (s)':>12}" for name, _ in backends)
          + ("  speedup" if len(backends) == 2 else ""))
    for n in SIZES:
        u = np.random.default_rng(n).random((2, n))
        times, tallies = [], []
        for _, fn in backends:
            t, counts = best_of(fn, u[0], u[1], cdf_d, cdf_e, _BRANCH_TABLE, _CELL_TABLE)
            times.append(t)
            tallies.append(counts)
        if len(tallies) == 2 and not np.array_equal(tallies[0], tallies[1]):
            raise SystemExit("backends disagree; this is a bug")
        row = f"{n:>10}  " + "".join(f"{t:>12.4f}" for t in times)
        if len(times) == 2:
            row += f"  {times[0] / times[1]:>6.1f}x"
        print(row)


if __name__ == "__main__":
    main()
