"""Hot tally kernel for the Monte Carlo sampler, numba-compiled when possible.

Set ``SWITCHCAP_NO_NUMBA=1`` to force the pure-numpy fallback (also used
automatically when numba is unavailable).  Both backends consume the same
pre-drawn uniforms and produce bit-identical integer tallies, so backend
choice never changes results, only speed.  ``benchmarks/bench_mc_backends.py``
times the two side by side.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = ["mc_tally", "mc_tally_numpy", "mc_tally_numba", "active_backend"]


def mc_tally_numpy(
    u_d: np.ndarray,
    u_e: np.ndarray,
    cdf_d: np.ndarray,
    cdf_e: np.ndarray,
    branch_table: np.ndarray,
    cell_table: np.ndarray,
) -> np.ndarray:
    """Count (branch, Bell-cell) hits for pre-drawn uniform pairs."""
    i = np.searchsorted(cdf_d, u_d, side="right")
    j = np.searchsorted(cdf_e, u_e, side="right")
    flat = branch_table[i, j] * 4 + cell_table[i, j]
    return np.bincount(flat, minlength=8).reshape(2, 4).astype(np.int64)


def _numba_impl():
    from numba import njit

    @njit(cache=True)
    def mc_tally(u_d, u_e, cdf_d, cdf_e, branch_table, cell_table):  # pragma: no cover
        counts = np.zeros((2, 4), dtype=np.int64)
        for n in range(u_d.shape[0]):
            i = 0
            while cdf_d[i] <= u_d[n]:
                i += 1
            j = 0
            while cdf_e[j] <= u_e[n]:
                j += 1
            counts[branch_table[i, j], cell_table[i, j]] += 1
        return counts

    return mc_tally


mc_tally_numba = None
if os.environ.get("SWITCHCAP_NO_NUMBA", "") not in ("", "0"):
    mc_tally = mc_tally_numpy
else:
    try:
        mc_tally_numba = _numba_impl()
        mc_tally = mc_tally_numba
    except ImportError:
        mc_tally = mc_tally_numpy


def active_backend() -> str:
    return "numba" if mc_tally is mc_tally_numba and mc_tally_numba is not None else "numpy"
