"""Distances, Kolmogorov-Smirnov statistics, and convergence diagnostics."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import DistSpec
from .errors import ParameterError
from .pushforward import DEFAULT_GRID_SIZE, iterate_pushforward, pushforward_cdf, standard_grid
from .simulate import EmpiricalCdf

__all__ = [
    "ConvergenceReport",
    "ConvergenceRow",
    "cdf_violation",
    "convergence_table",
    "fixed_point_residual",
    "ks_band",
    "ks_statistic",
    "sup_distance",
]

# asymptotic critical values of the one-sample KS statistic, scaled by 1/sqrt(n)
_KS_CRITICAL = {0.95: 1.36, 0.99: 1.63}


def ks_band(n: int, confidence: float = 0.99) -> float:
    """Asymptotic KS acceptance threshold c(confidence)/sqrt(n)."""
    if int(n) < 1:
        raise ParameterError(f"sample count must be >= 1; got {n!r}")
    try:
        scale = _KS_CRITICAL[float(confidence)]
    except KeyError:
        raise ParameterError(
            f"confidence must be one of {sorted(_KS_CRITICAL)}; got {confidence!r}"
        ) from None
    return scale / math.sqrt(int(n))


def sup_distance(F, G, m: int = DEFAULT_GRID_SIZE) -> float:
    """Supremum distance between two CDFs over the standard grid of size m.

    Endpoint knots where both functions are exactly 0 or exactly 1 are
    excluded from the maximum (their difference is zero by construction).
    """
    grid = standard_grid(m)
    f = np.asarray(F(grid), dtype=float)
    g = np.asarray(G(grid), dtype=float)
    diff = np.abs(f - g)
    if f[0] == g[0] and f[0] in (0.0, 1.0):
        diff[0] = 0.0
    if f[-1] == g[-1] and f[-1] in (0.0, 1.0):
        diff[-1] = 0.0
    return float(diff.max())


def ks_statistic(empirical: EmpiricalCdf, F) -> float:
    """One-sample Kolmogorov-Smirnov statistic of samples against the CDF F.

    Uses the exact two-sided form over the sorted samples, comparing F
    to the empirical CDF from above and below at every jump.
    """
    x = empirical.samples
    n = empirical.n
    fx = np.asarray(F(x), dtype=float)
    ranks = np.arange(1, n + 1, dtype=float)
    d_plus = float(np.max(ranks / n - fx))
    d_minus = float(np.max(fx - (ranks - 1.0) / n))
    return max(d_plus, d_minus)


def fixed_point_residual(F, r, m: int = DEFAULT_GRID_SIZE) -> float:
    """Sup distance between F and its one-step pushforward at parameter r.

    Zero (to rounding) exactly when F is invariant under the map.
    """
    return sup_distance(pushforward_cdf(F, r), F, m)


def cdf_violation(F, m: int = 10_000) -> float:
    """Worst violation of CDF validity for F over the standard grid:
    endpoint deviation from 0 and 1, any decreasing step, and any
    excursion outside [0, 1]."""
    grid = standard_grid(m)
    v = np.asarray(F(grid), dtype=float)
    steps = np.diff(v)
    worst_dip = float(max(0.0, -steps.min())) if steps.size else 0.0
    out_of_range = float(max(0.0, v.max() - 1.0, -v.min()))
    return max(abs(float(v[0])), abs(float(v[-1]) - 1.0), worst_dip, out_of_range)


@dataclass(frozen=True)
class ConvergenceRow:
    """Sup distances of the n-th uniform iterate to the three reference laws."""

    n: int
    to_uniform: float
    to_kumaraswamy: float
    to_arcsine: float


@dataclass(frozen=True)
class ConvergenceReport:
    """Distance table of iterated pushforwards of the uniform CDF.

    References: the uniform CDF, the two-step closed form
    (Kumaraswamy with both shapes 1/2), and the arcsine CDF.
    """

    rows: tuple[ConvergenceRow, ...]
    grid_size: int
    r: float

    def columns(self) -> dict[str, list]:
        return {
            "n": [row.n for row in self.rows],
            "to_uniform": [row.to_uniform for row in self.rows],
            "to_kumaraswamy": [row.to_kumaraswamy for row in self.rows],
            "to_arcsine": [row.to_arcsine for row in self.rows],
        }


def convergence_table(n_max: int, m: int = 1024, r: float = 4.0) -> ConvergenceReport:
    """Distances of D_n (the n-fold pushforward of the uniform CDF) to the
    uniform, Kumaraswamy(1/2, 1/2), and arcsine CDFs for n = 0..n_max."""
    if int(n_max) < 2:
        raise ParameterError(f"n_max must be >= 2; got {n_max!r}")
    uniform = DistSpec("uniform").cdf()
    kumaraswamy = DistSpec("kumaraswamy", 0.5, 0.5).cdf()
    arcsine = DistSpec("arcsine").cdf()
    rows = []
    for n in range(int(n_max) + 1):
        iterate = iterate_pushforward(uniform, r, n)
        rows.append(
            ConvergenceRow(
                n=n,
                to_uniform=sup_distance(iterate, uniform, m),
                to_kumaraswamy=sup_distance(iterate, kumaraswamy, m),
                to_arcsine=sup_distance(iterate, arcsine, m),
            )
        )
    return ConvergenceReport(rows=tuple(rows), grid_size=int(m), r=float(r))
