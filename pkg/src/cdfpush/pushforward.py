"""Exact propagation of CDFs through the quadratic interval map.

For the map x -> r*x*(1-x) on [0, 1] the image CDF of a distribution
with CDF F has the closed form

    G(y) = F(x_lo(y)) + 1 - F(x_hi(y))        for y < r/4,
    G(y) = 1                                   for y >= r/4,

where x_lo <= x_hi are the two preimages of y.  Iterating this operator
propagates a distribution forward exactly, with no sampling error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import Cdf, _as_unit_array, _restore
from .errors import MonotonicityError, ParameterError, ResourceLimitError

__all__ = [
    "DEFAULT_GRID_SIZE",
    "EXACT_ITERATION_LIMIT",
    "GridCdf",
    "IterateCdf",
    "grid_coordinate",
    "iterate_pushforward",
    "preimage_pair",
    "pushforward_cdf",
    "q_r",
    "standard_grid",
    "tabulate",
    "validate_map_param",
]

# beyond this depth one exact evaluation costs 2**n kernel calls
EXACT_ITERATION_LIMIT = 12
DEFAULT_GRID_SIZE = 4096
# rounding slack allowed before a tabulated dip counts as a real failure
MONOTONICITY_TOLERANCE = 1e-9


def validate_map_param(r) -> float:
    """Check 0 < r <= 4 and return r as a float."""
    value = float(r)
    if not math.isfinite(value) or not 0.0 < value <= 4.0:
        raise ParameterError(f"map parameter r must satisfy 0 < r <= 4; got {r!r}")
    return value


def standard_grid(m: int) -> np.ndarray:
    """Evaluation grid y_i = sin^2(pi*i/(2m)) for i = 0..m.

    Knots are uniform in the arcsine coordinate, clustering near both
    endpoints where iterated CDFs have square-root behavior.
    """
    size = int(m)
    if size < 2:
        raise ParameterError(f"grid size must be >= 2; got {m!r}")
    i = np.arange(size + 1)
    grid = np.sin(0.5 * np.pi * i / size) ** 2
    grid[0] = 0.0
    grid[-1] = 1.0
    return grid


def grid_coordinate(y):
    """Map y in [0, 1] to u = (2/pi)*arcsin(sqrt(y)), the uniform
    parameter of the standard grid."""
    arr, scalar = _as_unit_array(y)
    return _restore((2.0 / np.pi) * np.arcsin(np.sqrt(arr)), scalar)


def q_r(r, y):
    """Half-width sqrt(1/4 - y/r) of the preimage pair around 1/2.

    Zero for y above the map's peak r/4, where y has no preimage.
    """
    rr = validate_map_param(r)
    arr, scalar = _as_unit_array(y)
    out = np.zeros_like(arr)
    mask = arr <= rr / 4.0
    out[mask] = np.sqrt(0.25 - arr[mask] / rr)
    return _restore(out, scalar)


def preimage_pair(r, y):
    """Both preimages of y under x -> r*x*(1-x), as (lower, upper).

    The lower branch is computed as (y/r)/(1/2 + q) rather than
    1/2 - q, which cancels catastrophically as y -> 0.  For y above
    the peak both entries collapse to the critical point 1/2.
    """
    rr = validate_map_param(r)
    arr, scalar = _as_unit_array(y)
    quarter = rr / 4.0
    q = np.zeros_like(arr)
    mask = arr <= quarter
    q[mask] = np.sqrt(0.25 - arr[mask] / rr)
    hi = 0.5 + q
    lo = np.where(mask, (arr / rr) / hi, 0.5)
    return _restore(lo, scalar), _restore(hi, scalar)


def pushforward_cdf(F, r) -> Cdf:
    """One exact pushforward of the CDF F through the map with parameter r.

    F may be any callable CDF (closed form, grid, or a previous
    pushforward); evaluation failures inside F propagate.  The result is
    exactly 1 for y >= r/4, short-circuited before any floating
    arithmetic on those points.
    """
    rr = validate_map_param(r)
    quarter = rr / 4.0
    tag = getattr(F, "provenance", "callable")

    def kernel(arr: np.ndarray) -> np.ndarray:
        out = np.ones_like(arr)
        mask = arr < quarter
        if mask.any():
            t = arr[mask]
            q = np.sqrt(0.25 - t / rr)
            hi = 0.5 + q
            lo = (t / rr) / hi
            out[mask] = np.asarray(F(lo)) + 1.0 - np.asarray(F(hi))
        return out

    return Cdf(kernel, provenance=f"pushforward[r={rr:g}]({tag})")


@dataclass(frozen=True, eq=False)
class GridCdf:
    """A CDF tabulated on a grid, interpolated in the arcsine coordinate.

    Interpolation is piecewise linear in u = (2/pi)*arcsin(sqrt(y)),
    the coordinate in which the standard grid is uniform; this keeps
    the square-root edge behavior of iterated CDFs nearly linear per
    interval.  Values must be weakly nondecreasing with endpoints 0
    and 1 exactly.
    """

    grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        grid = np.asarray(self.grid, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if grid.ndim != 1 or grid.shape != values.shape or grid.size < 3:
            raise ParameterError("grid and values must be 1-d arrays of equal size >= 3")
        if grid[0] != 0.0 or grid[-1] != 1.0 or np.any(np.diff(grid) <= 0.0):
            raise ParameterError("grid must increase strictly from 0 to 1")
        if values[0] != 0.0 or values[-1] != 1.0:
            raise ParameterError("tabulated values must start at 0 and end at 1")
        if np.any(np.diff(values) < 0.0):
            raise ParameterError("tabulated values must be weakly nondecreasing")
        if np.any(values < 0.0) or np.any(values > 1.0):
            raise ParameterError("tabulated values must lie in [0, 1]")
        object.__setattr__(self, "grid", grid)
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "_u_knots", (2.0 / np.pi) * np.arcsin(np.sqrt(grid)))

    @property
    def size(self) -> int:
        return int(self.grid.size)

    def __call__(self, y):
        arr, scalar = _as_unit_array(y)
        u = (2.0 / np.pi) * np.arcsin(np.sqrt(arr))
        out = np.interp(u, self._u_knots, self.values)
        return _restore(out, scalar)

    def as_cdf(self) -> Cdf:
        u_knots = self._u_knots
        values = self.values

        def kernel(arr: np.ndarray) -> np.ndarray:
            u = (2.0 / np.pi) * np.arcsin(np.sqrt(arr))
            return np.interp(u, u_knots, values)

        return Cdf(kernel, provenance=f"grid-interpolated[m={self.size - 1}]")


def tabulate(F, m: int = DEFAULT_GRID_SIZE, support_top: float = 1.0) -> GridCdf:
    """Tabulate a callable CDF on the standard grid of size m.

    Endpoint values are forced to 0 and 1.  A decrease between adjacent
    knots larger than the rounding slack raises MonotonicityError; dips
    within the slack are flattened by a running maximum.

    `support_top` < 1 scales the knots into [0, support_top] and appends
    a final knot at y = 1.  A pushforward at parameter r is flat at 1
    above r/4 but has a square-root edge there, which the unscaled grid
    undersamples for r < 4; scaling the knots to the support restores
    resolution at the edge.
    """
    top = float(support_top)
    if not 0.0 < top <= 1.0:
        raise ParameterError(f"support_top must lie in (0, 1]; got {support_top!r}")
    if top == 1.0:
        grid = standard_grid(m)
    else:
        grid = np.append(top * standard_grid(m), 1.0)
    values = np.array(F(grid), dtype=float, copy=True)
    steps = np.diff(values)
    if steps.size and float(steps.min()) < -MONOTONICITY_TOLERANCE:
        knot = int(np.argmin(steps))
        raise MonotonicityError(
            f"tabulated CDF decreases by {-float(steps.min()):.3e} near "
            f"y={grid[knot]:.6g} (allowed slack {MONOTONICITY_TOLERANCE:g})"
        )
    np.clip(values, 0.0, 1.0, out=values)
    values[0] = 0.0
    np.maximum.accumulate(values, out=values)
    values[-1] = 1.0
    return GridCdf(grid, values)


@dataclass(frozen=True, eq=False)
class IterateCdf:
    """The n-fold pushforward of a base CDF, realized as a callable.

    `strategy` records how evaluation happens: "exact" composes the
    pushforward recursion (cost 2**n base evaluations per point) while
    "grid" re-tabulates after every step on a standard grid.
    """

    base: Cdf
    r: float
    n: int
    strategy: str
    grid_size: int
    cdf: Cdf

    def __call__(self, y):
        return self.cdf(y)

    @property
    def provenance(self) -> str:
        return self.cdf.provenance


def iterate_pushforward(
    F0,
    r,
    n: int,
    strategy: str = "auto",
    grid_size: int = DEFAULT_GRID_SIZE,
    exact_limit: int = EXACT_ITERATION_LIMIT,
) -> IterateCdf:
    """Propagate the CDF F0 forward n steps through the map.

    strategy "auto" uses the exact recursion up to `exact_limit` steps
    and grid re-tabulation beyond; "exact" above the limit raises
    ResourceLimitError instead of attempting a 2**n-fold evaluation.
    n = 0 returns the base CDF semantically unchanged.
    """
    rr = validate_map_param(r)
    steps = int(n)
    if steps < 0:
        raise ParameterError(f"iteration count must be >= 0; got {n!r}")
    if strategy not in ("auto", "exact", "grid"):
        raise ParameterError(f"unknown strategy {strategy!r}")
    base = F0 if isinstance(F0, Cdf) else Cdf(lambda arr: np.asarray(F0(arr), dtype=float), "callable")
    resolved = strategy
    if strategy == "auto":
        resolved = "exact" if steps <= exact_limit else "grid"
    if resolved == "exact" and steps > exact_limit:
        raise ResourceLimitError(
            f"exact recursion for n={steps} would need 2**{steps} base evaluations "
            f"per point; the supported depth is {exact_limit} (use the grid strategy)"
        )

    if steps == 0:
        realized = base
    elif resolved == "exact":
        realized = base
        for _ in range(steps):
            realized = pushforward_cdf(realized, rr)
    else:
        table = tabulate(base, grid_size)
        for _ in range(steps):
            table = tabulate(pushforward_cdf(table.as_cdf(), rr), grid_size)
        quarter = rr / 4.0
        interp = table.as_cdf()

        def kernel(arr: np.ndarray) -> np.ndarray:
            # the image of any distribution is supported below the peak
            out = np.ones_like(arr)
            mask = arr < quarter
            if mask.any():
                out[mask] = np.asarray(interp(arr[mask]))
            return out

        realized = Cdf(kernel, provenance=f"pushforward-grid[r={rr:g},n={steps},m={grid_size}]({base.provenance})")

    return IterateCdf(base=base, r=rr, n=steps, strategy=resolved, grid_size=int(grid_size), cdf=realized)
