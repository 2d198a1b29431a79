"""Deterministic orbits and seeded Monte Carlo ensembles of the map.

Trajectory simulation is the independent check on the pushforward
operator: ensembles of sampled points pushed through the map pointwise
should match the operator's output distribution, and at r = 4 a single
long orbit should match the arcsine law.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .distributions import DistSpec, _as_unit_array, _restore, sample
from .errors import DegenerateOrbitError, DomainError, ParameterError
from .pushforward import validate_map_param

__all__ = [
    "DEFAULT_BURN_IN",
    "EmpiricalCdf",
    "ErgodicRun",
    "Trajectory",
    "ensemble_push",
    "ergodic_empirical",
    "logistic_step",
    "trajectory",
]

DEFAULT_BURN_IN = 1000
# tail window and span used to detect orbits collapsed onto an attractor
DEGENERATE_WINDOW = 100
DEGENERATE_SPAN = 1e-15
ERGODIC_X0_RANGE = (0.01, 0.99)
MAX_ERGODIC_RETRIES = 8
MIN_ERGODIC_STEPS = 10_000


def logistic_step(r, x):
    """One application of x -> r*x*(1-x); vectorized over x."""
    rr = validate_map_param(r)
    arr, scalar = _as_unit_array(x, "x")
    return _restore(rr * arr * (1.0 - arr), scalar)


@dataclass(frozen=True, eq=False)
class Trajectory:
    """Recorded orbit after burn-in.

    `degenerate` marks collapsed orbits: absorption at an endpoint, a
    tail parked on an exact fixed point, or a tail whose spread has
    fallen below rounding resolution.
    """

    r: float
    x0: float
    burn_in: int
    states: np.ndarray
    degenerate: bool

    @property
    def n(self) -> int:
        return int(self.states.size)


def _is_degenerate(r: float, states: np.ndarray) -> bool:
    if np.any(states == 0.0) or np.any(states == 1.0):
        return True
    tail = states[-DEGENERATE_WINDOW:]
    if tail.size >= 2 and float(tail.max() - tail.min()) < DEGENERATE_SPAN:
        return True
    last = float(states[-1])
    return r * last * (1.0 - last) == last


def trajectory(r, x0, steps, burn_in: int = DEFAULT_BURN_IN) -> Trajectory:
    """Iterate the map from x0, discard burn_in states, record `steps` more."""
    rr = validate_map_param(r)
    start = float(x0)
    if not 0.0 <= start <= 1.0:
        raise DomainError(f"x0 must lie in [0, 1]; got {x0!r}")
    n_record = int(steps)
    if n_record < 1:
        raise ParameterError(f"steps must be >= 1; got {steps!r}")
    n_burn = int(burn_in)
    if n_burn < 0:
        raise ParameterError(f"burn_in must be >= 0; got {burn_in!r}")
    x = start
    for _ in range(n_burn):
        x = rr * x * (1.0 - x)
    out = []
    append = out.append
    for _ in range(n_record):
        x = rr * x * (1.0 - x)
        append(x)
    states = np.asarray(out)
    return Trajectory(rr, start, n_burn, states, _is_degenerate(rr, states))


@dataclass(frozen=True, eq=False)
class EmpiricalCdf:
    """Right-continuous step CDF F(y) = #{samples <= y} / n."""

    samples: np.ndarray

    def __post_init__(self):
        arr = np.sort(np.asarray(self.samples, dtype=float).ravel())
        if arr.size == 0:
            raise ParameterError("empirical CDF needs at least one sample")
        if not ((arr >= 0.0) & (arr <= 1.0)).all():
            raise DomainError("samples must lie in [0, 1]")
        object.__setattr__(self, "samples", arr)

    @property
    def n(self) -> int:
        return int(self.samples.size)

    def __call__(self, y):
        arr, scalar = _as_unit_array(y)
        out = np.searchsorted(self.samples, arr, side="right") / self.n
        return _restore(np.asarray(out, dtype=float), scalar)


def ensemble_push(dist: DistSpec, r, n_steps: int, n_samples: int, seed: int) -> EmpiricalCdf:
    """Sample the spec, push every point n_steps through the map in
    lockstep, and return the empirical CDF of the final ensemble."""
    rr = validate_map_param(r)
    if int(n_samples) < 100:
        raise ParameterError(f"n_samples must be >= 100; got {n_samples!r}")
    if int(n_steps) < 0:
        raise ParameterError(f"n_steps must be >= 0; got {n_steps!r}")
    x = sample(dist, int(n_samples), seed)
    for _ in range(int(n_steps)):
        x = rr * x * (1.0 - x)
    return EmpiricalCdf(x)


@dataclass(frozen=True, eq=False)
class ErgodicRun:
    """Empirical CDF of one long orbit plus degeneracy diagnostics."""

    empirical: EmpiricalCdf
    r: float
    x0: float
    burn_in: int
    degenerate_attractor: bool


def ergodic_empirical(r, total_steps, burn_in: int = DEFAULT_BURN_IN, seed: int = 0) -> ErgodicRun:
    """Empirical CDF of a single seeded orbit of length total_steps.

    The start point is drawn uniformly from (0.01, 0.99).  At r = 4 a
    degenerate orbit means a measure-zero start, so the draw is retried
    a bounded number of times before DegenerateOrbitError; away from
    r = 4 the attractor itself may be degenerate, so the first orbit is
    returned with the flag set for the caller to inspect.
    """
    rr = validate_map_param(r)
    if int(total_steps) < MIN_ERGODIC_STEPS:
        raise ParameterError(
            f"total_steps must be >= {MIN_ERGODIC_STEPS} for a usable empirical CDF; got {total_steps!r}"
        )
    rng = np.random.default_rng(seed)
    low, high = ERGODIC_X0_RANGE
    for _ in range(MAX_ERGODIC_RETRIES):
        x0 = low + (high - low) * float(rng.random())
        run = trajectory(rr, x0, int(total_steps), burn_in)
        if rr == 4.0 and run.degenerate:
            continue
        return ErgodicRun(EmpiricalCdf(run.states), rr, x0, int(burn_in), run.degenerate)
    raise DegenerateOrbitError(
        f"all {MAX_ERGODIC_RETRIES} seeded orbits at r={rr:g} collapsed onto a degenerate set"
    )
