"""Distribution primitives on the unit interval.

Closed-form CDFs and quantiles for the uniform, arcsine, beta, and
Kumaraswamy families, plus empirical step CDFs and seeded inversion
sampling.  All evaluators are vectorized over numpy arrays and accept
plain floats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import ConvergenceError, DomainError, ParameterError

__all__ = [
    "Cdf",
    "DistSpec",
    "cdf_arcsine",
    "cdf_beta",
    "cdf_kumaraswamy",
    "cdf_uniform",
    "quantile_kumaraswamy",
    "sample",
]

_BETA_CF_TOL = 1e-12
_BETA_CF_MAX_ITER = 300
_BISECT_TOL = 1e-12
# floor keeping Lentz denominators away from zero without disturbing the value
_CF_TINY = 1e-300

_PARAMETRIC_FAMILIES = ("beta", "kumaraswamy")
_CLOSED_FORM_FAMILIES = ("uniform", "arcsine") + _PARAMETRIC_FAMILIES
_FAMILIES = _CLOSED_FORM_FAMILIES + ("empirical",)


def _as_unit_array(y, name: str = "y") -> tuple[np.ndarray, bool]:
    """Coerce to a float array in [0, 1]; the flag marks scalar input."""
    arr = np.asarray(y, dtype=float)
    scalar = arr.ndim == 0
    if scalar:
        arr = arr.reshape(1)
    if arr.size:
        bad = ~((arr >= 0.0) & (arr <= 1.0))  # also catches NaN
        if bad.any():
            raise DomainError(f"{name} must lie in [0, 1]; got {arr[bad].flat[0]!r}")
    return arr, scalar


def _restore(out: np.ndarray, scalar: bool):
    return float(out[0]) if scalar else out


def _positive_param(value, name: str) -> float:
    v = float(value)
    if not math.isfinite(v) or v <= 0.0:
        raise ParameterError(f"{name} must be a finite positive number; got {value!r}")
    return v


@dataclass(frozen=True)
class Cdf:
    """A cumulative distribution function on [0, 1].

    Wraps a vectorized evaluator together with a provenance string
    recording how the function was realized (closed form, pushforward,
    grid interpolation).  Calling validates the evaluation points once;
    the wrapped kernel receives a clean float array.
    """

    fn: Callable[[np.ndarray], np.ndarray]
    provenance: str

    def __call__(self, y):
        arr, scalar = _as_unit_array(y)
        out = np.asarray(self.fn(arr), dtype=float)
        return _restore(out, scalar)


def _uniform_kernel(arr: np.ndarray) -> np.ndarray:
    return arr.copy()


def _arcsine_kernel(arr: np.ndarray) -> np.ndarray:
    return (2.0 / np.pi) * np.arcsin(np.sqrt(arr))


def _kumaraswamy_kernel(a: float, b: float, arr: np.ndarray) -> np.ndarray:
    return 1.0 - (1.0 - arr**a) ** b


def cdf_uniform(y):
    """Uniform CDF on [0, 1]: returns the evaluation points unchanged."""
    arr, scalar = _as_unit_array(y)
    return _restore(_uniform_kernel(arr), scalar)


def cdf_arcsine(y):
    """Arcsine CDF (2/pi) * arcsin(sqrt(y))."""
    arr, scalar = _as_unit_array(y)
    return _restore(_arcsine_kernel(arr), scalar)


def cdf_kumaraswamy(alpha, beta, y):
    """Kumaraswamy CDF 1 - (1 - y**alpha)**beta."""
    a = _positive_param(alpha, "alpha")
    b = _positive_param(beta, "beta")
    arr, scalar = _as_unit_array(y)
    return _restore(_kumaraswamy_kernel(a, b, arr), scalar)


def quantile_kumaraswamy(alpha, beta, p):
    """Kumaraswamy quantile (1 - (1 - p)**(1/beta))**(1/alpha)."""
    a = _positive_param(alpha, "alpha")
    b = _positive_param(beta, "beta")
    arr, scalar = _as_unit_array(p, "p")
    return _restore((1.0 - (1.0 - arr) ** (1.0 / b)) ** (1.0 / a), scalar)


def _beta_continued_fraction(a: float, b: float, x: np.ndarray, tol: float, max_iter: int) -> np.ndarray:
    """Modified Lentz evaluation of the incomplete-beta continued fraction.

    Valid for x below the symmetry split (a+1)/(a+b+2); vectorized over x.
    Raises instead of returning an unconverged value.
    """
    c = np.ones_like(x)
    d = 1.0 - (a + b) * x / (a + 1.0)
    np.copyto(d, _CF_TINY, where=np.abs(d) < _CF_TINY)
    d = 1.0 / d
    h = d.copy()
    converged = np.zeros(x.shape, dtype=bool)
    for m in range(1, max_iter + 1):
        m2 = 2 * m
        # even-index coefficient, then odd-index coefficient
        num = m * (b - m) * x / ((a + m2 - 1.0) * (a + m2))
        d = 1.0 + num * d
        np.copyto(d, _CF_TINY, where=np.abs(d) < _CF_TINY)
        c = 1.0 + num / c
        np.copyto(c, _CF_TINY, where=np.abs(c) < _CF_TINY)
        d = 1.0 / d
        h *= d * c
        num = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1.0))
        d = 1.0 + num * d
        np.copyto(d, _CF_TINY, where=np.abs(d) < _CF_TINY)
        c = 1.0 + num / c
        np.copyto(c, _CF_TINY, where=np.abs(c) < _CF_TINY)
        d = 1.0 / d
        delta = d * c
        h *= delta
        converged |= np.abs(delta - 1.0) < tol
        if converged.all():
            return h
    worst = float(np.max(np.abs(delta[~converged] - 1.0)))
    raise ConvergenceError(
        f"incomplete-beta continued fraction: {int((~converged).sum())} points "
        f"unconverged after {max_iter} iterations (alpha={a:g}, beta={b:g}, "
        f"worst step {worst:.3e})"
    )


def _regularized_incomplete_beta(a: float, b: float, y: np.ndarray, tol: float, max_iter: int) -> np.ndarray:
    out = np.empty_like(y)
    out[y == 0.0] = 0.0
    out[y == 1.0] = 1.0
    interior = (y > 0.0) & (y < 1.0)
    x = y[interior]
    if x.size:
        ln_beta = math.lgamma(a) + math.lgamma(b) - math.lgamma(a + b)
        front = np.exp(a * np.log(x) + b * np.log1p(-x) - ln_beta)
        res = np.empty_like(x)
        direct = x < (a + 1.0) / (a + b + 2.0)
        if direct.any():
            cf = _beta_continued_fraction(a, b, x[direct], tol, max_iter)
            res[direct] = front[direct] * cf / a
        flipped = ~direct
        if flipped.any():
            cf = _beta_continued_fraction(b, a, 1.0 - x[flipped], tol, max_iter)
            res[flipped] = 1.0 - front[flipped] * cf / b
        out[interior] = res
    return out


def cdf_beta(alpha, beta, y):
    """Regularized incomplete beta function I_y(alpha, beta).

    Continued-fraction evaluation with the symmetry split at
    (alpha+1)/(alpha+beta+2); non-convergence raises ConvergenceError
    rather than returning a silently wrong value.
    """
    a = _positive_param(alpha, "alpha")
    b = _positive_param(beta, "beta")
    arr, scalar = _as_unit_array(y)
    out = _regularized_incomplete_beta(a, b, arr, _BETA_CF_TOL, _BETA_CF_MAX_ITER)
    return _restore(out, scalar)


def _bisect_quantile(cdf_fn: Callable[[np.ndarray], np.ndarray], p: np.ndarray, tol: float = _BISECT_TOL) -> np.ndarray:
    """Invert a monotone CDF on [0, 1] by vectorized bisection."""
    lo = np.zeros_like(p)
    hi = np.ones_like(p)
    for _ in range(64):
        mid = 0.5 * (lo + hi)
        below = cdf_fn(mid) < p
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
        if float(np.max(hi - lo)) <= tol:
            break
    return 0.5 * (lo + hi)


@dataclass(frozen=True, eq=False)
class DistSpec:
    """Symbolic description of a distribution on [0, 1].

    `alpha`/`beta` are required for the beta and Kumaraswamy families and
    must be absent otherwise; `samples` is required for empirical specs
    and is stored sorted.
    """

    family: str
    alpha: float | None = None
    beta: float | None = None
    samples: np.ndarray | None = None

    def __post_init__(self):
        if self.family not in _FAMILIES:
            raise ParameterError(
                f"unknown family {self.family!r}; expected one of {', '.join(_FAMILIES)}"
            )
        if self.family in _PARAMETRIC_FAMILIES:
            if self.alpha is None or self.beta is None:
                raise ParameterError(f"family {self.family!r} requires alpha and beta")
            object.__setattr__(self, "alpha", _positive_param(self.alpha, "alpha"))
            object.__setattr__(self, "beta", _positive_param(self.beta, "beta"))
        elif self.alpha is not None or self.beta is not None:
            raise ParameterError(f"family {self.family!r} takes no shape parameters")
        if self.family == "empirical":
            if self.samples is None:
                raise ParameterError("empirical spec requires samples")
            arr = np.sort(np.asarray(self.samples, dtype=float).ravel())
            if arr.size == 0:
                raise ParameterError("empirical spec needs at least one sample")
            if not ((arr >= 0.0) & (arr <= 1.0)).all():
                raise ParameterError("empirical samples must lie in [0, 1]")
            object.__setattr__(self, "samples", arr)
        elif self.samples is not None:
            raise ParameterError("samples are only valid for the empirical family")

    @classmethod
    def parse(cls, text: str) -> "DistSpec":
        """Parse a spec string of the form `family` or `family:alpha,beta`.

        Examples: "uniform", "arcsine", "beta:0.5,0.5", "kumaraswamy:1,0.5".
        """
        name, sep, params = str(text).strip().partition(":")
        family = name.strip().lower()
        if family == "empirical" or family not in _FAMILIES:
            raise ParameterError(
                f"cannot parse distribution {text!r}; expected "
                f"uniform, arcsine, beta:a,b, or kumaraswamy:a,b"
            )
        if family in _PARAMETRIC_FAMILIES:
            parts = params.split(",") if sep else []
            if len(parts) != 2:
                raise ParameterError(
                    f"family {family!r} needs two parameters, e.g. '{family}:2,3'"
                )
            try:
                a, b = (float(part) for part in parts)
            except ValueError as exc:
                raise ParameterError(f"cannot parse parameters in {text!r}") from exc
            return cls(family, a, b)
        if sep:
            raise ParameterError(f"family {family!r} takes no parameters")
        return cls(family)

    @property
    def label(self) -> str:
        if self.family in _PARAMETRIC_FAMILIES:
            return f"{self.family}({self.alpha:g},{self.beta:g})"
        if self.family == "empirical":
            return f"empirical[n={self.samples.size}]"
        return self.family

    def cdf(self) -> Cdf:
        """Realize the spec as a callable CDF."""
        if self.family == "uniform":
            kernel = _uniform_kernel
        elif self.family == "arcsine":
            kernel = _arcsine_kernel
        elif self.family == "kumaraswamy":
            a, b = self.alpha, self.beta

            def kernel(arr, a=a, b=b):
                return _kumaraswamy_kernel(a, b, arr)

        elif self.family == "beta":
            a, b = self.alpha, self.beta

            def kernel(arr, a=a, b=b):
                return _regularized_incomplete_beta(a, b, arr, _BETA_CF_TOL, _BETA_CF_MAX_ITER)

        else:
            samples = self.samples

            def kernel(arr, samples=samples):
                return np.searchsorted(samples, arr, side="right") / samples.size

        if self.family == "empirical":
            provenance = self.label
        else:
            provenance = f"closed-form:{self.label}"
        return Cdf(kernel, provenance=provenance)

    def quantile(self, p):
        """Evaluate the quantile function at probability p.

        Families without a closed-form inverse fall back to bisection on
        the CDF (tolerance 1e-12).  Empirical specs have no quantile; use
        `sample`, which bootstraps.
        """
        if self.family == "empirical":
            raise ParameterError("empirical specs are sampled by bootstrap, not by quantile")
        arr, scalar = _as_unit_array(p, "p")
        if self.family == "uniform":
            out = arr.copy()
        elif self.family == "arcsine":
            out = np.sin(0.5 * np.pi * arr) ** 2
        elif self.family == "kumaraswamy":
            out = (1.0 - (1.0 - arr) ** (1.0 / self.beta)) ** (1.0 / self.alpha)
        else:
            a, b = self.alpha, self.beta
            out = _bisect_quantile(
                lambda x: _regularized_incomplete_beta(a, b, x, _BETA_CF_TOL, _BETA_CF_MAX_ITER),
                arr,
            )
        return _restore(out, scalar)


def sample(dist: DistSpec, n: int, seed: int) -> np.ndarray:
    """Draw n values from the spec, deterministically for a fixed seed.

    Closed-form families use inversion of uniform draws; empirical specs
    bootstrap (resample with replacement from the stored samples).
    """
    if int(n) < 1:
        raise ParameterError(f"sample count must be >= 1; got {n!r}")
    rng = np.random.default_rng(seed)
    if dist.family == "empirical":
        idx = rng.integers(0, dist.samples.size, size=int(n))
        return dist.samples[idx]
    u = rng.random(int(n))
    return np.asarray(dist.quantile(u), dtype=float)
