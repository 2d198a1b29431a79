"""Command-line interface.

Subcommands: `iterate` (pushforward iterates on a grid), `figure`
(iterates next to the three reference laws), `verify` (the check
battery), and `simulate` (Monte Carlo ensembles and long orbits).
Tables are emitted as CSV or JSON with a reproducibility meta block and
no timestamps, so identical invocations produce identical bytes.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 numerical-integrity failure.
"""

from __future__ import annotations

import argparse
import platform
import json
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import ks_statistic
from .distributions import DistSpec, cdf_beta, cdf_kumaraswamy
from .errors import (
    DegenerateOrbitError,
    DomainError,
    NumericsError,
    ParameterError,
    ResourceLimitError,
)
from .pushforward import iterate_pushforward, standard_grid
from .simulate import DEFAULT_BURN_IN, ensemble_push, ergodic_empirical
from .verify import run_verification

__all__ = ["RunConfig", "build_parser", "main"]

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NUMERICS = 3


@dataclass
class RunConfig:
    """Resolved flags for one CLI invocation."""

    command: str
    r: float = 4.0
    init: str = "uniform"
    steps: int = 4
    grid: int = 1024
    n: int = 100_000
    seed: int = 0
    fmt: str = "csv"
    out: str | None = None
    mode: str = "orbit"
    push_steps: int = 2
    burn_in: int = DEFAULT_BURN_IN


def _format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.17g}"
    return str(value)


def _meta(cfg: RunConfig, **extra) -> dict:
    meta = {
        "command": cfg.command,
        "r": cfg.r,
        "seed": cfg.seed,
        "grid": cfg.grid,
        "format": cfg.fmt,
        "package": f"cdfpush {__version__}",
        "numpy": np.__version__,
        "python": platform.python_version(),
    }
    meta.update(extra)
    return meta


def _write_text(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_table(columns: dict[str, np.ndarray], meta: dict, footer: dict, cfg: RunConfig) -> None:
    """Write a column table as CSV (footer as `# key = value` lines) or JSON."""
    if cfg.fmt == "json":
        payload = {
            "meta": {**meta, **footer},
            "columns": {name: [float(v) for v in values] for name, values in columns.items()},
        }
        _write_text(json.dumps(payload, indent=2) + "\n", cfg.out)
        return
    lines = [",".join(columns)]
    for row in zip(*columns.values()):
        lines.append(",".join(f"{float(v):.17g}" for v in row))
    for key, value in footer.items():
        lines.append(f"# {key} = {_format_value(value)}")
    _write_text("\n".join(lines) + "\n", cfg.out)


def cmd_iterate(cfg: RunConfig) -> int:
    if cfg.steps < 0:
        raise ParameterError(f"--steps must be >= 0; got {cfg.steps}")
    base = DistSpec.parse(cfg.init)
    grid = standard_grid(cfg.grid)
    columns: dict[str, np.ndarray] = {"y": grid}
    for n in range(cfg.steps + 1):
        iterate = iterate_pushforward(base.cdf(), cfg.r, n)
        columns[f"D{n}"] = np.asarray(iterate(grid), dtype=float)
    _emit_table(columns, _meta(cfg, init=cfg.init, steps=cfg.steps), {}, cfg)
    return EXIT_OK


def cmd_figure(cfg: RunConfig) -> int:
    base = DistSpec.parse(cfg.init)
    grid = standard_grid(cfg.grid)
    columns: dict[str, np.ndarray] = {"y": grid}
    for n in range(5):
        iterate = iterate_pushforward(base.cdf(), cfg.r, n)
        columns[f"D{n}"] = np.asarray(iterate(grid), dtype=float)
    columns["U"] = grid.copy()
    columns["K"] = np.asarray(cdf_kumaraswamy(0.5, 0.5, grid), dtype=float)
    columns["B"] = np.asarray(cdf_beta(0.5, 0.5, grid), dtype=float)
    _emit_table(columns, _meta(cfg, init=cfg.init), {}, cfg)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    checks = run_verification(r=cfg.r, seed=cfg.seed, n_samples=cfg.n)
    all_pass = all(check.passed for check in checks)
    if cfg.fmt == "json":
        payload = {
            "meta": _meta(cfg, n=cfg.n),
            "checks": [
                {
                    "name": check.name,
                    "value": check.value,
                    "threshold": check.threshold,
                    "passed": check.passed,
                }
                for check in checks
            ],
        }
        _write_text(json.dumps(payload, indent=2) + "\n", cfg.out)
    else:
        lines = ["check,value,threshold,status"]
        for check in checks:
            status = "PASS" if check.passed else "FAIL"
            lines.append(f"{check.name},{check.value:.17g},{check.threshold:.17g},{status}")
        lines.append(f"# all_pass = {_format_value(all_pass)}")
        _write_text("\n".join(lines) + "\n", cfg.out)
    return EXIT_OK if all_pass else EXIT_VERIFY_FAILED


def cmd_simulate(cfg: RunConfig) -> int:
    grid = standard_grid(cfg.grid)
    if cfg.mode == "ensemble":
        base = DistSpec.parse(cfg.init)
        empirical = ensemble_push(base, cfg.r, cfg.push_steps, cfg.n, cfg.seed)
        reference = iterate_pushforward(base.cdf(), cfg.r, cfg.push_steps)
        columns = {
            "y": grid,
            "empirical": np.asarray(empirical(grid), dtype=float),
            "reference": np.asarray(reference(grid), dtype=float),
        }
        footer = {"ks_statistic": ks_statistic(empirical, reference)}
        meta = _meta(cfg, mode=cfg.mode, init=cfg.init, push_steps=cfg.push_steps, n=cfg.n)
    else:
        run = ergodic_empirical(cfg.r, cfg.steps, cfg.burn_in, cfg.seed)
        arcsine = DistSpec("arcsine").cdf()
        columns = {
            "y": grid,
            "empirical": np.asarray(run.empirical(grid), dtype=float),
            "arcsine": np.asarray(arcsine(grid), dtype=float),
        }
        footer = {
            "ks_statistic": ks_statistic(run.empirical, arcsine),
            "x0": run.x0,
            "degenerate_attractor": run.degenerate_attractor,
        }
        meta = _meta(cfg, mode=cfg.mode, steps=cfg.steps, burn_in=cfg.burn_in)
        if run.degenerate_attractor:
            print(
                f"notice: orbit at r={cfg.r:g} collapsed onto a degenerate attractor; "
                f"the empirical CDF reflects that attractor, not an ergodic average",
                file=sys.stderr,
            )
    _emit_table(columns, meta, footer, cfg)
    return EXIT_OK


_DISPATCH = {
    "iterate": cmd_iterate,
    "figure": cmd_figure,
    "verify": cmd_verify,
    "simulate": cmd_simulate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdfpush",
        description="Propagate distributions through the quadratic interval map "
        "x -> r*x*(1-x) and check the exact operator against closed forms "
        "and Monte Carlo simulation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser, grid_default: int = 1024) -> None:
        p.add_argument("--r", type=float, default=4.0, help="map parameter in (0, 4]")
        p.add_argument("--grid", type=int, default=grid_default, help="grid size m (m+1 knots)")
        p.add_argument("--seed", type=int, default=0, help="RNG seed for sampled quantities")
        p.add_argument("--format", dest="fmt", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    p_iterate = sub.add_parser("iterate", help="tabulate pushforward iterates D_0..D_steps")
    p_iterate.add_argument("--init", default="uniform", help="initial distribution, e.g. beta:0.5,0.5")
    p_iterate.add_argument("--steps", type=int, default=4, help="number of pushforward steps")
    add_common(p_iterate)

    p_figure = sub.add_parser(
        "figure", help="tabulate D_0..D_4 next to the uniform, Kumaraswamy(1/2,1/2), and beta(1/2,1/2) CDFs"
    )
    p_figure.add_argument("--init", default="uniform", help="initial distribution")
    add_common(p_figure)

    p_verify = sub.add_parser("verify", help="run the closed-form and Monte Carlo check battery")
    p_verify.add_argument("--n", type=int, default=100_000, help="Monte Carlo sample count")
    add_common(p_verify)

    p_simulate = sub.add_parser("simulate", help="Monte Carlo ensembles and long orbits")
    p_simulate.add_argument("--mode", choices=("orbit", "ensemble"), default="orbit")
    p_simulate.add_argument("--init", default="uniform", help="initial distribution (ensemble mode)")
    p_simulate.add_argument("--steps", type=int, default=100_000, help="orbit length after burn-in")
    p_simulate.add_argument("--push-steps", type=int, default=2, help="map applications (ensemble mode)")
    p_simulate.add_argument("--n", type=int, default=100_000, help="ensemble size (ensemble mode)")
    p_simulate.add_argument("--burn-in", type=int, default=DEFAULT_BURN_IN, help="discarded initial steps")
    add_common(p_simulate)

    return parser


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for name in ("r", "init", "steps", "grid", "n", "seed", "fmt", "out", "mode", "burn_in"):
        if hasattr(args, name):
            setattr(cfg, name, getattr(args, name))
    if hasattr(args, "push_steps"):
        cfg.push_steps = args.push_steps
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    cfg = _config_from_args(args)
    try:
        return _DISPATCH[cfg.command](cfg)
    except (ParameterError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NumericsError, DegenerateOrbitError, ResourceLimitError) as exc:
        print(f"numerical integrity failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICS


if __name__ == "__main__":
    sys.exit(main())
