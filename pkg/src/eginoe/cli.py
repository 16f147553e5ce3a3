"""Command-line front end.

Subcommands evaluate the exact density and its expansions on grids (density,
edge), compare expected-count routes (count), run the invariant suites
(verify), and dump Monte Carlo spectra (sample).  Tables go to stdout or
--out as CSV (comma-separated, header row, LF endings, 17 significant
digits) or JSON with a metadata object; --plot additionally renders the
matplotlib figure for the table.

Exit codes: 0 success, 1 usage error, 2 numerical failure, 3 verification
failure.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import __version__
from .asymptotics import (edge_strong, edge_weak, expected_count_strong,
                          expected_count_weak, global_strong, global_weak)
from .density import (EnsembleParams, WeakRegimeParams, edge_rescaled_exact,
                      expected_count_exact, rn_grid)
from .montecarlo import SampleConfig, expected_count_mc, real_eigenvalues, \
    sample_elliptic_ginoe, trial_rng
from .specfun import QuadratureError
from .verify import SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NUMERICAL = 2
EXIT_VERIFY = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *a, **kw):
        super().__init__(*a, **kw)
        # let grid specs like -4:4:25 pass as values, not option strings
        self._negative_number_matcher = re.compile(r"^-\d|^-\.\d")

    def error(self, message):
        raise UsageError(message)


def parse_number(text: str) -> float:
    """Parse a float or an exact fraction like 5/7."""
    try:
        if "/" in text:
            return float(Fraction(text))
        return float(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse number {text!r}") from exc


@dataclass(frozen=True)
class GridSpec:
    """Equally spaced evaluation grid, endpoints included."""

    lo: float
    hi: float
    points: int

    def __post_init__(self):
        if self.points < 2:
            raise UsageError("--grid needs at least 2 points")
        if not self.lo < self.hi:
            raise UsageError("--grid needs lo < hi")

    def values(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.points)


def parse_grid(text: str) -> GridSpec:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"--grid must be LO:HI:POINTS, got {text!r}")
    try:
        points = int(parts[2])
    except ValueError as exc:
        raise UsageError(f"--grid POINTS must be an integer, got {parts[2]!r}") from exc
    return GridSpec(parse_number(parts[0]), parse_number(parts[1]), points)


def _fmt(v: float) -> str:
    return f"{v:.17g}"


def _write_table(columns, rows, meta, out, fmt):
    if fmt == "csv":
        lines = [",".join(columns)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps({"metadata": meta, "columns": columns,
                           "rows": [[float(v) for v in row] for row in rows]},
                          indent=1) + "\n"
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _resolve_params(args, edge_command=False):
    """EnsembleParams / WeakRegimeParams plus a metadata dict from the flags."""
    if (args.tau is None) == (args.alpha is None):
        raise UsageError("exactly one of --tau or --alpha is required")
    if args.n is None or args.n < 2 or args.n % 2 != 0:
        raise UsageError("--n must be a positive even integer")
    if args.tau is not None:
        tau = parse_number(args.tau)
        if not 0.0 <= tau <= 1.0:
            raise UsageError("--tau must lie in [0, 1]")
        meta = {"n": args.n, "tau": tau, "regime": "strong", "version": __version__}
        return EnsembleParams(args.n, tau), meta
    alpha = parse_number(args.alpha)
    scaling = "edge" if edge_command else (args.scaling or "bulk")
    try:
        params = WeakRegimeParams(args.n, alpha, scaling)
    except ValueError as exc:
        raise UsageError(f"--alpha invalid: {exc}") from exc
    meta = {"n": args.n, "alpha": alpha, "scaling": scaling, "regime": "weak",
            "version": __version__}
    return params, meta


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def cmd_density(args) -> int:
    params, meta = _resolve_params(args)
    n = args.n
    if args.grid is not None:
        grid = parse_grid(args.grid)
    elif meta["regime"] == "strong":
        width = 1.0 + meta["tau"] - 1e-2
        grid = GridSpec(-width, width, 101)
    else:
        grid = GridSpec(-(2.0 - 1e-3), 2.0 - 1e-3, 101)
    xs = grid.values()
    if meta["regime"] == "weak":
        # theorem domain is the open interval (-2, 2)
        xs = np.clip(xs, -(2.0 - 1e-3), 2.0 - 1e-3)
    exact = rn_grid(params, xs)
    rows = []
    for x, ex in zip(xs, exact):
        if meta["regime"] == "strong":
            e = global_strong(meta["tau"], float(x), n)
            residual = n**3.5 * (ex - e.composite)
        else:
            e = global_weak(meta["alpha"], float(x), n)
            residual = ex - n * e.leading
        rows.append((float(x), float(ex), e.leading, e.composite, residual,
                     e.correction))
    columns = ["x", "exact", "leading", "composite", "residual_scaled", "correction"]
    table_meta = {**meta, "grid": [grid.lo, grid.hi, grid.points]}
    _write_table(columns, rows, table_meta, args.out, args.format)
    if args.plot:
        from .plots import plot_density
        table = {c: [r[i] for r in rows] for i, c in enumerate(columns)}
        plot_density(table, meta, args.plot)
    return EXIT_OK


def cmd_edge(args) -> int:
    params, meta = _resolve_params(args, edge_command=True)
    n = args.n
    grid = parse_grid(args.grid) if args.grid is not None else GridSpec(-4.0, 4.0, 41)
    rows = []
    for xi in grid.values():
        ex = edge_rescaled_exact(params, float(xi))
        if meta["regime"] == "strong":
            e = edge_strong(meta["tau"], float(xi), n)
            residual = math.sqrt(n) * (ex - e.leading)
        else:
            e = edge_weak(meta["alpha"], float(xi), n)
            residual = n ** (1.0 / 3.0) * (ex - e.leading)
        rows.append((float(xi), ex, e.leading, e.correction, residual))
    columns = ["xi", "exact", "r0", "r1", "residual_scaled"]
    table_meta = {**meta, "grid": [grid.lo, grid.hi, grid.points]}
    _write_table(columns, rows, table_meta, args.out, args.format)
    if args.plot:
        from .plots import plot_edge
        table = {c: [r[i] for r in rows] for i, c in enumerate(columns)}
        plot_edge(table, meta, args.plot)
    return EXIT_OK


def cmd_count(args) -> int:
    params, meta = _resolve_params(args)
    exact = expected_count_exact(params)
    if meta["regime"] == "strong":
        if meta["tau"] >= 1.0:
            raise UsageError("--tau must be < 1 for the count expansion")
        asymptotic = expected_count_strong(meta["tau"], args.n)
    else:
        asymptotic = expected_count_weak(meta["alpha"], args.n)
    report = {
        "metadata": meta,
        "exact": exact,
        "asymptotic": asymptotic,
        "discrepancy": abs(exact - asymptotic),
    }
    if args.mc:
        cfg = SampleConfig(args.n, params.tau, args.mc, args.seed)
        mean, stderr = expected_count_mc(cfg)
        report["mc_mean"] = mean
        report["mc_stderr"] = stderr
        report["mc_z"] = abs(mean - exact) / stderr if stderr > 0 else 0.0
    if args.format == "json":
        text = json.dumps(report, indent=1) + "\n"
    else:
        lines = [f"exact      {_fmt(exact)}",
                 f"asymptotic {_fmt(asymptotic)}",
                 f"|diff|     {_fmt(report['discrepancy'])}"]
        if args.mc:
            lines.append(f"mc         {_fmt(report['mc_mean'])} "
                         f"+- {_fmt(report['mc_stderr'])} (z = {report['mc_z']:.2f})")
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite not in set(SUITES) | {"all"}:
        raise UsageError(f"unknown suite {args.suite!r}; choose from "
                         f"{', '.join(sorted(SUITES))}, all")
    checks = run_suite(args.suite)
    failed = 0
    for name, passed, detail in checks:
        tag = "PASS" if passed else "FAIL"
        suffix = f" ({detail})" if detail else ""
        print(f"[{tag}] {name}{suffix}")
        failed += 0 if passed else 1
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def cmd_sample(args) -> int:
    if args.n is None or args.n < 2 or args.n % 2 != 0:
        raise UsageError("--n must be a positive even integer")
    tau = parse_number(args.tau) if args.tau is not None else None
    if tau is None or not 0.0 <= tau <= 1.0:
        raise UsageError("--tau in [0, 1] is required")
    if args.trials < 1:
        raise UsageError("--trials must be >= 1")
    rows = []
    for trial in range(args.trials):
        rng = trial_rng(args.seed, trial)
        spectrum = real_eigenvalues(sample_elliptic_ginoe(args.n, tau, rng))
        rows.extend((float(trial), float(v)) for v in spectrum)
    meta = {"n": args.n, "tau": tau, "trials": args.trials, "seed": args.seed,
            "version": __version__}
    _write_table(["trial", "eigenvalue"], rows, meta, args.out, args.format)
    return EXIT_OK


# ----------------------------------------------------------------------
# parser
# ----------------------------------------------------------------------

def build_parser() -> _Parser:
    parser = _Parser(prog="eginoe",
                     description="Elliptic GinOE real-eigenvalue densities, "
                                 "finite-size corrections, and Monte Carlo checks.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, seed=False):
        p.add_argument("--n", type=int, required=True, help="matrix dimension (even)")
        p.add_argument("--tau", help="Hermiticity parameter in [0,1]; fractions ok")
        p.add_argument("--alpha", help="weak-regime parameter; fractions ok")
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        if seed:
            p.add_argument("--seed", type=int, default=0, help="64-bit RNG seed")

    p = sub.add_parser("density", help="global-regime density table")
    common(p)
    p.add_argument("--scaling", choices=("bulk", "edge"),
                   help="weak-regime scaling law (default bulk)")
    p.add_argument("--grid", help="LO:HI:POINTS (default spans the support)")
    p.add_argument("--plot", help="render the comparison figure to this path")
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("edge", help="edge-rescaled density table")
    common(p)
    p.add_argument("--grid", help="LO:HI:POINTS in xi (default -4:4:41)")
    p.add_argument("--plot", help="render the comparison figure to this path")
    p.set_defaults(func=cmd_edge)

    p = sub.add_parser("count", help="expected real-eigenvalue count report")
    common(p, seed=True)
    p.add_argument("--mc", type=int, metavar="TRIALS",
                   help="add a Monte Carlo estimate over TRIALS matrices")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("verify", help="run a named invariant suite")
    p.add_argument("--suite", default="all",
                   help="specfun | exact | asymptotics | planrot | montecarlo | all")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample", help="dump sorted real eigenvalues per trial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tau", required=True)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_sample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (QuadratureError, ValueError, OverflowError, FloatingPointError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
