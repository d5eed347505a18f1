"""Command-line surface: curve, density, distribution and variance tables.

Emits CSV (default) or JSON.  The first CSV line is the versioned header
``# gaussian-page v1``; every numeric field uses 17 significant digits so
values round-trip exactly.  The default seed is a fixed constant
(overridable via ``--seed`` or the GAUSSIAN_PAGE_SEED environment
variable): this is a reproducibility-first tool, never time-seeded.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass, field

import numpy as np

from gausspage import ensembles, formulas, rmt, stats
from gausspage.linalg import InvalidArgument

HEADER = "# gaussian-page v1"
DEFAULT_SEED = 20210701

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_RESOURCE = 3

ENSEMBLES = ("gaussian", "haar-pure", "hamiltonian", "number-conserving")
MODES = ("exact", "quadrature", "mc", "limit")


@dataclass
class RunConfig:
    command: str
    N: int
    N_A: int | None = None  # None means sweep 0..N/2 where applicable
    ensemble: str = "gaussian"
    mode: str = "exact"
    samples: int = 10_000
    seed: int = DEFAULT_SEED
    workers: int = 1
    fmt: str = "csv"
    out: str | None = None
    points: int = 101
    bins: int = 50
    extra: dict = field(default_factory=dict)


class InvalidCombination(ValueError):
    pass


def _fmt(x) -> str:
    if isinstance(x, float):
        return f"{x:.17g}"
    return str(x)


def _emit(config: RunConfig, columns: list[str], rows: list[list]) -> None:
    if config.fmt == "json":
        payload = {
            "version": HEADER.lstrip("# "),
            "columns": columns,
            "rows": [[(f"{v:.17g}" if isinstance(v, float) else v) for v in row] for row in rows],
        }
        text = json.dumps(payload, indent=2) + "\n"
    else:
        lines = [HEADER, ",".join(columns)]
        lines += [",".join(_fmt(v) for v in row) for row in rows]
        text = "\n".join(lines) + "\n"
    if config.out:
        with open(config.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _mc_sampler(config: RunConfig, n_a: int):
    name = config.ensemble
    N = config.N
    if name == "gaussian":
        return lambda gen, count: ensembles.gaussian_entropies(N, n_a, count, gen)
    if name == "haar-pure":
        if N > ensembles.HAAR_PURE_MAX_MODES:
            raise ensembles.ResourceLimit(
                f"haar-pure requires N <= {ensembles.HAAR_PURE_MAX_MODES}, got {N}"
            )
        return lambda gen, count: ensembles.haar_pure_entropies(N, n_a, count, gen)
    if name == "hamiltonian":
        return lambda gen, count: ensembles.hamiltonian_eigenstate_entropies(N, n_a, count, gen)
    if name == "number-conserving":
        return lambda gen, count: ensembles.number_conserving_entropies(N, n_a, count, gen)
    raise InvalidCombination(f"unknown ensemble {name!r}")


def _curve_row(config: RunConfig, n_a: int) -> list:
    N = config.N
    f = n_a / N
    mode, ens = config.mode, config.ensemble
    std = math.nan
    std_error = math.nan
    samples = 0
    if mode == "exact":
        if ens == "gaussian":
            value = formulas.gaussian_average_exact(N, n_a)
            if 1 <= n_a:
                ctx = rmt.build_kernel_ctx(n_a, N - 2 * n_a)
                std = math.sqrt(rmt.variance_finite_N(ctx))
            else:
                std = 0.0
        elif ens == "haar-pure":
            value = formulas.page_average_exact(N, n_a)
        else:
            raise InvalidCombination(f"mode 'exact' is not available for ensemble {ens!r}")
    elif mode == "quadrature":
        if ens != "gaussian":
            raise InvalidCombination("mode 'quadrature' requires the gaussian ensemble")
        if n_a == 0:
            value = 0.0
        else:
            ctx = rmt.build_kernel_ctx(n_a, N - 2 * n_a)
            value = rmt.average_entropy_quadrature(ctx)
    elif mode == "mc":
        if n_a == 0:
            value, std, std_error, samples = 0.0, 0.0, 0.0, 0
        else:
            est = stats.mc_estimate(_mc_sampler(config, n_a), config.samples, config.seed, config.workers)
            value, std, std_error, samples = est.mean, math.sqrt(est.variance), est.std_error, est.n
    elif mode == "limit":
        if n_a == 0:
            value = 0.0
        elif ens == "gaussian":
            value = formulas.gaussian_thermo(N, f)
            std = formulas.gaussian_std_limit(f) if f <= 0.5 else math.nan
        elif ens == "haar-pure":
            value = formulas.page_thermo(N, f)
            std = formulas.page_std_thermo(N, f)
        elif ens == "number-conserving":
            value = N * formulas.lrv_density(f)
        else:
            raise InvalidCombination(f"mode 'limit' is not available for ensemble {ens!r}")
    else:
        raise InvalidCombination(f"unknown mode {mode!r}")
    return [N, n_a, f, value, std, std_error, samples, mode, ens]


def run_page_curve(config: RunConfig) -> None:
    if config.mode in ("exact",) and config.ensemble == "haar-pure":
        pass  # page formula needs N_A <= N/2, which the sweep respects
    sweep = range(0, config.N // 2 + 1) if config.N_A is None else [config.N_A]
    columns = ["N", "N_A", "f", "value", "std", "std_error", "samples", "mode", "ensemble"]
    rows = [_curve_row(config, n_a) for n_a in sweep]
    _emit(config, columns, rows)


def run_density(config: RunConfig) -> None:
    if config.N_A is None:
        raise InvalidCombination("density requires --NA")
    n_a = config.N_A
    delta = config.N - 2 * n_a
    if n_a < 1 or delta < 0:
        raise InvalidCombination("density requires 1 <= N_A <= N/2")
    ctx = rmt.build_kernel_ctx(n_a, delta)
    grid = np.linspace(0.0, 1.0, config.points)
    rho = np.atleast_1d(rmt.level_density(ctx, grid))
    _emit(config, ["x", "rho"], [[float(x), float(r)] for x, r in zip(grid, rho)])


def run_variance(config: RunConfig) -> None:
    N = config.N
    n_a = config.N_A if config.N_A is not None else N // 2
    if n_a < 1 or N - 2 * n_a < 0:
        raise InvalidCombination("variance requires 1 <= N_A <= N/2")
    f = n_a / N
    ctx = rmt.build_kernel_ctx(n_a, N - 2 * n_a)
    var_exact = rmt.variance_finite_N(ctx)
    var_limit = formulas.gaussian_std_limit(f) ** 2 if f <= 0.5 else math.nan
    if config.samples > 0:
        est = stats.mc_estimate(_mc_sampler(config, n_a), config.samples, config.seed, config.workers)
        var_mc, n = est.variance, est.n
    else:
        var_mc, n = math.nan, 0
    _emit(
        config,
        ["N", "N_A", "f", "variance_finite", "variance_mc", "variance_limit", "samples", "seed"],
        [[N, n_a, f, var_exact, var_mc, var_limit, n, config.seed]],
    )


def run_sample(config: RunConfig) -> None:
    if config.N_A is None:
        raise InvalidCombination("sample requires --NA")
    gen = np.random.Generator(np.random.PCG64(np.random.SeedSequence((config.seed, 0))))
    values = _mc_sampler(config, config.N_A)(gen, config.samples)
    _emit(config, ["index", "entropy"], [[i, float(v)] for i, v in enumerate(values)])


def run_dist(config: RunConfig) -> None:
    if config.N_A is None:
        raise InvalidCombination("dist requires --NA")
    gen = np.random.Generator(np.random.PCG64(np.random.SeedSequence((config.seed, 0))))
    values = _mc_sampler(config, config.N_A)(gen, config.samples)
    hist = stats.histogram(values, config.bins, (0.0, config.N_A * math.log(2.0)))
    rows = [
        [float(lo), float(hi), int(c)]
        for lo, hi, c in zip(hist.edges[:-1], hist.edges[1:], hist.counts)
    ]
    _emit(config, ["bin_lo", "bin_hi", "count"], rows)


_COMMANDS = {
    "page-curve": run_page_curve,
    "density": run_density,
    "variance": run_variance,
    "sample": run_sample,
    "dist": run_dist,
}


def run(config: RunConfig) -> int:
    try:
        _COMMANDS[config.command](config)
    except (InvalidCombination, InvalidArgument) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except ensembles.ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gausspage",
        description="Entanglement entropy statistics of random fermionic Gaussian states",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--N", type=int, required=True)
        p.add_argument("--NA", default=None, help="subsystem size, or 'sweep' (page-curve default)")
        p.add_argument("--ensemble", choices=ENSEMBLES, default="gaussian")
        p.add_argument("--mode", choices=MODES, default="exact")
        p.add_argument("--samples", type=int, default=10_000)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--format", choices=("csv", "json"), default="csv", dest="fmt")
        p.add_argument("--out", default=None)
        p.add_argument("--points", type=int, default=101)
        p.add_argument("--bins", type=int, default=50)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    if args.seed is not None:
        seed = args.seed
    else:
        seed = int(os.environ.get("GAUSSIAN_PAGE_SEED", DEFAULT_SEED))
    n_a = None
    if args.NA is not None and args.NA != "sweep":
        n_a = int(args.NA)
    config = RunConfig(
        command=args.command,
        N=args.N,
        N_A=n_a,
        ensemble=args.ensemble,
        mode=args.mode,
        samples=args.samples,
        seed=seed,
        workers=args.workers,
        fmt=args.fmt,
        out=args.out,
        points=args.points,
        bins=args.bins,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
