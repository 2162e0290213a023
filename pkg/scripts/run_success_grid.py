#!/usr/bin/env python3
"""Sweep host density and target hub degree, recording pipeline success rates.

Writes <out>.csv / <out>.records.json / <out>.meta.json and prints the summary
table.  Rerunning with the same seed reproduces the .csv and .records.json
byte for byte.

Example:
    python3 scripts/run_success_grid.py --n 64 --trials 50 --seed 0 --out results/grid
"""

import argparse
import sys

from bipack.experiments import ExperimentSpec, GridPoint, run_experiment, summary_csv


def build_spec(args):
    grid = tuple(
        GridPoint(n=args.n, p=p, delta_h=dh, eps=args.eps, generator=args.generator)
        for p in args.p
        for dh in args.delta_h
    )
    return ExperimentSpec(
        grid=grid,
        trials=args.trials,
        seed_base=args.seed,
        mode=args.mode,
        retries=args.retries,
        out=args.out,
    )


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=64)
    parser.add_argument("--p", type=float, nargs="+", default=[0.6, 0.75, 0.9])
    parser.add_argument("--delta-h", type=int, nargs="+", default=[2, 4, 8])
    parser.add_argument("--eps", type=float, default=0.4)
    parser.add_argument("--generator", choices=["random", "condition1"], default="random")
    parser.add_argument("--mode", choices=["strict", "relaxed"], default="relaxed")
    parser.add_argument("--trials", type=int, default=50)
    parser.add_argument("--retries", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--out", default=None)
    args = parser.parse_args(argv)

    _, rows = run_experiment(build_spec(args))
    sys.stdout.write(summary_csv(rows))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
