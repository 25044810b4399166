"""Command-line interface.

Subcommands map one-to-one onto the library surface:

  generate-gaussian  LRD Gaussian path(s) to CSV
  generate-stable    strongly dependent stable sequence to CSV
  cdf                stable CDF values at given points
  coeffs             first-order expansion coefficients on an x-grid
  c0                 coefficient supremum and its argmax
  ks                 raw and normalized KS statistics for a CSV sample
  test               goodness-of-fit decision as JSON
  mc-table           Monte Carlo coverage table over a (d, n) grid

All file outputs are byte-deterministic given the seed: floats are
written with shortest round-trip representation and wall-clock metadata
goes to stderr only.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

import numpy as np

from .empirical_process import Sample, ks_statistic
from .gof_test import ks_test
from .hermite_expansion import c0 as coeff_sup
from .hermite_expansion import coeff_table, d_nm
from .lrd_gaussian import LrdModel, simulate_lrd_pair, simulate_lrd_path, slowly_varying
from .mc_harness import ExperimentSpec, run_experiment
from .stable_core import TabulatedStableCdf, cms_g0, cms_g1, stable_cdf

__all__ = ["main"]


def _fmt(value: float) -> str:
    return repr(float(value))


def _write_csv(path: str, header: list[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(header)
        writer.writerows(rows)


def _cmd_generate_gaussian(args) -> int:
    model = LrdModel(args.d)
    if args.pair:
        pair = simulate_lrd_pair(model, args.n, args.seed)
        rows = (
            (i, _fmt(a), _fmt(b)) for i, (a, b) in enumerate(zip(pair.z1, pair.z2))
        )
        _write_csv(args.out, ["index", "z1", "z2"], rows)
    else:
        path = simulate_lrd_path(model, args.n, args.seed)
        _write_csv(args.out, ["index", "z1"], ((i, _fmt(v)) for i, v in enumerate(path)))
    return 0


def _cmd_generate_stable(args) -> int:
    model = LrdModel(args.d)
    pair = simulate_lrd_pair(model, args.n, args.seed)
    if args.alpha == 1.0:
        draws = cms_g1(pair.z1, pair.z2, args.beta2)
    else:
        draws = cms_g0(pair.z1, pair.z2, args.alpha, args.beta2)
    _write_csv(args.out, ["index", "x"], ((i, _fmt(v)) for i, v in enumerate(draws)))
    return 0


def _cmd_cdf(args) -> int:
    xs = [float(tok) for tok in args.x.split(",") if tok.strip()]
    print("x,F")
    for x in xs:
        print(f"{_fmt(x)},{_fmt(stable_cdf(x, args.alpha, args.beta2, args.tol))}")
    return 0


def _cmd_coeffs(args) -> int:
    xs = np.linspace(args.xmin, args.xmax, args.points)
    table = coeff_table(args.alpha, args.beta2, xs, args.tol, cache_dir=args.cache_dir)
    rows = (
        (_fmt(x), _fmt(v10), _fmt(v01), _fmt(e10), _fmt(e01))
        for x, v10, v01, e10, e01 in zip(
            table.xs, table.j10, table.j01, table.err10, table.err01
        )
    )
    _write_csv(args.out, ["x", "J10", "J01", "err10", "err01"], rows)
    return 0


def _cmd_c0(args) -> int:
    result = coeff_sup(args.alpha, args.beta2, tol=args.tol, cache_dir=args.cache_dir)
    print(f"c0={_fmt(result.value)}")
    print(f"x={_fmt(result.x)}")
    return 0


def _read_sample(path: str) -> Sample:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None:
            raise SystemExit(f"{path}: empty CSV")
        column = "x" if "x" in reader.fieldnames else reader.fieldnames[-1]
        values = [float(row[column]) for row in reader]
    return Sample(np.asarray(values))


def _cmd_ks(args) -> int:
    sample = _read_sample(args.input)
    model = LrdModel(args.d)
    dn = d_nm(1, args.d, sample.n, slowly_varying(model, sample.n))
    c0_value = coeff_sup(args.alpha, args.beta2).value
    null_cdf = TabulatedStableCdf(args.alpha, args.beta2)
    kn = ks_statistic(sample, null_cdf)
    print("K_n,d_n,c0,K_n_normalized")
    print(
        f"{_fmt(kn)},{_fmt(dn)},{_fmt(c0_value)},{_fmt(kn / (dn * c0_value))}"
    )
    return 0


def _cmd_test(args) -> int:
    sample = _read_sample(args.input)
    null_cdf = TabulatedStableCdf(args.alpha, args.beta2)
    report = ks_test(
        sample, args.alpha, args.beta2, args.d, level=args.level, null_cdf=null_cdf
    )
    if args.json:
        print(report.to_json())
    else:
        for key, value in sorted(report.to_dict().items()):
            print(f"{key}={value}")
    return 0


def _parse_config(path: str) -> dict[str, str]:
    """Plain `key = value` lines; '#' starts a comment."""
    out: dict[str, str] = {}
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise SystemExit(f"bad config line: {line!r}")
            key, value = line.split("=", 1)
            out[key.strip().replace("-", "_")] = value.strip()
    return out


def _apply_config(args) -> None:
    if not args.config:
        return
    conf = _parse_config(args.config)
    casts = {
        "alpha": float,
        "beta2": float,
        "d_list": str,
        "n_list": str,
        "reps": int,
        "seed": int,
        "out": str,
        "workers": int,
    }
    for key, cast in casts.items():
        if key in conf and getattr(args, key, None) is None:
            setattr(args, key, cast(conf[key]))


def _cmd_mc_table(args) -> int:
    _apply_config(args)
    missing = [
        k
        for k in ("alpha", "beta2", "d_list", "n_list", "reps", "seed", "out")
        if getattr(args, k) is None
    ]
    if missing:
        raise SystemExit(f"missing required options: {', '.join(missing)}")
    ds = tuple(float(tok) for tok in args.d_list.split(",") if tok.strip())
    ns = tuple(int(tok) for tok in args.n_list.split(",") if tok.strip())
    spec = ExperimentSpec(
        alpha=args.alpha,
        beta2=args.beta2,
        ds=ds,
        ns=ns,
        reps=args.reps,
        master_seed=args.seed,
        workers=args.workers or 1,
    )
    result = run_experiment(spec)
    header = (
        ["d", "n", "mean", "sd"]
        + [f"kstar_cov_{g:g}" for g in spec.gammas]
        + [f"ksd_cov_{g:g}" for g in spec.gammas]
        + ["n_failed"]
    )
    rows = [
        [_fmt(row.d), row.n, _fmt(row.mean), _fmt(row.sd)]
        + [_fmt(c) for c in row.coverage_kstar]
        + [_fmt(c) for c in row.coverage_ksd]
        + [row.n_failed]
        for row in result.rows
    ]
    _write_csv(args.out, header, rows)
    if args.json:
        payload = {
            "alpha": spec.alpha,
            "beta2": spec.beta2,
            "gammas": list(spec.gammas),
            "reps": spec.reps,
            "master_seed": spec.master_seed,
            "c0": result.c0_value,
            "c0_x": result.c0_x,
            "coverage_se": result.coverage_se,
            "rows": [
                {
                    "d": row.d,
                    "n": row.n,
                    "mean": row.mean,
                    "sd": row.sd,
                    "coverage_kstar": list(row.coverage_kstar),
                    "coverage_ksd": list(row.coverage_ksd),
                    "n_failed": row.n_failed,
                }
                for row in result.rows
            ],
        }
        with open(args.out + ".json", "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    print(f"runtime: {result.runtime_s:.2f}s", file=sys.stderr)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stablelrd",
        description="Strongly dependent stable sequences and calibrated KS tests",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate-gaussian", help="simulate LRD Gaussian path(s)")
    p.add_argument("--d", type=float, required=True, help="memory exponent in (0,1)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--pair", action="store_true", help="emit two independent paths")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_generate_gaussian)

    p = sub.add_parser("generate-stable", help="simulate a dependent stable sequence")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta2", type=float, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_generate_stable)

    p = sub.add_parser("cdf", help="stable CDF values")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta2", type=float, required=True)
    p.add_argument("--x", required=True, help="comma-separated evaluation points")
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(func=_cmd_cdf)

    p = sub.add_parser("coeffs", help="first-order coefficient table")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta2", type=float, required=True)
    p.add_argument("--xmin", type=float, required=True)
    p.add_argument("--xmax", type=float, required=True)
    p.add_argument("--points", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--cache-dir", default=None)
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_coeffs)

    p = sub.add_parser("c0", help="coefficient supremum")
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta2", type=float, required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--cache-dir", default=None)
    p.set_defaults(func=_cmd_c0)

    p = sub.add_parser("ks", help="KS statistics for a CSV sample")
    p.add_argument("--input", required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta2", type=float, required=True)
    p.add_argument("--d", type=float, required=True)
    p.set_defaults(func=_cmd_ks)

    p = sub.add_parser("test", help="goodness-of-fit decision")
    p.add_argument("--input", required=True)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta2", type=float, required=True)
    p.add_argument("--d", type=float, required=True)
    p.add_argument("--level", type=float, default=0.05)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_test)

    p = sub.add_parser("mc-table", help="Monte Carlo coverage table")
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta2", type=float)
    p.add_argument("--d-list", dest="d_list")
    p.add_argument("--n-list", dest="n_list")
    p.add_argument("--reps", type=int)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.add_argument("--json", action="store_true")
    p.add_argument("--config", default=None, help="key = value file; CLI wins")
    p.add_argument("--workers", type=int, default=None)
    p.set_defaults(func=_cmd_mc_table)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
