"""Command-line interface.

Machine-readable output only: JSON (reports, factor data, orbit records) or
CSV (contraction sweeps) on stdout, diagnostics on stderr.  Exit codes are a
stable contract: 0 pass, 1 suite failure, 2 usage or parse error, 3
certification failure.  Identical commands with identical seeds produce
byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import orbits
from .group import GroupElement, decompose, is_member, reconstruct
from .suites import SUITES, run_suite

_RECONSTRUCTION_TOL = 1e-8


def _default_seed() -> int:
    try:
        return int(os.environ.get("DS4_SEED", "0"))
    except ValueError:
        return 0


def _triple(text: str) -> np.ndarray:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated values, got {text!r}")
    try:
        return np.array([float(p) for p in parts])
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ds4",
        description="Sp(2,2) verification suites, decomposition, orbits and flat-limit sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_check = sub.add_parser("check", help="run a named verification suite")
    p_check.add_argument("suite", choices=sorted(SUITES))
    p_check.add_argument("--trials", type=int, default=None)
    p_check.add_argument("--seed", type=int, default=None)
    p_check.add_argument("--tol", type=float, default=1.0,
                         help="budget multiplier; 1.0 uses the compiled limits")

    p_dec = sub.add_parser("decompose", help="factor a group element read as JSON")
    p_dec.add_argument("--file", default=None, help="input path (default: stdin)")

    p_orb = sub.add_parser("orbit", help="sample an orbit and emit JSON lines")
    p_orb.add_argument("--kappa", type=float, default=1.0)
    p_orb.add_argument("-n", "--samples", type=int, default=10)
    p_orb.add_argument("--pmax", type=float, default=None,
                       help="momentum window (default 5 kappa)")
    p_orb.add_argument("--seed", type=int, default=None)
    mode = p_orb.add_mutually_exclusive_group()
    mode.add_argument("--coords", action="store_true", help="emit dual coordinates (default)")
    mode.add_argument("--matrix", action="store_true", help="also emit the matrix blocks")

    p_con = sub.add_parser("contract", help="mass-shell defect along a radius grid")
    p_con.add_argument("--m", type=float, default=1.0)
    p_con.add_argument("--c", type=float, default=1.0)
    p_con.add_argument("--p", type=_triple, default="1,0,0")
    p_con.add_argument("--q", type=_triple, default="0,1,0")
    p_con.add_argument("--rmin", type=float, default=10.0)
    p_con.add_argument("--rmax", type=float, default=1e6)
    p_con.add_argument("--steps", type=int, default=25)
    p_con.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def _cmd_check(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    report = run_suite(args.suite, trials=args.trials, seed=seed, tol=args.tol)
    print(json.dumps(report.to_json()))
    return 0 if report.passed else 1


def _cmd_decompose(args) -> int:
    try:
        if args.file is not None:
            with open(args.file, "r", encoding="utf-8") as fh:
                text = fh.read()
        else:
            text = sys.stdin.read()
        g = GroupElement.from_json(json.loads(text))
    except (OSError, ValueError, KeyError, TypeError) as err:
        print(f"ds4 decompose: cannot parse input: {err}", file=sys.stderr)
        return 2
    report = is_member(g, tol=_RECONSTRUCTION_TOL)
    if not report.passed:
        print(json.dumps(report.to_json()))
        print("ds4 decompose: input is not an Sp(2,2) element", file=sys.stderr)
        return 3
    factors = decompose(g, member_tol=_RECONSTRUCTION_TOL)
    residual = (reconstruct(factors).m - g.m).max_norm()
    out = factors.to_json()
    out["residual"] = residual
    print(json.dumps(out))
    return 0 if residual <= _RECONSTRUCTION_TOL else 1


def _cmd_orbit(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    p_max = args.pmax if args.pmax is not None else 5.0 * args.kappa
    if args.kappa < 0 or args.samples <= 0 or p_max <= 0:
        print("ds4 orbit: need kappa >= 0, n > 0 and a positive momentum window "
              "(set --pmax explicitly when kappa = 0)", file=sys.stderr)
        return 2
    for pt in orbits.sample_orbit(args.kappa, args.samples, p_max, seed):
        X = orbits.orbit_matrix_of(pt)
        coords = orbits.to_coadjoint_coords(X)
        res = orbits.conservation_residuals(coords, pt.kappa)
        record = pt.to_json()
        record["coords"] = coords.to_json()
        record["residuals"] = {"r1": [float(c) for c in res.r1], "r2": res.r2,
                               "degenerate": res.degenerate}
        if args.matrix:
            record["matrix"] = X.m.to_json()
        print(json.dumps(record))
    return 0


def _cmd_contract(args) -> int:
    if args.steps < 2 or args.rmin <= 0 or args.rmax <= args.rmin:
        print("ds4 contract: need steps >= 2 and 0 < rmin < rmax", file=sys.stderr)
        return 2
    grid = np.logspace(np.log10(args.rmin), np.log10(args.rmax), args.steps)
    table = orbits.contraction_sweep(args.m, args.c, args.p, args.q, grid)
    slope = orbits.defect_slope(table)
    if args.format == "json":
        for R, E, defect in table:
            print(json.dumps({"R": float(R), "E": float(E),
                              "mass_shell_defect": float(defect)}))
        print(json.dumps({"slope": slope}))
    else:
        print("R,E,mass_shell_defect")
        for R, E, defect in table:
            print(f"{float(R)!r},{float(E)!r},{float(defect)!r}")
        print(f"# slope={float(slope)!r}")
    return 0


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    handlers = {"check": _cmd_check, "decompose": _cmd_decompose,
                "orbit": _cmd_orbit, "contract": _cmd_contract}
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
