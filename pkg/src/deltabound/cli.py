"""Command-line front end.

Usage:
    deltabound solve wells.json
    deltabound wavefunction wells.json --x-lo -5 --x-hi 5 --samples 101
    deltabound momentum wells.json --k-lo -10 --k-hi 10 --samples 201
    deltabound verify wells.json --h 5e-3
    deltabound bands --a 2 --d 1 --k-samples 50

Input is JSON, read from a file or from stdin when the path is ``-``.
Exit codes: 0 success, 1 verification failure, 2 input error, 3 solver error.
"""
from __future__ import annotations

import argparse
import csv
import json
import math
import sys
from typing import Sequence

import numpy as np

from . import __version__
from .model import SolverError, ValidationError, energy_physical, parse_input
from .momentum import QuadratureError, phi_k
from .ndelta import DEFAULT_TOL, reconstruct, scan_bound_states
from .oracle import compare
from .periodic import band

EXIT_OK, EXIT_VERIFY, EXIT_INPUT, EXIT_SOLVER = 0, 1, 2, 3


class InputError(Exception):
    pass


def fmt(value: float) -> str:
    return "%.17g" % value


def _load(path: str):
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None
    return parse_input(data)


def _solve(args):
    pot, spec = _load(args.input)
    states = scan_bound_states(pot, b_max=args.b_max, step=args.scan_step, tol=args.tol)
    return pot, spec, states


def _pick(states, index: int):
    if not 0 <= index < len(states):
        raise InputError(f"state index {index} out of range ({len(states)} bound states)")
    return states[index]


def _write_csv(header: Sequence[str], rows) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) if isinstance(v, float) else v for v in row])


def cmd_solve(args) -> int:
    pot, spec, states = _solve(args)
    records = []
    for i, st in enumerate(states):
        rec = {"index": i, "b": st.b, "energy": st.energy}
        if spec is not None:
            rec["energy_physical"] = energy_physical(st, spec)
        rec["parity"] = st.parity.value
        rec["coeffs"] = list(st.coeffs)
        records.append(rec)

    if args.format == "json":
        out = {"wells": [{"a": a, "x": x} for a, x in pot.wells], "states": records}
        if not records:
            out["status"] = "no bound states"
        json.dump(out, sys.stdout, indent=2)
        sys.stdout.write("\n")
        return EXIT_OK

    if not records:
        print("no bound states")
        return EXIT_OK
    header = ["index", "b", "energy"]
    if spec is not None:
        header.append("energy_physical")
    header += ["parity"] + [f"c{j}" for j in range(len(pot))]
    _write_csv(header, ([r[h] for h in header[: len(header) - len(pot)]] + r["coeffs"]
                        for r in records))
    return EXIT_OK


def cmd_wavefunction(args) -> int:
    pot, _, states = _solve(args)
    st = _pick(states, args.state)
    xs = np.linspace(args.x_lo, args.x_hi, args.samples)
    values = reconstruct(st, pot, xs)
    _write_csv(["x", "phi"], ((float(x), float(v)) for x, v in zip(xs, values)))
    return EXIT_OK


def cmd_momentum(args) -> int:
    pot, _, states = _solve(args)
    st = _pick(states, args.state)
    ks = np.linspace(args.k_lo, args.k_hi, args.samples)
    values = phi_k(st, pot, ks)
    _write_csv(["k", "re_phi", "im_phi"],
               ((float(k), float(v.real), float(v.imag)) for k, v in zip(ks, values)))
    return EXIT_OK


def cmd_verify(args) -> int:
    pot, _ = _load(args.input)
    report = compare(pot, count=args.count, h=args.h, padding=args.padding, tol=args.tol)
    out = report.to_dict()
    out["max_rel_error_allowed"] = args.max_rel_error
    passed = report.counts_agree and report.max_rel_error <= args.max_rel_error
    out["passed"] = passed
    json.dump(out, sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK if passed else EXIT_VERIFY


def cmd_bands(args) -> int:
    if not (args.d > 0 and math.isfinite(args.d)):
        raise InputError("lattice spacing --d must be positive")
    if not (args.a > 0 and math.isfinite(args.a)):
        raise InputError("strength --a must be positive")
    if args.k_samples < 1:
        raise InputError("--k-samples must be at least 1")
    rows = []
    missing = 0
    for K, b in band(args.a, args.d, args.k_samples, args.tol):
        if b is None:
            missing += 1
            continue
        rows.append((K, b, -b * b / 2.0))
    if missing:
        print(f"warning: {missing} Bloch numbers lie above E=0 (band meets the continuum); "
              "rows omitted", file=sys.stderr)
    _write_csv(["K", "b", "energy"], rows)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltabound", description="Bound states of one-dimensional delta-well potentials.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def solver_opts(p):
        p.add_argument("input", help="potential JSON file, or - for stdin")
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="root tolerance in b")
        p.add_argument("--b-max", type=float, default=None, help="upper end of the b scan")
        p.add_argument("--scan-step", type=float, default=None, help="b scan increment")

    p = sub.add_parser("solve", help="list bound states")
    solver_opts(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("wavefunction", help="sample phi(x) of one state as CSV")
    solver_opts(p)
    p.add_argument("--x-lo", type=float, default=-5.0)
    p.add_argument("--x-hi", type=float, default=5.0)
    p.add_argument("--samples", type=int, default=101)
    p.add_argument("--state", type=int, default=0, help="state index, 0 = ground state")
    p.set_defaults(func=cmd_wavefunction)

    p = sub.add_parser("momentum", help="sample Phi(k) of one state as CSV")
    solver_opts(p)
    p.add_argument("--k-lo", type=float, default=-10.0)
    p.add_argument("--k-hi", type=float, default=10.0)
    p.add_argument("--samples", type=int, default=201)
    p.add_argument("--state", type=int, default=0, help="state index, 0 = ground state")
    p.set_defaults(func=cmd_momentum)

    p = sub.add_parser("verify", help="compare with the finite-difference oracle")
    p.add_argument("input", help="potential JSON file, or - for stdin")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument("--h", type=float, default=None, help="grid spacing")
    p.add_argument("--padding", type=float, default=None, help="grid margin beyond the wells")
    p.add_argument("--count", type=int, default=None, help="grid eigenvalues to compute")
    p.add_argument("--max-rel-error", type=float, default=1e-2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bands", help="lowest band of an equally spaced lattice as CSV")
    p.add_argument("--a", type=float, required=True, help="well strength (natural units)")
    p.add_argument("--d", type=float, required=True, help="lattice spacing")
    p.add_argument("--k-samples", type=int, default=50)
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(func=cmd_bands)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("samples",):
        if getattr(args, name, 1) < 1:
            parser.error(f"--{name} must be at least 1")
    try:
        return args.func(args)
    except (InputError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (SolverError, QuadratureError, np.linalg.LinAlgError, ArithmeticError) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":
    sys.exit(main())
