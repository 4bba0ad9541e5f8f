"""``magicexpm`` command-line interface."""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from . import jsonio, oracle
from .bch import CheckerboardSym, su4_bch
from .errors import NotCheckerboardClass, NotCrossClass, OutOfDomain
from .evolve import (
    Method,
    checkerboard_vectors,
    cross_vectors,
    evolve,
)
from .hamiltonian import COUPLING_NAMES, Hamiltonian4
from .magic import R, R_DAG, conjugate_hamiltonian, conjugate_traceless_symmetric
from .smallmat import frobenius_distance, unitarity_defect
from .verify import run_suites

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_CLASS = 4
EXIT_DOMAIN = 5
EXIT_USAGE = 64

DEFAULT_TOL = 1e-12

EPILOG = """\
exit codes:
  0   success
  1   verification failure (first counterexample printed as JSON)
  2   input could not be read or parsed as JSON
  3   input violates an invariant (unknown coupling, non-finite value,
      diagonal not traceless, ...)
  4   an exact method was requested for a Hamiltonian outside its class
  5   BCH composition outside the closed form's domain
  64  usage error

environment:
  MAGICEXPM_TOL   reporting tolerance (default 1e-12) used for the
                  pass/fail flags in the output; does not change the maths.
"""


class CliError(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class HamiltonianSpec:
    hamiltonian: Hamiltonian4
    diagonal: tuple[float, ...] | None = None

    def k_matrix(self) -> np.ndarray:
        m = self.hamiltonian.matrix()
        if self.diagonal is not None:
            m = m + np.diag(self.diagonal)
        return m


def parse_spec(doc) -> HamiltonianSpec:
    """Build a spec from ``{"h13": 1, ...}`` or ``{"couplings": {...}, "diagonal": [...]}``."""
    if not isinstance(doc, dict):
        raise CliError(EXIT_INVARIANT, "spec must be a JSON object")
    doc = dict(doc)
    diagonal = doc.pop("diagonal", None)
    couplings = doc.pop("couplings", None)
    if couplings is None:
        couplings = doc
    elif doc:
        raise CliError(EXIT_INVARIANT, f"unexpected keys next to 'couplings': {sorted(doc)}")
    if not isinstance(couplings, dict):
        raise CliError(EXIT_INVARIANT, "'couplings' must be an object")
    unknown = set(couplings) - set(COUPLING_NAMES)
    if unknown:
        raise CliError(EXIT_INVARIANT, f"unknown coupling names {sorted(unknown)}; expected {list(COUPLING_NAMES)}")
    values = {}
    for k, v in couplings.items():
        if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v):
            raise CliError(EXIT_INVARIANT, f"coupling {k} must be a finite number, got {v!r}")
        values[k] = float(v)
    h = Hamiltonian4(**values)

    if diagonal is not None:
        if (
            not isinstance(diagonal, list)
            or len(diagonal) != 4
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x) for x in diagonal)
        ):
            raise CliError(EXIT_INVARIANT, "diagonal must be a list of 4 finite numbers")
        if abs(sum(diagonal)) > 1e-10:
            raise CliError(EXIT_INVARIANT, f"diagonal must be traceless, sums to {sum(diagonal)!r}")
        diagonal = tuple(float(x) for x in diagonal)
    return HamiltonianSpec(h, diagonal)


def load_spec(path) -> HamiltonianSpec:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_PARSE, f"malformed JSON in {path}: {exc}") from exc
    return parse_spec(doc)


def reporting_tol() -> float:
    raw = os.environ.get("MAGICEXPM_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        tol = float("nan")
    if not (tol > 0 and math.isfinite(tol)):
        raise CliError(EXIT_USAGE, f"MAGICEXPM_TOL must be a positive number, got {raw!r}")
    return tol


def _zero_diagonal(spec: HamiltonianSpec, command: str) -> Hamiltonian4:
    if spec.diagonal is not None and any(spec.diagonal):
        raise CliError(EXIT_INVARIANT, f"{command} needs a zero-diagonal Hamiltonian; drop 'diagonal'")
    return spec.hamiltonian


def _cmat(m):
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m)]


def _emit(doc, out):
    out.write(jsonio.dumps(doc) + "\n")


def cmd_decompose(args, out) -> int:
    spec = load_spec(args.input)
    tol = reporting_tol()
    h = spec.hamiltonian
    k = spec.k_matrix()
    if spec.diagonal is None:
        dec = conjugate_hamiltonian(h)
    else:
        dec = conjugate_traceless_symmetric(k)
    residual = frobenius_distance(dec.matrix(), R_DAG @ k @ R)
    coeffs = {label: c for label, c in dec.as_dict().items() if abs(c) > tol}
    left, right = cross_vectors(h)
    doc = {
        "couplings": h.as_dict(),
        "diagonal": list(spec.diagonal) if spec.diagonal is not None else None,
        "basis": "Pauli strings, left letter = left tensor factor; I=1, X=s1, Y=s2, Z=s3",
        "coefficients": coeffs,
        "reconstruction_residual": residual,
        "is_cross": h.is_cross,
        "is_checkerboard": h.is_checkerboard,
        "cross_vectors": {"left": list(left), "right": list(right)},
    }
    if h.is_checkerboard:
        cl, cr = checkerboard_vectors(h)
        doc["checkerboard_vectors"] = {"left": list(cl), "right": list(cr)}
    if residual > tol:
        doc["warning"] = f"reconstruction residual exceeds tolerance {tol!r}"
    _emit(doc, out)
    return EXIT_OK


_METHOD_CHOICES = ["auto"] + [m.value for m in Method]


def _run_method(h, t, method):
    try:
        return evolve(h, t, method)
    except (NotCrossClass, NotCheckerboardClass) as exc:
        raise CliError(EXIT_CLASS, str(exc)) from exc


def cmd_evolve(args, out) -> int:
    spec = load_spec(args.input)
    tol = reporting_tol()
    h = _zero_diagonal(spec, "evolve")
    rep = _run_method(h, args.t, args.method)
    defect = unitarity_defect(rep.u)
    doc = {
        "requested_method": args.method,
        "method": rep.method.value,
        "t": rep.t,
        "couplings": h.as_dict(),
        "u": _cmat(rep.u),
        "unitarity_defect": defect,
        "error_vs_oracle": rep.error_vs_oracle,
        "tolerance": tol,
        "unitary_within_tolerance": defect <= tol,
    }
    _emit(doc, out)
    return EXIT_OK


def _checkerboard_arg(path, name) -> CheckerboardSym:
    spec = load_spec(path)
    h = _zero_diagonal(spec, "bch")
    if not h.is_checkerboard:
        raise CliError(EXIT_CLASS, f"{name}: bch needs checkerboard matrices (h13 = h24 = 0)")
    return CheckerboardSym.from_hamiltonian(h)


def cmd_bch(args, out) -> int:
    a = _checkerboard_arg(args.a, "A")
    b = _checkerboard_arg(args.b, "B")
    try:
        res = su4_bch(a, b)
    except OutOfDomain as exc:
        raise CliError(EXIT_DOMAIN, str(exc)) from exc
    z = res.matrix()
    lhs = oracle.expm_hermitian(1, a.matrix(), 1.0) @ oracle.expm_hermitian(1, b.matrix(), 1.0)
    residual = frobenius_distance(lhs, oracle.expm_hermitian(1, z, 1.0))
    entries = {
        "12": ("real", res.e12),
        "13": ("imag", res.e13),
        "14": ("real", res.e14),
        "23": ("real", res.e23),
        "24": ("imag", res.e24),
        "34": ("real", res.e34),
    }
    pairs = []
    for n, c in ((1, res.pair1), (2, res.pair2)):
        pairs.append({"pair": n, "alpha": c.alpha, "beta": c.beta, "gamma": c.gamma, "rho": c.rho})
    doc = {
        "entries": {k: {"part": part, "value": v} for k, (part, v) in entries.items()},
        "pairs": pairs,
        "oracle_residual": residual,
        "tolerance": reporting_tol(),
    }
    _emit(doc, out)
    return EXIT_OK


def sweep_times(t_min, t_max, points, scale) -> np.ndarray:
    if scale == "log":
        return np.logspace(math.log10(t_min), math.log10(t_max), points)
    return np.linspace(t_min, t_max, points)


def fit_slope(ts, errors) -> float:
    """Least-squares slope of log(error) against log(t)."""
    ts = np.asarray(ts, dtype=float)
    errors = np.asarray(errors, dtype=float)
    keep = (ts > 0) & (errors > 0)
    if keep.sum() < 2:
        return float("nan")
    return float(np.polyfit(np.log(ts[keep]), np.log(errors[keep]), 1)[0])


def cmd_sweep(args, out) -> int:
    methods = [m.strip() for m in args.methods.split(",") if m.strip()]
    bad = [m for m in methods if m not in _METHOD_CHOICES]
    if not methods or bad:
        raise CliError(EXIT_USAGE, f"unknown methods {bad}; choose from {_METHOD_CHOICES}")
    if args.points < 2:
        raise CliError(EXIT_USAGE, "--points must be >= 2")
    if not args.t_min < args.t_max:
        raise CliError(EXIT_USAGE, "--t-min must be smaller than --t-max")
    if args.scale == "log" and args.t_min <= 0:
        raise CliError(EXIT_USAGE, "log scale needs --t-min > 0")
    spec = load_spec(args.input)
    h = _zero_diagonal(spec, "sweep")

    ts = sweep_times(args.t_min, args.t_max, args.points, args.scale)
    errors = {m: [] for m in methods}
    rows = []
    for t in ts:
        for m in methods:
            rep = _run_method(h, float(t), m)
            errors[m].append(rep.error_vs_oracle)
            rows.append((float(t), m, rep.error_vs_oracle, unitarity_defect(rep.u)))

    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["t", "method", "error_vs_oracle", "unitarity_defect"])
    for t, m, err, defect in rows:
        writer.writerow([jsonio.format_float(t), m, jsonio.format_float(err), jsonio.format_float(defect)])
    if args.fit:
        for m in methods:
            print(f"slope {m} {fit_slope(ts, errors[m]):.6f}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    if args.trials < 1:
        raise CliError(EXIT_USAGE, "--trials must be >= 1")
    results = run_suites(args.seed, args.trials)
    first = None
    for res in results:
        status = "PASS" if res.ok else "FAIL"
        out.write(f"{status} {res.name}: {res.passed}/{res.trials}\n")
        if first is None and res.counterexample is not None:
            first = res.counterexample
    ok = first is None
    out.write(f"{'OK' if ok else 'FAILED'}: {sum(r.ok for r in results)}/{len(results)} suites passed (seed {args.seed})\n")
    if not ok:
        out.write(jsonio.dumps(first) + "\n")
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="magicexpm",
        description="Closed-form exponentials and BCH compositions for four-level Hamiltonians.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="Pauli tensor decomposition of R^dag H R (or R^dag K R)")
    p.add_argument("-i", "--input", required=True, help="Hamiltonian spec JSON ('-' for stdin)")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("evolve", help="evolution operator exp(-itH)")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-t", type=float, required=True, help="time")
    p.add_argument("--method", choices=_METHOD_CHOICES, default="auto")
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("bch", help="closed-form BCH(A, B) for two checkerboard matrices")
    p.add_argument("-a", required=True, help="spec JSON for A")
    p.add_argument("-b", required=True, help="spec JSON for B")
    p.set_defaults(func=cmd_bch)

    p = sub.add_parser("sweep", help="CSV of error vs oracle over a range of t")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--t-min", type=float, required=True)
    p.add_argument("--t-max", type=float, required=True)
    p.add_argument("--points", type=int, default=10)
    p.add_argument("--scale", choices=["linear", "log"], default="log")
    p.add_argument("--methods", default="approx", help="comma-separated list, e.g. approx,symmetrized")
    p.add_argument("--fit", action="store_true", help="print log-log slopes per method to stderr")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the randomised self-verification suites")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except CliError as exc:
        print(f"magicexpm {args.command}: error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
