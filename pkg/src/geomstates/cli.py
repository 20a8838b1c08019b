"""Command-line front end.

Subcommands: classify, decompose, tensors, constants, flow, ballgrid.
Input is an operator / state / coordinate payload given either as a file
path (``--input``, "-" for stdin) or inline (``--json``).  Results go to
--output (default stdout).  Exit codes: 0 = ran (including negative
classifications), 2 = usage or parse error, 3 = internal numeric failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import serialize
from .basis import gellmann_basis, structure_constants, to_dual
from .dual_tensors import distributions_at, lambda_at, riemann_jordan_at
from .qutrit_tables import full_c_table, full_d_table, paper_zero_index_d
from .realified import (
    RealifiedState,
    critical_point_eigensolve,
    expectation_trace_samples,
)
from .states import (
    Rejection,
    certify_density,
    bloch_decompose_along,
    convex_decompose_spectral,
    face_of,
    orbit_dimension,
    qubit_from_bloch,
    require_density,
    weyl_reduce,
)

DEFAULT_SEED = 12345


class UsageError(Exception):
    pass


def _read_payload(args) -> dict:
    if (args.input is None) == (args.json is None):
        raise UsageError("provide exactly one of --input or --json")
    if args.json is not None:
        text = args.json
    elif args.input == "-":
        text = sys.stdin.read()
    else:
        with open(args.input) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON payload: {exc}") from exc


def _write(args, text: str) -> None:
    if args.output is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        with open(args.output, "w") as fh:
            fh.write(text)


def cmd_classify(args) -> int:
    payload = _read_payload(args)
    try:
        op = serialize.operator_from_dict(payload)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad operator payload: {exc}") from exc
    result = certify_density(op, tol_psd=args.tol)
    if isinstance(result, Rejection):
        violated = result.violated
        if op.shape[0] == 2 and violated == "negative eigenvalue":
            violated = "ball radius"
        report = {"density": False, "violated": violated, "detail": result.detail}
    else:
        basis = gellmann_basis(result.dim)
        report = {
            "density": True,
            "rank": result.rank,
            "spectrum": serialize._float_list(result.spectrum),
            "y": serialize._float_list(to_dual(result.op, basis)),
            "weyl": serialize._float_list(weyl_reduce(result)),
            "orbit_dim": orbit_dimension(result),
            "face_dim": face_of(result).dimension,
        }
    _write(args, serialize.dumps(report))
    return 0


def cmd_decompose(args) -> int:
    payload = _read_payload(args)
    try:
        op = serialize.operator_from_dict(payload)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad operator payload: {exc}") from exc
    rho = certify_density(op, tol_psd=args.tol)
    if isinstance(rho, Rejection):
        _write(args, serialize.dumps(
            {"density": False, "violated": rho.violated}))
        return 0
    if args.mode == "bloch":
        if rho.dim != 2:
            raise UsageError("bloch mode requires a 2-level state")
        if args.direction is None:
            raise UsageError("bloch mode requires --direction")
        dec = bloch_decompose_along(rho, args.direction)
    else:
        dec = convex_decompose_spectral(rho)
    residual = float(np.abs(dec.reconstruct() - rho.op).max())
    report = {
        "mode": args.mode,
        "weights": serialize._float_list(dec.weights),
        "components": [serialize.operator_to_dict(c.op) for c in dec.components],
        "residual": serialize._f17(residual),
    }
    _write(args, serialize.dumps(report))
    return 0


def cmd_tensors(args) -> int:
    payload = _read_payload(args)
    try:
        n, y = serialize.dual_from_dict(payload)
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad dual-vector payload: {exc}") from exc
    basis = gellmann_basis(n)
    if args.which == "distributions":
        report = serialize.distributions_to_dict(distributions_at(y, basis))
    else:
        fn = lambda_at if args.which == "lambda" else riemann_jordan_at
        t = fn(y, basis)
        report = serialize.tensor_to_dict(t)
        report["rank"] = t.rank()
    _write(args, serialize.dumps(report))
    return 0


def cmd_constants(args) -> int:
    if args.n < 2:
        raise UsageError("dimension must be >= 2")
    sc = structure_constants(gellmann_basis(args.n))
    expected = None
    if args.n == 3:
        c_tab = full_c_table()
        d_tab = full_d_table()

        def expected(mu, nu, rho):
            if 0 in (mu, nu, rho):
                return 0.0, paper_zero_index_d(mu, nu, rho), False
            return c_tab[mu, nu, rho], d_tab[mu, nu, rho], True

    rows = serialize.constants_csv_rows(sc, expected=expected)
    header = "mu,nu,rho,C,d" + (",check" if expected is not None else "")
    _write(args, header + "\n" + "\n".join(rows) + "\n")
    return 0


def cmd_flow(args) -> int:
    payload = _read_payload(args)
    try:
        op = serialize.operator_from_dict(payload["A"])
        if "psi0" in payload:
            psi0 = serialize.state_from_dict(payload["psi0"])
        else:
            rng = np.random.default_rng(args.seed)
            psi0 = RealifiedState(rng.normal(size=op.shape[0]),
                                  rng.normal(size=op.shape[0]))
    except (KeyError, ValueError) as exc:
        raise UsageError(f"bad flow payload: {exc}") from exc

    if args.mode == "hamiltonian":
        samples, drift_norm, drift_ea = expectation_trace_samples(
            op, psi0, args.t_final, args.step)
        if args.trace:
            lines = ["t,e_A,norm"]
            for t, e, nrm in samples:
                lines.append(",".join(serialize.csv_float(x)
                                      for x in (t, e, nrm)))
            with open(args.trace, "w") as fh:
                fh.write("\n".join(lines) + "\n")
        report = {
            "mode": "hamiltonian",
            "t_final": serialize._f17(args.t_final),
            "norm_drift": serialize._f17(drift_norm),
            "e_A_drift": serialize._f17(drift_ea),
        }
    else:
        trace = [] if args.trace else None
        step = args.step if args.step_given else None
        e, psi, converged = critical_point_eigensolve(
            op, psi0, step=step, max_iter=args.max_iter,
            mode=args.opt_mode, trace=trace)
        if args.trace:
            with open(args.trace, "w") as fh:
                fh.write(serialize.trace_csv(trace))
        report = {
            "mode": "gradient-eigensolve",
            "opt_mode": args.opt_mode,
            "converged": bool(converged),
            "eigenvalue": serialize._f17(e),
            "state": serialize.state_to_dict(psi),
        }
    _write(args, serialize.dumps(report))
    return 0


def cmd_ballgrid(args) -> int:
    if args.resolution < 2:
        raise UsageError("resolution must be >= 2")
    grid = np.linspace(-0.6, 0.6, args.resolution)
    lines = ["y1,y2,y3,is_density,rank"]
    for y1 in grid:
        for y2 in grid:
            for y3 in grid:
                out = certify_density(qubit_from_bloch(y1, y2, y3),
                                      tol_psd=args.tol)
                ok = not isinstance(out, Rejection)
                rank = out.rank if ok else 0
                coords = ",".join(serialize.csv_float(v) for v in (y1, y2, y3))
                lines.append(f"{coords},{int(ok)},{rank}")
    _write(args, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="geomstates",
        description="Geometry of finite-dimensional quantum state spaces.",
    )
    parser.add_argument("--output", help="output path (default: stdout)")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for any randomized defaults")
    parser.add_argument("--tol", type=float, default=1e-10,
                        help="positivity tolerance")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_payload(p):
        p.add_argument("--input", help="payload file path, or - for stdin")
        p.add_argument("--json", help="inline JSON payload")

    p = sub.add_parser("classify", help="certify and classify a state")
    add_payload(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="convex decomposition of a state")
    add_payload(p)
    p.add_argument("--mode", choices=["spectral", "bloch"], default="spectral")
    p.add_argument("--direction", type=lambda s: [float(x) for x in s.split(",")],
                   help="bloch-line direction as y1,y2,y3")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("tensors", help="evaluate dual-space tensors at a point")
    add_payload(p)
    p.add_argument("--which", choices=["lambda", "R", "distributions"],
                   required=True)
    p.set_defaults(func=cmd_tensors)

    p = sub.add_parser("constants", help="dump structure constants as CSV")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_constants)

    p = sub.add_parser("flow", help="Hamiltonian flow or eigensolver run")
    add_payload(p)
    p.add_argument("--mode", choices=["hamiltonian", "gradient-eigensolve"],
                   required=True)
    p.add_argument("--step", type=float, default=1e-3)
    p.add_argument("--t-final", type=float, default=10.0)
    p.add_argument("--max-iter", type=int, default=100000)
    p.add_argument("--opt-mode", choices=["ascent", "descent"],
                   default="ascent")
    p.add_argument("--trace", help="path for the trace CSV")
    p.set_defaults(func=cmd_flow)

    p = sub.add_parser("ballgrid", help="qubit ball membership grid CSV")
    p.add_argument("--resolution", type=int, default=21)
    p.set_defaults(func=cmd_ballgrid)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    args.step_given = "--step" in (argv if argv is not None else sys.argv[1:])
    try:
        return args.func(args)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ArithmeticError, np.linalg.LinAlgError) as exc:
        sys.stderr.write(f"numeric failure: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
