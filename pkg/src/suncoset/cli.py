"""Command-line front end.

Subcommands: basis, element, frame, fields, oneforms, density, integrate,
verify.  Output is either human-readable text or a single JSON document
(``--format json``).  Exit statuses: 0 success, 1 verification failure,
2 usage error, 3 numerical singularity.

Coordinates are passed as a comma-separated flat list in canonical order,
or as a file with one number per line (``--coords-file``).  Angles are
radians.  The default RNG seed can be overridden with the SUNCOSET_SEED
environment variable.
"""

import argparse
import json
import os
import platform
import sys

import numpy as np
import scipy

from . import __version__, algebra, chart, frames, haar, linalg, verify
from .chart import CosetCoordinates

SEED_ENV_VAR = "SUNCOSET_SEED"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_SINGULAR = 3


def _default_seed():
    raw = os.environ.get(SEED_ENV_VAR)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError as err:
        raise ValueError(f"{SEED_ENV_VAR} must be an integer, got {raw!r}") from err


def _complex_pair(z):
    return [float(np.real(z)), float(np.imag(z))]


def _matrix_doc(a):
    return [[_complex_pair(z) for z in row] for row in np.asarray(a)]


def _format_matrix(a):
    return np.array2string(
        np.asarray(a), precision=10, suppress_small=False, separator=", "
    )


def _parse_coords(args, n):
    if args.coords is not None and args.coords_file is not None:
        raise ValueError("give either --coords or --coords-file, not both")
    if args.coords is not None:
        raw = [tok for tok in args.coords.replace(",", " ").split() if tok]
        values = [float(tok) for tok in raw]
    elif args.coords_file is not None:
        with open(args.coords_file) as fh:
            values = [float(line) for line in fh if line.strip()]
    else:
        raise ValueError("coordinates required: --coords or --coords-file")
    return CosetCoordinates.from_flat(n, values)


def _versions():
    return {
        "suncoset": __version__,
        "numpy": np.__version__,
        "scipy": scipy.__version__,
        "python": platform.python_version(),
    }


def _emit(args, doc, human_lines):
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _coordinate_labels(n):
    labels = []
    for flat in range(algebra.dimension(n)):
        m, alpha = algebra.block_of(n, flat)
        if m == 1:
            labels.append(f"eta[{alpha}]")
        elif alpha <= m - 1:
            labels.append(f"gamma[{m}][{alpha}]")
        else:
            labels.append(f"xi[{m}][{alpha - (m - 1)}]")
    return labels


def _generator_labels(n):
    return [str(algebra.block_of(n, k)) for k in range(algebra.dimension(n))]


def cmd_basis(args):
    basis = algebra.build_basis(args.n)
    doc = {
        "command": "basis",
        "inputs": {"n": args.n},
        "results": {
            "generators": [
                {
                    "index": k,
                    "block": list(basis.block_of(k)),
                    "matrix": _matrix_doc(basis[k]),
                }
                for k in range(len(basis))
            ]
        },
        "versions": _versions(),
    }
    lines = [f"su({args.n}) generator basis, {len(basis)} elements"]
    for k in range(len(basis)):
        m, alpha = basis.block_of(k)
        lines.append(f"L[{k}]  (block m={m}, alpha={alpha}):")
        lines.append(_format_matrix(basis[k]))
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_element(args):
    coords = _parse_coords(args, args.n)
    u = chart.group_element(coords)
    unitarity = linalg.frobenius(u.conj().T @ u - np.eye(args.n))
    det_residual = abs(linalg.determinant(u) - 1.0)
    doc = {
        "command": "element",
        "inputs": {"n": args.n, "coords": list(coords.flat())},
        "results": {"element": _matrix_doc(u)},
        "residuals": {"unitarity": unitarity, "determinant": det_residual},
        "versions": _versions(),
    }
    lines = [
        f"group element for n={args.n}:",
        _format_matrix(u),
        f"unitarity residual: {unitarity:.3e}",
        f"determinant residual: {det_residual:.3e}",
    ]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_frame(args):
    coords = _parse_coords(args, args.n)
    result = frames.frame_result(args.side, coords)
    doc = {
        "command": "frame",
        "inputs": {"n": args.n, "side": args.side, "coords": list(coords.flat())},
        "results": {
            "frame": _matrix_doc(result.frame.entries),
            "condition": result.condition,
        },
        "versions": _versions(),
    }
    lines = [
        f"{args.side} frame matrix for n={args.n} "
        f"(rows: coordinates, columns: generators):",
        _format_matrix(result.frame.entries),
        f"condition estimate: {result.condition:.6e}",
    ]
    _emit(args, doc, lines)
    return EXIT_OK


def _cmd_rows(args, which):
    coords = _parse_coords(args, args.n)
    result = frames.frame_result(args.side, coords)
    rows = result.field_rows if which == "fields" else result.oneform_rows
    row_labels = _generator_labels(args.n)
    col_labels = (
        _coordinate_labels(args.n) if which == "fields" else _coordinate_labels(args.n)
    )
    doc = {
        "command": which,
        "inputs": {"n": args.n, "side": args.side, "coords": list(coords.flat())},
        "results": {
            "rows": [
                {
                    "generator": row_labels[k],
                    "coefficients": [_complex_pair(z) for z in rows[k]],
                }
                for k in range(rows.shape[0])
            ],
            "columns": col_labels,
            "condition": result.condition,
        },
        "versions": _versions(),
    }
    kind = "vector fields" if which == "fields" else "one-forms"
    basis_word = "d/d" if which == "fields" else "d"
    lines = [f"{args.side} invariant {kind} for n={args.n}:"]
    for k in range(rows.shape[0]):
        terms = []
        for j, label in enumerate(col_labels):
            z = rows[k][j]
            if abs(z) > 1e-14:
                terms.append(f"({z.real:+.10g}{z.imag:+.10g}j) {basis_word}{label}")
        body = " + ".join(terms) if terms else "0"
        lines.append(f"generator {row_labels[k]}: {body}")
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_fields(args):
    return _cmd_rows(args, "fields")


def cmd_oneforms(args):
    return _cmd_rows(args, "oneforms")


def cmd_density(args):
    coords = _parse_coords(args, args.n)
    d = haar.density(coords)
    rel = abs(d.abs_det_left - d.abs_det_right) / max(
        d.abs_det_left, d.abs_det_right, np.finfo(float).tiny
    )
    doc = {
        "command": "density",
        "inputs": {"n": args.n, "coords": list(coords.flat())},
        "results": {
            "density": d.value,
            "abs_det_left": d.abs_det_left,
            "abs_det_right": d.abs_det_right,
        },
        "residuals": {"left_right_relative": rel},
        "versions": _versions(),
    }
    lines = [
        f"haar density for n={args.n}: {d.value!r}",
        f"|det| left frame:  {d.abs_det_left!r}",
        f"|det| right frame: {d.abs_det_right!r}",
        f"relative difference: {rel:.3e}",
    ]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_integrate(args):
    if args.f not in haar.INTEGRANDS:
        raise ValueError(f"unknown integrand {args.f!r}")
    domain = haar.su2_domain(samples=args.samples, seed=args.seed)
    est = haar.integrate_su2(haar.INTEGRANDS[args.f], domain)
    doc = {
        "command": "integrate",
        "inputs": {
            "f": args.f,
            "samples": args.samples,
            "seed": args.seed,
        },
        "results": {"value": est.value, "stderr": est.stderr},
        "versions": _versions(),
    }
    lines = [
        f"integral of {args.f} over SU(2): {est.value!r}",
        f"standard error: {est.stderr!r}  (samples={est.samples}, seed={est.seed})",
    ]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_verify(args):
    n_values = (args.n,) if args.n is not None else (2, 3, 4)
    kwargs = {}
    if args.tol is not None:
        kwargs = {
            "golden_tol": args.tol,
            "derivative_tol": args.tol,
            "duality_tol": args.tol,
        }
    report = verify.run_suite(n_values=n_values, seed=args.seed, **kwargs)
    doc = {
        "command": "verify",
        "inputs": {"n": args.n, "seed": args.seed, "tol": args.tol},
        "results": report.to_dict(),
        "versions": _versions(),
    }
    _emit(args, doc, report.to_lines())
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def build_parser():
    parser = argparse.ArgumentParser(
        prog="suncoset",
        description=(
            "Coset-chart construction of SU(N): group elements, invariant "
            "frames, vector fields, one-forms, and the Haar density."
        ),
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_common(p, coords=True):
        p.add_argument("--n", type=int, required=True, help="group size N (>= 2)")
        if coords:
            p.add_argument("--coords", help="comma-separated flat coordinate list")
            p.add_argument("--coords-file", help="file with one coordinate per line")
        p.add_argument(
            "--format", choices=("human", "json"), default="human",
            help="output format",
        )

    p = sub.add_parser("basis", help="emit the generator basis")
    add_common(p, coords=False)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("element", help="evaluate the group element")
    add_common(p)
    p.set_defaults(func=cmd_element)

    p = sub.add_parser("frame", help="evaluate a frame matrix")
    add_common(p)
    p.add_argument("--side", choices=frames.SIDES, required=True)
    p.set_defaults(func=cmd_frame)

    p = sub.add_parser("fields", help="emit invariant vector-field rows")
    add_common(p)
    p.add_argument("--side", choices=frames.SIDES, default="left")
    p.set_defaults(func=cmd_fields)

    p = sub.add_parser("oneforms", help="emit invariant one-form rows")
    add_common(p)
    p.add_argument("--side", choices=frames.SIDES, default="left")
    p.set_defaults(func=cmd_oneforms)

    p = sub.add_parser("density", help="evaluate the Haar density")
    add_common(p)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("integrate", help="Monte Carlo integral over SU(2)")
    p.add_argument("--f", choices=sorted(haar.INTEGRANDS), default="const")
    p.add_argument("--samples", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=cmd_integrate)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.add_argument("--format", choices=("human", "json"), default="human")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code if isinstance(err.code, int) else EXIT_USAGE
    try:
        if hasattr(args, "seed") and args.seed is None:
            args.seed = _default_seed()
        if getattr(args, "n", None) is not None and args.n < 2:
            raise ValueError(f"n must be >= 2, got {args.n}")
        return args.func(args)
    except frames.SingularFrameError as err:
        print(f"error: singular frame: {err}", file=sys.stderr)
        return EXIT_SINGULAR
    except linalg.SingularMatrixError as err:
        print(f"error: singular matrix: {err}", file=sys.stderr)
        return EXIT_SINGULAR
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
