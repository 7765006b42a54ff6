"""Batch command-line surface with JSON input and output.

Exit codes: 0 success (or a decided verdict), 2 precondition violation or
malformed input, 3 search exhausted or an unknown verdict, 1 internal
defect.  Certificates are re-verified before being written; an unverified
certificate is never emitted.
"""

from __future__ import annotations

import argparse
import json
import sys

from .canonical import charpoly, frobenius_form, minpoly
from .counterexample import verify_counterexample
from .errors import InternalDefect, PreconditionError, SearchExhausted
from .matrices import Matrix, verify_certificate
from .prescribe import (
    decide_2x2,
    fillmore_field,
    nonscalarity_ideal,
    prescribe_ksim_integral,
    prescribe_zsim,
)
from .rings import QQ, ZZ
from .serialization import (
    certificate_to_json,
    counterexample_report_to_json,
    decision_to_json,
    dumps_canonical,
    matrix_from_json,
    matrix_to_json,
    parse_scalar,
    poly_to_json,
)


def _read_matrix(path: str) -> Matrix:
    text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    return matrix_from_json(json.loads(text))


def _write(out_path: str, payload) -> None:
    text = dumps_canonical(payload)
    if out_path == "-":
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _parse_gamma(raw: str, ring) -> list:
    if raw.lstrip().startswith("["):
        items = json.loads(raw)
    else:
        items = [s.strip() for s in raw.split(",")]
    return [parse_scalar(ring, item) for item in items]


def _emit_certificate(args, A: Matrix, cert) -> int:
    if not verify_certificate(A, cert):
        raise InternalDefect("certificate failed re-verification before emission")
    _write(args.out, certificate_to_json(cert))
    return 0


def _cmd_prescribe_field(args) -> int:
    A = _read_matrix(args.input)
    if not A.ring.is_field:
        print("prescribe-field expects a matrix over a field", file=sys.stderr)
        return 2
    gamma = _parse_gamma(args.gamma, A.ring)
    return _emit_certificate(args, A, fillmore_field(A, gamma))


def _cmd_prescribe_ksim(args) -> int:
    A = _read_matrix(args.input)
    gamma = _parse_gamma(args.gamma, A.ring)
    return _emit_certificate(args, A, prescribe_ksim_integral(A, gamma))


def _cmd_prescribe_zsim(args) -> int:
    A = _read_matrix(args.input)
    gamma = _parse_gamma(args.gamma, A.ring)
    return _emit_certificate(args, A, prescribe_zsim(A, gamma, seed=args.seed))


def _cmd_check_ideal(args) -> int:
    A = _read_matrix(args.input)
    ideal = nonscalarity_ideal(A)
    _write(
        args.out,
        {
            "generator": str(ideal.generator),
            "generators": [str(g) for g in ideal.generators],
            "is_unit": ideal.generator == 1,
            "is_scalar": ideal.generator == 0,
        },
    )
    return 0


def _cmd_rcf(args) -> int:
    A = _read_matrix(args.input)
    if A.ring == ZZ:
        A = A.to_ring(QQ)
    F = frobenius_form(A, seed=args.seed)
    if not verify_certificate(A, F.transform):
        raise InternalDefect("transform certificate failed re-verification")
    _write(
        args.out,
        {
            "blocks": [poly_to_json(f) for f in F.blocks],
            "rcf": matrix_to_json(F.rcf),
            "transform": certificate_to_json(F.transform),
        },
    )
    return 0


def _cmd_charpoly(args) -> int:
    A = _read_matrix(args.input)
    _write(args.out, poly_to_json(charpoly(A)))
    return 0


def _cmd_minpoly(args) -> int:
    A = _read_matrix(args.input)
    if A.ring == ZZ:
        A = A.to_ring(QQ)
    _write(args.out, poly_to_json(minpoly(A)))
    return 0


def _cmd_decide_2x2(args) -> int:
    A = _read_matrix(args.input)
    gamma = _parse_gamma(args.gamma, A.ring)
    decision = decide_2x2(A, gamma, bound=args.bound)
    if decision.certificate is not None and not verify_certificate(A, decision.certificate):
        raise InternalDefect("similarity certificate failed re-verification")
    _write(args.out, decision_to_json(decision))
    return 3 if decision.verdict == "unknown" else 0


def _cmd_counterexample(args) -> int:
    _write(args.out, counterexample_report_to_json(verify_counterexample()))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="diagcert",
        description="Exact similarity certificates realizing prescribed diagonals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, needs_input=True, gamma=False, seed=False, bound=False):
        p = sub.add_parser(name)
        if needs_input:
            p.add_argument("--in", dest="input", default="-", metavar="PATH",
                           help="input matrix JSON ('-' for stdin)")
        p.add_argument("--out", dest="out", default="-", metavar="PATH",
                       help="output JSON path ('-' for stdout)")
        if gamma:
            p.add_argument("--gamma", required=True,
                           help="target diagonal: comma-separated scalars, or a JSON array")
        if seed:
            p.add_argument("--seed", type=int, default=0)
        if bound:
            p.add_argument("--bound", type=int, default=1000)
        p.set_defaults(fn=fn)
        return p

    add("prescribe-field", _cmd_prescribe_field, gamma=True)
    add("prescribe-ksim", _cmd_prescribe_ksim, gamma=True)
    add("prescribe-zsim", _cmd_prescribe_zsim, gamma=True, seed=True)
    add("check-ideal", _cmd_check_ideal)
    add("rcf", _cmd_rcf, seed=True)
    add("charpoly", _cmd_charpoly)
    add("minpoly", _cmd_minpoly)
    add("decide-2x2", _cmd_decide_2x2, gamma=True, bound=True)
    add("counterexample", _cmd_counterexample, needs_input=False)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except (json.JSONDecodeError, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except SearchExhausted as exc:
        print(f"search exhausted: {exc}", file=sys.stderr)
        return 3
    except InternalDefect as exc:
        print(f"internal defect: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
