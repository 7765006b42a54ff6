"""Canonical JSON encoding of scalars, matrices, polynomials, certificates
and reports.

Scalars encode by ring: integers and prime-field residues as decimal
strings, rationals as "p/q" strings, cubic field elements as three-element
arrays of rational strings in beta-coordinates.  Output is canonicalized
(sorted keys, two-space indent, trailing newline) so identical inputs give
byte-identical files.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .counterexample import CounterexampleReport, ObstructionReport
from .matrices import (
    DiagonalConj,
    Matrix,
    PermutationConj,
    SimilarityCertificate,
    Transvection,
)
from .polynomials import Poly
from .prescribe import Decision2x2
from .rings import CubicNumber, PrimeField, QBETA, QQ, Ring, ZZ, ring_from_tag


def encode_scalar(ring: Ring, x):
    if ring == ZZ:
        return str(x)
    if ring == QQ:
        f = QQ.make(x)
        return f"{f.numerator}/{f.denominator}"
    if isinstance(ring, PrimeField):
        return str(ring.make(x).r)
    if ring == QBETA:
        v = QBETA.make(x)
        return [encode_scalar(QQ, v.a), encode_scalar(QQ, v.b), encode_scalar(QQ, v.c)]
    raise ValueError(f"cannot encode scalars of {ring}")


def parse_scalar(ring: Ring, obj):
    if ring == ZZ:
        return int(str(obj))
    if ring == QQ:
        return Fraction(str(obj))
    if isinstance(ring, PrimeField):
        return ring.from_int(int(str(obj)))
    if ring == QBETA:
        if not (isinstance(obj, (list, tuple)) and len(obj) == 3):
            raise ValueError(f"cubic scalar must be a 3-element array, got {obj!r}")
        return CubicNumber(*(Fraction(str(c)) for c in obj))
    raise ValueError(f"cannot parse scalars of {ring}")


def ring_fields(ring: Ring) -> dict:
    if isinstance(ring, PrimeField):
        return {"ring": "Fp", "p": str(ring.p)}
    return {"ring": ring.tag}


def ring_from_fields(obj: dict) -> Ring:
    tag = obj["ring"]
    p = int(obj["p"]) if tag == "Fp" else None
    return ring_from_tag(tag, p)


def matrix_to_json(A: Matrix) -> dict:
    out = ring_fields(A.ring)
    out["n"] = A.n
    out["entries"] = [[encode_scalar(A.ring, x) for x in row] for row in A.rows]
    return out


def matrix_from_json(obj: dict) -> Matrix:
    ring = ring_from_fields(obj)
    entries = obj["entries"]
    n = obj.get("n", len(entries))
    if len(entries) != n or any(len(r) != n for r in entries):
        raise ValueError("entry grid does not match the declared dimension")
    return Matrix(ring, [[parse_scalar(ring, x) for x in row] for row in entries])


def poly_to_json(f: Poly) -> dict:
    out = ring_fields(f.ring)
    out["coeffs"] = [encode_scalar(f.ring, c) for c in f.coeffs]
    return out


def poly_from_json(obj: dict) -> Poly:
    ring = ring_from_fields(obj)
    return Poly(ring, [parse_scalar(ring, c) for c in obj["coeffs"]])


def _step_to_json(step, ring: Ring) -> dict:
    if isinstance(step, Transvection):
        return {
            "kind": "transvection",
            "i": step.i,
            "j": step.j,
            "t": encode_scalar(ring, step.t),
        }
    if isinstance(step, PermutationConj):
        return {"kind": "permutation", "perm": list(step.perm)}
    if isinstance(step, DiagonalConj):
        return {
            "kind": "diagonal",
            "units": [encode_scalar(ring, u) for u in step.units],
        }
    raise TypeError(f"unknown step {step!r}")


def _step_from_json(obj: dict, ring: Ring):
    kind = obj["kind"]
    if kind == "transvection":
        return Transvection(obj["i"], obj["j"], parse_scalar(ring, obj["t"]))
    if kind == "permutation":
        return PermutationConj(tuple(obj["perm"]))
    if kind == "diagonal":
        return DiagonalConj(tuple(parse_scalar(ring, u) for u in obj["units"]))
    raise ValueError(f"unknown step kind {kind!r}")


def certificate_to_json(cert: SimilarityCertificate) -> dict:
    return {
        "g": matrix_to_json(cert.g),
        "g_inv": matrix_to_json(cert.g_inv),
        "B": matrix_to_json(cert.b),
        "conj_ring": ring_fields(cert.conj_ring),
        "entry_ring": ring_fields(cert.entry_ring),
        "verified": cert.verified,
        "steps": None
        if cert.steps is None
        else [_step_to_json(s, cert.conj_ring) for s in cert.steps],
    }


def certificate_from_json(obj: dict) -> SimilarityCertificate:
    conj_ring = ring_from_fields(obj["conj_ring"])
    steps = obj.get("steps")
    return SimilarityCertificate(
        g=matrix_from_json(obj["g"]),
        g_inv=matrix_from_json(obj["g_inv"]),
        b=matrix_from_json(obj["B"]),
        conj_ring=conj_ring,
        entry_ring=ring_from_fields(obj["entry_ring"]),
        steps=None if steps is None else tuple(_step_from_json(s, conj_ring) for s in steps),
        verified=bool(obj.get("verified", False)),
    )


def decision_to_json(d: Decision2x2) -> dict:
    return {
        "verdict": d.verdict,
        "bound": d.bound,
        "certificate": None if d.certificate is None else certificate_to_json(d.certificate),
        "candidates": [
            {
                "candidate": matrix_to_json(rep.candidate),
                "solution_rank": rep.solution_rank,
                "form": None if rep.form is None else [str(v) for v in rep.form],
                "decided": rep.decided,
                "min_value": None if rep.min_value is None else str(rep.min_value),
            }
            for rep in d.candidates
        ],
    }


def obstruction_to_json(r: ObstructionReport) -> dict:
    return {
        "minimal_poly": poly_to_json(r.minimal_poly),
        "integrality_failures": [
            {"coefficient": encode_scalar(QBETA, c), "in_subring": ok}
            for c, ok in r.integrality_failures
        ],
        "forced_products": [
            {"name": name, "value": encode_scalar(QBETA, v), "in_subring": ok}
            for name, v, ok in r.forced_products
        ],
        "verdict": r.verdict,
    }


def counterexample_report_to_json(r: CounterexampleReport) -> dict:
    return {
        "matrix": matrix_to_json(r.matrix),
        "minimal_poly": poly_to_json(r.minimal_poly),
        "minpoly_memberships": [
            {"coefficient": encode_scalar(QBETA, c), "in_subring": ok}
            for c, ok in r.minpoly_memberships
        ],
        "char_poly": poly_to_json(r.char_poly),
        "charpoly_integral": r.charpoly_integral,
        "obstruction": obstruction_to_json(r.obstruction),
        "linear_coeff_halved_variant_annihilates": r.linear_coeff_halved_variant_annihilates,
        "notes": r.notes,
    }


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
