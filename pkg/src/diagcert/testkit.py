"""Seeded instance generation and brute-force oracles for the test suites."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ConstraintUnsatisfiableWithinCap
from .matrices import Matrix, SimilarityCertificate, adjugate, certified, is_scalar
from .prescribe import nonscalarity_ideal
from .rings import CubicNumber, PrimeField, QBETA, QQ, Ring, ZZ

_REJECTION_CAP = 1000


@dataclass(frozen=True)
class InstanceSpec:
    """Deterministic recipe for one random matrix."""

    ring: Ring
    n: int
    bound: int
    seed: int = 0
    constraint: str = "none"  # "none" | "non-scalar" | "ideal-unit"


def _entry(rng: random.Random, ring: Ring, bound: int):
    if ring == ZZ:
        return rng.randint(-bound, bound)
    if ring == QQ:
        return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
    if isinstance(ring, PrimeField):
        return ring.from_int(rng.randint(0, ring.p - 1))
    if ring == QBETA:
        return CubicNumber(
            rng.randint(-bound, bound),
            rng.randint(-bound, bound),
            rng.randint(-bound, bound),
        )
    raise ValueError(f"unsupported ring {ring}")


def gen_matrix(spec: InstanceSpec) -> Matrix:
    """Seeded random matrix satisfying the requested constraint."""
    if spec.bound < 1:
        raise ValueError(f"entry bound {spec.bound} < 1")
    if spec.constraint not in ("none", "non-scalar", "ideal-unit"):
        raise ValueError(f"unknown constraint {spec.constraint!r}")
    if spec.constraint == "ideal-unit" and spec.ring != ZZ:
        raise ValueError("the ideal-unit constraint applies over Z")
    rng = random.Random(spec.seed)
    for _ in range(_REJECTION_CAP):
        A = Matrix(
            spec.ring,
            [[_entry(rng, spec.ring, spec.bound) for _ in range(spec.n)] for _ in range(spec.n)],
        )
        if spec.constraint == "non-scalar" and is_scalar(A):
            continue
        if spec.constraint == "ideal-unit" and nonscalarity_ideal(A).generator != 1:
            continue
        return A
    raise ConstraintUnsatisfiableWithinCap(
        f"no matrix met {spec.constraint!r} within {_REJECTION_CAP} draws"
    )


def gen_target(rng: random.Random, n: int, trace: int, bound: int) -> list[int]:
    """Random integer diagonal target summing to the given trace."""
    head = [rng.randint(-bound, bound) for _ in range(n - 1)]
    return head + [trace - sum(head)]


def brute_force_diag_search(
    A: Matrix, target, bound: int
) -> Optional[SimilarityCertificate]:
    """Exhaustive 2x2 oracle: first g (in (x, y, z, w) lexicographic order)
    with entries in [-bound, bound], det +-1 and diag(g*A*g^{-1}) = target.

    The w coordinate is solved from the determinant condition rather than
    scanned, which visits exactly the valid lexicographic successors.
    """
    if A.ring != ZZ or A.n != 2:
        raise ValueError("the brute-force oracle covers 2x2 integer matrices")
    g0, g1 = (ZZ.make(t) for t in target)
    a11, a12 = A.entry(0, 0), A.entry(0, 1)
    a21, a22 = A.entry(1, 0), A.entry(1, 1)

    def check(x, y, z, w):
        e = x * w - y * z
        if e not in (1, -1):
            return None
        # rows of g*A, then diag(g*A*adj(g)) / det
        r0x, r0y = x * a11 + y * a21, x * a12 + y * a22
        r1x, r1y = z * a11 + w * a21, z * a12 + w * a22
        if (r0x * w - r0y * z) != e * g0:
            return None
        if (-r1x * y + r1y * x) != e * g1:
            return None
        return Matrix(ZZ, [[x, y], [z, w]])

    rng_vals = range(-bound, bound + 1)
    for x in rng_vals:
        for y in rng_vals:
            for z in rng_vals:
                if x != 0:
                    yz = y * z
                    ws = []
                    for e in (1, -1):
                        num = e + yz
                        if num % x == 0 and abs(num // x) <= bound:
                            ws.append(num // x)
                    for w in sorted(set(ws)):
                        g = check(x, y, z, w)
                        if g is not None:
                            return _certificate_from_g(A, g)
                else:
                    if y * z in (1, -1):
                        for w in rng_vals:
                            g = check(x, y, z, w)
                            if g is not None:
                                return _certificate_from_g(A, g)
    return None


def _certificate_from_g(A: Matrix, g: Matrix) -> SimilarityCertificate:
    from .matrices import det

    d = det(g)
    g_inv = adjugate(g).scale(d)
    b = g * A * g_inv
    return certified(
        A,
        SimilarityCertificate(g=g, g_inv=g_inv, b=b, conj_ring=ZZ, entry_ring=ZZ),
    )
