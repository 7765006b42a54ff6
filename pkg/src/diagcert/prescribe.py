"""Constructive diagonal prescription and the 2x2 decision procedure.

All constructions return :class:`SimilarityCertificate` values that are
re-verified by exact multiplication before being handed back; a failed
verification is an internal defect, never a silent wrong answer.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import gcd, isqrt
from typing import Optional

from .errors import (
    DimensionTooSmall,
    IdealNotUnit,
    InternalDefect,
    IntegralityViolation,
    NoUnitOffDiagonal,
    ScalarMatrix,
    SearchExhausted,
    TargetTraceMismatch,
)
from .matrices import (
    DiagonalConj,
    Matrix,
    PermutationConj,
    SimilarityCertificate,
    Transvection,
    adjugate,
    apply_conj,
    certified,
    conj_matrix,
    conj_matrix_inv,
    det,
    _inverse_field,
    is_scalar,
)
from .normal_forms import column_vector_reduction, integer_kernel_basis
from .rings import QQ, ZZ, is_certified_prime

#: Hard cap on good-vector candidates before giving up with diagnostics.
GOOD_VECTOR_CAP = 50_000


# ---------------------------------------------------------------------------
# the nonscalarity ideal (over Z it is principal, generated by a gcd)


@dataclass(frozen=True)
class NonscalarityIdeal:
    """gcd generator of (a_ii - a_jj, a_ij | i != j) together with the raw
    generator list; 0 means A is scalar, 1 means A is non-scalar modulo
    every modulus >= 2."""

    generator: int
    generators: tuple[int, ...]


def nonscalarity_ideal(A: Matrix) -> NonscalarityIdeal:
    if A.ring != ZZ:
        raise ValueError("the nonscalarity ideal is computed over Z")
    gens = []
    n = A.n
    for i in range(n):
        for j in range(n):
            if i != j:
                gens.append(A.entry(i, j))
                gens.append(A.entry(i, i) - A.entry(j, j))
    g = 0
    for x in gens:
        g = gcd(g, x)
    return NonscalarityIdeal(generator=g, generators=tuple(gens))


def is_scalar_mod(A: Matrix, m: int) -> bool:
    """Whether the image of A mod m is a scalar matrix (m >= 2)."""
    if A.ring != ZZ:
        raise ValueError("reduction mod m applies to integer matrices")
    if m < 2:
        raise ValueError(f"modulus {m} < 2")
    n = A.n
    for i in range(n):
        for j in range(n):
            if i != j and A.entry(i, j) % m != 0:
                return False
            if i != j and (A.entry(i, i) - A.entry(j, j)) % m != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# conjugation accumulator


class _Conjugation:
    """Tracks B = g * B0 * g^{-1} with the inverse maintained exactly."""

    def __init__(self, B0: Matrix):
        self.b = B0
        self.ring = B0.ring
        self.n = B0.n
        self.g = Matrix.identity(self.ring, self.n)
        self.g_inv = Matrix.identity(self.ring, self.n)
        self.steps: list = []
        self.elementary_only = True

    def apply(self, e):
        self.b = apply_conj(self.b, e)
        self.g = conj_matrix(e, self.ring, self.n) * self.g
        self.g_inv = self.g_inv * conj_matrix_inv(e, self.ring, self.n)
        self.steps.append(e)

    def apply_matrix(self, P: Matrix, P_inv: Matrix):
        self.b = P * self.b * P_inv
        self.g = P * self.g
        self.g_inv = self.g_inv * P_inv
        self.elementary_only = False

    def certificate(self, source: Matrix) -> SimilarityCertificate:
        steps = tuple(self.steps) if self.elementary_only else None
        return certified(
            source,
            SimilarityCertificate(
                g=self.g,
                g_inv=self.g_inv,
                b=self.b,
                conj_ring=self.ring,
                entry_ring=self.ring,
                steps=steps,
            ),
        )


def _check_target(A: Matrix, target) -> list:
    gamma = [A.ring.make(t) for t in target]
    if len(gamma) != A.n:
        raise TargetTraceMismatch(
            f"target length {len(gamma)} does not match dimension {A.n}"
        )
    s = A.ring.zero
    for t in gamma:
        s = s + t
    if s != A.trace():
        raise TargetTraceMismatch(f"target sum {s} differs from the trace {A.trace()}")
    return gamma


def _find_unit(conj: _Conjugation, k: int):
    ring, n, B = conj.ring, conj.n, conj.b
    for i in range(k, n):
        for j in range(k, n):
            if i != j and ring.is_unit(B.entry(i, j)):
                return i, j
    return None


def _prescribe_core(conj: _Conjugation, gamma: list, k0: int):
    """Fix diagonal entries k0..n-1 to gamma[k0..], given an off-diagonal
    unit inside the active block rows/cols >= k0.

    Per level k: move the unit to (k, k+1) and rescale it to 1, seed the
    next level's unit at (k+2, k+1), then force the (k, k) entry with a
    transvection against the unit column.  The last entry is trace-forced.
    """
    ring, n = conj.ring, conj.n
    one = ring.one
    for k in range(k0, n - 1):
        pos = _find_unit(conj, k)
        if pos is None:
            if k == k0:
                raise NoUnitOffDiagonal("no off-diagonal unit in the active block")
            raise InternalDefect("seeded unit disappeared")
        i, j = pos
        if (i, j) != (k, k + 1):
            rest = sorted(set(range(k, n)) - {i, j})
            sigma = list(range(n))
            for t, src in enumerate([i, j] + rest):
                sigma[src] = k + t
            conj.apply(PermutationConj(tuple(sigma)))
        u = conj.b.entry(k, k + 1)
        if u != one:
            units = [one] * n
            units[k] = ring.inv(u)
            conj.apply(DiagonalConj(tuple(units)))
        if k < n - 2:
            s = one - conj.b.entry(k + 2, k + 1)
            if s:
                conj.apply(Transvection(k + 2, k, s))
        t = conj.b.entry(k, k) - gamma[k]
        if t:
            conj.apply(Transvection(k + 1, k, t))
        if conj.b.entry(k, k) != gamma[k]:
            raise InternalDefect("diagonal entry did not land on its target")
    if conj.b.entry(n - 1, n - 1) != gamma[n - 1]:
        raise InternalDefect("trace-forced final entry mismatch")


def prescribe_with_unit(B0: Matrix, target) -> SimilarityCertificate:
    """Realize the target diagonal by elementary conjugations, given some
    off-diagonal entry of B0 that is a unit of its ring.

    Works over any implemented ring; the returned certificate's ``steps``
    records the elementary conjugations whose product is g.
    """
    gamma = _check_target(B0, target)
    conj = _Conjugation(B0)
    if B0.n >= 2 and _find_unit(conj, 0) is None:
        raise NoUnitOffDiagonal("no off-diagonal unit entry")
    _prescribe_core(conj, gamma, 0)
    return conj.certificate(B0)


def fillmore_field(A: Matrix, target) -> SimilarityCertificate:
    """Prescribed diagonal over a field for a non-scalar matrix.

    Picks v with v, Av independent, sends v, (A - gamma_1)v to the first two
    basis vectors (placing gamma_1 and a unit below it), then finishes the
    remaining diagonal with the elementary-conjugation engine.
    """
    ring, n = A.ring, A.n
    if not ring.is_field:
        raise ValueError(f"field prescription requires field entries, got {ring}")
    if is_scalar(A):
        raise ScalarMatrix("scalar matrices admit only their own diagonal")
    gamma = _check_target(A, target)
    v = None
    for i in range(n):
        if any(A.entry(k, i) for k in range(n) if k != i):
            v = [ring.one if t == i else ring.zero for t in range(n)]
            break
    if v is None:
        # every e_i is an eigenvector, so A is diagonal; mix two distinct ones
        pair = next(
            (i, j)
            for i in range(n)
            for j in range(i + 1, n)
            if A.entry(i, i) != A.entry(j, j)
        )
        v = [ring.zero] * n
        v[pair[0]] = ring.one
        v[pair[1]] = ring.one
    av = A.mat_vec(v)
    w = [a - gamma[0] * b for a, b in zip(av, v)]
    cols = [v, w]
    for i in range(n):
        if len(cols) == n:
            break
        e = [ring.one if t == i else ring.zero for t in range(n)]
        if _rank_of_cols(ring, cols + [e]) > len(cols):
            cols.append(e)
    P = Matrix(ring, [[cols[j][i] for j in range(n)] for i in range(n)])
    P_inv = _inverse_field(P)
    conj = _Conjugation(A)
    conj.apply_matrix(P_inv, P)
    first = conj.b.col(0)
    if first[0] != gamma[0] or (n >= 2 and first[1] != ring.one):
        raise InternalDefect("basis change lost the (gamma_1, 1, 0, ...) column")
    if n >= 3:
        # seed a unit inside the trailing block from the one below gamma_1
        s = conj.b.entry(1, 2) - ring.one
        if s:
            conj.apply(Transvection(0, 2, s))
        if conj.b.entry(1, 2) != ring.one:
            raise InternalDefect("trailing-block unit seeding failed")
    _prescribe_core(conj, gamma, 1)
    return conj.certificate(A)


def _rank_of_cols(ring, cols) -> int:
    from .matrices import rref

    rows = [[c[i] for c in cols] for i in range(len(cols[0]))]
    return len(rref(rows, ring)[1])


def prescribe_ksim_integral(A: Matrix, target) -> SimilarityCertificate:
    """Integer matrix, rational conjugation, integer result.

    Route: Frobenius form over Q (whose entries must come out integral for
    an integer input, asserted, not assumed), then elementary conjugations
    over Z against a companion block's subdiagonal unit.
    """
    if A.ring != ZZ:
        raise ValueError("expects an integer matrix")
    if is_scalar(A):
        raise ScalarMatrix("scalar matrices admit only their own diagonal")
    gamma = _check_target(A, target)
    from .canonical import frobenius_form

    F = frobenius_form(A.to_ring(QQ))
    for i in range(A.n):
        for j in range(A.n):
            if F.rcf.entry(i, j).denominator != 1:
                raise IntegralityViolation(
                    f"rational canonical form entry ({i}, {j}) = "
                    f"{F.rcf.entry(i, j)} is not integral"
                )
    rcf_z = F.rcf.to_ring(ZZ)
    tail = prescribe_with_unit(rcf_z, gamma)
    g = tail.g.to_ring(QQ) * F.transform.g
    g_inv = F.transform.g_inv * tail.g_inv.to_ring(QQ)
    return certified(
        A,
        SimilarityCertificate(g=g, g_inv=g_inv, b=tail.b, conj_ring=QQ, entry_ring=ZZ),
    )


# ---------------------------------------------------------------------------
# good vectors and unimodular prescription


def _minor_gcd(A: Matrix, v) -> int:
    """gcd of the 2x2 minors of [v | Av]; 1 means v, Av independent mod
    every prime, 0 means v and Av are linearly dependent."""
    av = A.mat_vec(v)
    g = 0
    n = A.n
    for i in range(n):
        for j in range(i + 1, n):
            g = gcd(g, v[i] * av[j] - v[j] * av[i])
            if g == 1:
                return 1
    return g


def _deterministic_vectors(n: int):
    def unit(i):
        return [1 if t == i else 0 for t in range(n)]

    for i in range(n):
        yield unit(i)
    for i in range(n):
        for j in range(i + 1, n):
            v = unit(i)
            v[j] = 1
            yield v
    for i in range(n):
        for j in range(i + 1, n):
            v = unit(i)
            v[j] = -1
            yield v
    for tup in itertools.product(range(-2, 3), repeat=n):
        if any(tup):
            yield list(tup)


def _good_vector_mod_p(A: Matrix, p: int) -> list[int]:
    """A vector independent from its image mod p; exists whenever A is not
    scalar mod p, and is then found among e_i and e_i + e_j."""
    n = A.n
    for i in range(n):
        if any(A.entry(k, i) % p for k in range(n) if k != i):
            return [1 if t == i else 0 for t in range(n)]
    # A is diagonal mod p; mix two residues that differ
    for i in range(n):
        for j in range(i + 1, n):
            if (A.entry(i, i) - A.entry(j, j)) % p:
                v = [0] * n
                v[i] = 1
                v[j] = 1
                return v
    raise InternalDefect(f"matrix is scalar mod {p} despite a unit ideal")


def _factor_desk_scale(d: int) -> Optional[list[int]]:
    """Prime factors by trial division; None when d has a factor too large
    to certify at desk scale."""
    out = []
    f = 2
    while f * f <= d and f <= 10**6:
        if d % f == 0:
            out.append(f)
            while d % f == 0:
                d //= f
        f += 1 if f == 2 else 2
    if d > 1:
        try:
            if not is_certified_prime(d):
                return None
        except ValueError:
            return None
        out.append(d)
    return out


def good_vector_search(A: Matrix, seed: int = 0) -> list[int]:
    """Primitive v whose pair (v, Av) stays independent modulo every prime.

    Tiers: deterministic small vectors; a CRT refinement that repairs the
    best candidate's bad primes; seeded random vectors.  Capped, with the
    cap reported on exhaustion.
    """
    if A.ring != ZZ:
        raise ValueError("good vectors are searched over Z")
    if A.n < 3:
        raise DimensionTooSmall(f"needs dimension >= 3, got {A.n}")
    ideal = nonscalarity_ideal(A)
    if ideal.generator != 1:
        raise IdealNotUnit(
            f"nonscalarity ideal gcd is {ideal.generator}, not a unit"
        )
    n = A.n
    tested = 0
    best: Optional[tuple[int, list[int]]] = None

    def consider(v) -> Optional[list[int]]:
        nonlocal tested, best
        tested += 1
        d = _minor_gcd(A, v)
        if d == 1:
            return v
        if d > 1 and (best is None or d < best[0]):
            best = (d, list(v))
        return None

    for v in _deterministic_vectors(n):
        if tested >= GOOD_VECTOR_CAP:
            break
        hit = consider(v)
        if hit is not None:
            return hit

    if best is not None and tested < GOOD_VECTOR_CAP:
        d = best[0]
        primes = _factor_desk_scale(d)
        if primes:
            residues = [_good_vector_mod_p(A, p) for p in primes]
            P = 1
            for p in primes:
                P *= p
            v0 = []
            for t in range(n):
                x, mod = 0, 1
                for w, p in zip(residues, primes):
                    # incremental CRT per coordinate
                    g, s, _ = _ext_gcd_int(mod, p)
                    x = (x + mod * s * (w[t] - x)) % (mod * p)
                    mod *= p
                v0.append(x)
            for w in itertools.chain([[0] * n], _deterministic_vectors(n)):
                if tested >= GOOD_VECTOR_CAP:
                    break
                cand = [a + P * b for a, b in zip(v0, w)]
                if any(cand):
                    hit = consider(cand)
                    if hit is not None:
                        return hit

    rng = random.Random(seed)
    lim = max(3, n)
    while tested < GOOD_VECTOR_CAP:
        cand = [rng.randint(-lim, lim) for _ in range(n)]
        if not any(cand):
            continue
        hit = consider(cand)
        if hit is not None:
            return hit
        if tested % 1000 == 0:
            lim *= 2
    raise SearchExhausted(
        f"no good vector among {tested} candidates; best minor gcd "
        f"{best[0] if best else 'undefined'}"
    )


def _ext_gcd_int(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def prescribe_zsim(A: Matrix, target, seed: int = 0) -> SimilarityCertificate:
    """Prescribed diagonal under unimodular integer conjugation (n >= 3,
    nonscalarity ideal the unit ideal).

    Route: good vector v -> basis with first column v -> the first column
    below the diagonal has content 1, so a GL_{n-1}(Z) column reduction puts
    a 1 at (2, 1) -> elementary-conjugation engine.
    """
    if A.ring != ZZ:
        raise ValueError("expects an integer matrix")
    if A.n < 3:
        raise DimensionTooSmall(f"needs dimension >= 3, got {A.n}")
    ideal = nonscalarity_ideal(A)
    if ideal.generator != 1:
        raise IdealNotUnit(f"nonscalarity ideal gcd is {ideal.generator}, not a unit")
    gamma = _check_target(A, target)
    n = A.n
    v = good_vector_search(A, seed)
    u_rows, u_inv_rows, g = column_vector_reduction(v)
    if g != 1:
        raise InternalDefect("good vector is not primitive")
    P = Matrix(ZZ, u_inv_rows)       # P e1 = v
    P_inv = Matrix(ZZ, u_rows)
    conj = _Conjugation(A)
    conj.apply_matrix(P_inv, P)
    sub = [conj.b.entry(i, 0) for i in range(1, n)]
    q_rows, q_inv_rows, g2 = column_vector_reduction(sub)
    if g2 != 1:
        raise InternalDefect("first-column content below the diagonal is not 1")
    G = _one_plus_block(q_rows)
    G_inv = _one_plus_block(q_inv_rows)
    conj.apply_matrix(G, G_inv)
    if conj.b.entry(1, 0) != 1:
        raise InternalDefect("column reduction did not produce the unit")
    _prescribe_core(conj, gamma, 0)
    return conj.certificate(A)


def _one_plus_block(block_rows) -> Matrix:
    k = len(block_rows)
    n = k + 1
    rows = [[0] * n for _ in range(n)]
    rows[0][0] = 1
    for i in range(k):
        for j in range(k):
            rows[i + 1][j + 1] = block_rows[i][j]
    return Matrix(ZZ, rows)


# ---------------------------------------------------------------------------
# the 2x2 decision procedure


@dataclass(frozen=True)
class CandidateReport:
    """One candidate result matrix and the quadratic form det(g) takes on
    the integer solution lattice of g*A = B*g."""

    candidate: Matrix
    solution_rank: int
    form: Optional[tuple[int, int, int]]
    decided: bool
    min_value: Optional[int]


@dataclass(frozen=True)
class Decision2x2:
    """Tri-state outcome: similar (with certificate), not_similar (every
    candidate's form certified away from +-1), or unknown (some indefinite
    or degenerate form searched only up to the bound)."""

    verdict: str
    certificate: Optional[SimilarityCertificate]
    candidates: tuple[CandidateReport, ...]
    bound: int


def _divisors(m: int) -> list[int]:
    m = abs(m)
    out = []
    f = 1
    while f * f <= m:
        if m % f == 0:
            out.append(f)
            if f != m // f:
                out.append(m // f)
        f += 1
    return sorted(out)


def _content(A: Matrix) -> int:
    g = 0
    for row in A.rows:
        for x in row:
            g = gcd(g, x)
    return g


def _candidates_2x2(A: Matrix, g0: int, g1: int, m: int) -> list[tuple[int, int]]:
    """Off-diagonal pairs (b, c) with b*c = m, up to conjugations that
    preserve the target diagonal (sign flips always; swaps when g0 = g1;
    for m = 0, transvection orbits leave b mod (g1 - g0), and for equal
    targets the nilpotent part pins b to the content of A - g0*I)."""
    out = []
    seen = set()

    def push(b, c):
        if b < 0 or (b == 0 and c < 0):
            b, c = -b, -c
        if g0 == g1:
            alt = (c, b) if c > 0 or (c == 0 and b >= 0) else (-c, -b)
            b, c = min((b, c), alt)
        if (b, c) not in seen:
            seen.add((b, c))
            out.append((b, c))

    if m != 0:
        for b in _divisors(m):
            push(b, m // b)
            push(-b, -(m // b))
    else:
        push(0, 0)
        if g0 == g1:
            push(_content(A - Matrix.identity(ZZ, 2).scale(g0)), 0)
        else:
            d = abs(g1 - g0)
            for b in range(1, d):
                push(b, 0)
                push(0, b)
    return out


def _intertwiner_kernel(A: Matrix, B: Matrix) -> list[Matrix]:
    """Canonical integer lattice basis of {g : g*A = B*g}, as matrices."""
    rows = []
    for i in range(2):
        for j in range(2):
            coeffs = [0] * 4
            for k in range(2):
                coeffs[2 * i + k] += A.entry(k, j)
                coeffs[2 * k + j] -= B.entry(i, k)
            rows.append(coeffs)
    kern = integer_kernel_basis(Matrix(ZZ, rows))
    return [Matrix(ZZ, [[k[0], k[1]], [k[2], k[3]]]) for k in kern]


def _form_coefficients(gens: list[Matrix]) -> tuple[int, int, int]:
    a = det(gens[0])
    c = det(gens[1])
    b = det(gens[0] + gens[1]) - a - c
    return a, b, c


def _definite_min(a: int, b: int, c: int):
    """Exact minimum of |a x^2 + b x y + c y^2| over nonzero integer points
    for a definite form, with a witness attaining it."""
    D = 4 * a * c - b * b
    if D <= 0:
        raise ValueError("form is not definite")
    T = min(abs(a), abs(c))
    xmax = isqrt(4 * abs(c) * T // D)
    ymax = isqrt(4 * abs(a) * T // D)
    best = None
    for x in range(0, xmax + 1):
        for y in range(-ymax, ymax + 1):
            if x == 0 and y <= 0:
                continue
            val = a * x * x + b * x * y + c * y * y
            if best is None or abs(val) < best[0]:
                best = (abs(val), (x, y))
    if best is None:
        # no lattice point within the radius of the smaller diagonal value
        return min(abs(a), abs(c)), (1, 0) if abs(a) <= abs(c) else (0, 1)
    return best


def _bounded_unit_search(a: int, b: int, c: int, bound: int):
    """Growing-shell scan for |form| = 1, up to max(|x|, |y|) <= bound."""
    for s in range(0, bound + 1):
        if s == 0:
            continue
        pts = []
        for t in range(-s, s + 1):
            pts.extend([(-s, t), (s, t)])
        for t in range(-s + 1, s):
            pts.extend([(t, -s), (t, s)])
        for x, y in sorted(pts):
            if abs(a * x * x + b * x * y + c * y * y) == 1:
                return x, y
    return None


def _witness_certificate(A, B, gens, x, y) -> Optional[SimilarityCertificate]:
    if x < 0 or (x == 0 and y < 0):
        x, y = -x, -y
    g = gens[0].scale(x) + gens[1].scale(y) if len(gens) == 2 else gens[0].scale(x)
    d = det(g)
    if d not in (1, -1):
        return None
    g_inv = adjugate(g).scale(d)
    return certified(
        A,
        SimilarityCertificate(g=g, g_inv=g_inv, b=B, conj_ring=ZZ, entry_ring=ZZ),
    )


def decide_2x2(A: Matrix, target, bound: int = 1000) -> Decision2x2:
    """Decide whether a 2x2 integer matrix is unimodularly similar to a
    matrix with the prescribed diagonal.

    Candidates share A's characteristic polynomial, so the off-diagonal
    product is forced by the determinant; per candidate the integer
    solutions of g*A = B*g form a rank-2 lattice on which det(g) is a binary
    quadratic form.  Definite forms are decided exactly by enumeration
    within the definiteness radius; indefinite and degenerate ones are
    searched up to the bound, leaving ``unknown`` when inconclusive.
    """
    if A.ring != ZZ or A.n != 2:
        raise ValueError("expects a 2x2 integer matrix")
    gamma = _check_target(A, target)
    g0, g1 = gamma
    if is_scalar(A):
        if (g0, g1) == A.diag():
            ident = Matrix.identity(ZZ, 2)
            cert = certified(
                A,
                SimilarityCertificate(
                    g=ident, g_inv=ident, b=A, conj_ring=ZZ, entry_ring=ZZ
                ),
            )
            return Decision2x2("similar", cert, (), bound)
        return Decision2x2("not_similar", None, (), bound)
    m = g0 * g1 - det(A)
    reports = []
    for b, c in _candidates_2x2(A, g0, g1, m):
        B = Matrix(ZZ, [[g0, b], [c, g1]])
        gens = _intertwiner_kernel(A, B)
        r = len(gens)
        if r == 0:
            reports.append(CandidateReport(B, 0, None, True, None))
            continue
        if r == 1:
            a = det(gens[0])
            form = (a, 0, 0)
            if abs(a) == 1:
                cert = _witness_certificate(A, B, gens, 1, 0)
                if cert is not None:
                    reports.append(CandidateReport(B, 1, form, True, abs(a)))
                    return Decision2x2("similar", cert, tuple(reports), bound)
            reports.append(CandidateReport(B, 1, form, True, abs(a) or None))
            continue
        if r != 2:
            raise InternalDefect(f"intertwiner lattice rank {r} for a 2x2 instance")
        fa, fb, fc = _form_coefficients(gens)
        form = (fa, fb, fc)
        if fa == 0 and fb == 0 and fc == 0:
            reports.append(CandidateReport(B, 2, form, True, None))
            continue
        disc = fb * fb - 4 * fa * fc
        if disc < 0:
            mv, (x, y) = _definite_min(fa, fb, fc)
            if mv == 1:
                cert = _witness_certificate(A, B, gens, x, y)
                if cert is not None:
                    reports.append(CandidateReport(B, 2, form, True, mv))
                    return Decision2x2("similar", cert, tuple(reports), bound)
                raise InternalDefect("definite witness failed to certify")
            reports.append(CandidateReport(B, 2, form, True, mv))
            continue
        hit = _bounded_unit_search(fa, fb, fc, bound)
        if hit is not None:
            cert = _witness_certificate(A, B, gens, *hit)
            if cert is not None:
                reports.append(CandidateReport(B, 2, form, True, 1))
                return Decision2x2("similar", cert, tuple(reports), bound)
        reports.append(CandidateReport(B, 2, form, False, None))
    if all(rep.decided for rep in reports):
        return Decision2x2("not_similar", None, tuple(reports), bound)
    return Decision2x2("unknown", None, tuple(reports), bound)
