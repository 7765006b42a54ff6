"""Characteristic and minimal polynomials, invariant factors, Frobenius form.

Two independent routes to the invariant factors are kept deliberately
separate: :func:`invariant_factors` reads them off the Smith form of
x*I - A over K[x], while :func:`frobenius_form` rebuilds them by iterated
cyclic decomposition and returns an explicit change-of-basis certificate.
Tests cross-check one against the other.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .errors import DecompositionSearchExhausted, InternalDefect
from .matrices import (
    Matrix,
    SimilarityCertificate,
    _inverse_field,
    certified,
    rref,
    solve_field,
    nullspace,
)
from .polynomials import Poly, PolyMatrix, divides, poly_lcm
from .rings import Ring

#: Candidate cap for the maximal-vector search; exhaustion is a defect.
MAX_VECTOR_CANDIDATES = 10_000


def charpoly(A: Matrix) -> Poly:
    """det(x*I - A) as a monic polynomial, by the division-free Berkowitz
    iteration, so the one code path serves Z, Q, F_p and Q(beta) alike."""
    ring, n = A.ring, A.n
    one = ring.one
    # coefficients kept leading-first; start with the 1x1 leading block
    c = [one, -A.entry(0, 0)]
    for r in range(1, n):
        col = [one, -A.entry(r, r)]
        # q_k = R * M^k * S for the leading r x r block M, bordered row R, column S
        u = [A.entry(i, r) for i in range(r)]
        row = [A.entry(r, j) for j in range(r)]
        for _ in range(r):
            qk = ring.zero
            for a, b in zip(row, u):
                qk = qk + a * b
            col.append(-qk)
            u = [
                sum((A.entry(i, k) * u[k] for k in range(r)), start=ring.zero)
                for i in range(r)
            ]
        new_c = []
        for i in range(r + 2):
            acc = ring.zero
            for j in range(min(i, r) + 1):
                if i - j < len(col):
                    acc = acc + col[i - j] * c[j]
            new_c.append(acc)
        c = new_c
    return Poly(ring, list(reversed(c)))


def eval_poly_at_matrix(f: Poly, A: Matrix) -> Matrix:
    """Horner evaluation of f at a matrix over the same ring."""
    if f.ring != A.ring:
        raise ValueError(f"polynomial ring {f.ring} does not match matrix ring {A.ring}")
    n = A.n
    acc = Matrix(A.ring, [[A.ring.zero] * n for _ in range(n)])
    ident = Matrix.identity(A.ring, n)
    for c in reversed(f.coeffs):
        acc = acc * A + ident.scale(c)
    return acc


def _krylov_annihilator(A: Matrix, v) -> Poly:
    """Least-degree monic polynomial with f(A)*v = 0 (field coefficients)."""
    ring, n = A.ring, A.n
    rows = []       # rref rows of the accumulated Krylov vectors
    combos = []     # same row ops applied to the power-coordinate tags
    w = [ring.make(x) for x in v]
    k = 0
    while True:
        combo = [ring.zero] * (n + 1)
        combo[k] = ring.one
        res = list(w)
        for row, cmb in zip(rows, combos):
            pc = next(i for i, x in enumerate(row) if x)
            f = res[pc]
            if f:
                res = [a - f * b for a, b in zip(res, row)]
                combo = [a - f * b for a, b in zip(combo, cmb)]
        piv = next((i for i, x in enumerate(res) if x), None)
        if piv is None:
            # combo expresses 0 = sum combo[j] * A^j v with combo[k] = 1
            return Poly(ring, combo[: k + 1])
        inv = ring.inv(res[piv])
        rows.append([x * inv for x in res])
        combos.append([x * inv for x in combo])
        w = A.mat_vec(w)
        k += 1
        if k > n:
            raise InternalDefect("Krylov chain exceeded the dimension")


def minpoly(A: Matrix) -> Poly:
    """Minimal polynomial over a field: lcm of basis-vector annihilators."""
    if not A.ring.is_field:
        raise ValueError(f"minimal polynomial requires field entries, got {A.ring}")
    ring, n = A.ring, A.n
    m = Poly.one(ring)
    for i in range(n):
        e = [ring.one if j == i else ring.zero for j in range(n)]
        m = poly_lcm(m, _krylov_annihilator(A, e))
        if m.degree == n:
            break
    return m


def invariant_factors(A: Matrix) -> tuple[Poly, ...]:
    """Nontrivial diagonal of the Smith form of x*I - A, monic, in
    divisibility order; their product is the characteristic polynomial."""
    if not A.ring.is_field:
        raise ValueError(f"invariant factors require field entries, got {A.ring}")
    from .normal_forms import smith_normal_form

    ring, n = A.ring, A.n
    x = Poly.x(ring)
    entries = [
        [
            x - Poly.constant(ring, A.entry(i, j))
            if i == j
            else Poly.constant(ring, -A.entry(i, j))
            for j in range(n)
        ]
        for i in range(n)
    ]
    D, _, _ = smith_normal_form(PolyMatrix(ring, entries))
    out = []
    for i in range(n):
        d = D.entry(i, i)
        if d.is_zero():
            raise InternalDefect("x*I - A must have full rank over K[x]")
        if d.degree >= 1:
            out.append(d)
    return tuple(out)


def companion_matrix(f: Poly) -> Matrix:
    """Companion matrix: subdiagonal ones, last column -f's lower coefficients."""
    if not f.is_monic() or f.degree < 1:
        raise ValueError("companion matrix requires a monic polynomial of degree >= 1")
    ring, d = f.ring, f.degree
    rows = [[ring.zero] * d for _ in range(d)]
    for i in range(1, d):
        rows[i][i - 1] = ring.one
    for i in range(d):
        rows[i][d - 1] = -f.coeffs[i]
    return Matrix(ring, rows)


@dataclass(frozen=True)
class FrobeniusForm:
    """Invariant factor blocks f_1 | ... | f_k, their companion direct sum,
    and a verified change-of-basis certificate g*A*g^{-1} = rcf."""

    blocks: tuple[Poly, ...]
    rcf: Matrix
    transform: SimilarityCertificate


def _candidate_vectors(ring: Ring, n: int, seed: int):
    """Deterministic maximal-vector candidates, then a seeded random tail."""
    one, zero = ring.one, ring.zero

    def unit(i):
        return [one if j == i else zero for j in range(n)]

    for i in range(n):
        yield unit(i)
    for i in range(n):
        for j in range(i + 1, n):
            v = unit(i)
            v[j] = one
            yield v
    for k in (1, 2):
        vals = [ring.from_int(t) for t in range(-k, k + 1)]
        for tup in itertools.product(vals, repeat=n):
            if any(tup):
                yield list(tup)
    rng = random.Random(seed)
    lim = max(n * n, 2)
    while True:
        yield [ring.from_int(rng.randint(-lim, lim)) for _ in range(n)]


def _krylov_rank(A: Matrix, v) -> int:
    """Degree of the Krylov annihilator of v (rank of its Krylov chain)."""
    return _krylov_annihilator(A, v).degree


def _maximal_vector(A: Matrix, d: int, seed: int) -> list:
    for count, v in enumerate(_candidate_vectors(A.ring, A.n, seed)):
        if count >= MAX_VECTOR_CANDIDATES:
            raise DecompositionSearchExhausted(
                f"no cyclic vector of degree {d} among {MAX_VECTOR_CANDIDATES} candidates"
            )
        if _krylov_rank(A, v) == d:
            return [A.ring.make(x) for x in v]
    raise DecompositionSearchExhausted("candidate stream ended")  # pragma: no cover


def _commuting_projector(A: Matrix, chain_cols: list) -> list:
    """Projector P with image spanned by chain_cols, P restricted to the
    image the identity, and A*P = P*A; returned as a list of rows.

    P is parametrized as K*Y (K the chain matrix), which makes the image
    condition structural and the two remaining conditions linear in Y.
    """
    ring, n = A.ring, A.n
    d = len(chain_cols)
    # unknowns: Y is d x n, vectorized row-major
    rows = []
    rhs = []
    K = chain_cols  # list of columns, each length n

    def ky_entry_coeffs(i, j):
        # P[i][j] = sum_s K[s][i] * Y[s][j]
        coeffs = [ring.zero] * (d * n)
        for s in range(d):
            coeffs[s * n + j] = K[s][i]
        return coeffs

    # A*P - P*A = 0
    for i in range(n):
        for j in range(n):
            coeffs = [ring.zero] * (d * n)
            for k in range(n):
                a = A.entry(i, k)
                if a:
                    c = ky_entry_coeffs(k, j)
                    coeffs = [p + a * q for p, q in zip(coeffs, c)]
                b = A.entry(k, j)
                if b:
                    c = ky_entry_coeffs(i, k)
                    coeffs = [p - q * b for p, q in zip(coeffs, c)]
            rows.append(coeffs)
            rhs.append(ring.zero)
    # P * K = K
    for t in range(d):
        for i in range(n):
            coeffs = [ring.zero] * (d * n)
            for s in range(d):
                for k in range(n):
                    # (P K)[i][t] = sum_k P[i][k] K[t][k] with P[i][k] = sum_s K[s][i] Y[s][k]
                    if K[t][k]:
                        coeffs[s * n + k] = coeffs[s * n + k] + K[s][i] * K[t][k]
            rows.append(coeffs)
            rhs.append(K[t][i])
    sol = solve_field(rows, [rhs], ring)
    if sol is None:
        raise InternalDefect("commuting projector system is inconsistent")
    y = sol[0]
    p_rows = []
    for i in range(n):
        p_rows.append(
            [
                sum((K[s][i] * y[s * n + j] for s in range(d)), start=ring.zero)
                for j in range(n)
            ]
        )
    return p_rows


def frobenius_form(A: Matrix, seed: int = 0) -> FrobeniusForm:
    """Rational canonical form with an explicit transformation certificate.

    Iterated cyclic decomposition: find a vector whose Krylov annihilator is
    the minimal polynomial, split off its Krylov subspace, pass to an
    A-invariant complement (kernel of a commuting projector) and recurse.
    """
    if not A.ring.is_field:
        raise ValueError(f"Frobenius form requires field entries, got {A.ring}")
    ring, n = A.ring, A.n
    blocks_desc = []  # (poly, columns in original coordinates), largest first

    def lift(embed_cols, w):
        # embed_cols: current-space basis as columns in original coordinates
        out = [ring.zero] * n
        for coef, col in zip(w, embed_cols):
            if coef:
                out = [a + coef * b for a, b in zip(out, col)]
        return out

    M = A
    embed_cols = [
        [ring.one if i == j else ring.zero for i in range(n)] for j in range(n)
    ]
    while True:
        m = M.n
        mp = minpoly(M)
        d = mp.degree
        v = _maximal_vector(M, d, seed)
        chain = [v]
        for _ in range(d - 1):
            chain.append(M.mat_vec(chain[-1]))
        blocks_desc.append((mp, [lift(embed_cols, w) for w in chain]))
        if d == m:
            break
        p_rows = _commuting_projector(M, chain)
        comp_cols = nullspace(p_rows, ring)  # basis of the A-invariant complement
        if len(comp_cols) != m - d:
            raise InternalDefect("complement dimension mismatch")
        # restriction M' with M * C = C * M', solved columnwise
        c_rows = [[c[i] for c in comp_cols] for i in range(m)]
        mc_cols = [M.mat_vec(c) for c in comp_cols]
        sol = solve_field(c_rows, mc_cols, ring)
        if sol is None:
            raise InternalDefect("complement is not invariant")
        k = len(comp_cols)
        M = Matrix(ring, [[sol[j][i] for j in range(k)] for i in range(k)])
        embed_cols = [lift(embed_cols, c) for c in comp_cols]
    blocks = list(reversed(blocks_desc))
    polys = tuple(b[0] for b in blocks)
    for f, g in zip(polys, polys[1:]):
        if not divides(f, g):
            raise InternalDefect("invariant factor chain broken")
    s_cols = []
    for _, cols in blocks:
        s_cols.extend(cols)
    S = _cols_to_matrix(ring, s_cols)
    g = _inverse_field(S)
    rcf = _companion_direct_sum(ring, polys, n)
    cert = certified(
        A,
        SimilarityCertificate(g=g, g_inv=S, b=rcf, conj_ring=ring, entry_ring=ring),
    )
    return FrobeniusForm(blocks=polys, rcf=rcf, transform=cert)


def _cols_to_matrix(ring: Ring, cols: list) -> Matrix:
    n = len(cols[0])
    if len(cols) != n:
        raise InternalDefect("column count does not form a square matrix")
    return Matrix(ring, [[cols[j][i] for j in range(n)] for i in range(n)])


def _companion_direct_sum(ring: Ring, polys, n: int) -> Matrix:
    rows = [[ring.zero] * n for _ in range(n)]
    at = 0
    for f in polys:
        C = companion_matrix(f)
        for i in range(C.n):
            for j in range(C.n):
                rows[at + i][at + j] = C.entry(i, j)
        at += C.n
    if at != n:
        raise InternalDefect("block degrees do not sum to the dimension")
    return Matrix(ring, rows)


def monic_divisor_integrality(f: Poly, subring) -> bool:
    """Coefficientwise membership of a monic polynomial in a subring of its
    coefficient field (Z inside Q, or Z[alpha] inside Q(beta))."""
    if not f.is_monic():
        raise ValueError("integrality test requires a monic polynomial")
    return all(subring.contains(c) for c in f.coeffs)
