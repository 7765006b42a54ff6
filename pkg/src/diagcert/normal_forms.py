"""Hermite and Smith normal forms with transforms, and lattice utilities.

The Smith form is generic over a Euclidean domain adapter and serves both
integer matrices and polynomial matrices over a field (degree as the
Euclidean norm), which is how invariant factors are extracted from x*I - A.
"""

from __future__ import annotations

from math import gcd

from .errors import NotPrimitive
from .matrices import Matrix
from .polynomials import Poly, PolyMatrix, poly_divmod
from .rings import ZZ, Ring


def hermite_normal_form(A: Matrix) -> tuple[Matrix, Matrix]:
    """Row-transform Hermite form: returns (H, U) with U unimodular, U*A = H.

    Pivots are gathered from the last column leftward into the bottom rows,
    so H is lower triangular with nonnegative pivots for nonsingular input
    (bottom-right echelon in general).  Entries below each pivot are reduced
    into [0, pivot).
    """
    if A.ring != ZZ:
        raise ValueError("Hermite form is implemented over Z")
    n = A.n
    h = [list(r) for r in A.rows]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    pivots = []  # (row, col), assigned bottom-up
    r = n - 1
    for c in range(n - 1, -1, -1):
        if r < 0:
            break
        if all(h[i][c] == 0 for i in range(r + 1)):
            continue
        # gather gcd of column c (rows 0..r) into row r
        for i in range(r):
            if h[i][c] == 0:
                continue
            _gcd_rows(h, u, r, i, c)
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        pivots.append((r, c))
        r -= 1
    # reduce entries below each pivot into [0, pivot)
    for pr, pc in pivots:
        p = h[pr][pc]
        for i in range(pr + 1, n):
            q = h[i][pc] // p
            if q:
                h[i] = [a - q * b for a, b in zip(h[i], h[pr])]
                u[i] = [a - q * b for a, b in zip(u[i], u[pr])]
    return Matrix(ZZ, h), Matrix(ZZ, u)


def _gcd_rows(h, u, r, i, c):
    """Left-multiply by the 2x2 unimodular block putting gcd at (r, c), 0 at (i, c)."""
    a, b = h[r][c], h[i][c]
    g, x, y = _ext_gcd(a, b)
    ag, bg = a // g, b // g
    hr, hi = h[r], h[i]
    h[r] = [x * p + y * q for p, q in zip(hr, hi)]
    h[i] = [-bg * p + ag * q for p, q in zip(hr, hi)]
    ur, ui = u[r], u[i]
    u[r] = [x * p + y * q for p, q in zip(ur, ui)]
    u[i] = [-bg * p + ag * q for p, q in zip(ur, ui)]


def _ext_gcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def column_vector_reduction(v) -> tuple[list, list, int]:
    """Unimodular U with U*v = gcd(v)*e1; returns (U, U_inv, gcd).

    Built from 2x2 extended-gcd blocks mixing rows (0, i).
    """
    v = [int(x) for x in v]
    n = len(v)
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    uinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    w = list(v)
    for i in range(1, n):
        if w[i] == 0:
            continue
        a, b = w[0], w[i]
        g, x, y = _ext_gcd(a, b)
        ag, bg = a // g, b // g
        # [[x, y], [-bg, ag]] has det 1; its inverse is [[ag, -y], [bg, x]]
        r0, ri = u[0], u[i]
        u[0] = [x * p + y * q for p, q in zip(r0, ri)]
        u[i] = [-bg * p + ag * q for p, q in zip(r0, ri)]
        for row in uinv:
            c0, ci = row[0], row[i]
            row[0] = c0 * ag + ci * bg
            row[i] = -c0 * y + ci * x
        w[0], w[i] = g, 0
    if w[0] < 0:
        w[0] = -w[0]
        u[0] = [-x for x in u[0]]
        for row in uinv:
            row[0] = -row[0]
    return u, uinv, w[0]


def complete_primitive_vector(v, n: int | None = None) -> Matrix:
    """Extend a primitive integer vector to a matrix P in GL_n(Z) with P*e1 = v."""
    v = [int(x) for x in v]
    if n is None:
        n = len(v)
    if len(v) != n:
        raise ValueError("vector length does not match the dimension")
    u, uinv, g = column_vector_reduction(v)
    if g != 1:
        raise NotPrimitive(f"entries have gcd {g}")
    return Matrix(ZZ, uinv)


# ---------------------------------------------------------------------------
# Smith normal form over a Euclidean domain


class _IntDomain:
    """Z with absolute value as the Euclidean norm."""

    zero = 0

    @staticmethod
    def is_zero(x):
        return x == 0

    @staticmethod
    def norm(x):
        return abs(x)

    @staticmethod
    def divmod(a, b):
        q, r = divmod(a, b)
        # symmetric remainder keeps entries small
        if r and 2 * r > abs(b):
            q, r = (q + 1, r - b) if b > 0 else (q - 1, r + b)
        return q, r

    @staticmethod
    def normalizing_unit(x):
        # unit u with u*x in normal form (nonnegative)
        return -1 if x < 0 else 1

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def sub(a, b):
        return a - b

    @staticmethod
    def unit_inv(u):
        return u


class _PolyDomain:
    """K[x] with degree as the Euclidean norm; pivots normalized monic."""

    def __init__(self, ring: Ring):
        self.ring = ring
        self.zero = Poly(ring)

    @staticmethod
    def is_zero(x):
        return x.is_zero()

    @staticmethod
    def norm(x):
        return x.degree

    @staticmethod
    def divmod(a, b):
        return poly_divmod(a, b)

    def normalizing_unit(self, x):
        return Poly.constant(self.ring, self.ring.inv(x.leading()))

    @staticmethod
    def mul(a, b):
        return a * b

    @staticmethod
    def sub(a, b):
        return a - b

    def unit_inv(self, u):
        return Poly.constant(self.ring, self.ring.inv(u.coeffs[0]))


def _smith(entries, dom, n, identity_row):
    """Core SNF: returns (d, u, v) as lists with u*A*v = diag(d)."""
    e = [list(r) for r in entries]
    u = [list(identity_row(i)) for i in range(n)]
    v = [list(identity_row(i)) for i in range(n)]

    def row_op(i, q, k):  # row i -= q * row k (in e and u)
        e[i] = [dom.sub(a, dom.mul(q, b)) for a, b in zip(e[i], e[k])]
        u[i] = [dom.sub(a, dom.mul(q, b)) for a, b in zip(u[i], u[k])]

    def col_op(j, q, k):  # col j -= q * col k (in e and v)
        for row in e:
            row[j] = dom.sub(row[j], dom.mul(q, row[k]))
        for row in v:
            row[j] = dom.sub(row[j], dom.mul(q, row[k]))

    for t in range(n):
        # smallest-norm pivot in the trailing block, ties by row then column
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, n):
                    if dom.is_zero(e[i][j]):
                        continue
                    nm = dom.norm(e[i][j])
                    if best is None or nm < best[0]:
                        best = (nm, i, j)
            if best is None:
                break
            _, bi, bj = best
            if bi != t:
                e[t], e[bi] = e[bi], e[t]
                u[t], u[bi] = u[bi], u[t]
            if bj != t:
                for row in e:
                    row[t], row[bj] = row[bj], row[t]
                for row in v:
                    row[t], row[bj] = row[bj], row[t]
            dirty = False
            for i in range(t + 1, n):
                if dom.is_zero(e[i][t]):
                    continue
                q, r = dom.divmod(e[i][t], e[t][t])
                row_op(i, q, t)
                if not dom.is_zero(r):
                    dirty = True
            for j in range(t + 1, n):
                if dom.is_zero(e[t][j]):
                    continue
                q, r = dom.divmod(e[t][j], e[t][t])
                col_op(j, q, t)
                if not dom.is_zero(r):
                    dirty = True
            if dirty:
                continue
            # divisibility of the rest of the block by the pivot
            bump = None
            for i in range(t + 1, n):
                for j in range(t + 1, n):
                    if dom.is_zero(e[i][j]):
                        continue
                    if not dom.is_zero(dom.divmod(e[i][j], e[t][t])[1]):
                        bump = i
                        break
                if bump is not None:
                    break
            if bump is None:
                break
            # pull the offending row into row t and restart the pivot hunt
            e[t] = [dom.sub(a, dom.mul(_neg_one(dom), b)) for a, b in zip(e[t], e[bump])]
            u[t] = [dom.sub(a, dom.mul(_neg_one(dom), b)) for a, b in zip(u[t], u[bump])]
        if dom.is_zero(e[t][t]):
            continue
        w = dom.normalizing_unit(e[t][t])
        if not _is_one(dom, w):
            e[t] = [dom.mul(w, x) for x in e[t]]
            u[t] = [dom.mul(w, x) for x in u[t]]
    return [e[i][i] for i in range(n)], u, v


def _neg_one(dom):
    if isinstance(dom, _IntDomain) or dom is _IntDomain:
        return -1
    return Poly.constant(dom.ring, -dom.ring.one)


def _is_one(dom, w):
    if isinstance(w, Poly):
        return w.degree == 0 and w.coeffs[0] == dom.ring.one
    return w == 1


def smith_normal_form(A):
    """Smith form with transforms: returns (D, U, V) with U*A*V = D.

    Accepts an integer Matrix or a PolyMatrix over a field; the diagonal is
    normalized (nonnegative over Z, monic over K[x]) and satisfies
    d_i | d_{i+1}.
    """
    if isinstance(A, Matrix):
        if A.ring != ZZ:
            raise ValueError("Smith form over a scalar matrix requires ring Z")
        dom = _IntDomain()
        ident = lambda i: [1 if j == i else 0 for j in range(A.n)]
        d, u, v = _smith(A.rows, dom, A.n, ident)
        n = A.n
        dm = [[d[i] if i == j else 0 for j in range(n)] for i in range(n)]
        return Matrix(ZZ, dm), Matrix(ZZ, u), Matrix(ZZ, v)
    if isinstance(A, PolyMatrix):
        ring = A.ring
        if not ring.is_field:
            raise ValueError("polynomial Smith form requires field coefficients")
        dom = _PolyDomain(ring)
        one, zero = Poly.one(ring), Poly(ring)
        ident = lambda i: [one if j == i else zero for j in range(A.n)]
        d, u, v = _smith(A.rows, dom, A.n, ident)
        n = A.n
        dm = [[d[i] if i == j else zero for j in range(n)] for i in range(n)]
        return PolyMatrix(ring, dm), PolyMatrix(ring, u), PolyMatrix(ring, v)
    raise TypeError(f"unsupported matrix type {type(A)!r}")


# ---------------------------------------------------------------------------
# integer kernels


def integer_kernel_basis(A: Matrix) -> list[list[int]]:
    """Canonical basis of the saturated lattice {x : A*x = 0} over Z.

    Basis vectors come from the zero-diagonal columns of the Smith form's
    right transform, then get reduced to a unique echelon representative
    (pivots leftmost, positive, entries above each pivot in [0, pivot)).
    """
    if A.ring != ZZ:
        raise ValueError("integer kernel requires ring Z")
    D, _, V = smith_normal_form(A)
    rows = [V.col(j) for j in range(A.n) if D.entry(j, j) == 0]
    return lattice_row_echelon([list(r) for r in rows])


def lattice_row_echelon(rows: list[list[int]]) -> list[list[int]]:
    """Unique Hermite-reduced basis of the lattice spanned by the rows.

    Pivots move to the leftmost columns top-down, are positive, and entries
    above a pivot are reduced into [0, pivot).
    """
    work = [list(r) for r in rows if any(r)]
    if not work:
        return []
    m = len(work[0])
    out = []
    c = 0
    while work and c < m:
        live = [r for r in work if r[c] != 0]
        if not live:
            c += 1
            continue
        # fold the column gcd into a single row
        base = live[0]
        for r in live[1:]:
            a, b = base[c], r[c]
            g, x, y = _ext_gcd(a, b)
            ag, bg = a // g, b // g
            base2 = [x * p + y * q for p, q in zip(base, r)]
            r2 = [-bg * p + ag * q for p, q in zip(base, r)]
            base[:] = base2
            r[:] = r2
        if base[c] < 0:
            base[:] = [-x for x in base]
        out.append(base)
        work = [r for r in work if r is not base and any(r)]
        c += 1
    # reduce entries above each pivot
    for k, row in enumerate(out):
        pc = next(i for i, x in enumerate(row) if x)
        for above in out[:k]:
            q = above[pc] // row[pc]
            if q:
                above[:] = [a - q * b for a, b in zip(above, row)]
    return out
