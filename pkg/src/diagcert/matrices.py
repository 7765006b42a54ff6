"""Dense exact square matrices, conjugation primitives and certificates."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .errors import InternalDefect, NotInvertibleInRing, ParameterNotInRing
from .rings import Ring, ZZ, can_coerce, coerce_scalar

#: Soft dimension cap; desk-scale toolkit, raise at your own risk.
MAX_DIM = 64


class Matrix:
    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring: Ring, rows):
        rws = tuple(tuple(ring.make(x) for x in row) for row in rows)
        n = len(rws)
        if n == 0 or any(len(r) != n for r in rws):
            raise ValueError("matrix must be square and nonempty")
        if n > MAX_DIM:
            raise ValueError(f"dimension {n} exceeds the soft cap {MAX_DIM}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rws)

    def __setattr__(self, *_):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, ring: Ring, diag) -> "Matrix":
        diag = [ring.make(d) for d in diag]
        n = len(diag)
        return cls(ring, [[diag[i] if i == j else ring.zero for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def diag(self) -> tuple:
        return tuple(self.rows[i][i] for i in range(self.n))

    def trace(self):
        t = self.ring.zero
        for i in range(self.n):
            t = t + self.rows[i][i]
        return t

    def transpose(self) -> "Matrix":
        return Matrix(self.ring, list(zip(*self.rows)))

    def _check(self, other: "Matrix"):
        if self.ring != other.ring or self.n != other.n:
            raise ValueError("incompatible matrices")

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return Matrix(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return Matrix(self.ring, [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix(self.ring, [[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        n = self.n
        cols = other.transpose().rows
        return Matrix(
            self.ring,
            [[_dot(self.ring, row, col) for col in cols] for row in self.rows],
        )

    def scale(self, s) -> "Matrix":
        s = self.ring.make(s)
        return Matrix(self.ring, [[a * s for a in r] for r in self.rows])

    def mat_vec(self, v):
        v = [self.ring.make(x) for x in v]
        return [_dot(self.ring, row, v) for row in self.rows]

    def to_ring(self, dst: Ring) -> "Matrix":
        if dst == self.ring:
            return self
        return Matrix(dst, [[coerce_scalar(x, self.ring, dst) for x in r] for r in self.rows])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.ring == other.ring
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.rows)
        return f"Matrix({self.ring}, [{body}])"


def _dot(ring, u, v):
    acc = ring.zero
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def is_scalar(A: Matrix) -> bool:
    """Whether A = lambda * I."""
    lam = A.rows[0][0]
    for i in range(A.n):
        for j in range(A.n):
            if i == j:
                if A.rows[i][j] != lam:
                    return False
            elif A.rows[i][j]:
                return False
    return True


def det(A: Matrix):
    """Exact determinant: Bareiss over Z, ordinary elimination over fields."""
    if A.ring.is_field:
        return _det_field(A)
    if A.ring != ZZ:
        raise ValueError(f"determinant over {A.ring} is not supported")
    return _det_bareiss(A)


def _det_bareiss(A: Matrix) -> int:
    n = A.n
    m = [list(r) for r in A.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _det_field(A: Matrix):
    ring = A.ring
    n = A.n
    m = [list(r) for r in A.rows]
    d = ring.one
    for k in range(n):
        piv = None
        for i in range(k, n):
            if m[i][k]:
                piv = i
                break
        if piv is None:
            return ring.zero
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            d = -d
        d = d * m[k][k]
        inv = ring.inv(m[k][k])
        for i in range(k + 1, n):
            if not m[i][k]:
                continue
            f = m[i][k] * inv
            for j in range(k, n):
                m[i][j] = m[i][j] - f * m[k][j]
    return d


def adjugate(A: Matrix) -> Matrix:
    """Classical adjugate via cofactor determinants."""
    n = A.n
    if n == 1:
        return Matrix(A.ring, [[A.ring.one]])
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = Matrix(
                A.ring,
                [
                    [A.rows[r][c] for c in range(n) if c != i]
                    for r in range(n)
                    if r != j
                ],
            )
            cof = det(minor)
            if (i + j) % 2:
                cof = -cof
            row.append(cof)
        rows.append(row)
    return Matrix(A.ring, rows)


def inverse(A: Matrix) -> Matrix:
    """Exact inverse; over Z only det = +/-1 is invertible (adjugate route)."""
    if A.ring.is_field:
        return _inverse_field(A)
    if A.ring != ZZ:
        raise ValueError(f"inverse over {A.ring} is not supported")
    d = det(A)
    if d not in (1, -1):
        raise NotInvertibleInRing(f"determinant {d} is not a unit of Z")
    return adjugate(A).scale(d)


def _inverse_field(A: Matrix) -> Matrix:
    ring = A.ring
    n = A.n
    m = [list(r) + [ring.one if i == k else ring.zero for k in range(n)] for i, r in enumerate(A.rows)]
    for k in range(n):
        piv = None
        for i in range(k, n):
            if m[i][k]:
                piv = i
                break
        if piv is None:
            raise NotInvertibleInRing("matrix is singular")
        m[k], m[piv] = m[piv], m[k]
        inv = ring.inv(m[k][k])
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i == k or not m[i][k]:
                continue
            f = m[i][k]
            m[i] = [a - f * b for a, b in zip(m[i], m[k])]
    return Matrix(ring, [row[n:] for row in m])


# ---------------------------------------------------------------------------
# field linear algebra helpers (shared by canonical forms and prescriptions)


def rref(rows, ring):
    """Reduced row echelon form of a list-of-lists over a field.

    Returns (new_rows, pivot_columns).  The input is not modified.
    """
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, nrows):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = ring.inv(m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def solve_field(rows, rhs_cols, ring):
    """Solve A*X = B columnwise over a field; free variables are set to 0.

    ``rows`` is the coefficient matrix (list of rows, possibly rectangular),
    ``rhs_cols`` a list of right-hand-side columns.  Returns the solution
    columns, or None if the system is inconsistent.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    k = len(rhs_cols)
    aug = [list(rows[i]) + [col[i] for col in rhs_cols] for i in range(nrows)]
    red, pivots = rref(aug, ring)
    pivset = set(pivots)
    for row in red:
        if any(row[:ncols]):
            continue
        if any(row[ncols:]):
            return None
    sols = []
    for t in range(k):
        x = [ring.zero] * ncols
        for r, c in enumerate(pivots):
            if c < ncols:
                x[c] = red[r][ncols + t]
            elif red[r][ncols + t]:
                return None
        # pivots landed in the rhs block mean inconsistency, handled above
        sols.append(x)
    if any(c >= ncols for c in pivset):
        return None
    return sols


def nullspace(rows, ring, ncols=None):
    """Basis of the right kernel of a list-of-lists matrix over a field.

    Deterministic: the standard free-variable basis of the RREF, one vector
    per non-pivot column in column order.
    """
    if not rows:
        n = ncols or 0
        return [[ring.one if i == j else ring.zero for i in range(n)] for j in range(n)]
    n = len(rows[0])
    red, pivots = rref(rows, ring)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [ring.zero] * n
        v[f] = ring.one
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(v)
    return basis


# ---------------------------------------------------------------------------
# elementary conjugations


@dataclass(frozen=True)
class Transvection:
    """Conjugation by I + t*E[i][j] (i != j), zero-indexed."""

    i: int
    j: int
    t: object


@dataclass(frozen=True)
class PermutationConj:
    """Conjugation by the permutation matrix sending position k to perm[k]."""

    perm: tuple


@dataclass(frozen=True)
class DiagonalConj:
    """Conjugation by diag(units); every entry must be a unit."""

    units: tuple


ElementaryConj = Union[Transvection, PermutationConj, DiagonalConj]


def _validate_conj(e: ElementaryConj, ring: Ring, n: int):
    if isinstance(e, Transvection):
        if not (0 <= e.i < n and 0 <= e.j < n) or e.i == e.j:
            raise ParameterNotInRing(f"bad transvection indices ({e.i}, {e.j})")
        if not ring.is_element(e.t):
            raise ParameterNotInRing(f"{e.t!r} is not in {ring}")
    elif isinstance(e, PermutationConj):
        if sorted(e.perm) != list(range(n)):
            raise ParameterNotInRing(f"{e.perm} is not a permutation of 0..{n - 1}")
    elif isinstance(e, DiagonalConj):
        if len(e.units) != n:
            raise ParameterNotInRing("diagonal length mismatch")
        for u in e.units:
            if not ring.is_element(u) or not ring.is_unit(u):
                raise ParameterNotInRing(f"{u!r} is not a unit of {ring}")
    else:
        raise TypeError(f"not an elementary conjugation: {e!r}")


def conj_matrix(e: ElementaryConj, ring: Ring, n: int) -> Matrix:
    _validate_conj(e, ring, n)
    if isinstance(e, Transvection):
        rows = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
        rows[e.i][e.j] = ring.make(e.t)
        return Matrix(ring, rows)
    if isinstance(e, PermutationConj):
        rows = [[ring.zero] * n for _ in range(n)]
        for k in range(n):
            rows[e.perm[k]][k] = ring.one
        return Matrix(ring, rows)
    return Matrix.diagonal(ring, e.units)


def conj_matrix_inv(e: ElementaryConj, ring: Ring, n: int) -> Matrix:
    _validate_conj(e, ring, n)
    if isinstance(e, Transvection):
        return conj_matrix(Transvection(e.i, e.j, -ring.make(e.t)), ring, n)
    if isinstance(e, PermutationConj):
        inv = [0] * n
        for k in range(n):
            inv[e.perm[k]] = k
        return conj_matrix(PermutationConj(tuple(inv)), ring, n)
    return Matrix.diagonal(ring, [ring.inv(u) for u in e.units])


def apply_conj(A: Matrix, e: ElementaryConj) -> Matrix:
    """Return E*A*E^{-1} for the elementary matrix E described by e."""
    ring, n = A.ring, A.n
    _validate_conj(e, ring, n)
    if isinstance(e, Transvection):
        t = ring.make(e.t)
        m = [list(r) for r in A.rows]
        # row i += t * row j, then col j -= t * col i (of the updated rows)
        m[e.i] = [a + t * b for a, b in zip(m[e.i], m[e.j])]
        for r in m:
            r[e.j] = r[e.j] - t * r[e.i]
        return Matrix(ring, m)
    if isinstance(e, PermutationConj):
        m = [[ring.zero] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                m[e.perm[i]][e.perm[j]] = A.rows[i][j]
        return Matrix(ring, m)
    units = [ring.make(u) for u in e.units]
    invs = [ring.inv(u) for u in units]
    return Matrix(
        ring,
        [[units[i] * A.rows[i][j] * invs[j] for j in range(n)] for i in range(n)],
    )


# ---------------------------------------------------------------------------
# similarity certificates


@dataclass(frozen=True)
class SimilarityCertificate:
    """Explicit witness that g * A * g^{-1} = b with g invertible over conj_ring.

    ``b`` is stored over entry_ring; g and g_inv over conj_ring.  ``steps``
    optionally records the elementary conjugations whose product is g.
    """

    g: Matrix
    g_inv: Matrix
    b: Matrix
    conj_ring: Ring
    entry_ring: Ring
    steps: Optional[tuple] = None
    verified: bool = False


def verify_certificate(A: Matrix, cert: SimilarityCertificate) -> bool:
    """Re-derive every claim of the certificate; never raises."""
    try:
        g, g_inv, b = cert.g, cert.g_inv, cert.b
        n = A.n
        if not (g.n == g_inv.n == b.n == n):
            return False
        if g.ring != cert.conj_ring or g_inv.ring != cert.conj_ring:
            return False
        if b.ring != cert.entry_ring:
            return False
        if g * g_inv != Matrix.identity(cert.conj_ring, n):
            return False
        d = det(g)
        if not cert.conj_ring.is_unit(d):
            return False
        if not can_coerce(A.ring, cert.conj_ring) or not can_coerce(b.ring, cert.conj_ring):
            return False
        lifted = A.to_ring(cert.conj_ring)
        if g * lifted * g_inv != b.to_ring(cert.conj_ring):
            return False
        return True
    except Exception:
        return False


def certified(A: Matrix, cert: SimilarityCertificate) -> SimilarityCertificate:
    """Verify and stamp a certificate, raising InternalDefect on failure."""
    c = SimilarityCertificate(
        cert.g, cert.g_inv, cert.b, cert.conj_ring, cert.entry_ring, cert.steps, True
    )
    if not verify_certificate(A, c):
        raise InternalDefect("constructed certificate failed verification")
    return c
