"""Dense univariate polynomials over the toolkit's rings.

Coefficients are stored lowest degree first with the trailing zero stripped;
the zero polynomial has an empty coefficient tuple and degree -1.  Division,
gcd and lcm require field coefficients.
"""

from __future__ import annotations

from .errors import InternalDefect
from .rings import Ring


class Poly:
    __slots__ = ("ring", "coeffs")

    def __init__(self, ring: Ring, coeffs=()):
        cs = [ring.make(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls, ring: Ring) -> "Poly":
        return cls(ring, (ring.zero, ring.one))

    @classmethod
    def constant(cls, ring: Ring, c) -> "Poly":
        return cls(ring, (c,))

    @classmethod
    def one(cls, ring: Ring) -> "Poly":
        return cls(ring, (ring.one,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.ring.one

    def leading(self):
        if self.is_zero():
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.ring.zero

    def _check(self, other: "Poly"):
        if self.ring != other.ring:
            raise ValueError(f"mixed rings {self.ring} and {other.ring}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ring, [self.coeff(k) + other.coeff(k) for k in range(n)])

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self.ring, [self.coeff(k) - other.coeff(k) for k in range(n)])

    def __neg__(self):
        return Poly(self.ring, [-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.ring)
        out = [self.ring.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.ring, out)

    def scale(self, s) -> "Poly":
        s = self.ring.make(s)
        return Poly(self.ring, [c * s for c in self.coeffs])

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __call__(self, x):
        """Horner evaluation at a scalar of the coefficient ring."""
        x = self.ring.make(x)
        acc = self.ring.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def monic(self) -> "Poly":
        """Divide by the leading coefficient (field coefficients only)."""
        if self.is_zero():
            return self
        if self.is_monic():
            return self
        if not self.ring.is_field:
            raise ValueError(f"cannot normalize over {self.ring}")
        inv = self.ring.inv(self.leading())
        return self.scale(inv)

    def __repr__(self):
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(f"{c}")
            elif k == 1:
                terms.append(f"{c}*x")
            else:
                terms.append(f"{c}*x^{k}")
        return "Poly(" + " + ".join(terms) + ")"


def poly_divmod(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Return (q, r) with f = q*g + r and deg r < deg g, over a field."""
    f._check(g)
    if g.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if not f.ring.is_field:
        raise ValueError(f"division requires field coefficients, got {f.ring}")
    ring = f.ring
    r = list(f.coeffs)
    dg = g.degree
    lead_inv = ring.inv(g.leading())
    q = [ring.zero] * max(len(r) - dg, 0)
    for k in range(len(r) - dg - 1, -1, -1):
        c = r[k + dg] * lead_inv
        if not c:
            continue
        q[k] = c
        for i, gc in enumerate(g.coeffs):
            r[k + i] = r[k + i] - c * gc
    return Poly(ring, q), Poly(ring, r[:dg])


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over a field (zero if both arguments are zero)."""
    while not g.is_zero():
        f, g = g, poly_divmod(f, g)[1]
    return f.monic()


def poly_lcm(f: Poly, g: Poly) -> Poly:
    if f.is_zero() or g.is_zero():
        return Poly(f.ring)
    d = poly_gcd(f, g)
    q, r = poly_divmod(f * g, d)
    if not r.is_zero():
        raise InternalDefect("gcd does not divide the product")
    return q.monic()


def divides(f: Poly, g: Poly) -> bool:
    """Whether f divides g exactly (field coefficients)."""
    if f.is_zero():
        return g.is_zero()
    return poly_divmod(g, f)[1].is_zero()


class PolyMatrix:
    """Square matrix with polynomial entries, for normal forms over K[x]."""

    __slots__ = ("ring", "n", "rows")

    def __init__(self, ring: Ring, rows):
        rws = tuple(tuple(e if isinstance(e, Poly) else Poly.constant(ring, e) for e in row) for row in rows)
        n = len(rws)
        if any(len(r) != n for r in rws):
            raise ValueError("matrix must be square")
        for row in rws:
            for e in row:
                if e.ring != ring:
                    raise ValueError(f"entry ring {e.ring} does not match {ring}")
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rws)

    def __setattr__(self, *_):
        raise AttributeError("PolyMatrix is immutable")

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "PolyMatrix":
        one, zero = Poly.one(ring), Poly(ring)
        return cls(ring, [[one if i == j else zero for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> Poly:
        return self.rows[i][j]

    def __mul__(self, other):
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        if self.ring != other.ring or self.n != other.n:
            raise ValueError("incompatible matrices")
        n = self.n
        zero = Poly(self.ring)
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = zero
                for k in range(n):
                    if not self.rows[i][k].is_zero() and not other.rows[k][j].is_zero():
                        acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.ring, out)

    def __eq__(self, other):
        return (
            isinstance(other, PolyMatrix)
            and self.ring == other.ring
            and self.rows == other.rows
        )

    def __repr__(self):
        return f"PolyMatrix({self.n}x{self.n} over {self.ring}[x])"
