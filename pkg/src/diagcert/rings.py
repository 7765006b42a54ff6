"""Exact coefficient domains.

Scalars are plain Python values: ``int`` for Z, ``fractions.Fraction`` for Q,
:class:`PrimeFieldElement` for F_p and :class:`CubicNumber` for the cubic
field Q(beta) with beta**3 = 2.  Ring objects (``ZZ``, ``QQ``,
``prime_field(p)``, ``QBETA``) tag matrices and provide the few operations
that are not expressible through operator overloading (unit tests, inverses,
coercion from integers).

The order Z[alpha] with alpha = 2*beta (so alpha**3 = 16) is represented by a
membership predicate: in beta-coordinates (a, b, c) an element lies in
Z[alpha] iff a is an integer, b an even integer and c an integer divisible
by 4, because Z[alpha] = Z*1 + Z*(2*beta) + Z*(4*beta**2).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import NonCoprimeModuli, NotInvertibleInRing

#: Trial-division bound for certifying prime moduli; desk-scale only.
PRIMALITY_TRIAL_BOUND = 10**6


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and g = a*x + b*y."""
    if a == 0 and b == 0:
        return 0, 0, 0
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def crt(residues) -> int:
    """Solve x = r_i (mod m_i) for pairwise coprime m_i >= 1.

    Returns the unique solution in [0, prod m_i).  Raises NonCoprimeModuli
    if some modulus is < 1 or two moduli share a factor.
    """
    x, m = 0, 1
    for r, mi in residues:
        if mi < 1:
            raise NonCoprimeModuli(f"modulus {mi} < 1")
        g, s, _ = ext_gcd(m, mi)
        if g != 1:
            raise NonCoprimeModuli(f"moduli share the factor {g}")
        # s inverts m mod mi, so x + m*s*(r - x) solves both congruences
        x = (x + m * s * (r - x)) % (m * mi)
        m *= mi
    return x


def is_certified_prime(p: int) -> bool:
    """Trial-division primality with an explicit desk-scale bound."""
    if p < 2:
        return False
    if p in (2, 3):
        return True
    if p % 2 == 0:
        return False
    r = math.isqrt(p)
    if r > PRIMALITY_TRIAL_BOUND:
        raise ValueError(
            f"modulus {p} too large to certify prime by trial division "
            f"(divisor bound {PRIMALITY_TRIAL_BOUND})"
        )
    f = 3
    while f <= r:
        if p % f == 0:
            return False
        f += 2
    return True


class PrimeFieldElement:
    """A residue in F_p.  Arithmetic stays reduced into [0, p)."""

    __slots__ = ("r", "p")

    def __init__(self, r: int, p: int):
        self.r = r % p
        self.p = p

    def _lift(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise ValueError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.p)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.r + o.r, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.r - o.r, self.p)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(o.r - self.r, self.p)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return PrimeFieldElement(self.r * o.r, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.r, self.p)

    def inverse(self) -> "PrimeFieldElement":
        if self.r == 0:
            raise ZeroDivisionError(f"0 has no inverse in F_{self.p}")
        return PrimeFieldElement(pow(self.r, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return PrimeFieldElement(pow(self.r, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, int):
            return self.r == other % self.p
        return (
            isinstance(other, PrimeFieldElement)
            and self.p == other.p
            and self.r == other.r
        )

    def __hash__(self):
        return hash((self.r, self.p))

    def __bool__(self):
        return self.r != 0

    def __repr__(self):
        return f"{self.r}:F{self.p}"


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int) and not isinstance(x, bool):
        return Fraction(x)
    raise TypeError(f"expected a rational value, got {x!r}")


class CubicNumber:
    """Element a + b*beta + c*beta**2 of Q(beta), where beta**3 = 2.

    The generator of the order Z[alpha] is alpha = 2*beta (alpha**3 = 16).
    """

    __slots__ = ("a", "b", "c")

    def __init__(self, a=0, b=0, c=0):
        object.__setattr__(self, "a", _as_fraction(a))
        object.__setattr__(self, "b", _as_fraction(b))
        object.__setattr__(self, "c", _as_fraction(c))

    def __setattr__(self, *_):
        raise AttributeError("CubicNumber is immutable")

    @classmethod
    def from_alpha_coords(cls, a, b, c) -> "CubicNumber":
        """Build a + b*alpha + c*alpha**2 (alpha = 2*beta)."""
        a, b, c = _as_fraction(a), _as_fraction(b), _as_fraction(c)
        return cls(a, 2 * b, 4 * c)

    @staticmethod
    def _lift(x):
        if isinstance(x, CubicNumber):
            return x
        if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
            return CubicNumber(x)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CubicNumber(self.a + o.a, self.b + o.b, self.c + o.c)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return CubicNumber(self.a - o.a, self.b - o.b, self.c - o.c)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CubicNumber(-self.a, -self.b, -self.c)

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        a, b, c = self.a, self.b, self.c
        d, e, f = o.a, o.b, o.c
        # beta**3 = 2 folds the degree-3 and degree-4 terms back down
        return CubicNumber(
            a * d + 2 * (b * f + c * e),
            a * e + b * d + 2 * c * f,
            a * f + c * d + b * e,
        )

    __rmul__ = __mul__

    def inverse(self) -> "CubicNumber":
        """Solve the 3x3 regular-representation system for 1/x (Cramer)."""
        a, b, c = self.a, self.b, self.c
        n = a * a * a + 2 * b * b * b + 4 * c * c * c - 6 * a * b * c
        if n == 0:
            raise ZeroDivisionError("0 has no inverse in Q(beta)")
        return CubicNumber(
            (a * a - 2 * b * c) / n,
            (2 * c * c - a * b) / n,
            (b * b - a * c) / n,
        )

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        out, base = CubicNumber(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return (self.a, self.b, self.c) == (o.a, o.b, o.c)

    def __hash__(self):
        return hash((self.a, self.b, self.c))

    def __bool__(self):
        return bool(self.a or self.b or self.c)

    def is_rational(self) -> bool:
        return self.b == 0 and self.c == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational")
        return self.a

    def __repr__(self):
        return f"({self.a} + {self.b}b + {self.c}b2)"


BETA = CubicNumber(0, 1, 0)
ALPHA = CubicNumber(0, 2, 0)


def in_z_alpha(x: CubicNumber) -> bool:
    """Membership in the order Z[alpha] = Z + 2*beta*Z + 4*beta**2*Z."""
    a, b, c = x.a, x.b, x.c
    return (
        a.denominator == 1
        and b.denominator == 1
        and b.numerator % 2 == 0
        and c.denominator == 1
        and c.numerator % 4 == 0
    )


class IntegerSubring:
    """Z viewed inside Q: membership test for rational values."""

    tag = "Z"

    @staticmethod
    def contains(x) -> bool:
        return _as_fraction(x).denominator == 1


class ZAlphaSubring:
    """Z[alpha] viewed inside Q(beta)."""

    tag = "Z[alpha]"

    @staticmethod
    def contains(x) -> bool:
        return in_z_alpha(x)


Z_IN_Q = IntegerSubring()
Z_ALPHA = ZAlphaSubring()


class Ring:
    """Tag object for a coefficient domain; subclasses are singletons."""

    tag: str
    is_field: bool

    def __repr__(self):
        return self.tag

    def __eq__(self, other):
        return type(self) is type(other)

    def __hash__(self):
        return hash(type(self))


class IntegerRing(Ring):
    tag = "Z"
    is_field = False
    zero = 0
    one = 1

    def make(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            if isinstance(x, Fraction) and x.denominator == 1:
                return x.numerator
            raise TypeError(f"{x!r} is not an integer")
        return x

    def from_int(self, k: int):
        return k

    def is_element(self, x) -> bool:
        return isinstance(x, int) and not isinstance(x, bool)

    def is_unit(self, x) -> bool:
        return x in (1, -1)

    def inv(self, x):
        if not self.is_unit(x):
            raise NotInvertibleInRing(f"{x} is not a unit of Z")
        return x


class RationalField(Ring):
    tag = "Q"
    is_field = True
    zero = Fraction(0)
    one = Fraction(1)

    def make(self, x):
        return _as_fraction(x)

    def from_int(self, k: int):
        return Fraction(k)

    def is_element(self, x) -> bool:
        return isinstance(x, (int, Fraction)) and not isinstance(x, bool)

    def is_unit(self, x) -> bool:
        return x != 0

    def inv(self, x):
        x = _as_fraction(x)
        if x == 0:
            raise NotInvertibleInRing("0 is not a unit of Q")
        return 1 / x


class PrimeField(Ring):
    tag = "Fp"
    is_field = True

    def __init__(self, p: int):
        if not is_certified_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = PrimeFieldElement(0, p)
        self.one = PrimeFieldElement(1, p)

    def make(self, x):
        if isinstance(x, PrimeFieldElement):
            if x.p != self.p:
                raise TypeError(f"residue mod {x.p} used in F_{self.p}")
            return x
        if isinstance(x, int) and not isinstance(x, bool):
            return PrimeFieldElement(x, self.p)
        raise TypeError(f"{x!r} is not an element of F_{self.p}")

    def from_int(self, k: int):
        return PrimeFieldElement(k, self.p)

    def is_element(self, x) -> bool:
        return isinstance(x, PrimeFieldElement) and x.p == self.p

    def is_unit(self, x) -> bool:
        return self.make(x).r != 0

    def inv(self, x):
        x = self.make(x)
        if x.r == 0:
            raise NotInvertibleInRing(f"0 is not a unit of F_{self.p}")
        return x.inverse()

    def __repr__(self):
        return f"F{self.p}"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))


@lru_cache(maxsize=None)
def prime_field(p: int) -> PrimeField:
    return PrimeField(p)


class CubicField(Ring):
    tag = "Qbeta"
    is_field = True
    zero = CubicNumber(0)
    one = CubicNumber(1)

    def make(self, x):
        v = CubicNumber._lift(x)
        if v is None:
            raise TypeError(f"{x!r} is not an element of Q(beta)")
        return v

    def from_int(self, k: int):
        return CubicNumber(k)

    def is_element(self, x) -> bool:
        return isinstance(x, (CubicNumber, int, Fraction)) and not isinstance(x, bool)

    def is_unit(self, x) -> bool:
        return bool(self.make(x))

    def inv(self, x):
        x = self.make(x)
        if not x:
            raise NotInvertibleInRing("0 is not a unit of Q(beta)")
        return x.inverse()


ZZ = IntegerRing()
QQ = RationalField()
QBETA = CubicField()


def can_coerce(src: Ring, dst: Ring) -> bool:
    """Whether scalars of src embed canonically into dst."""
    if src == dst:
        return True
    if src == ZZ:
        return dst in (QQ, QBETA) or isinstance(dst, PrimeField)
    if src == QQ:
        return dst == QBETA
    return False


def coerce_scalar(x, src: Ring, dst: Ring):
    """Map a scalar along the canonical embedding src -> dst.

    Z -> Q, Z -> Q(beta), Q -> Q(beta) and Z -> F_p (reduction) are the
    embeddings; the checked retractions Q -> Z and Q(beta) -> Q/Z are also
    supported and raise ValueError when the value falls outside.
    """
    if src == dst:
        return dst.make(x)
    if src == ZZ:
        if dst == QQ:
            return Fraction(x)
        if dst == QBETA:
            return CubicNumber(x)
        if isinstance(dst, PrimeField):
            return PrimeFieldElement(x, dst.p)
    if src == QQ:
        if dst == QBETA:
            return CubicNumber(x)
        if dst == ZZ:
            x = _as_fraction(x)
            if x.denominator != 1:
                raise ValueError(f"{x} is not an integer")
            return x.numerator
    if src == QBETA:
        if dst in (QQ, ZZ):
            q = QBETA.make(x).as_fraction()
            return q if dst == QQ else coerce_scalar(q, QQ, ZZ)
    raise ValueError(f"no coercion from {src} to {dst}")


RING_TAGS = {"Z": ZZ, "Q": QQ, "Qbeta": QBETA}


def ring_from_tag(tag: str, p: int | None = None) -> Ring:
    if tag == "Fp":
        if p is None:
            raise ValueError("prime field tag requires p")
        return prime_field(p)
    try:
        return RING_TAGS[tag]
    except KeyError:
        raise ValueError(f"unknown ring tag {tag!r}") from None
