import random
from fractions import Fraction

import pytest

from diagcert.polynomials import (
    Poly,
    PolyMatrix,
    divides,
    poly_divmod,
    poly_gcd,
    poly_lcm,
)
from diagcert.rings import BETA, QBETA, QQ, ZZ, prime_field


def _q(*coeffs):
    return Poly(QQ, coeffs)


def test_divmod_examples():
    q, r = poly_divmod(_q(-1, 0, 1), _q(-1, 1))   # (x^2 - 1) / (x - 1)
    assert q == _q(1, 1) and r.is_zero()
    q, r = poly_divmod(_q(0, 0, 0, 1), _q(0, 1))  # x^3 / x
    assert q == _q(0, 0, 1) and r.is_zero()
    q, r = poly_divmod(_q(1, 0, 1), _q(1, 1))     # (x^2 + 1) / (x + 1)
    assert q == _q(-1, 1) and r == _q(2)


def test_divmod_errors():
    with pytest.raises(ZeroDivisionError):
        poly_divmod(_q(1), _q())
    with pytest.raises(ValueError):
        poly_divmod(Poly(ZZ, (1, 1)), Poly(ZZ, (1,)))


def _random_poly(rng, ring, max_deg, make):
    return Poly(ring, [make(rng) for _ in range(rng.randint(0, max_deg + 1))])


def test_divmod_reconstruction_random():
    rng = random.Random(10)
    cases = [
        (QQ, lambda r: Fraction(r.randint(-5, 5), r.randint(1, 3))),
        (prime_field(2), lambda r: r.randint(0, 1)),
        (prime_field(5), lambda r: r.randint(0, 4)),
        (QBETA, lambda r: BETA * r.randint(-2, 2) + r.randint(-2, 2)),
    ]
    for ring, make in cases:
        for _ in range(150):
            f = _random_poly(rng, ring, 5, make)
            g = _random_poly(rng, ring, 3, make)
            if g.is_zero():
                continue
            q, r = poly_divmod(f, g)
            assert q * g + r == f
            assert r.degree < g.degree


def test_gcd_lcm_properties():
    rng = random.Random(11)
    for _ in range(150):
        f = _random_poly(rng, QQ, 4, lambda r: Fraction(r.randint(-4, 4)))
        g = _random_poly(rng, QQ, 4, lambda r: Fraction(r.randint(-4, 4)))
        d = poly_gcd(f, g)
        if f.is_zero() and g.is_zero():
            assert d.is_zero()
            continue
        assert d.is_monic()
        assert divides(d, f) and divides(d, g)
        if not (f.is_zero() or g.is_zero()):
            m = poly_lcm(f, g)
            assert m.is_monic()
            assert divides(f, m) and divides(g, m)


def test_gcd_common_factor():
    common = _q(1, 1)          # x + 1
    f = common * _q(-2, 1)     # (x+1)(x-2)
    g = common * _q(3, 1)      # (x+1)(x+3)
    assert poly_gcd(f, g) == common


def test_eval_and_normalization():
    f = _q(Fraction(1, 2), 0, 1)
    assert f(2) == Fraction(9, 2)
    assert Poly(QQ, (1, 2, 0, 0)).degree == 1
    assert Poly(QQ, ()).is_zero()
    g = _q(2, 4)
    assert g.monic() == _q(Fraction(1, 2), 1)
    with pytest.raises(ValueError):
        Poly(ZZ, (1, 2)).monic()


def test_monic_over_f2():
    F2 = prime_field(2)
    f = Poly(F2, (1, 1, 1))
    assert f.is_monic()
    q, r = poly_divmod(f, Poly(F2, (1, 1)))
    assert q * Poly(F2, (1, 1)) + r == f


def test_poly_matrix_multiplication():
    x = Poly.x(QQ)
    one = Poly.one(QQ)
    A = PolyMatrix(QQ, [[x, one], [Poly(QQ), x]])
    I = PolyMatrix.identity(QQ, 2)
    assert A * I == A
    sq = A * A
    assert sq.entry(0, 0) == x * x
    assert sq.entry(0, 1) == x + x
