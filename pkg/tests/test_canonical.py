import random
from fractions import Fraction

import pytest

from diagcert.canonical import (
    charpoly,
    companion_matrix,
    eval_poly_at_matrix,
    frobenius_form,
    invariant_factors,
    minpoly,
    monic_divisor_integrality,
)
from diagcert.matrices import Matrix, det, solve_field, verify_certificate
from diagcert.polynomials import Poly, divides, poly_divmod
from diagcert.rings import ALPHA, BETA, CubicNumber, QBETA, QQ, Z_ALPHA, Z_IN_Q, ZZ, prime_field


def _brewer():
    return Matrix(
        QBETA,
        [[0, 2, ALPHA], [CubicNumber(0, 4, 0), 0, 4], [4, ALPHA, 0]],
    )


def _rand_z(rng, n, span=6):
    return Matrix(ZZ, [[rng.randint(-span, span) for _ in range(n)] for _ in range(n)])


# --- charpoly --------------------------------------------------------------


def test_charpoly_examples():
    assert charpoly(Matrix.identity(ZZ, 2)) == Poly(ZZ, (1, -2, 1))  # (x-1)^2
    f = Poly(ZZ, (7, -3, 0, 1))
    assert charpoly(companion_matrix(f)) == f
    chi = charpoly(_brewer())
    assert chi == Poly(QBETA, [-64, -12 * ALPHA, 0, 1])


def test_charpoly_brewer_symmetric_functions():
    # principal-minor oracle: trace 0, e2 = -12*alpha, det 64
    A = _brewer()
    assert A.trace() == CubicNumber(0)
    e2 = QBETA.zero
    for i in range(3):
        for j in range(i + 1, 3):
            e2 = e2 + A.entry(i, i) * A.entry(j, j) - A.entry(i, j) * A.entry(j, i)
    assert e2 == -12 * ALPHA
    assert det(A) == CubicNumber(64)


def test_charpoly_matches_det_at_points():
    # independent oracle: chi(t) = det(t*I - A) at several integers
    rng = random.Random(41)
    for _ in range(60):
        n = rng.randint(1, 5)
        A = _rand_z(rng, n)
        chi = charpoly(A)
        assert chi.degree == n and chi.is_monic()
        for t in range(-3, 4):
            M = Matrix.identity(ZZ, n).scale(t) - A
            assert chi(t) == det(M)


def test_cayley_hamilton_sampled():
    rng = random.Random(42)
    zero_cache = {}
    for _ in range(400):
        n = rng.randint(1, 6)
        A = _rand_z(rng, n, span=5)
        chi = charpoly(A)
        z = zero_cache.setdefault(n, Matrix(ZZ, [[0] * n for _ in range(n)]))
        assert eval_poly_at_matrix(chi, A) == z
    F7 = prime_field(7)
    for _ in range(100):
        n = rng.randint(1, 5)
        A = Matrix(F7, [[rng.randint(0, 6) for _ in range(n)] for _ in range(n)])
        chi = charpoly(A)
        z = Matrix(F7, [[0] * n for _ in range(n)])
        assert eval_poly_at_matrix(chi, A) == z


# --- minpoly ---------------------------------------------------------------


def test_minpoly_examples():
    assert minpoly(Matrix.identity(QQ, 3).scale(Fraction(5))) == Poly(QQ, (-5, 1))
    assert minpoly(Matrix(QQ, [[0, 1], [1, 0]])) == Poly(QQ, (-1, 0, 1))
    m = minpoly(_brewer())
    assert m == Poly(QBETA, [-16 * BETA, -2 * BETA * BETA, 1])
    # equivalently x^2 - (alpha^2/2) x - 8 alpha
    assert m.coeffs[1] == -(ALPHA * ALPHA) / 2
    assert m.coeffs[0] == -8 * ALPHA


def test_minpoly_divides_charpoly_and_annihilates():
    rng = random.Random(43)
    for _ in range(150):
        n = rng.randint(1, 5)
        A = _rand_z(rng, n).to_ring(QQ)
        m = minpoly(A)
        chi = charpoly(A)
        assert divides(m, chi)
        z = Matrix(QQ, [[0] * n for _ in range(n)])
        assert eval_poly_at_matrix(m, A) == z


def test_minpoly_minimality_by_linear_algebra():
    # no monic annihilator of one degree less exists: solve for coefficients
    rng = random.Random(44)
    checked = 0
    while checked < 60:
        n = rng.randint(2, 4)
        A = _rand_z(rng, n).to_ring(QQ)
        m = minpoly(A)
        d = m.degree
        if d == 0:
            continue
        checked += 1
        powers = [Matrix.identity(QQ, n)]
        for _ in range(d):
            powers.append(powers[-1] * A)
        # A^(d-1) + sum_{k<d-1} c_k A^k = 0 must be unsolvable
        rows = []
        rhs = []
        for i in range(n):
            for j in range(n):
                rows.append([powers[k].entry(i, j) for k in range(d - 1)])
                rhs.append(-powers[d - 1].entry(i, j))
        assert solve_field(rows, [rhs], QQ) is None


# --- invariant factors -----------------------------------------------------


def test_invariant_factors_examples():
    assert invariant_factors(Matrix.identity(QQ, 2)) == (
        Poly(QQ, (-1, 1)),
        Poly(QQ, (-1, 1)),
    )
    assert invariant_factors(Matrix(QQ, [[0, 1], [1, 0]])) == (Poly(QQ, (-1, 0, 1)),)
    assert invariant_factors(Matrix.diagonal(QQ, [1, 2])) == (Poly(QQ, (2, -3, 1)),)


def test_invariant_factors_product_is_charpoly():
    rng = random.Random(45)
    for _ in range(80):
        n = rng.randint(1, 5)
        A = _rand_z(rng, n).to_ring(QQ)
        factors = invariant_factors(A)
        prod = Poly.one(QQ)
        for f in factors:
            prod = prod * f
        assert prod == charpoly(A)
        for f, g in zip(factors, factors[1:]):
            assert divides(f, g)
        assert factors[-1] == minpoly(A)


def test_integer_matrices_have_integer_invariant_factors():
    # integrality of monic factors over Z, asserted on random instances
    rng = random.Random(46)
    for _ in range(120):
        n = rng.randint(1, 5)
        A = _rand_z(rng, n).to_ring(QQ)
        for f in invariant_factors(A):
            assert monic_divisor_integrality(f, Z_IN_Q)


# --- Frobenius form --------------------------------------------------------


def test_frobenius_examples():
    C = companion_matrix(Poly(QQ, (-1, 0, 0, 1)))  # x^3 - 1
    F = frobenius_form(C)
    assert F.rcf == C
    assert F.transform.g == Matrix.identity(QQ, 3)
    F2 = frobenius_form(Matrix(QQ, [[1, 2], [4, 3]]))
    assert F2.blocks == (Poly(QQ, (-5, -4, 1)),)
    assert F2.rcf == Matrix(QQ, [[0, 5], [1, 4]])
    F3 = frobenius_form(Matrix.identity(QQ, 2))
    assert F3.rcf == Matrix.identity(QQ, 2)
    assert F3.blocks == (Poly(QQ, (-1, 1)), Poly(QQ, (-1, 1)))


def test_frobenius_cross_oracle_and_certificates():
    rng = random.Random(47)
    for _ in range(120):
        n = rng.randint(1, 5)
        A = _rand_z(rng, n, span=4).to_ring(QQ)
        F = frobenius_form(A)
        assert F.blocks == invariant_factors(A)
        assert verify_certificate(A, F.transform)
        assert F.transform.g * A * F.transform.g_inv == F.rcf
        degs = sum(f.degree for f in F.blocks)
        assert degs == n


def test_frobenius_over_prime_field():
    rng = random.Random(48)
    F5 = prime_field(5)
    for _ in range(40):
        n = rng.randint(1, 4)
        A = Matrix(F5, [[rng.randint(0, 4) for _ in range(n)] for _ in range(n)])
        F = frobenius_form(A)
        assert F.blocks == invariant_factors(A)
        assert verify_certificate(A, F.transform)


def test_frobenius_over_cubic_field():
    A = _brewer()
    F = frobenius_form(A)
    assert F.blocks == invariant_factors(A)
    assert verify_certificate(A, F.transform)
    # derogatory: two blocks, the larger being the quadratic minimal polynomial
    assert len(F.blocks) == 2
    assert F.blocks[1] == minpoly(A)


def test_companion_matrix_guards():
    with pytest.raises(ValueError):
        companion_matrix(Poly(QQ, (2, 2)))
    with pytest.raises(ValueError):
        companion_matrix(Poly(QQ, (1,)))


# --- integrality of monic divisors ------------------------------------------


def test_monic_divisor_integrality_examples():
    assert monic_divisor_integrality(Poly(QQ, (-5, 1)), Z_IN_Q)
    m = Poly(QBETA, [-16 * BETA, -2 * BETA * BETA, 1])
    assert not monic_divisor_integrality(m, Z_ALPHA)
    chi = Poly(QBETA, [-64, -12 * ALPHA, 0, 1])
    assert monic_divisor_integrality(chi, Z_ALPHA)
    with pytest.raises(ValueError):
        monic_divisor_integrality(Poly(QQ, (1, 2)), Z_IN_Q)
