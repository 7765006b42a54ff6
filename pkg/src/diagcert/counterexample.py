"""Mechanical impossibility check over the non-integrally-closed order.

The lab builds the classical 3x3 matrix over Q(beta) whose minimal
polynomial has a coefficient outside Z[alpha], and turns the diagonal
equations of m(B) = 0 into forced values for the three off-diagonal entry
products of any candidate B with a prescribed diagonal.  A forced product
outside Z[alpha] proves no such B over Z[alpha] exists.
"""

from __future__ import annotations

from dataclasses import dataclass

from .canonical import charpoly, eval_poly_at_matrix, minpoly, monic_divisor_integrality
from .errors import InternalDefect, MinpolyDegreeNotTwo, TargetTraceMismatch
from .matrices import Matrix
from .polynomials import Poly
from .rings import ALPHA, BETA, CubicNumber, QBETA, Z_ALPHA, in_z_alpha


def brewer_matrix() -> Matrix:
    """The 3x3 matrix (0 2 a; 2a 0 4; 4 a 0) over Q(beta), a = alpha = 2*beta.

    Every entry lies in Z[alpha]; its minimal polynomial over Q(beta) does
    not have all coefficients in Z[alpha].
    """
    two_beta = ALPHA
    four_beta = CubicNumber(0, 4, 0)
    return Matrix(
        QBETA,
        [
            [CubicNumber(0), CubicNumber(2), two_beta],
            [four_beta, CubicNumber(0), CubicNumber(4)],
            [CubicNumber(4), two_beta, CubicNumber(0)],
        ],
    )


@dataclass(frozen=True)
class ObstructionReport:
    """Outcome of the forced-product test for one target diagonal."""

    minimal_poly: Poly
    integrality_failures: tuple  # (coefficient, membership verdict) pairs
    forced_products: tuple       # (name, value, membership verdict) triples
    verdict: str                 # "obstructed" | "inconclusive"


def forced_products_obstruction(A: Matrix, target) -> ObstructionReport:
    """For a 3x3 matrix with quadratic minimal polynomial m = x^2 + p*x + q,
    any B with m(B) = 0 and diagonal (g1, g2, g3) forces its off-diagonal
    products P_ij = B_ij * B_ji through the linear system

        P12 + P13 = r1,  P12 + P23 = r2,  P13 + P23 = r3,

    with r_i = -(g_i^2 + p*g_i + q).  The system is uniquely solvable
    (determinant -2) and each forced product is tested against Z[alpha]."""
    if A.ring != QBETA or A.n != 3:
        raise ValueError("expects a 3x3 matrix over Q(beta)")
    m = minpoly(A)
    if m.degree != 2:
        raise MinpolyDegreeNotTwo(f"minimal polynomial has degree {m.degree}")
    gamma = [QBETA.make(t) for t in target]
    if len(gamma) != 3:
        raise TargetTraceMismatch("target must have three entries")
    s = gamma[0] + gamma[1] + gamma[2]
    if s != A.trace():
        raise TargetTraceMismatch(f"target sum {s} differs from the trace {A.trace()}")
    q, p = m.coeffs[0], m.coeffs[1]
    r = [-(g * g + p * g + q) for g in gamma]
    half = CubicNumber(1) / 2
    p12 = (r[0] + r[1] - r[2]) * half
    p13 = (r[0] - r[1] + r[2]) * half
    p23 = (-r[0] + r[1] + r[2]) * half
    forced = tuple(
        (name, value, in_z_alpha(value))
        for name, value in (("P12", p12), ("P13", p13), ("P23", p23))
    )
    memberships = tuple((c, in_z_alpha(c)) for c in m.coeffs[:-1])
    verdict = "obstructed" if any(not ok for _, _, ok in forced) else "inconclusive"
    return ObstructionReport(
        minimal_poly=m,
        integrality_failures=memberships,
        forced_products=forced,
        verdict=verdict,
    )


@dataclass(frozen=True)
class CounterexampleReport:
    """Full lab run: minimal polynomial, the coefficient outside Z[alpha],
    the all-integral characteristic polynomial for contrast, and the forced
    products for the target (1, -1, 0)."""

    matrix: Matrix
    minimal_poly: Poly
    minpoly_memberships: tuple
    char_poly: Poly
    charpoly_integral: bool
    obstruction: ObstructionReport
    linear_coeff_halved_variant_annihilates: bool
    notes: str


def verify_counterexample() -> CounterexampleReport:
    """Run the whole obstruction pipeline and assert every expected fact.

    Assertion failures raise InternalDefect: this operation is a mechanical
    re-derivation, not a search.
    """
    A = brewer_matrix()
    m = minpoly(A)
    expected_m = Poly(QBETA, [-16 * BETA, -2 * BETA * BETA, 1])
    if m != expected_m:
        raise InternalDefect(f"minimal polynomial came out as {m}")
    if not eval_poly_at_matrix(m, A) == Matrix(QBETA, [[0] * 3] * 3):
        raise InternalDefect("minimal polynomial does not annihilate the matrix")
    memberships = tuple((c, in_z_alpha(c)) for c in m.coeffs[:-1])
    if in_z_alpha(m.coeffs[1]):
        raise InternalDefect("the linear coefficient should fall outside Z[alpha]")
    if not in_z_alpha(m.coeffs[0]):
        raise InternalDefect("the constant coefficient should lie in Z[alpha]")
    chi = charpoly(A)
    expected_chi = Poly(QBETA, [-64, -12 * ALPHA, 0, 1])
    if chi != expected_chi:
        raise InternalDefect(f"characteristic polynomial came out as {chi}")
    chi_integral = monic_divisor_integrality(chi, Z_ALPHA)
    if not chi_integral:
        raise InternalDefect("characteristic polynomial must be Z[alpha]-integral")
    report = forced_products_obstruction(A, (1, -1, 0))
    if report.verdict != "obstructed":
        raise InternalDefect("target (1, -1, 0) must be obstructed")
    expected = {
        "P13": CubicNumber(0, 8, 2),
        "P23": CubicNumber(0, 8, -2),
    }
    for name, value, ok in report.forced_products:
        if name in expected and (value != expected[name] or ok):
            raise InternalDefect(f"forced product {name} came out as {value}")
    # the halved-linear-coefficient variant x^2 - beta*x - 16*beta (i.e. with
    # -alpha/2 in place of -alpha^2/2) does not annihilate the matrix
    variant = Poly(QBETA, [-16 * BETA, -BETA, 1])
    variant_annihilates = eval_poly_at_matrix(variant, A) == Matrix(
        QBETA, [[0] * 3] * 3
    )
    if variant_annihilates:
        raise InternalDefect("the halved-coefficient variant should not annihilate")
    notes = (
        "Computed minimal polynomial: x^2 - 2b^2*x - 16b in beta-coordinates, "
        "i.e. x^2 - (alpha^2/2)*x - 8*alpha with alpha = 2*beta. The variant with "
        "linear coefficient -alpha/2 (= -beta) instead of -alpha^2/2 does NOT "
        "annihilate the matrix (checked exactly); the computed coefficient is "
        "-alpha^2/2. Either way the linear coefficient lies outside Z[alpha]. "
        "The constant -8*alpha and every characteristic-polynomial coefficient "
        "lie inside Z[alpha]: the failure is specific to the minimal polynomial."
    )
    return CounterexampleReport(
        matrix=A,
        minimal_poly=m,
        minpoly_memberships=memberships,
        char_poly=chi,
        charpoly_integral=chi_integral,
        obstruction=report,
        linear_coeff_halved_variant_annihilates=variant_annihilates,
        notes=notes,
    )
