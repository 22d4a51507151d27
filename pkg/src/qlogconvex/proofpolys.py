"""The sign-analysis polynomials behind the Domb q-log-convexity proof.

For the Domb triangular array, L_t(a(n,k)) factors as a positive binomial
prefactor times psi(n,t)(k) divided by a known integer, so the crossing
behaviour of the operator reduces to sign analysis of the degree-8
polynomial psi.  Its derivative telescopes through three cofactors,

    psi'  = (2x - t)   * psi1,
    psi1' = 2 (2x - t) * psi2,
    psi2' = 6 (2x - t) * psi3,

and the k = 0 boundary is governed by a sextic theta with
psi(n,t)(0) = (n+1)^2 theta(t).  Two auxiliary polynomials in t collect the
x = 0 values of the first two cofactors: xi = psi1(0)/(n+1)^2 and
eta = psi2(0)/(n+1).

Every polynomial here is transcribed as an explicit coefficient expansion
and cross-validated three ways: the derivative cascade above, exact closed
forms at interval endpoints and midpoints, and the operator factorization
identity.  A transcription slip in any one table is caught by the others.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .polynomials import Poly


class IdentityError(Exception):
    """An exact polynomial identity failed (indicates a transcription bug)."""


def psi_poly(n: int, t: int) -> Poly:
    """The degree-8 sign polynomial, built from its defining product form.

    Accepts any integer pair; callers enforce contract ranges.  As a
    polynomial identity in (n, t, x) everything downstream holds for all
    integers, which is what the grid certifications exploit.
    """
    a = Poly([n, -1])          # n - x
    b = Poly([n + 1, -1])      # n - x + 1
    c = Poly([n - t, 1])       # n - t + x
    d = Poly([n - t + 1, 1])   # n - t + x + 1
    e_plus = Poly([2 * n - 2 * t + 1, 2])   # 2n - 2t + 2x + 1
    e_minus = Poly([2 * n - 2 * t - 1, 2])  # 2n - 2t + 2x - 1
    f_minus = Poly([2 * n - 1, -2])         # 2n - 2x - 1
    f_plus = Poly([2 * n + 1, -2])          # 2n - 2x + 1
    nsq1 = (n + 1) ** 2
    term1 = nsq1 * (a**3 * b**3 * e_plus * e_minus)
    term2 = nsq1 * (c**3 * d**3 * f_minus * f_plus)
    term3 = (-2 * n**2) * (b**3 * d**3 * f_minus * e_minus)
    return term1 + term2 + term3


def psi1_poly(n: int, t: int) -> Poly:
    """First derivative cofactor: psi' = (2x - t) * psi1."""
    c6 = 32 * (2 * n + 1)
    c5 = -96 * (2 * n + 1) * t
    c4 = 6 * (
        32 * n**4 - 8 * n**3 * (4 * t - 11) + 4 * n**2 * (2 * t - 7) * (t - 4)
        + 2 * n * (24 * t**2 - 26 * t + 29) + 24 * t**2 - 18 * t + 11
    )
    c3 = -4 * t * (
        96 * n**4 - 24 * n**3 * (4 * t - 11) + 12 * n**2 * (2 * t - 7) * (t - 4)
        + 2 * n * (32 * t**2 - 78 * t + 87) + 32 * t**2 - 54 * t + 33
    )
    c2 = -2 * (
        128 * n**6 - 16 * n**5 * (16 * t - 25) + 4 * n**4 * (12 * t**2 - 170 * t + 125)
        + 2 * n**3 * (2 * t - 1) * (20 * t**2 + 16 * t - 167)
        - n**2 * (28 * t**4 - 160 * t**3 + 159 * t**2 + 341 * t - 134)
        - 2 * n * (28 * t**4 - 82 * t**3 + 72 * t**2 + 38 * t - 17)
        - 28 * t**4 + 66 * t**3 - 36 * t**2 - 11 * t + 6
    )
    c1 = 2 * t * (n + 1) * (
        128 * n**5 - 16 * n**4 * (16 * t - 17) + 4 * n**3 * (36 * t**2 - 106 * t + 57)
        - 2 * n**2 * (8 * t**3 - 72 * t**2 + 138 * t - 53)
        - n * (4 * t**4 + 4 * t**3 - 33 * t**2 + 65 * t - 28)
        - 4 * t**4 + 12 * t**3 - 3 * t**2 - 11 * t + 6
    )
    c0 = (n + 1) ** 2 * (
        64 * n**6 - 16 * n**5 * (12 * t - 5) + 8 * n**4 * (22 * t**2 - 21 * t - 3)
        - 8 * n**3 * (4 * t**3 - 6 * t**2 - 9 * t + 7)
        - 2 * n**2 * (12 * t**4 - 32 * t**3 + 51 * t**2 - 45 * t + 11)
        + 2 * n * (t - 1) * (4 * t**4 - 8 * t**3 + 19 * t**2 - 15 * t + 3)
        - 6 * t**4 + 15 * t**3 - 12 * t**2 + 3 * t
    )
    return Poly([c0, c1, c2, c3, c4, c5, c6])


def psi2_poly(n: int, t: int) -> Poly:
    """Second derivative cofactor: psi1' = 2 (2x - t) * psi2."""
    c4 = 48 * (2 * n + 1)
    c3 = -96 * t * (2 * n + 1)
    c2 = 6 * (
        32 * n**4 - 8 * n**3 * (4 * t - 11) + 4 * n**2 * (2 * t - 7) * (t - 4)
        + 2 * n * (16 * t**2 - 26 * t + 29) + 16 * t**2 - 18 * t + 11
    )
    c1 = -6 * t * (
        32 * n**4 - 8 * n**3 * (4 * t - 11) + 4 * n**2 * (2 * t - 7) * (t - 4)
        + 2 * n * (8 * t**2 - 26 * t + 29) + 8 * t**2 - 18 * t + 11
    )
    c0 = -(n + 1) * (
        128 * n**5 - 16 * n**4 * (16 * t - 17) + 4 * n**3 * (36 * t**2 - 106 * t + 57)
        - 2 * n**2 * (8 * t**3 - 72 * t**2 + 138 * t - 53)
        - (4 * t**4 + 4 * t**3 - 33 * t**2 + 65 * t - 28) * n
        - 4 * t**4 + 12 * t**3 - 3 * t**2 - 11 * t + 6
    )
    return Poly([c0, c1, c2, c3, c4])


def psi3_poly(n: int, t: int) -> Poly:
    """Third derivative cofactor: psi2' = 6 (2x - t) * psi3 (a quadratic)."""
    c2 = 16 * (2 * n + 1)
    c1 = -16 * t * (2 * n + 1)
    c0 = (
        32 * n**4 - 8 * n**3 * (4 * t - 11) + 4 * n**2 * (2 * t - 7) * (t - 4)
        + 2 * n * (8 * t**2 - 26 * t + 29) + 8 * t**2 - 18 * t + 11
    )
    return Poly([c0, c1, c2])


def theta_poly(n: int) -> Poly:
    """Boundary sextic: psi(n,t)(0) = (n+1)^2 * theta(t), driving k = 0 signs."""
    return Poly([
        2 * n**2 * (2 * n - 1) * (n + 1) ** 3,
        -(n**2) * (8 * n**2 + 12 * n - 5) * (n + 1) ** 2,
        n * (4 * n + 1) * (n + 1) * (4 * n**3 + 7 * n**2 + 3 * n - 3),
        -(2 * n - 1) * (24 * n**4 + 54 * n**3 + 44 * n**2 + 14 * n + 1),
        (2 * n - 1) * (26 * n**3 + 41 * n**2 + 21 * n + 3),
        -3 * (2 * n - 1) * (2 * n + 1) ** 2,
        (2 * n - 1) * (2 * n + 1),
    ])


def xi_poly(n: int) -> Poly:
    """psi1 at x = 0 as a polynomial in t, divided by (n+1)^2 (a quintic)."""
    return Poly([
        2 * n * (n + 1) * (32 * n**4 + 8 * n**3 - 20 * n**2 - 8 * n - 3),
        -3 * (64 * n**5 + 56 * n**4 - 24 * n**3 - 30 * n**2 - 12 * n - 1),
        2 * (88 * n**4 + 24 * n**3 - 51 * n**2 - 34 * n - 6),
        -(32 * n**3 - 64 * n**2 - 54 * n - 15),
        -6 * (2 * n + 1) ** 2,
        8 * n,
    ])


def eta_poly(n: int) -> Poly:
    """psi2 at x = 0 as a polynomial in t, divided by (n+1) (a quartic)."""
    return Poly([
        -2 * (n + 1) * (64 * n**4 + 72 * n**3 + 42 * n**2 + 11 * n + 3),
        256 * n**4 + 424 * n**3 + 276 * n**2 + 65 * n + 11,
        -3 * (48 * n**3 + 48 * n**2 + 11 * n - 1),
        4 * (n + 1) * (4 * n - 3),
        4 * (n + 1),
    ])


# --- the t = n specialization ----------------------------------------------

def psi_nn_poly(n: int) -> Poly:
    """Expanded form of psi(n, n), degree 8."""
    return Poly([
        -(n**2) * (n**3 + 2 * n**2 - 3 * n + 2) * (n + 1) ** 3,
        n**2 * (6 * n**3 + 19 * n**2 - 2 * n + 3) * (n + 1) ** 2,
        n * (n + 1) * (4 * n**6 + 16 * n**5 - 3 * n**4 - 63 * n**3 - 34 * n**2 - 7 * n - 3),
        -2 * n * (12 * n**6 + 64 * n**5 + 87 * n**4 + 5 * n**3 - 44 * n**2 - 23 * n - 6),
        52 * n**6 + 300 * n**5 + 435 * n**4 + 205 * n**3 + 11 * n**2 - 23 * n - 6,
        -2 * n * (24 * n**4 + 164 * n**3 + 220 * n**2 + 120 * n + 33),
        2 * (8 * n**4 + 92 * n**3 + 92 * n**2 + 40 * n + 11),
        -32 * n * (2 * n + 1),
        8 * (2 * n + 1),
    ])


def psi1_nn_poly(n: int) -> Poly:
    return Poly([
        -n * (6 * n**3 + 19 * n**2 - 2 * n + 3) * (n + 1) ** 2,
        -2 * n * (n + 1) * (4 * n**5 + 16 * n**4 + 3 * n**3 - 38 * n**2 - 17 * n - 6),
        2 * (28 * n**6 + 152 * n**5 + 223 * n**4 + 85 * n**3 - 22 * n**2 - 23 * n - 6),
        -4 * n * (24 * n**4 + 148 * n**3 + 212 * n**2 + 120 * n + 33),
        6 * (8 * n**4 + 76 * n**3 + 84 * n**2 + 40 * n + 11),
        -96 * n * (2 * n + 1),
        32 * (2 * n + 1),
    ])


def psi2_nn_poly(n: int) -> Poly:
    return Poly([
        (n + 1) * (4 * n**5 + 16 * n**4 + 3 * n**3 - 38 * n**2 - 17 * n - 6),
        -6 * n * (8 * n**4 + 44 * n**3 + 68 * n**2 + 40 * n + 11),
        6 * (8 * n**4 + 60 * n**3 + 76 * n**2 + 40 * n + 11),
        -96 * n * (2 * n + 1),
        48 * (2 * n + 1),
    ])


def psi3_nn_poly(n: int) -> Poly:
    return Poly([
        8 * n**4 + 44 * n**3 + 68 * n**2 + 40 * n + 11,
        -16 * n * (2 * n + 1),
        16 * (2 * n + 1),
    ])


# --- closed forms at midpoints and endpoints --------------------------------

def psi1_half_closed(n: int, t: int) -> Fraction:
    """Grouped closed form of psi1 evaluated at the axis x = t/2."""
    u = 2 * n - t
    bracket = (
        4 * u**5 * (2 * n**2 + 2 * n + 1)
        + 2 * u**4 * (10 * n**2 - 2 * n - 1)
        + u**3 * (20 * n**2 - 46 * n - 23)
        + 10 * u**2 * (2 * n**2 - 6 * n - 3)
        + 4 * u * (14 * n**2 - 6 * n - 3)
        + 56 * n**2
    )
    return Fraction(bracket * (2 * n - t + 2), 8)


def psi1_half_closed_n2(t: int) -> Fraction:
    """n = 2 instance of the midpoint form, kept as its own factored shape."""
    u = 4 - t
    bracket = 52 * u**5 + 70 * u**4 - 35 * u**3 - 70 * u**2 + 880 - 164 * t
    return Fraction(bracket * (6 - t), 8)


def psi1_half_closed_n3(t: int) -> Fraction:
    """n = 3 instance of the midpoint form."""
    u = 6 - t
    bracket = 100 * u**5 + 166 * u**4 + 19 * u**3 - 30 * u**2 - 420 * t + 3024
    return Fraction(bracket * (8 - t), 8)


def psi2_half_closed(n: int, t: int) -> Fraction:
    """Closed form of psi2 at x = t/2, collected in powers of (n - t)."""
    v = n - t
    return (
        -(8 * n**2 + 10 * n + 5) * v**4
        - (32 * n**3 + 70 * n**2 + 50 * n + 15) * v**3
        - Fraction(96 * n**4 + 300 * n**3 + 330 * n**2 + 144 * n + 27, 2) * v**2
        - (32 * n**5 + 130 * n**4 + 200 * n**3 + 152 * n**2 + 49 * n + 11) * v
        - Fraction(16 * n**6 + 80 * n**5 + 160 * n**4 + 190 * n**3 + 143 * n**2 + 46 * n + 12, 2)
    )


def psi3_half_closed(n: int, t: int) -> int:
    """Closed form of psi3 at its axis x = t/2 (always a positive integer)."""
    v = n - t
    return (
        (8 * n**2 + 8 * n + 4) * v**2
        + (16 * n**3 + 44 * n**2 + 44 * n + 18) * v
        + 8 * n**4 + 36 * n**3 + 64 * n**2 + 40 * n + 11
    )


def half(value: int) -> Fraction:
    return Fraction(value, 2)


# Endpoint closed forms for theta and its derivatives.  Each entry is
# (label, derivative order, evaluation point, closed form); the sign column
# records where the displayed inequality is asserted (minimum n), with None
# meaning the form is identity-checked only.
THETA_ENDPOINT_FORMS: tuple = (
    ("theta(0)", 0, lambda n: 0, lambda n: 2 * n**2 * (2 * n - 1) * (n + 1) ** 3, "+", 1),
    ("theta(1)", 0, lambda n: 1, lambda n: 2 * n**3 * (2 * n - 1) * (3 * n**2 - 3 * n - 2), "+", 5),
    ("theta(n-1)", 0, lambda n: n - 1,
     lambda n: (3 * n**2 + 3 * n - 2) * (n**4 + 2 * n**3 - 9 * n**2 + 6 * n + 4), "+", 5),
    ("theta(n)", 0, lambda n: n, lambda n: -(n**2) * (n + 1) * (n**3 + 2 * n**2 - 3 * n + 2), "-", 1),
    ("theta'(0)", 1, lambda n: 0, lambda n: -(n**2) * (n + 1) ** 2 * (8 * n**2 + 12 * n - 5), "-", 1),
    ("theta'(1)", 1, lambda n: 1, lambda n: n**2 * (8 * n**2 - 4 * n - 3) * (3 * n**2 - 8 * n + 1), "+", 5),
    ("theta'(n-1)", 1, lambda n: n - 1,
     lambda n: -8 * n**6 - 24 * n**5 + 88 * n**4 + 48 * n**3 - 200 * n**2 + 36, "-", 5),
    ("theta''(0)", 2, lambda n: 0,
     lambda n: 2 * n * (4 * n + 1) * (n + 1) * (4 * n**3 + 7 * n**2 + 3 * n - 3), "+", 1),
    ("theta''(n/2)", 2, lambda n: Fraction(n, 2),
     lambda n: -Fraction(n * (68 * n**5 + 144 * n**4 - 129 * n**3 - 244 * n**2 - 24 * n + 24), 8), "-", 5),
    ("theta''(n-1)", 2, lambda n: n - 1,
     lambda n: 8 * n**6 + 24 * n**5 - 216 * n**4 - 112 * n**3 + 648 * n**2 - 132, "+", 5),
    ("theta'''(0)", 3, lambda n: 0,
     lambda n: -6 * (2 * n - 1) * (24 * n**4 + 54 * n**3 + 44 * n**2 + 14 * n + 1), "-", 1),
    ("theta'''(n-1)", 3, lambda n: n - 1,
     lambda n: 6 * (2 * n - 1) * (26 * n**3 + 26 * n**2 - 126 * n - 63), "+", 5),
    ("theta''''(0)", 4, lambda n: 0,
     lambda n: 24 * (2 * n - 1) * (26 * n**3 + 41 * n**2 + 21 * n + 3), "+", 1),
    ("theta''''(n-1)", 4, lambda n: n - 1,
     lambda n: -24 * (2 * n - 1) * (4 * n**3 + 4 * n**2 - 66 * n - 33), "-", 5),
)

# Endpoint closed forms for xi, eta and their t-derivatives: entries are
# (label, base poly builder, derivative order, point, closed form, sign, min n
# at which the sign is asserted).
XI_ETA_ENDPOINT_FORMS: tuple = (
    ("xi(n-1)", xi_poly, 0, lambda n: n - 1,
     lambda n: -8 * n**5 - 14 * n**4 + 119 * n**3 + 75 * n**2 - 100 * n - 36, "-", 4),
    ("xi(3n/4)", xi_poly, 0, lambda n: Fraction(3 * n, 4),
     lambda n: -Fraction(n * (25 * n**5 - 52 * n**4 + 831 * n**3 + 2614 * n**2 + 224 * n + 480), 128), "-", 8),
    ("xi'(3n/4)", xi_poly, 1, lambda n: Fraction(3 * n, 4),
     lambda n: -Fraction(315, 32) * n**5 - Fraction(57, 2) * n**4 + Fraction(213, 16) * n**2 + 18 * n + 3, "-", 8),
    ("xi'(n-1)", xi_poly, 1, lambda n: n - 1,
     lambda n: 8 * n**5 - 8 * n**4 - 330 * n**3 - 209 * n**2 + 284 * n + 96, "+", 8),
    ("xi''(n-1)", xi_poly, 2, lambda n: n - 1,
     lambda n: 32 * n**4 + 480 * n**3 + 432 * n**2 - 674 * n - 186, "+", 8),
    ("xi'''(n-1)", xi_poly, 3, lambda n: n - 1,
     lambda n: -288 * n**3 - 576 * n**2 + 1236 * n + 234, "-", 8),
    ("eta(0)", eta_poly, 0, lambda n: 0,
     lambda n: -2 * (n + 1) * (64 * n**4 + 72 * n**3 + 42 * n**2 + 11 * n + 3), "-", 4),
    ("eta(3n/4)", eta_poly, 0, lambda n: Fraction(3 * n, 4),
     lambda n: (-Fraction(575, 64) * n**5 - Fraction(2051, 64) * n**4 - Fraction(357, 8) * n**3
                - Fraction(889, 16) * n**2 - Fraction(79, 4) * n - 6), "-", 4),
    ("eta'(3n/4)", eta_poly, 1, lambda n: Fraction(3 * n, 4),
     lambda n: Fraction(n + 1, 4) * (295 * n**3 + 591 * n**2 + 234 * n + 44), "+", 4),
    ("eta''(3n/4)", eta_poly, 2, lambda n: Fraction(3 * n, 4),
     lambda n: -189 * n**3 - 243 * n**2 - 120 * n + 6, "-", 4),
)

# Endpoint closed forms for the t = n family.  The displayed positivity of
# psi(n,n)(1) genuinely fails at n = 2 (the value is -80), so its sign is
# asserted from n = 3 on; the closed form itself is an identity for all n.
NN_ENDPOINT_FORMS: tuple = (
    ("psi_nn3(0)", psi3_nn_poly, lambda n: 0,
     lambda n: 8 * n**4 + 44 * n**3 + 68 * n**2 + 40 * n + 11, "+", 2),
    ("psi_nn3(n/2)", psi3_nn_poly, lambda n: Fraction(n, 2),
     lambda n: 8 * n**4 + 36 * n**3 + 64 * n**2 + 40 * n + 11, "+", 2),
    ("psi_nn2(0)", psi2_nn_poly, lambda n: 0,
     lambda n: 4 * n**6 + 20 * n**5 + 19 * n**4 - 35 * n**3 - 55 * n**2 - 23 * n - 6, "+", 2),
    ("psi_nn2(n/2)", psi2_nn_poly, lambda n: Fraction(n, 2),
     lambda n: (-8 * n**6 - 40 * n**5 - 80 * n**4 - 95 * n**3 - half(143 * n**2) - 23 * n - 6), "-", 2),
    ("psi_nn1(0)", psi1_nn_poly, lambda n: 0,
     lambda n: -6 * n**6 - 31 * n**5 - 42 * n**4 - 18 * n**3 - 4 * n**2 - 3 * n, "-", 2),
    ("psi_nn1(n/2)", psi1_nn_poly, lambda n: Fraction(n, 2),
     lambda n: (n**8 + half(11 * n**7) + half(19 * n**6) + half(3 * n**5)
                - Fraction(83 * n**4, 8) - half(13 * n**3) - n**2 - 3 * n), "+", 2),
    ("psi_nn(0)", psi_nn_poly, lambda n: 0,
     lambda n: -(n**2) * (n**3 + 2 * n**2 - 3 * n + 2) * (n + 1) ** 3, "-", 2),
    ("psi_nn(1)", psi_nn_poly, lambda n: 1,
     lambda n: (n**6 * (3 * n**2 - 3 * n - 38) + 3 * n**2 * (18 * n**3 - n - 24)
                + 35 * n**4 - 16 * n + 24), "+", 3),
    ("psi_nn(n/2)", psi_nn_poly, lambda n: Fraction(n, 2),
     lambda n: -Fraction(n**2 * (n - 1) * (2 * n**3 + 3 * n**2 - 5 * n - 8) * (n + 2) ** 3, 32), "-", 2),
)


# --- validated bundles -------------------------------------------------------

def _first_mismatch(p: Poly, q: Poly) -> int | None:
    limit = max(p.degree, q.degree) + 1
    for i in range(limit):
        if p.coefficient(i) != q.coefficient(i):
            return i
    return None


def _check_cascade(name: str, upper: Poly, factor_scale: int, t: int, lower: Poly) -> None:
    expected = Poly([-t * factor_scale, 2 * factor_scale]) * lower
    idx = _first_mismatch(upper.derivative(), expected)
    if idx is not None:
        raise IdentityError(
            f"derivative cascade broke for {name}: first differing coefficient index {idx}"
        )


@dataclass(frozen=True)
class PsiBundle:
    """psi and its three derivative cofactors for one (n, t) cell."""

    n: int
    t: int
    psi: Poly
    psi1: Poly
    psi2: Poly
    psi3: Poly


def build_psi(n: int, t: int) -> PsiBundle:
    """Construct the cofactor bundle and assert the derivative cascade.

    Raises IdentityError if any of the three cascade identities fails,
    naming the first offending coefficient index.
    """
    if n < 1:
        raise ValueError(f"bundle needs n >= 1, got {n}")
    if t < 0 or t > n:
        raise ValueError(f"bundle needs 0 <= t <= n, got t={t}")
    psi, psi1, psi2, psi3 = psi_poly(n, t), psi1_poly(n, t), psi2_poly(n, t), psi3_poly(n, t)
    _check_cascade(f"psi(n={n},t={t})", psi, 1, t, psi1)
    _check_cascade(f"psi1(n={n},t={t})", psi1, 2, t, psi2)
    _check_cascade(f"psi2(n={n},t={t})", psi2, 6, t, psi3)
    return PsiBundle(n, t, psi, psi1, psi2, psi3)


@dataclass(frozen=True)
class ThetaBundle:
    """theta, its derivatives to order four, and the xi/eta extractions."""

    n: int
    theta: Poly
    derivatives: tuple[Poly, Poly, Poly, Poly]
    xi: Poly
    eta: Poly


def build_theta(n: int) -> ThetaBundle:
    """Construct theta for one n, certifying endpoint forms and extractions.

    The fourteen endpoint closed forms are checked by exact evaluation, and
    the xi/eta extraction identities are certified on a t-grid that exceeds
    their degree (xi is quintic in t, so nine points is plenty).
    """
    if n < 1:
        raise ValueError(f"theta needs n >= 1, got {n}")
    theta = theta_poly(n)
    derivs = []
    current = theta
    for _ in range(4):
        current = current.derivative()
        derivs.append(current)
    chain = (theta, *derivs)
    for label, order, point, closed, _sign, _min_n in THETA_ENDPOINT_FORMS:
        actual = chain[order](Fraction(point(n)))
        expected = Fraction(closed(n))
        if actual != expected:
            raise IdentityError(f"theta endpoint {label} mismatch at n={n}: {actual} != {expected}")
    xi, eta = xi_poly(n), eta_poly(n)
    for t0 in range(9):
        if (n + 1) ** 2 * xi(t0) != psi1_poly(n, t0)(0):
            raise IdentityError(f"xi extraction failed at n={n}, t={t0}")
        if (n + 1) * eta(t0) != psi2_poly(n, t0)(0):
            raise IdentityError(f"eta extraction failed at n={n}, t={t0}")
    return ThetaBundle(n, theta, tuple(derivs), xi, eta)


@dataclass(frozen=True)
class NnBundle:
    """The t = n specialization of the cofactor bundle."""

    n: int
    psi: Poly
    psi1: Poly
    psi2: Poly
    psi3: Poly


def build_psi_nn(n: int) -> NnBundle:
    """Construct the t = n bundle; asserts cascade and specialization."""
    if n < 1:
        raise ValueError(f"bundle needs n >= 1, got {n}")
    psi, psi1, psi2, psi3 = psi_nn_poly(n), psi1_nn_poly(n), psi2_nn_poly(n), psi3_nn_poly(n)
    _check_cascade(f"psi_nn(n={n})", psi, 1, n, psi1)
    _check_cascade(f"psi_nn1(n={n})", psi1, 2, n, psi2)
    _check_cascade(f"psi_nn2(n={n})", psi2, 6, n, psi3)
    pairs = (
        ("psi", psi, psi_poly(n, n)),
        ("psi1", psi1, psi1_poly(n, n)),
        ("psi2", psi2, psi2_poly(n, n)),
        ("psi3", psi3, psi3_poly(n, n)),
    )
    for name, expanded, general in pairs:
        idx = _first_mismatch(expanded, general)
        if idx is not None:
            raise IdentityError(
                f"t = n specialization of {name} differs at n={n}, coefficient {idx}"
            )
    return NnBundle(n, psi, psi1, psi2, psi3)
