from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qlogconvex.polynomials import (
    IntervalSign,
    Poly,
    ZERO,
    cauchy_root_bound,
    derivative,
    divmod_poly,
    eval_rat,
    is_self_reciprocal,
    poly_mul,
    poly_sub,
    sign_constant_on,
    squarefree_part,
    sturm_chain,
    sturm_count_roots,
)
from qlogconvex.proofpolys import eta_poly, theta_poly


def test_canonical_form_strips_trailing_zeros():
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert Poly([0, 0]).is_zero
    assert Poly().degree == -1
    assert Poly([5]).degree == 0


def test_ring_operation_examples():
    one_plus_q = Poly([1, 1])
    assert poly_mul(one_plus_q, one_plus_q) == Poly([1, 2, 1])
    p = Poly([3, -1, 7])
    assert poly_sub(p, p) == ZERO
    d1 = Poly([2, 2])
    assert poly_mul(d1, d1) == Poly([4, 8, 4])


def test_product_degree_is_additive():
    p, q = Poly([1, 2, 3]), Poly([-4, 0, 0, 5])
    assert (p * q).degree == p.degree + q.degree


def test_scalar_and_power():
    assert Poly([1, 1]) * 3 == Poly([3, 3])
    assert Poly([1, 1]) ** 2 == Poly([1, 2, 1])
    assert Poly([1, 1]) ** 0 == Poly([1])


def test_derivative_examples():
    assert derivative(Poly([-2, 0, 1])) == Poly([0, 2])
    assert derivative(Poly([7])) == ZERO
    # boundary sextic at n=5: slope at 0 is -n^2 (n+1)^2 (8n^2 + 12n - 5)
    theta5 = theta_poly(5)
    assert derivative(theta5)(0) == -(5**2) * (6**2) * (8 * 25 + 60 - 5) == -229500


def test_derivative_drops_degree_by_one():
    p = Poly([3, 0, 0, 9])
    assert derivative(p).degree == p.degree - 1


def test_eval_examples():
    assert eval_rat(Poly([-2, 0, 1]), Fraction(3, 2)) == Fraction(1, 4)
    assert eval_rat(Poly([11, 5, 3]), 0) == 11
    # theta(n) = -n^2 (n+1) (n^3 + 2n^2 - 3n + 2) at n=5
    assert eval_rat(theta_poly(5), 5) == -25 * 6 * 162 == -24300


def test_self_reciprocal_examples():
    assert is_self_reciprocal(Poly([6, 16, 6]), 2)
    assert not is_self_reciprocal(Poly([1, 8, 6]), 2)
    assert is_self_reciprocal(Poly([1]), 0)
    # missing coefficients count as zeros
    assert not is_self_reciprocal(Poly([1, 1]), 3)
    with pytest.raises(ValueError):
        is_self_reciprocal(Poly([1, 2, 3]), 1)


def test_divmod_round_trip():
    f = Poly([1, -3, 0, 2, 5])
    g = Poly([2, 0, 1])
    q, r = divmod_poly(f, g)
    assert q * g + r == Poly([Fraction(c) for c in f.coeffs])
    assert r.degree < g.degree


def test_squarefree_part():
    p = Poly([1, 1]) ** 3 * Poly([-2, 1])
    sf = squarefree_part(p)
    assert sf == Poly([Fraction(-2), Fraction(-1), Fraction(1)])  # monic (x+1)(x-2)


def test_sturm_chain_shape():
    chain = sturm_chain(Poly([-2, 0, 1]))
    degrees = [p.degree for p in chain]
    assert degrees == sorted(degrees, reverse=True)
    assert chain[-1].degree == 0 and not chain[-1].is_zero


def test_sturm_count_examples():
    assert sturm_count_roots(Poly([-2, 0, 1]), 0, 2) == 1
    assert sturm_count_roots(Poly([1, -2, 1]), 0, 2) == 1  # (x-1)^2, distinct count
    assert sturm_count_roots(Poly([1, 0, 1]), -10, 10) == 0


def test_sturm_half_open_convention():
    # x (x - 2): root at the left endpoint is excluded, at the right included
    p = Poly([0, -2, 1])
    assert sturm_count_roots(p, 0, 2) == 1
    assert sturm_count_roots(p, -1, 2) == 2
    assert sturm_count_roots(p, -1, Fraction(3, 2)) == 1


def test_sturm_rejects_bad_input():
    with pytest.raises(ValueError):
        sturm_count_roots(ZERO, 0, 1)
    with pytest.raises(ValueError):
        sturm_count_roots(Poly([1, 1]), 1, 1)


def test_sign_constant_on_examples():
    assert sign_constant_on(Poly([1, 0, 1]), -1, 1) is IntervalSign.POSITIVE
    assert sign_constant_on(Poly([0, 1]), -1, 1) is IntervalSign.NOT_CONSTANT
    assert sign_constant_on(Poly([0, 1]), 0, 1) is IntervalSign.NOT_CONSTANT  # endpoint root
    assert sign_constant_on(Poly([-1, 0, -2]), -3, 3) is IntervalSign.NEGATIVE
    # eta for n=5 keeps a strict negative sign on [0, 15/4]
    assert sign_constant_on(eta_poly(5), 0, Fraction(15, 4)) is IntervalSign.NEGATIVE


small_polys = st.lists(
    st.integers(min_value=-50, max_value=50), min_size=0, max_size=6
).map(Poly)


@given(small_polys, small_polys)
@settings(max_examples=150)
def test_leibniz_rule(p, q):
    lhs = derivative(poly_mul(p, q))
    rhs = poly_mul(derivative(p), q) + poly_mul(p, derivative(q))
    assert lhs == rhs


@given(small_polys, small_polys, small_polys)
@settings(max_examples=100)
def test_ring_distributivity(p, q, r):
    assert p * (q + r) == p * q + p * r


root_strategy = st.fractions(min_value=-8, max_value=8, max_denominator=4)


@given(
    st.lists(st.tuples(root_strategy, st.integers(min_value=1, max_value=3)),
             min_size=1, max_size=4, unique_by=lambda rm: rm[0]),
    st.integers(min_value=0, max_value=1),
)
@settings(max_examples=120)
def test_sturm_count_matches_constructed_roots(roots, complex_pairs):
    """Oracle by construction: real roots are planted, then counted."""
    p = Poly([1])
    for r, mult in roots:
        p = p * Poly([-r.numerator, r.denominator]) ** mult
    p = p * Poly([1, 0, 1]) ** complex_pairs  # irreducible factor, no real roots
    bound = cauchy_root_bound(p)
    assert sturm_count_roots(p, -bound, bound) == len(roots)
    inside = [r for r, _ in roots if Fraction(0) < r <= Fraction(3)]
    assert sturm_count_roots(p, 0, 3) == len(inside)


@given(st.lists(st.integers(min_value=-10**6, max_value=10**6), min_size=2, max_size=13))
@settings(max_examples=60, deadline=None)
def test_sturm_count_bounded_below_by_grid_scan(coeffs):
    p = Poly(coeffs)
    if p.is_zero or p.degree < 1:
        return
    window = Fraction(16)
    total = sturm_count_roots(p, -window, window)
    # a coarse sign-change scan can only undercount distinct roots
    step = Fraction(1, 8)
    scan = 0
    x = -window
    prev = p(x)
    while x < window:
        x += step
        cur = p(x)
        if prev * cur < 0:
            scan += 1
        if cur != 0:
            prev = cur
    assert scan <= total <= p.degree
