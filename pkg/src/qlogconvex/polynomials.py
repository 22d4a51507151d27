"""Dense univariate polynomials over exact coefficients.

A single class serves both integer and rational polynomials: Python ints and
``fractions.Fraction`` mix exactly under arithmetic, so one dense
representation carries the combinatorial families (integer coefficients) as
well as Sturm-chain remainders (rational coefficients).  Polynomials are
immutable after construction and freely shareable between workers.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Union

Coeff = Union[int, Fraction]


def _strip(coeffs: list) -> tuple:
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return tuple(coeffs[:i])


class Poly:
    """Dense polynomial, coefficients ascending by exponent.

    Canonical form: trailing zero coefficients are stripped and the zero
    polynomial is the empty tuple (degree -1).
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        object.__setattr__(self, "coeffs", _strip(list(coeffs)))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> Coeff:
        """Coefficient of x^k, zero beyond the degree."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __neg__(self) -> "Poly":
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        out = list(a) + [0] * (len(b) - len(a))
        for i, c in enumerate(b):
            out[i] -= c
        return Poly(out)

    def __mul__(self, other):
        if isinstance(other, Poly):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return ZERO
            out = [0] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if ca:
                    for j, cb in enumerate(b):
                        out[i + j] += ca * cb
            return Poly(out)
        if isinstance(other, (int, Fraction)):
            return Poly([c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ValueError("negative polynomial power")
        result = ONE
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self) -> "Poly":
        """Formal derivative; drops the degree by exactly one if nonconstant."""
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: Coeff) -> Coeff:
        """Exact Horner evaluation; int or Fraction in, same ring out."""
        acc: Coeff = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r})"


ZERO = Poly()
ONE = Poly([1])
X = Poly([0, 1])


def poly_add(p: Poly, q: Poly) -> Poly:
    return p + q


def poly_sub(p: Poly, q: Poly) -> Poly:
    return p - q


def poly_mul(p: Poly, q: Poly) -> Poly:
    return p * q


def poly_scale(p: Poly, c: Coeff) -> Poly:
    return p * c


def derivative(p: Poly) -> Poly:
    return p.derivative()


def eval_rat(p: Poly, x: Coeff) -> Coeff:
    return p(x)


def is_self_reciprocal(p: Poly, n: int) -> bool:
    """True iff coefficient a_k == a_{n-k} for 0 <= k <= n (missing ones are 0)."""
    if n < p.degree:
        raise ValueError(f"nominal degree {n} below actual degree {p.degree}")
    return all(p.coefficient(k) == p.coefficient(n - k) for k in range(n + 1))


def divmod_poly(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Exact rational long division: f = q*g + r with deg r < deg g."""
    if g.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    rem = [Fraction(c) for c in f.coeffs]
    div = [Fraction(c) for c in g.coeffs]
    dd = len(div) - 1
    lead = div[-1]
    quo = [Fraction(0)] * max(len(rem) - dd, 0)
    for i in range(len(rem) - dd - 1, -1, -1):
        factor = rem[i + dd] / lead
        if factor:
            quo[i] = factor
            for j, c in enumerate(div):
                rem[i + j] -= factor * c
    return Poly(quo), Poly(rem[:dd])


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """Monic gcd over the rationals (monic f for g == 0)."""
    a, b = f, g
    while not b.is_zero:
        a, b = b, divmod_poly(a, b)[1]
    if a.is_zero:
        return ZERO
    return _monic(a)


def _monic(p: Poly) -> Poly:
    lead = p.coeffs[-1]
    return p * (Fraction(1) / Fraction(lead))


def squarefree_part(p: Poly) -> Poly:
    """Monic polynomial with the same distinct roots as p."""
    if p.is_zero:
        raise ValueError("zero polynomial has no squarefree part")
    if p.degree == 0:
        return ONE
    g = poly_gcd(p, p.derivative())
    if g.degree == 0:
        return _monic(p)
    quo, rem = divmod_poly(p, g)
    assert rem.is_zero
    return _monic(quo)


def sturm_chain(p: Poly) -> list[Poly]:
    """Sturm chain of the squarefree part of p.

    chain[0], chain[1] = f, f' and each later element is the negated
    Euclidean remainder of the previous two.  Degrees strictly decrease,
    and because f is squarefree (gcd(f, f') constant) the chain terminates
    in a nonzero constant.
    """
    f = squarefree_part(p)
    if f.degree <= 0:
        return [f]
    chain = [f, f.derivative()]
    while chain[-1].degree > 0:
        rem = divmod_poly(chain[-2], chain[-1])[1]
        if rem.is_zero:
            break
        chain.append(-rem)
    return chain


def _sign_variations(values: list) -> int:
    signs = [1 if v > 0 else -1 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _deflate_root(p: Poly, r: Fraction) -> Poly:
    """Exact synthetic division of p by (x - r); p(r) must be zero."""
    out = []
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * r + c
        out.append(acc)
    assert out[-1] == 0
    return Poly([Fraction(c) for c in reversed(out[:-1])])


def sturm_count_roots(p: Poly, a: Coeff, b: Coeff) -> int:
    """Number of distinct real roots of p in the half-open interval (a, b].

    Computed from sign variations of the Sturm chain of the squarefree part.
    Roots at the endpoints are deflated first so that a root exactly at
    ``a`` is excluded and one exactly at ``b`` is included, per the (a, b]
    convention.
    """
    if p.is_zero:
        raise ValueError("root counting requires a nonzero polynomial")
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError(f"empty interval ({a}, {b}]")
    f = squarefree_part(p)
    count_b = 1 if f(b) == 0 else 0
    for endpoint in (a, b):
        while not f.is_zero and f.degree > 0 and f(endpoint) == 0:
            f = _deflate_root(f, endpoint)
    if f.degree <= 0:
        return count_b
    chain = sturm_chain(f)
    va = _sign_variations([q(a) for q in chain])
    vb = _sign_variations([q(b) for q in chain])
    return va - vb + count_b


class IntervalSign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    NOT_CONSTANT = "not_constant"


def sign_constant_on(p: Poly, a: Coeff, b: Coeff) -> IntervalSign:
    """Certify that p keeps a single strict sign on the closed interval [a, b].

    Returns POSITIVE or NEGATIVE iff p has no root in [a, b]; a root
    anywhere in the interval, endpoints included, yields NOT_CONSTANT and
    the caller decides how to treat the endpoint case.
    """
    if p.is_zero:
        raise ValueError("sign certification requires a nonzero polynomial")
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError(f"degenerate interval [{a}, {b}]")
    pa, pb = p(a), p(b)
    if pa == 0 or pb == 0:
        return IntervalSign.NOT_CONSTANT
    # b is not a root, so the (a, b] count equals the open-interval count
    if sturm_count_roots(p, a, b) > 0:
        return IntervalSign.NOT_CONSTANT
    assert (pa > 0) == (pb > 0)
    return IntervalSign.POSITIVE if pa > 0 else IntervalSign.NEGATIVE


def cauchy_root_bound(p: Poly) -> Fraction:
    """B with every real root of p inside (-B, B)."""
    if p.is_zero or p.degree == 0:
        return Fraction(1)
    lead = abs(Fraction(p.coeffs[-1]))
    return Fraction(1) + max(abs(Fraction(c)) / lead for c in p.coeffs[:-1])
