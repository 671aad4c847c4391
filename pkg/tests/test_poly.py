from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from conftest import polys2, small_frac
from fitzri.poly import (
    Poly,
    monomials_up_to,
    poly_shift,
    shifted_power,
    taylor_coeff,
    taylor_coeffs,
)

X, Y = sympy.symbols("x y")
V = ("x", "y")
points2 = st.tuples(small_frac, small_frac)


def to_sympy(p: Poly):
    return sympy.Add(*[sympy.Rational(c.numerator, c.denominator) * X**m[0] * Y**m[1] for m, c in p.items()])


def test_parse_and_print():
    p = Poly.parse("3/2*x^2*y - (x - 1)*(y + 2)", V)
    assert p.coeff((2, 1)) == Fraction(3, 2)
    assert p.coeff((1, 1)) == -1
    assert p.coeff((0, 0)) == 2
    assert Poly.parse(p.to_str(), V) == p


def test_parse_errors():
    with pytest.raises(ValueError):
        Poly.parse("x/y", V)
    with pytest.raises(ValueError):
        Poly.parse("z + 1", V)
    with pytest.raises(ValueError):
        Poly.parse("(x + 1", V)


def test_zero_coefficients_dropped():
    p = Poly({(1, 0): Fraction(0), (0, 0): Fraction(2)}, V)
    assert dict(p.items()) == {(0, 0): 2}
    assert Poly.zero(V).total_degree() == -1


def test_arity_checked():
    with pytest.raises(ValueError):
        Poly({(1,): 1}, V)
    with pytest.raises(ValueError):
        Poly.zero(V) + Poly.zero(("x",))


def test_monomials_up_to_count():
    # C(d + n, n)
    assert len(monomials_up_to(2, 4)) == 15
    assert len(monomials_up_to(3, 2)) == 10
    assert len(set(monomials_up_to(2, 4))) == 15


@given(polys2(), polys2())
def test_ring_ops_match_sympy(p, q):
    assert sympy.expand(to_sympy(p + q) - (to_sympy(p) + to_sympy(q))) == 0
    assert sympy.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0
    assert sympy.expand(to_sympy(p - q) - (to_sympy(p) - to_sympy(q))) == 0


@given(polys2(), polys2(), points2)
def test_evaluation_is_a_ring_homomorphism(p, q, pt):
    assert (p * q)(pt) == p(pt) * q(pt)
    assert (p + q)(pt) == p(pt) + q(pt)


@given(polys2(), points2)
def test_eval_matches_sympy(p, pt):
    assert p(pt) == to_sympy(p).subs({X: pt[0], Y: pt[1]})


@given(polys2(), points2)
def test_shift_roundtrip(p, pt):
    back = (-pt[0], -pt[1])
    assert poly_shift(poly_shift(p, pt), back) == p


@settings(max_examples=50)
@given(polys2(), points2, st.tuples(st.integers(0, 3), st.integers(0, 3)))
def test_taylor_coeff_matches_derivative(p, pt, alpha):
    # independent route: differentiate symbolically and divide by alpha!
    d = sympy.diff(to_sympy(p), X, alpha[0], Y, alpha[1]) if any(alpha) else to_sympy(p)
    want = d.subs({X: pt[0], Y: pt[1]}) / (sympy.factorial(alpha[0]) * sympy.factorial(alpha[1]))
    assert taylor_coeff(p, pt, alpha) == want


@given(polys2(), points2)
def test_taylor_expansion_reconstructs(p, pt):
    alphas = monomials_up_to(2, 6)
    coeffs = taylor_coeffs(p, pt, alphas)
    rebuilt = Poly.zero(V)
    for a, c in coeffs.items():
        rebuilt = rebuilt + shifted_power(pt, a, V, Fraction(1)) * c
    assert rebuilt == p


def test_shifted_power_example():
    assert shifted_power((1, 2), (2, 1), V, Fraction(1)) == Poly.parse("(x-1)^2*(y-2)", V)


def test_float_mode_pow_stays_float():
    p = Poly.parse("x + 0.5", V, float)
    assert all(isinstance(c, float) for _, c in (p**3).items())
