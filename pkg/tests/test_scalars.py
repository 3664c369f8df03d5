from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polarbrauer.scalars import (
    DELTA,
    LAM,
    Poly,
    RatFunc,
    delta,
    lam,
    poly_arith,
    poly_substitute,
    zvar,
)

z2 = Poly.var(zvar(2))


def test_additive_inverse():
    assert poly_arith(delta, delta, "sub").is_zero()


def test_monomial_product():
    assert poly_arith(z2, delta, "mul") == delta * z2


def test_expand_difference_of_squares():
    # expected value expanded by hand: (delta - 2)(delta + 2) = delta^2 - 4
    assert poly_arith(delta - 2, delta + 2, "mul") == delta**2 - 4


def test_substitution_evaluates():
    assert poly_substitute(delta - 2, {DELTA: Fraction(-2)}) == Poly.const(-4)


def test_substitution_type_b_parameter():
    # -lam((delta-2)/2 - lam) at delta=-2, lam=1 evaluates to 3
    expr = -lam * ((delta - 2) / 2 - lam)
    out = expr.substitute({DELTA: Fraction(-2), LAM: Fraction(1)})
    assert out == Poly.const(3)


def test_empty_substitution_is_identity():
    p = delta**3 - 2 * z2 + 7
    assert poly_substitute(p, {}) == p


def test_partial_substitution_keeps_unbound():
    p = delta * z2
    assert p.substitute({DELTA: Fraction(2)}) == 2 * z2


coeffs = st.integers(-6, 6).map(Fraction)
monos = st.lists(
    st.tuples(st.sampled_from([DELTA, LAM, zvar(2), zvar(4)]), st.integers(1, 3)),
    max_size=2,
).map(lambda kv: tuple(sorted(dict(kv).items())))
polys = st.dictionaries(monos, coeffs, max_size=4).map(Poly)


@given(polys)
def test_canonicalization_idempotent(p):
    assert Poly(p.terms) == p
    assert all(c != 0 for c in p.terms.values())


@given(polys, polys, polys)
@settings(max_examples=60)
def test_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


def test_poly_string_is_canonical():
    p = z2 * delta - Poly.const(Fraction(1, 2))
    assert str(p) == "delta*z2 - 1/2"


def test_ratfunc_reduction_and_equality():
    a = RatFunc(delta**2 - 4, delta - 2)
    assert a == RatFunc(delta + 2)
    b = RatFunc(z2, delta) + RatFunc(z2, delta)
    assert b == RatFunc(2 * z2, delta)
    assert (b - RatFunc(2 * z2) / delta).is_zero()


def test_ratfunc_cross_multiplication_equality():
    assert RatFunc(delta * z2, delta**2) == RatFunc(z2, delta)


def test_ratfunc_substitute_guards_zero_denominator():
    f = RatFunc(z2, delta)
    with pytest.raises(ZeroDivisionError):
        f.substitute({DELTA: Fraction(0)})
    assert f.substitute({DELTA: Fraction(-2)}) == RatFunc(z2) / -2


def test_ratfunc_power():
    assert RatFunc(delta) ** 3 == RatFunc(delta**3)
    assert RatFunc(2, delta) ** -1 == RatFunc(delta, 2)
