import random
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from polarbrauer import superspace as sp
from polarbrauer import uea
from polarbrauer.uea import (
    UEAElement,
    algebra,
    casimir_element,
    centrality_check,
    e_matrix,
    fz_element,
    fz_trace,
    sp2_standard_generators,
    straighten,
    t_power_matrix,
)


def test_sp2_bracket_table():
    T, X, Y = sp2_standard_generators()
    assert T * X - X * T == X.scale(2)
    assert T * Y - Y * T == Y.scale(-2)
    assert X * Y - Y * X == T


def test_straighten_swap_example():
    # for the rank-two symplectic algebra: Y X = X Y - T
    T, X, Y = sp2_standard_generators()
    assert Y * X == X * Y - T


def test_straighten_sorted_square():
    alg = algebra(2, 0)
    word = (0, 0)
    out = straighten(alg, word)
    assert out == UEAElement(alg, {(0, 0): Fraction(1)})


def test_odd_generators_are_squarefree():
    alg = algebra(1, 1)
    odd = [g for g in range(len(alg.pairs)) if alg.gen_parity[g]]
    g = odd[0]
    out = straighten(alg, (g, g))
    assert all(len(set(m)) == len(m) or not alg.gen_parity[m[0]] for m in out.terms)


@given(st.integers(0, 10**9))
@settings(max_examples=40, deadline=None)
def test_straighten_respects_products(seed):
    rng = random.Random(seed)
    m, n = rng.choice([(2, 0), (3, 0), (0, 1), (1, 1)])
    alg = algebra(m, n)
    k = len(alg.pairs)
    u = tuple(rng.randrange(k) for _ in range(rng.randint(1, 3)))
    v = tuple(rng.randrange(k) for _ in range(rng.randint(1, 3)))
    lhs = straighten(alg, u) * straighten(alg, v)
    rhs = straighten(alg, u + v)
    assert lhs == rhs


def test_straighten_faithful_in_natural_module():
    random.seed(5)
    for m, n in [(3, 0), (0, 1), (1, 1)]:
        alg = algebra(m, n)
        d = alg.space.dim
        for _ in range(25):
            word = tuple(
                random.randrange(len(alg.pairs)) for _ in range(random.randint(2, 4))
            )
            direct = sp.SuperMatrix.identity(d)
            for g in word:
                direct = direct * alg.matrix(g)
            image = sp.SuperMatrix.zero(d, d)
            for mono, c in alg.straighten_word(word).items():
                mm = sp.SuperMatrix.identity(d)
                for g in mono:
                    mm = mm * alg.matrix(g)
                image = image + mm.scale(c)
            assert (direct - image).is_zero()


def test_casimir_matches_closed_form():
    T, X, Y = sp2_standard_generators()
    alg = algebra(0, 1)
    expected = ((T * T).scale(Fraction(1, 2)) + X * Y + Y * X).scale(-2)
    assert casimir_element(alg) == expected


def test_casimir_central_everywhere():
    for m, n in [(3, 0), (0, 1), (1, 1), (0, 2)]:
        rep = centrality_check(casimir_element(algebra(m, n)), "casimir")
        assert rep.passed


def test_first_loop_vanishes():
    for m, n in [(3, 0), (0, 1), (1, 1)]:
        assert fz_element(1, m, n).is_zero()


def test_second_loop_is_twice_casimir():
    for m, n in [(3, 0), (0, 1), (1, 1)]:
        assert fz_element(2, m, n) == casimir_element(algebra(m, n)).scale(2)


def test_sp2_third_loop_reduction():
    # 2 Z3 = (2 - delta) Z2 at delta = -2 gives Z3 = 2 Z2
    assert fz_element(3, 0, 1) == fz_element(2, 0, 1).scale(2)


def test_supertrace_route_agrees():
    for m, n in [(3, 0), (0, 1), (1, 1)]:
        for ell in (1, 2, 3):
            assert fz_element(ell, m, n) == fz_trace(ell, m, n)


def test_loops_are_central():
    for m, n in [(3, 0), (0, 1), (1, 1)]:
        for ell in (2, 3):
            rep = centrality_check(fz_element(ell, m, n), f"loop{ell}")
            assert rep.passed, (m, n, ell, rep.failures()[:2])


def test_generator_is_not_central():
    alg = algebra(3, 0)
    rep = centrality_check(UEAElement.gen(alg, 0), "X12")
    assert not rep.passed


def test_e_matrix_images():
    # evaluating the entries in the natural module recovers the two-slot action
    for m, n in [(3, 0), (0, 1), (1, 1)]:
        E = e_matrix(m, n)
        assert (E.natural_image() - sp.t_action(m, n)).is_zero()
    # the rank-two case matches the displayed matrix -2 [[T/2, Y], [X, -T/2]]
    T, X, Y = sp2_standard_generators()
    E = e_matrix(0, 1)
    assert E.entry(0, 0) == T.scale(-1)
    assert E.entry(1, 1) == T
    assert E.entry(0, 1) == Y.scale(-2)
    assert E.entry(1, 0) == X.scale(-2)


def test_power_matrix_consistency():
    for m, n in [(3, 0), (1, 1)]:
        E = e_matrix(m, n)
        E2 = E * E
        alg = algebra(m, n)
        par = alg.space.parity
        table = t_power_matrix(alg, 2)
        for a in range(alg.space.dim):
            for b in range(alg.space.dim):
                assert E2.entry(b, a) == table[(a, b)].scale((-1) ** par[b])


def test_sp2_characteristic_identity():
    rep = uea.sp2_characteristic_identity()
    assert rep.passed, rep.failures()
