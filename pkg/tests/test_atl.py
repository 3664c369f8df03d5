import random
from fractions import Fraction
from math import comb

import pytest

from polarbrauer import atl, brauer, polar
from polarbrauer.atl import (
    ATLDiagram,
    ATLElement,
    atl_compose,
    atl_from_polar,
    atl_identity,
    loop_value,
    pin_element,
    standard_basis,
    stratum_count,
    tlb_specialize,
    tlb_z2_value,
)
from polarbrauer.brauer import BOT, TOP
from polarbrauer.scalars import DELTA, Poly, RatFunc, delta, lam, zvar

Z2 = RatFunc(Poly.var(zvar(2)))
half = RatFunc(delta - 2) / 2


def test_standard_basis_small_counts():
    assert len(standard_basis(0, 0)) == 1
    assert len(standard_basis(0, 2)) == 2
    assert len(standard_basis(2, 2)) == 6
    assert len(standard_basis(1, 2)) == 0  # odd boundary


def test_rank_and_strata():
    for N in range(0, 5):
        for r in range(0, 2 * N + 1):
            basis = standard_basis(r, 2 * N - r)
            assert len(basis) == comb(2 * N, N)
            by_t = {}
            for d in basis:
                by_t[d.t] = by_t.get(d.t, 0) + 1
            for t in range(0, N + 1):
                assert by_t.get(t, 0) == stratum_count(2 * N, t)


def test_touch_quadratic_relation():
    H = pin_element(1, 1)
    idel = ATLElement.from_diagram(atl_identity(1))
    assert atl_compose(H, H) == H.scale(-half) + idel.scale(Z2 / delta)


def test_loop_values_satisfy_recursion():
    assert loop_value(0) == RatFunc(delta)
    assert loop_value(1).is_zero()
    assert loop_value(2) == Z2
    for ell in range(2, 7):
        assert loop_value(ell + 2) == -half * loop_value(ell + 1) + (Z2 / delta) * loop_value(ell)
    # 2 Z3 = (2 - delta) Z2
    assert loop_value(3) * 2 == RatFunc(2 - delta) * Z2


def test_closing_three_touches():
    closed = atl_from_polar(polar.z_element(3))
    assert closed == ATLElement.from_diagram(
        ATLDiagram(0, 0, [])
    ).scale(-half * Z2)


def test_crossing_expansion():
    image = atl_from_polar(polar.iota(brauer.s_diagram(1, 2)))
    ident = ATLDiagram(2, 2, [((BOT, 1), (TOP, 1)), ((BOT, 2), (TOP, 2))])
    hook = ATLDiagram(2, 2, [((BOT, 1), (BOT, 2)), ((TOP, 1), (TOP, 2))])
    assert image == ATLElement(2, 2, {ident: RatFunc(-1), hook: RatFunc(2) / delta})


def test_planar_diagram_maps_to_itself():
    d = brauer.e_diagram(1, 3)
    image = atl_from_polar(polar.iota(d))
    assert image == ATLElement.from_diagram(ATLDiagram(3, 3, d.pairs))


def test_tl_subcategory_composition():
    cup = ATLDiagram(0, 2, [((TOP, 1), (TOP, 2))])
    cap = ATLDiagram(2, 0, [((BOT, 1), (BOT, 2))])
    assert atl_compose(cap, cup) == ATLElement.from_diagram(
        ATLDiagram(0, 0, [])
    ).scale(RatFunc(delta))


def test_z2_is_central_on_basis():
    # composing the scaled identity on either side agrees on all basis elements
    for r, s in [(1, 1), (2, 2), (0, 2), (2, 0)]:
        for d in standard_basis(r, s):
            el = ATLElement.from_diagram(d)
            left = el.scale(Z2)
            right = el.scale(Z2)
            assert left == right  # coefficients commute by construction
            # the two-touch loop beside the diagram gives the same z2 action
            lifted = atl_compose(
                el, ATLElement.from_diagram(atl_identity(r)).scale(Z2)
            )
            assert lifted == left


def test_compose_lands_in_basis_span():
    random.seed(3)
    shapes = [(0, 2), (1, 1), (2, 2), (2, 0), (1, 3)]
    for r, s in shapes:
        for u in [k for k in range(0, 4) if (k + s) % 2 == 0]:
            for a in standard_basis(r, s):
                for b in standard_basis(s, u):
                    out = atl_compose(b, a)
                    for d in out.terms:
                        assert (d.r, d.s) == (r, u)


def test_associativity_random():
    random.seed(11)
    shapes = [(0, 2), (1, 1), (2, 2), (2, 0), (1, 3), (3, 1)]
    for _ in range(60):
        r, s = random.choice(shapes)
        u = random.choice([k for k in range(0, 4) if (k + s) % 2 == 0])
        v = random.choice([k for k in range(0, 4) if (k + u) % 2 == 0])
        a = random.choice(standard_basis(r, s))
        b = random.choice(standard_basis(s, u))
        c = random.choice(standard_basis(u, v))
        assert atl_compose(c, atl_compose(b, a)) == atl_compose(atl_compose(c, b), a)


def test_tlb_specialization():
    H = pin_element(1, 1)
    idel = ATLElement.from_diagram(atl_identity(1))
    lamr = RatFunc(lam)
    expr = atl_compose(H + idel.scale(lamr), H + idel.scale(half - lamr))
    assert tlb_specialize(expr).is_zero()
    # z2 values: delta=-2, lam=1 gives -6; lam=0 gives 0
    assert tlb_z2_value(1).substitute({DELTA: Fraction(-2)}) == RatFunc(-6)
    assert tlb_z2_value(0).is_zero()


def test_tlb_specialize_rejects_degenerate_delta():
    H = pin_element(1, 1)
    with pytest.raises(ValueError):
        tlb_specialize(H, lam_value=1, delta_value=2)


def test_quotient_functoriality_on_words():
    # image of a stacked word equals composition of the images
    w1 = polar.h_connector(2, 1)
    w2 = polar.iota(brauer.e_diagram(1, 2))
    lhs = atl_from_polar(polar.word_compose(w2, w1))
    rhs = atl_compose(atl_from_polar(w2), atl_from_polar(w1))
    assert lhs == rhs
