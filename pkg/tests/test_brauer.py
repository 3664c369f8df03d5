import random

from hypothesis import given, settings
from hypothesis import strategies as st

from polarbrauer import brauer
from polarbrauer.brauer import (
    BOT,
    TOP,
    BrauerDiagram,
    cap0,
    compose,
    cup0,
    e_diagram,
    elem,
    h_element,
    h_pair,
    identity,
    is_planar,
    s_diagram,
    tensor,
    x_cycle,
)
from polarbrauer.scalars import Poly, delta


def diagram_strategy(max_pts: int = 5):
    def build(seed):
        rng = random.Random(seed)
        r = rng.randint(0, max_pts)
        s = rng.choice([k for k in range(0, max_pts + 1) if (k + r) % 2 == 0])
        pts = [(BOT, i) for i in range(1, r + 1)] + [(TOP, j) for j in range(1, s + 1)]
        rng.shuffle(pts)
        return BrauerDiagram(r, s, [tuple(pts[i : i + 2]) for i in range(0, len(pts), 2)])

    return st.integers(0, 10**9).map(build)


def test_cap_after_cup_is_free_loop():
    out = compose(cap0(), cup0())
    assert out == elem(BrauerDiagram(0, 0, [])).scale(delta)


def test_identity_law():
    d = BrauerDiagram(2, 2, [((BOT, 1), (BOT, 2)), ((TOP, 1), (TOP, 2))])
    assert compose(identity(2), d) == elem(d)
    assert compose(d, identity(2)) == elem(d)


def test_hook_squares_to_delta_hook():
    e1 = e_diagram(1, 2)
    assert compose(e1, e1) == elem(e1).scale(delta)


def test_tensor_shifts_labels():
    out = tensor(elem(identity(1)), elem(identity(1)))
    assert out == elem(identity(2))
    mixed = brauer.tensor_diagrams(cap0(), cup0())
    assert mixed == BrauerDiagram(
        2, 2, [((BOT, 1), (BOT, 2)), ((TOP, 1), (TOP, 2))]
    )
    assert brauer.tensor_diagrams(s_diagram(1, 2), identity(1)) == s_diagram(1, 3)


def test_h_is_crossing_minus_hook():
    h = h_element(1, 2)
    assert h == elem(s_diagram(1, 2)) - elem(e_diagram(1, 2))


def test_h_pair_degenerate_and_conjugated():
    assert h_pair(1, 2, 2) == h_element(1, 2)
    s2 = elem(s_diagram(2, 3))
    assert h_pair(1, 3, 3) == compose(s2, compose(h_element(1, 3), s2))
    assert len(h_pair(1, 3, 3).terms) == 2


def test_planarity():
    assert is_planar(e_diagram(1, 2))
    assert not is_planar(s_diagram(1, 2))
    assert is_planar(BrauerDiagram(0, 4, [((TOP, 1), (TOP, 2)), ((TOP, 3), (TOP, 4))]))
    assert not is_planar(BrauerDiagram(0, 4, [((TOP, 1), (TOP, 3)), ((TOP, 2), (TOP, 4))]))
    assert is_planar(BrauerDiagram(0, 4, [((TOP, 1), (TOP, 4)), ((TOP, 2), (TOP, 3))]))


def test_x_cycle_images():
    assert x_cycle(1, 3, 3) == brauer.perm_diagram([3, 1, 2])
    assert x_cycle(3, 1, 3) == brauer.perm_diagram([2, 3, 1])
    assert x_cycle(2, 2, 4) == identity(4)


@given(diagram_strategy(), diagram_strategy())
@settings(max_examples=40)
def test_tensor_is_bifunctorial(a, b):
    a2 = identity(a.s)
    b2 = identity(b.s)
    lhs = compose(tensor(elem(a2), elem(b2)), tensor(elem(a), elem(b)))
    rhs = tensor(compose(a2, a), compose(b2, b))
    assert lhs == rhs


@given(st.integers(0, 10**9))
@settings(max_examples=60)
def test_composition_associative(seed):
    rng = random.Random(seed)

    def rand(r, s):
        pts = [(BOT, i) for i in range(1, r + 1)] + [(TOP, j) for j in range(1, s + 1)]
        rng.shuffle(pts)
        return BrauerDiagram(r, s, [tuple(pts[i : i + 2]) for i in range(0, len(pts), 2)])

    r = rng.randint(0, 4)
    s = rng.choice([k for k in range(0, 5) if (k + r) % 2 == 0])
    u = rng.choice([k for k in range(0, 5) if (k + s) % 2 == 0])
    v = rng.choice([k for k in range(0, 5) if (k + u) % 2 == 0])
    a, b, c = rand(r, s), rand(s, u), rand(u, v)
    assert compose(c, compose(b, a)) == compose(compose(c, b), a)


@given(diagram_strategy())
@settings(max_examples=80)
def test_factorization_roundtrip(d):
    layers = brauer.factor_layers(d)
    assert brauer.compose_layers(layers, d.r) == elem(d)


def test_h_generating_relations():
    # (delta-2) e_i = H_i^2 - 1 and (delta-2) s_i = H_i^2 + (delta-2) H_i - 1
    for r in (2, 3):
        for i in range(1, r):
            h = h_element(i, r)
            one = elem(identity(r))
            assert elem(e_diagram(i, r)).scale(delta - 2) == compose(h, h) - one
            assert elem(s_diagram(i, r)).scale(delta - 2) == compose(h, h) + h.scale(
                delta - 2
            ) - one


def test_verify_h_skew_passes():
    for r in (2, 3):
        rep = brauer.verify_h_skew(r)
        assert rep.passed, rep.failures()


def test_verify_chord_in_brauer():
    for r in (2, 3, 4, 5):
        rep = brauer.verify_chord_in_brauer(r)
        assert rep.passed, rep.failures()
    assert len(brauer.verify_chord_in_brauer(2).checks) == 0
