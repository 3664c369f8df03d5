from fractions import Fraction

from polarbrauer import brauer, chord
from polarbrauer.superspace import SuperMatrix


def test_no_instances_below_three():
    assert chord.relation_instances(2) == []


def test_counts_match_closed_form():
    for r in range(2, 8):
        instances = chord.relation_instances(r)
        assert len(instances) == chord.instance_count(r)
        assert len(set(instances)) == len(instances)


def test_r3_families():
    kinds = {rel.kind for rel in chord.relation_instances(3)}
    assert kinds == {"left-four-term", "right-four-term"}
    assert len(chord.relation_instances(3)) == 6


def test_r4_contains_disjoint():
    kinds = [rel for rel in chord.relation_instances(4) if rel.kind == "disjoint"]
    assert len(kinds) == 3
    assert chord.ChordRelation("disjoint", (1, 2, 3, 4)) in kinds


def test_brauer_assignment_passes():
    assign = {
        (i, j): brauer.h_pair(i, j, 4) for i in range(1, 5) for j in range(i + 1, 5)
    }
    rep = chord.check_assignment(4, assign)
    assert rep.passed


def test_noncommuting_assignment_fails():
    a = SuperMatrix(2, 2, {(0, 1): Fraction(1)})
    b = SuperMatrix(2, 2, {(1, 0): Fraction(1)})
    assign = {}
    for i in range(1, 5):
        for j in range(i + 1, 5):
            assign[(i, j)] = a if (i, j) == (1, 2) else b
    rep = chord.check_assignment(4, assign)
    assert not rep.passed


def test_render_mentions_generators():
    rel = chord.ChordRelation("left-four-term", (3, 1, 2))
    assert rel.render() == "[t(1,3) + t(2,3), t(1,2)]"
