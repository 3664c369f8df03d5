"""Defining relations of the chord-diagram algebra as a relation-instance generator.

The algebra itself is infinite dimensional and never materialised; every use
is "check that a proposed assignment of the generators t_ij satisfies the
defining relations".  Targets only need addition, multiplication and an exact
zero test, so Brauer elements, exact matrices and enveloping-algebra elements
all work.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .report import Report


@dataclass(frozen=True)
class ChordRelation:
    """One relation instance: a commutator of generator combinations that must vanish."""

    kind: str  # disjoint | left-four-term | right-four-term
    indices: tuple

    def render(self) -> str:
        t = lambda a, b: f"t({min(a, b)},{max(a, b)})"
        if self.kind == "disjoint":
            i, j, k, l = self.indices
            return f"[{t(i, j)}, {t(k, l)}]"
        if self.kind == "left-four-term":
            i, k, l = self.indices
            return f"[{t(i, k)} + {t(i, l)}, {t(k, l)}]"
        i, j, k = self.indices
        return f"[{t(i, j)}, {t(i, k)} + {t(j, k)}]"


def relation_instances(r: int) -> list[ChordRelation]:
    """The complete finite list of defining-relation instances for degree r."""
    if r < 2:
        raise ValueError("need r >= 2")
    out = []
    for a, b, c, d in combinations(range(1, r + 1), 4):
        for p, q in (((a, b), (c, d)), ((a, c), (b, d)), ((a, d), (b, c))):
            out.append(ChordRelation("disjoint", (*p, *q)))
    for triple in combinations(range(1, r + 1), 3):
        for i in triple:
            k, l = sorted(set(triple) - {i})
            out.append(ChordRelation("left-four-term", (i, k, l)))
        for k in triple:
            i, j = sorted(set(triple) - {k})
            out.append(ChordRelation("right-four-term", (i, j, k)))
    return out


def instance_count(r: int) -> int:
    """Closed-form count of relation instances, cross-checked by enumeration."""
    from math import comb

    # disjoint: 3 unordered pair-splittings per 4-subset
    # each four-term family: 3 instances per 3-subset (one per choice of odd index)
    return 3 * comb(r, 4) + 3 * comb(r, 3) + 3 * comb(r, 3)


def _pair(assign, i, j):
    if i < j:
        return assign[(i, j)]
    return assign[(j, i)]


def check_assignment(r: int, assign, is_zero=None, title: str | None = None) -> Report:
    """Per-relation pass/fail for the map t_ij -> assign[(i, j)]."""
    rep = Report(title or f"chord relations r={r}")
    if is_zero is None:
        is_zero = lambda x: x.is_zero() if hasattr(x, "is_zero") else not x

    def commutator(a, b):
        return a * b - b * a

    for rel in relation_instances(r):
        if rel.kind == "disjoint":
            i, j, k, l = rel.indices
            val = commutator(_pair(assign, i, j), _pair(assign, k, l))
        elif rel.kind == "left-four-term":
            i, k, l = rel.indices
            val = commutator(_pair(assign, i, k) + _pair(assign, i, l), _pair(assign, k, l))
        else:
            i, j, k = rel.indices
            val = commutator(_pair(assign, i, j), _pair(assign, i, k) + _pair(assign, j, k))
        ok = is_zero(val)
        rep.add(rel.render(), ok, "" if ok else "nonzero commutator")
    return rep
