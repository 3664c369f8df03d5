"""Brauer diagrams, the Brauer category B(delta) and the algebras B_r(delta).

A diagram is a perfect matching on r bottom and s top boundary points; strings
may cross.  Composition stacks diagrams and converts every closed loop into a
factor of delta, so diagrams themselves stay loop-free and canonical.
Distinguished elements: H_i = s_i - e_i, the cycles X_ij, and the two-diagram
combinations H_ij, whose commutation relations drive everything downstream.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .report import Report
from .scalars import Poly, delta

BOT, TOP = 0, 1


def _pt(side: int, index: int):
    return (side, index)


class BrauerDiagram:
    """A perfect matching on {bottom 1..r} + {top 1..s}, loop-free by invariant."""

    __slots__ = ("r", "s", "pairs", "_partner", "_hash")

    def __init__(self, r: int, s: int, pairs: Iterable):
        self.r, self.s = r, s
        norm = tuple(sorted(tuple(sorted(p)) for p in pairs))
        self.pairs = norm
        partner = {}
        for a, b in norm:
            if a == b or a in partner or b in partner:
                raise ValueError(f"not a perfect matching: {norm}")
            partner[a], partner[b] = b, a
        expected = {(BOT, i) for i in range(1, r + 1)} | {(TOP, j) for j in range(1, s + 1)}
        if set(partner) != expected:
            raise ValueError(f"matching does not cover the {r}+{s} boundary points")
        self._partner = partner
        self._hash = hash((r, s, norm))

    def partner(self, point):
        return self._partner[point]

    def __eq__(self, other):
        if not isinstance(other, BrauerDiagram):
            return NotImplemented
        return (self.r, self.s, self.pairs) == (other.r, other.s, other.pairs)

    def __hash__(self):
        return self._hash

    def transpose(self) -> "BrauerDiagram":
        """Flip the diagram upside down."""
        flip = lambda p: (TOP if p[0] == BOT else BOT, p[1])
        return BrauerDiagram(self.s, self.r, [(flip(a), flip(b)) for a, b in self.pairs])

    def __repr__(self):
        def name(p):
            return f"{'b' if p[0] == BOT else 't'}{p[1]}"

        inner = " ".join(f"{name(a)}-{name(b)}" for a, b in self.pairs)
        return f"<{self.r}->{self.s}: {inner}>"


def identity(r: int) -> BrauerDiagram:
    return BrauerDiagram(r, r, [((BOT, i), (TOP, i)) for i in range(1, r + 1)])


def perm_diagram(images: Iterable[int]) -> BrauerDiagram:
    """Permutation diagram sending bottom i to top images[i-1]."""
    images = list(images)
    r = len(images)
    if sorted(images) != list(range(1, r + 1)):
        raise ValueError(f"not a permutation of 1..{r}: {images}")
    return BrauerDiagram(r, r, [((BOT, i), (TOP, w)) for i, w in enumerate(images, 1)])


def s_diagram(i: int, r: int) -> BrauerDiagram:
    """Simple crossing of strands i, i+1."""
    if not 1 <= i < r:
        raise IndexError(f"s_{i} needs 1 <= i < {r}")
    images = list(range(1, r + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return perm_diagram(images)


def e_diagram(i: int, r: int) -> BrauerDiagram:
    """Cap-cup (hook) on strands i, i+1."""
    if not 1 <= i < r:
        raise IndexError(f"e_{i} needs 1 <= i < {r}")
    pairs = [((BOT, i), (BOT, i + 1)), ((TOP, i), (TOP, i + 1))]
    pairs += [((BOT, k), (TOP, k)) for k in range(1, r + 1) if k not in (i, i + 1)]
    return BrauerDiagram(r, r, pairs)


def cap_diagram(i: int, r: int) -> BrauerDiagram:
    """(r -> r-2): joins bottom strands i, i+1, shifting the rest down."""
    if not 1 <= i < r:
        raise IndexError(f"cap_{i} needs 1 <= i < {r}")
    pairs = [((BOT, i), (BOT, i + 1))]
    top = 0
    for k in range(1, r + 1):
        if k in (i, i + 1):
            continue
        top += 1
        pairs.append(((BOT, k), (TOP, top)))
    return BrauerDiagram(r, r - 2, pairs)


def cup_diagram(i: int, r: int) -> BrauerDiagram:
    """(r -> r+2): inserts a new cup whose ends are top strands i, i+1."""
    if not 1 <= i <= r + 1:
        raise IndexError(f"cup_{i} needs 1 <= i <= {r + 1}")
    pairs = [((TOP, i), (TOP, i + 1))]
    bot = 0
    for j in range(1, r + 3):
        if j in (i, i + 1):
            continue
        bot += 1
        pairs.append(((BOT, bot), (TOP, j)))
    return BrauerDiagram(r, r + 2, pairs)


def cap0() -> BrauerDiagram:
    """The (2, 0) generator."""
    return BrauerDiagram(2, 0, [((BOT, 1), (BOT, 2))])


def cup0() -> BrauerDiagram:
    """The (0, 2) generator."""
    return BrauerDiagram(0, 2, [((TOP, 1), (TOP, 2))])


def x_cycle(i: int, j: int, r: int) -> BrauerDiagram:
    """The cycle X_ij: bottom i to top j, strands between shifted by one."""
    if not (1 <= i <= r and 1 <= j <= r):
        raise IndexError("strand index out of range")
    images = list(range(1, r + 1))
    images[i - 1] = j
    if i < j:
        for k in range(i + 1, j + 1):
            images[k - 1] = k - 1
    else:
        for k in range(j, i):
            images[k - 1] = k + 1
    return perm_diagram(images)


def compose_diagrams(upper: BrauerDiagram, lower: BrauerDiagram):
    """Stack ``lower`` below ``upper``; returns (diagram, free loop count)."""
    if lower.s != upper.r:
        raise ValueError(f"arity mismatch: {lower.r}->{lower.s} then {upper.r}->{upper.s}")
    m = lower.s
    used = [False] * (m + 1)
    pairs = []
    seen = set()
    for side0, p0 in [("L", (BOT, i)) for i in range(1, lower.r + 1)] + [
        ("U", (TOP, j)) for j in range(1, upper.s + 1)
    ]:
        if (side0, p0) in seen:
            continue
        side, pt = side0, p0
        while True:
            q = lower.partner(pt) if side == "L" else upper.partner(pt)
            if side == "L" and q[0] == BOT:
                end = ("L", q)
                break
            if side == "U" and q[0] == TOP:
                end = ("U", q)
                break
            j = q[1]
            used[j] = True
            side, pt = ("U", (BOT, j)) if side == "L" else ("L", (TOP, j))
        seen.add((side0, p0))
        seen.add(end)
        res = lambda sd, p: (BOT, p[1]) if sd == "L" else (TOP, p[1])
        pairs.append((res(side0, p0), res(*end)))

    loops = 0
    for j0 in range(1, m + 1):
        if used[j0]:
            continue
        loops += 1
        used[j0] = True
        side, pt = "U", (BOT, j0)
        while True:
            q = upper.partner(pt) if side == "U" else lower.partner(pt)
            j = q[1]
            if side == "L" and j == j0:
                break
            used[j] = True
            side, pt = ("L", (TOP, j)) if side == "U" else ("U", (BOT, j))
    return BrauerDiagram(lower.r, upper.s, pairs), loops


def tensor_diagrams(a: BrauerDiagram, b: BrauerDiagram) -> BrauerDiagram:
    """Juxtaposition with ``a`` on the left; ``b``'s labels are shifted."""
    shift = lambda p: (p[0], p[1] + (a.r if p[0] == BOT else a.s))
    pairs = list(a.pairs) + [(shift(x), shift(y)) for x, y in b.pairs]
    return BrauerDiagram(a.r + b.r, a.s + b.s, pairs)


def is_planar(d: BrauerDiagram) -> bool:
    """True iff no two pairs interleave in the rectangle boundary order."""
    pos = {}
    k = 0
    for i in range(1, d.r + 1):
        pos[(BOT, i)] = k
        k += 1
    for j in range(d.s, 0, -1):
        pos[(TOP, j)] = k
        k += 1
    spans = [tuple(sorted((pos[a], pos[b]))) for a, b in d.pairs]
    for idx, (a, b) in enumerate(spans):
        for c, dd in spans[idx + 1 :]:
            if (a < c < b < dd) or (c < a < dd < b):
                return False
    return True


class BrauerElement:
    """A finite linear combination of (r, s) Brauer diagrams.

    Coefficients can be anything ring-like (Fraction, Poly, RatFunc); zero
    coefficients are pruned on construction.
    """

    __slots__ = ("r", "s", "terms")

    def __init__(self, r: int, s: int, terms=None):
        self.r, self.s = r, s
        clean = {}
        if terms:
            for dgm, coeff in terms.items():
                if dgm.r != r or dgm.s != s:
                    raise ValueError("mixed arities in BrauerElement")
                if isinstance(coeff, int):
                    coeff = Fraction(coeff)
                if coeff:
                    clean[dgm] = clean.get(dgm, 0) + coeff if dgm in clean else coeff
        self.terms = {d: c for d, c in clean.items() if c}

    @staticmethod
    def from_diagram(d: BrauerDiagram, coeff=1) -> "BrauerElement":
        return BrauerElement(d.r, d.s, {d: Poly.lift(coeff) if isinstance(coeff, (int, Fraction)) else coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def map_coefficients(self, f) -> "BrauerElement":
        return BrauerElement(self.r, self.s, {d: f(c) for d, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, BrauerDiagram):
            other = BrauerElement.from_diagram(other)
        if self.r != other.r or self.s != other.s:
            raise ValueError("arity mismatch in sum")
        terms = dict(self.terms)
        for d, c in other.terms.items():
            acc = terms.get(d, 0) + c
            if acc:
                terms[d] = acc
            else:
                terms.pop(d, None)
        out = BrauerElement.__new__(BrauerElement)
        out.r, out.s, out.terms = self.r, self.s, terms
        return out

    def __neg__(self):
        return self.map_coefficients(lambda c: -c)

    def __sub__(self, other):
        if isinstance(other, BrauerDiagram):
            other = BrauerElement.from_diagram(other)
        return self + (-other)

    def scale(self, scalar) -> "BrauerElement":
        return BrauerElement(self.r, self.s, {d: c * scalar for d, c in self.terms.items()})

    def __rmul__(self, scalar):
        if isinstance(scalar, BrauerElement):
            return NotImplemented
        return self.scale(scalar)

    def __mul__(self, other):
        """Composition ``self o other`` (other applied first)."""
        if isinstance(other, BrauerDiagram):
            other = BrauerElement.from_diagram(other)
        if isinstance(other, BrauerElement):
            return compose(self, other)
        return self.scale(other)

    def tensor(self, other) -> "BrauerElement":
        if isinstance(other, BrauerDiagram):
            other = BrauerElement.from_diagram(other)
        terms = {}
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                d = tensor_diagrams(d1, d2)
                acc = terms.get(d, 0) + c1 * c2
                if acc:
                    terms[d] = acc
                else:
                    terms.pop(d, None)
        return BrauerElement(self.r + other.r, self.s + other.s, terms)

    def __eq__(self, other):
        if isinstance(other, BrauerDiagram):
            other = BrauerElement.from_diagram(other)
        if not isinstance(other, BrauerElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.r, self.s, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return f"BrauerElement({self.r}->{self.s}: 0)"
        body = " + ".join(f"({c})*{d!r}" for d, c in self.terms.items())
        return f"BrauerElement({body})"


def elem(d: BrauerDiagram) -> BrauerElement:
    return BrauerElement.from_diagram(d)


def compose(upper, lower) -> BrauerElement:
    """Bilinear composition; every free loop contributes a factor of delta."""
    if isinstance(upper, BrauerDiagram):
        upper = elem(upper)
    if isinstance(lower, BrauerDiagram):
        lower = elem(lower)
    if lower.s != upper.r:
        raise ValueError(f"arity mismatch: {lower.r}->{lower.s} then {upper.r}->{upper.s}")
    terms = {}
    for du, cu in upper.terms.items():
        for dl, cl in lower.terms.items():
            d, loops = compose_diagrams(du, dl)
            c = cu * cl
            if loops:
                c = c * delta**loops
            acc = terms.get(d, 0) + c
            if acc:
                terms[d] = acc
            else:
                terms.pop(d, None)
    return BrauerElement(lower.r, upper.s, terms)


def tensor(a, b) -> BrauerElement:
    if isinstance(a, BrauerDiagram):
        a = elem(a)
    if isinstance(b, BrauerDiagram):
        b = elem(b)
    return a.tensor(b)


def h_element(i: int, r: int) -> BrauerElement:
    """H_i = s_i - e_i."""
    return elem(s_diagram(i, r)) - elem(e_diagram(i, r))


def hook_diagram(i: int, j: int, r: int) -> BrauerDiagram:
    """Bottom i paired with bottom j, same on top, all other strands straight."""
    if not 1 <= i < j <= r:
        raise IndexError("need 1 <= i < j <= r")
    pairs = [((BOT, i), (BOT, j)), ((TOP, i), (TOP, j))]
    pairs += [((BOT, k), (TOP, k)) for k in range(1, r + 1) if k not in (i, j)]
    return BrauerDiagram(r, r, pairs)


def transposition_diagram(i: int, j: int, r: int) -> BrauerDiagram:
    images = list(range(1, r + 1))
    images[i - 1], images[j - 1] = j, i
    return perm_diagram(images)


def h_pair(i: int, j: int, r: int) -> BrauerElement:
    """H_ij, the transported H_i joining strands i and j."""
    if not 1 <= i < j <= r:
        raise IndexError("need 1 <= i < j <= r")
    return elem(transposition_diagram(i, j, r)) - elem(hook_diagram(i, j, r))


def generators(r: int) -> dict:
    """The named generating family of B_r(delta)."""
    fam = {"id": elem(identity(r))}
    for i in range(1, r):
        fam[f"s{i}"] = elem(s_diagram(i, r))
        fam[f"e{i}"] = elem(e_diagram(i, r))
        fam[f"H{i}"] = h_element(i, r)
        fam[f"cap{i}"] = elem(cap_diagram(i, r))
        fam[f"cup{i}"] = elem(cup_diagram(i, r))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            fam[f"H{i}{j}"] = h_pair(i, j, r)
            fam[f"X{i}{j}"] = elem(x_cycle(i, j, r))
            fam[f"X{j}{i}"] = elem(x_cycle(j, i, r))
    return fam


# -- factorization into elementary layers ----------------------------------


def _cap_phase(diagram: BrauerDiagram, frontier: list):
    """Emit swaps and caps removing all pairs internal to ``frontier``."""
    layers = []
    frontier = list(frontier)
    while True:
        best = None
        index = {p: k for k, p in enumerate(frontier)}
        for u, p in enumerate(frontier):
            v = index.get(diagram.partner(p))
            if v is not None and v > u and (best is None or v - u < best[1] - best[0]):
                best = (u, v)
        if best is None:
            return layers, frontier
        u, v = best
        n = len(frontier)
        for k in range(v - 1, u, -1):
            layers.append(("s", k + 1, n))
            frontier[k], frontier[k + 1] = frontier[k + 1], frontier[k]
        layers.append(("cap", u + 1, n))
        del frontier[u + 1]
        del frontier[u]


def factor_layers(d: BrauerDiagram) -> list:
    """Factor ``d`` into elementary layers (bottom to top), loop-free.

    Each layer is ('s', i, n), ('cap', i, n) or ('cup', i, n) where n is the
    layer's input arity; composing the layers reproduces ``d`` exactly.
    """
    bottom_layers, low_frontier = _cap_phase(d, [(BOT, i) for i in range(1, d.r + 1)])
    top_caps, high_frontier = _cap_phase(
        d.transpose(), [(BOT, j) for j in range(1, d.s + 1)]
    )
    # transpose the top phase: reverse order, caps become cups
    top_layers = []
    for kind, i, n in reversed(top_caps):
        top_layers.append(("s", i, n) if kind == "s" else ("cup", i, n - 2))
    # middle permutation: low_frontier[u] must connect to high_frontier slot
    target = {p: w for w, p in enumerate(high_frontier)}
    images = [target[(BOT, d.partner(p)[1])] for p in low_frontier]
    mid_layers = []
    n = len(images)
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            if images[k] > images[k + 1]:
                images[k], images[k + 1] = images[k + 1], images[k]
                mid_layers.append(("s", k + 1, n))
                changed = True
    return bottom_layers + mid_layers + top_layers


def layer_diagram(kind: str, i: int, n: int) -> BrauerDiagram:
    if kind == "s":
        return s_diagram(i, n)
    if kind == "cap":
        return cap_diagram(i, n) if n > 2 else cap0()
    if kind == "cup":
        return cup_diagram(i, n) if n > 0 else cup0()
    raise ValueError(kind)


def compose_layers(layers, r: int) -> BrauerElement:
    acc = elem(identity(r))
    for kind, i, n in layers:
        acc = compose(layer_diagram(kind, i, n), acc)
    return acc


# -- verification reports ---------------------------------------------------


def verify_h_skew(r: int = 2) -> Report:
    """Skew symmetry of H and its capped consequences, at degree r."""
    if r < 2:
        raise ValueError("need r >= 2")
    rep = Report(f"h-skew r={r}")
    pad = identity(r - 2) if r > 2 else None

    def wide(el22: BrauerElement) -> BrauerElement:
        return el22 if pad is None else el22.tensor(elem(pad))

    h = h_element(1, 2)
    i1 = elem(identity(1))
    # bend H around: (I (x) cap (x) I) (X (x) H) (I (x) cup (x) I) = -H
    mid_cap = tensor(tensor(i1, elem(cap0())), i1)
    mid_cup = tensor(tensor(i1, elem(cup0())), i1)
    lowered = compose(mid_cap, compose(tensor(elem(s_diagram(1, 2)), h), mid_cup))
    rep.expect_zero("bent-H equals -H", wide(lowered + h))

    x = elem(s_diagram(1, 2))
    lowered_x = compose(mid_cap, compose(tensor(x, x), mid_cup))
    rep.add("sanity: X is not skew", not (lowered_x + x).is_zero())

    cap = elem(cap0())
    cup = elem(cup0())
    one_minus_delta = Poly.const(1) - delta
    rep.expect_zero("cap o H = (1-delta) cap", compose(cap, h) - cap.scale(one_minus_delta))
    rep.expect_zero("H o cup = (1-delta) cup", compose(h, cup) - cup.scale(one_minus_delta))

    # partial (Markov) closure of H vanishes
    closed = compose(
        tensor(i1, cap),
        compose(tensor(h, i1), tensor(i1, cup)),
    )
    rep.expect_zero("partial closure of H is 0", closed)

    for i in range(1, r):
        h_i = h_element(i, r)
        e_i = elem(e_diagram(i, r))
        s_i = elem(s_diagram(i, r))
        one = elem(identity(r))
        rep.expect_zero(
            f"(delta-2) e_{i} = H_{i}^2 - 1",
            e_i.scale(delta - 2) - (compose(h_i, h_i) - one),
        )
        rep.expect_zero(
            f"(delta-2) s_{i} = H_{i}^2 + (delta-2)H_{i} - 1",
            s_i.scale(delta - 2) - (compose(h_i, h_i) + h_i.scale(delta - 2) - one),
        )
        rep.expect_zero(
            f"H_{i} e_{i} = (1-delta) e_{i}", compose(h_i, e_i) - e_i.scale(one_minus_delta)
        )
        rep.expect_zero(
            f"e_{i} H_{i} = (1-delta) e_{i}", compose(e_i, h_i) - e_i.scale(one_minus_delta)
        )
    return rep


def verify_chord_in_brauer(r: int) -> Report:
    """All chord-diagram relation instances for t_ij -> H_ij(r), symbolic delta."""
    from . import chord

    assign = {(i, j): h_pair(i, j, r) for i in range(1, r + 1) for j in range(i + 1, r + 1)}
    return chord.check_assignment(r, assign, title=f"chord relations in B_{r}(delta)")
