"""Morphisms of the Brauer category with a pole, as layered words.

A word is a bottom-to-top stack of layers, each either a plain Brauer diagram
or a single pole connector attached to one strand.  Normalisation merges
adjacent Brauer layers, slides Brauer layers below connectors along through
strands, removes free loops as powers of delta, and extracts recognisable
closed components whose connectors sit consecutively on the pole as
polynomials in the closed-loop generators z2, z4, ...

Equality of normalised words is syntactic only; the category has no known
diagram basis, so equality claims are certified through the strand-adding
functor to the plain Brauer category and through representation functors
(see ``functors.oracle_equal``).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import brauer
from .brauer import BOT, TOP, BrauerDiagram, BrauerElement
from .report import Report
from .scalars import DELTA, Poly, delta, zvar

HVAR = "h"


# -- layers and words --------------------------------------------------------


def connector(n: int, attach: int):
    """Layer touching the pole with strand ``attach`` of ``n``."""
    if not 1 <= attach <= n:
        raise IndexError(f"connector strand {attach} out of 1..{n}")
    return ("c", n, attach)


def blayer(d: BrauerDiagram):
    return ("b", d)


def layer_arity(layer):
    if layer[0] == "b":
        return layer[1].r, layer[1].s
    return layer[1], layer[1]


class PolarWord:
    """A chained stack of layers; order = number of connector layers."""

    __slots__ = ("r", "s", "layers", "_hash")

    def __init__(self, r: int, layers):
        layers = tuple(layers)
        cur = r
        for lay in layers:
            a, b = layer_arity(lay)
            if a != cur:
                raise ValueError(f"layer arity break: expected {cur}, got {a} in {lay}")
            cur = b
        self.r, self.s, self.layers = r, cur, layers
        self._hash = hash((r, cur, layers))

    @property
    def order(self) -> int:
        return sum(1 for lay in self.layers if lay[0] == "c")

    def __eq__(self, other):
        if not isinstance(other, PolarWord):
            return NotImplemented
        return (self.r, self.s, self.layers) == (other.r, other.s, other.layers)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        if not self.layers:
            return f"<word id_{self.r}>"
        bits = []
        for lay in self.layers:
            if lay[0] == "c":
                bits.append(f"c{lay[2]}/{lay[1]}")
            else:
                bits.append(repr(lay[1]))
        return f"<word {self.r}->{self.s}: " + " ; ".join(bits) + ">"


class PolarElement:
    """A finite linear combination of polar words with Poly coefficients."""

    __slots__ = ("r", "s", "terms")

    def __init__(self, r: int, s: int, terms=None):
        self.r, self.s = r, s
        clean = {}
        if terms:
            for w, c in terms.items():
                if (w.r, w.s) != (r, s):
                    raise ValueError("mixed arities in PolarElement")
                c = Poly.lift(c)
                if not c.is_zero():
                    clean[w] = clean[w] + c if w in clean else c
        self.terms = {w: c for w, c in clean.items() if not c.is_zero()}

    @staticmethod
    def from_word(w: PolarWord, coeff=1) -> "PolarElement":
        return PolarElement(w.r, w.s, {w: Poly.lift(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if isinstance(other, PolarWord):
            other = PolarElement.from_word(other)
        if (self.r, self.s) != (other.r, other.s):
            raise ValueError("arity mismatch in sum")
        terms = dict(self.terms)
        for w, c in other.terms.items():
            acc = terms.get(w, Poly.zero()) + c
            if acc.is_zero():
                terms.pop(w, None)
            else:
                terms[w] = acc
        out = PolarElement.__new__(PolarElement)
        out.r, out.s, out.terms = self.r, self.s, terms
        return out

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, PolarWord):
            other = PolarElement.from_word(other)
        return self + (-other)

    def scale(self, c) -> "PolarElement":
        c = Poly.lift(c)
        return PolarElement(self.r, self.s, {w: v * c for w, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (PolarElement, PolarWord)):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, other):
        """Composition ``self o other`` (other applied first, drawn below)."""
        if isinstance(other, (PolarElement, PolarWord)):
            return word_compose(self, other)
        return self.scale(other)

    def __eq__(self, other):
        """Syntactic equality of normalised words (tier one of three)."""
        if isinstance(other, PolarWord):
            other = PolarElement.from_word(other)
        if not isinstance(other, PolarElement):
            return NotImplemented
        return (normalize(self) - normalize(other)).is_zero()

    def __hash__(self):
        return hash((self.r, self.s, frozenset(self.terms.items())))

    def map_coefficients(self, f) -> "PolarElement":
        return PolarElement(self.r, self.s, {w: f(c) for w, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return f"PolarElement({self.r}->{self.s}: 0)"
        return " + ".join(f"({c})*{w!r}" for w, c in self.terms.items())


# -- named elements ----------------------------------------------------------


def identity_element(r: int) -> PolarElement:
    return PolarElement.from_word(PolarWord(r, ()))


def pole_identity() -> PolarElement:
    return identity_element(0)


def iota(a) -> PolarElement:
    """Canonical embedding of plain Brauer data as order-zero words."""
    if isinstance(a, BrauerDiagram):
        a = brauer.elem(a)
    terms = {}
    for d, c in a.terms.items():
        w = PolarWord(d.r, () if d == brauer.identity(d.r) else (blayer(d),))
        terms[w] = terms.get(w, Poly.zero()) + Poly.lift(c)
    return PolarElement(a.r, a.s, terms)


def h_connector(r: int = 1, attach: int = 1) -> PolarElement:
    """The generator touching the pole with strand ``attach`` of ``r``."""
    return PolarElement.from_word(PolarWord(r, (connector(r, attach),)))


def h0i(i: int, r: int) -> PolarElement:
    return h_connector(r, i)


def hij(i: int, j: int, r: int) -> PolarElement:
    """The order-zero two-diagram combination joining strands i and j."""
    return iota(brauer.h_pair(i, j, r))


def theta(j: int, r: int) -> PolarElement:
    """Theta_j(r): the pole connector at strand j plus all H_aj with a < j."""
    if not 1 <= j <= r:
        raise IndexError("need 1 <= j <= r")
    acc = h0i(j, r)
    for a in range(1, j):
        acc = acc + hij(a, j, r)
    return acc


def cap_element(r: int = 2) -> PolarElement:
    """The (2, 0) plain cap beside the pole."""
    return iota(brauer.cap0())


def cup_element(r: int = 2) -> PolarElement:
    """The (0, 2) plain cup beside the pole."""
    return iota(brauer.cup0())


def x0_element() -> PolarElement:
    return iota(brauer.s_diagram(1, 2))


def z_element(ell: int) -> PolarElement:
    """The closed loop touching the pole ``ell`` times, as an unreduced word."""
    if ell < 0:
        raise ValueError("need ell >= 0")
    layers = [blayer(brauer.cup0())]
    layers += [connector(2, 1)] * ell
    layers.append(blayer(brauer.cap0()))
    return PolarElement.from_word(PolarWord(0, layers))


def z_word_element(signature) -> PolarElement:
    """The closed word with connector runs given by ``signature`` (top run first)."""
    layers = [blayer(brauer.cup0())]
    runs = list(reversed(signature))
    for idx, k in enumerate(runs):
        if idx:
            layers.append(blayer(brauer.s_diagram(1, 2)))
        layers += [connector(2, 1)] * k
    layers.append(blayer(brauer.cap0()))
    return PolarElement.from_word(PolarWord(0, layers))


def h_transpose_word(ell: int = 1) -> PolarElement:
    """The strand bent around the connector block: transpose of the ell-th power."""
    if ell < 0:
        raise ValueError("need ell >= 0")
    i1 = brauer.identity(1)
    up = brauer.tensor_diagrams(i1, brauer.cup0())
    down = brauer.tensor_diagrams(brauer.cap0(), i1)
    layers = [blayer(up)] + [connector(3, 2)] * ell + [blayer(down)]
    return PolarElement.from_word(PolarWord(1, layers))


# -- composition and tensor --------------------------------------------------


def word_compose(upper, lower) -> PolarElement:
    """Vertical composition: stack ``lower`` below ``upper`` and normalise."""
    if isinstance(upper, PolarWord):
        upper = PolarElement.from_word(upper)
    if isinstance(lower, PolarWord):
        lower = PolarElement.from_word(lower)
    if lower.s != upper.r:
        raise ValueError(f"arity mismatch: {lower.r}->{lower.s} then {upper.r}->{upper.s}")
    terms = {}
    for wl, cl in lower.terms.items():
        for wu, cu in upper.terms.items():
            w = PolarWord(wl.r, wl.layers + wu.layers)
            c = cl * cu
            acc = terms.get(w, Poly.zero()) + c
            if acc.is_zero():
                terms.pop(w, None)
            else:
                terms[w] = acc
    return normalize(PolarElement(lower.r, upper.s, terms))


def tensor_right(a, b) -> PolarElement:
    """Horizontal multiplication: juxtapose plain Brauer data on the right."""
    if isinstance(a, PolarWord):
        a = PolarElement.from_word(a)
    if isinstance(b, BrauerDiagram):
        b = brauer.elem(b)
    terms = {}
    for w, cw in a.terms.items():
        for d, cd in b.terms.items():
            layers = []
            if d != brauer.identity(d.r):
                layers.append(blayer(brauer.tensor_diagrams(brauer.identity(w.r), d)))
            for lay in w.layers:
                if lay[0] == "b":
                    layers.append(blayer(brauer.tensor_diagrams(lay[1], brauer.identity(d.s))))
                else:
                    layers.append(connector(lay[1] + d.s, lay[2]))
            word = PolarWord(w.r + d.r, layers)
            c = cw * Poly.lift(cd) if not isinstance(cd, Poly) else cw * cd
            acc = terms.get(word, Poly.zero()) + c
            if acc.is_zero():
                terms.pop(word, None)
            else:
                terms[word] = acc
    return normalize(PolarElement(a.r + b.r, a.s + b.s, terms))


# -- closed-word calculus ----------------------------------------------------


def _z_symbol_value(k: int) -> Poly:
    """Value of the clean closed loop with k pole touches."""
    if k == 0:
        return delta
    if k == 1:
        return Poly.zero()
    if k % 2 == 0:
        return Poly.var(zvar(k))
    return odd_z_polynomial(k)


@lru_cache(maxsize=None)
def _zclose(word: tuple) -> Poly:
    """Exact value of a closed word over the symbols h1, h2, x, e.

    The word is read bottom to top between the closing cup and cap.  h1/h2 are
    the pole connectors on the two strands, x the crossing, e the hook.
    """
    # crossings conjugate everything above them and die at the cap
    if "x" in word:
        out = []
        flag = 0
        for sym in word:
            if sym == "x":
                flag ^= 1
            elif flag and sym in ("h1", "h2"):
                out.append("h2" if sym == "h1" else "h1")
            else:
                out.append(sym)
        return _zclose(tuple(out))
    # hooks split the closed curve into two independent closed curves
    if "e" in word:
        k = word.index("e")
        return _zclose(word[:k]) * _zclose(word[k + 1 :])
    # connectors on the far strand bend around the cup or the cap: sign flip
    if word and word[0] == "h2":
        return -_zclose(("h1",) + word[1:])
    if word and word[-1] == "h2":
        return -_zclose(word[:-1] + ("h1",))
    # sink remaining far-strand connectors with the exact four-term relation
    for k in range(len(word) - 1):
        if word[k] == "h1" and word[k + 1] == "h2":
            pre, post = word[:k], word[k + 2 :]
            return (
                _zclose(pre + ("h2", "h1") + post)
                + _zclose(pre + ("x", "h1") + post)
                - _zclose(pre + ("e", "h1") + post)
                - _zclose(pre + ("h1", "x") + post)
                + _zclose(pre + ("h1", "e") + post)
            )
    # now a clean run of near-strand connectors
    return _z_symbol_value(len(word))


def z_word_reduce(*signature) -> Poly:
    """Value of the closed word with connector runs k1, ..., kp separated by crossings.

    Returns a polynomial in delta and the even z generators; the run count is
    read from the top of the pole downwards.
    """
    if len(signature) == 1 and isinstance(signature[0], (tuple, list)):
        signature = tuple(signature[0])
    if not signature or any(k < 1 for k in signature):
        raise ValueError("signature must be nonempty with positive runs")
    symbols = []
    for idx, k in enumerate(reversed(signature)):
        if idx:
            symbols.append("x")
        symbols += ["h1"] * k
    return _zclose(tuple(symbols))


@lru_cache(maxsize=None)
def ht_transpose_poly(ell: int) -> Poly:
    """The bent power of the pole generator in the commutative (1,1) model.

    T_0 = 1 and T_{l+1} = T_l ((1 - delta) - h) + (z_l - h^l), with z_0 = delta,
    z_1 = 0 and odd z's eliminated through their even expressions.
    """
    if ell < 0:
        raise ValueError("need ell >= 0")
    h = Poly.var(HVAR)
    T = Poly.one()
    for l in range(ell):
        T = T * ((Poly.one() - delta) - h) + (_z_symbol_value(l) - h**l)
    return T


@lru_cache(maxsize=None)
def odd_z_polynomial(ell: int) -> Poly:
    """Expression of an odd z generator in delta and the smaller even ones."""
    if ell < 1 or ell % 2 == 0:
        raise ValueError("need odd ell >= 1")
    if ell == 1:
        return Poly.zero()
    T = ht_transpose_poly(ell)
    lead = T.coefficient(HVAR, ell)
    if lead != Poly.const(-1):
        raise AssertionError(f"unexpected leading coefficient {lead}")
    acc = Poly.zero()
    for i in range(ell):
        ci = T.coefficient(HVAR, i)
        if not ci.is_zero():
            acc = acc + ci * _z_symbol_value(i)
    return acc / 2


def close_transpose_poly(ell: int) -> Poly:
    """Close the (1,1) transpose polynomial into a (0,0) value."""
    T = ht_transpose_poly(ell)
    acc = Poly.zero()
    for i in range(T.degree(HVAR) + 1):
        ci = T.coefficient(HVAR, i)
        if not ci.is_zero():
            acc = acc + ci * _z_symbol_value(i)
    return acc


def eliminate_odd_z(p: Poly) -> Poly:
    """Substitute away any odd z indeterminates in a coefficient."""
    odd = {}
    for name in p.variables():
        if name.startswith("z"):
            ell = int(name[1:])
            if ell % 2:
                odd[name] = odd_z_polynomial(ell)
    return p.substitute(odd) if odd else p


# -- normalisation -----------------------------------------------------------


def _merge_layers(layers, r):
    """Drop identity layers, fuse adjacent Brauer layers, slide through strands."""
    coeff = Poly.one()
    layers = list(layers)
    changed = True
    while changed:
        changed = False
        k = 0
        while k < len(layers):
            lay = layers[k]
            if lay[0] == "b" and lay[1] == brauer.identity(lay[1].r):
                del layers[k]
                changed = True
                continue
            if lay[0] == "b" and k + 1 < len(layers) and layers[k + 1][0] == "b":
                d, loops = brauer.compose_diagrams(layers[k + 1][1], lay[1])
                if loops:
                    coeff = coeff * delta**loops
                layers[k : k + 2] = [blayer(d)]
                changed = True
                continue
            if (
                lay[0] == "c"
                and k + 1 < len(layers)
                and layers[k + 1][0] == "b"
            ):
                d = layers[k + 1][1]
                attach = lay[2]
                partner = d.partner((BOT, attach))
                if partner[0] == TOP:
                    layers[k : k + 2] = [blayer(d), connector(d.s, partner[1])]
                    changed = True
                    continue
            k += 1
    return coeff, layers


def _component_data(layers, r, s):
    """Union-find strand components plus pole pins for a layer stack."""
    parent: dict = {}

    def find(x):
        while parent.get(x, x) != x:
            parent[x] = parent.get(parent[x], parent[x])
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[rx] = ry

    arities = [r]
    for lay in layers:
        arities.append(layer_arity(lay)[1])
    pins = []  # (layer index, port)
    for k, lay in enumerate(layers):
        if lay[0] == "b":
            for (sa, ia), (sb, ib) in lay[1].pairs:
                pa = (k, ia) if sa == BOT else (k + 1, ia)
                pb = (k, ib) if sb == BOT else (k + 1, ib)
                parent.setdefault(pa, pa)
                parent.setdefault(pb, pb)
                union(pa, pb)
        else:
            n, attach = lay[1], lay[2]
            for p in range(1, n + 1):
                parent.setdefault((k, p), (k, p))
                parent.setdefault((k + 1, p), (k + 1, p))
                union((k, p), (k + 1, p))
            pins.append((k, (k, attach)))
    comps: dict = {}
    for port in parent:
        comps.setdefault(find(port), set()).add(port)
    L = len(layers)
    boundary = {find((0, i)) for i in range(1, r + 1) if (0, i) in parent}
    boundary |= {find((L, j)) for j in range(1, s + 1) if (L, j) in parent}
    return comps, pins, boundary, find


def _restrict_word(layers, keep_positions):
    """Restrict each layer to the given per-level position sets, re-ranked."""
    out = []
    for k, lay in enumerate(layers):
        lo = sorted(keep_positions[k])
        hi = sorted(keep_positions[k + 1])
        lo_rank = {p: i + 1 for i, p in enumerate(lo)}
        hi_rank = {p: i + 1 for i, p in enumerate(hi)}
        if lay[0] == "b":
            pairs = []
            for (sa, ia), (sb, ib) in lay[1].pairs:
                a_in = ia in lo_rank if sa == BOT else ia in hi_rank
                if not a_in:
                    continue
                conv = lambda sd, i: (sd, lo_rank[i] if sd == BOT else hi_rank[i])
                pairs.append((conv(sa, ia), conv(sb, ib)))
            out.append(blayer(BrauerDiagram(len(lo), len(hi), pairs)))
        else:
            n, attach = lay[1], lay[2]
            if attach in lo_rank:
                out.append(connector(len(lo), lo_rank[attach]))
            elif lo:
                out.append(blayer(brauer.identity(len(lo))))
    return out


def _closed_component_value(sub_layers):
    """Value of a closed single component, or None if not a recognised shape."""
    _, sub = _merge_layers(sub_layers, 0)
    if not sub:
        return delta  # free loop
    if sub[0][0] != "b" or sub[0][1] != brauer.cup0():
        return None
    if sub[-1][0] != "b" or sub[-1][1] != brauer.cap0():
        return None
    symbols = []
    for lay in sub[1:-1]:
        if lay[0] == "c":
            if lay[1] != 2:
                return None
            symbols.append("h1" if lay[2] == 1 else "h2")
        else:
            d = lay[1]
            if d == brauer.s_diagram(1, 2):
                symbols.append("x")
            elif d == brauer.e_diagram(1, 2):
                symbols.append("e")
            elif d == brauer.identity(2):
                continue
            else:
                return None
    return _zclose(tuple(symbols))


def _extract_closed(layers, r, s):
    """Extract one recognisable closed component; None when nothing applies."""
    comps, pins, boundary, find = _component_data(layers, r, s)
    if not pins and all(root in boundary for root in comps):
        return None
    pin_roots = [find(port) for _, port in pins]
    for root, ports in comps.items():
        if root in boundary:
            continue
        mine = [i for i, pr in enumerate(pin_roots) if pr == root]
        if mine and mine != list(range(mine[0], mine[0] + len(mine))):
            continue  # pins interleave with another component: leave it alone
        keep = {}
        for k in range(len(layers) + 1):
            keep[k] = {p for (lev, p) in ports if lev == k}
        value = _closed_component_value(_restrict_word(layers, keep))
        if value is None:
            continue
        drop = {}
        arities = [r]
        for lay in layers:
            arities.append(layer_arity(lay)[1])
        for k in range(len(layers) + 1):
            drop[k] = {p for p in range(1, arities[k] + 1) if p not in keep[k]}
        rest = _restrict_word(layers, drop)
        return value, rest
    return None


def _normalize_word(word: PolarWord):
    coeff = Poly.one()
    layers = list(word.layers)
    while True:
        c, layers = _merge_layers(layers, word.r)
        coeff = coeff * c
        hit = _extract_closed(layers, word.r, word.s)
        if hit is None:
            break
        value, layers = hit
        coeff = coeff * value
        if coeff.is_zero():
            break
    return coeff, PolarWord(word.r, layers)


def normalize(element) -> PolarElement:
    """Fixed point of merging, sliding, loop removal and closed-loop extraction."""
    if isinstance(element, PolarWord):
        element = PolarElement.from_word(element)
    terms: dict = {}
    for w, c in element.terms.items():
        factor, nw = _normalize_word(w)
        c = eliminate_odd_z(c * factor)
        if c.is_zero():
            continue
        acc = terms.get(nw, Poly.zero()) + c
        if acc.is_zero():
            terms.pop(nw, None)
        else:
            terms[nw] = acc
    return PolarElement(element.r, element.s, terms)


# -- the strand-adding functor ------------------------------------------------


@lru_cache(maxsize=None)
def _varpi_z_scalar(ell: int) -> Poly:
    """Image of the closed ell-touch loop under the strand-adding functor.

    The pole becomes an ordinary strand, so the loop closes to a (1,1) plain
    Brauer element, necessarily a multiple of the identity strand.
    """
    i1 = brauer.elem(brauer.identity(1))
    h = brauer.h_element(1, 2)
    power = i1.tensor(i1)
    for _ in range(ell):
        power = brauer.compose(h, power)
    closed = brauer.compose(
        i1.tensor(brauer.elem(brauer.cap0())),
        brauer.compose(power.tensor(i1), i1.tensor(brauer.elem(brauer.cup0()))),
    )
    if closed.is_zero():
        return Poly.zero()
    [(d, c)] = list(closed.terms.items())
    assert d == brauer.identity(1)
    return Poly.lift(c)


def _varpi_substitute(p: Poly) -> Poly:
    bindings = {}
    for name in p.variables():
        if name.startswith("z"):
            bindings[name] = _varpi_z_scalar(int(name[1:]))
    return p.substitute(bindings) if bindings else p


def varpi(element) -> BrauerElement:
    """The functor adding the pole as a new leftmost ordinary strand."""
    if isinstance(element, PolarWord):
        element = PolarElement.from_word(element)
    total = BrauerElement(element.r + 1, element.s + 1, {})
    i1 = brauer.elem(brauer.identity(1))
    for w, c in element.terms.items():
        acc = brauer.elem(brauer.identity(w.r + 1))
        for lay in w.layers:
            if lay[0] == "b":
                op = i1.tensor(brauer.elem(lay[1]))
            else:
                n, attach = lay[1], lay[2]
                op = brauer.h_pair(1, attach + 1, n + 1)
            acc = brauer.compose(op, acc)
        total = total + acc.map_coefficients(lambda v: v * _varpi_substitute(c))
    return total


# -- relation suites ----------------------------------------------------------


def commutator(a: PolarElement, b: PolarElement) -> PolarElement:
    return word_compose(a, b) - word_compose(b, a)


def relation_suites(r: int) -> list:
    """All relator elements expected to vanish in the quotient, up to degree r.

    Returns (name, PolarElement) pairs; each should map to zero under the
    strand-adding functor and under every representation functor.
    """
    if not 2 <= r <= 4:
        raise ValueError("suites are sized for 2 <= r <= 4")
    suites = []
    pad = brauer.identity(r - 1)

    h01 = h0i(1, r) if r >= 1 else None
    if r >= 2:
        a, b, c = h0i(1, r), h0i(2, r), hij(1, 2, r)
        suites.append((f"four-term r={r}", commutator(a, b + c)))
        suites.append((f"sum-commutes r={r}", commutator(a + b, c)))
        suites.append((f"four-term-equivalent r={r}", commutator(b, a + c)))
    suites.append(
        (f"skew-symmetry r={r}", tensor_right(h_transpose_word(1) + h_connector(), pad))
    )
    h = h_connector()
    squared = PolarElement.from_word(PolarWord(1, (connector(1, 1), connector(1, 1))))
    suites.append(
        (
            f"bent-square r={r}",
            tensor_right(
                h_transpose_word(2) - squared - h.scale(delta - 2), pad
            ),
        )
    )
    for i in range(1, r + 1):
        for k in range(1, r + 1):
            for j in range(k + 1, r + 1):
                if i != k and i != j:
                    suites.append(
                        (f"mixed [h0{i}, h{k}{j}] r={r}", commutator(h0i(i, r), hij(k, j, r)))
                    )
    # the eight relations of the degree-r pole algebra
    thetas = {j: theta(j, r) for j in range(1, r + 1)}
    e = {k: iota(brauer.e_diagram(k, r)) for k in range(1, r)}
    sgen = {k: iota(brauer.s_diagram(k, r)) for k in range(1, r)}
    one = identity_element(r)
    if r >= 2:
        for ell in (1, 2, 3):
            lhs = e[1]
            for _ in range(ell):
                lhs = word_compose(lhs, thetas[1])
            lhs = word_compose(lhs, e[1])
            rhs = word_compose(tensor_right(z_element(ell), brauer.identity(r)), e[1])
            suites.append((f"closed-loop-capture l={ell} r={r}", lhs - rhs))
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            suites.append((f"theta-commute [{i},{j}] r={r}", commutator(thetas[i], thetas[j])))
    for k in range(1, r):
        for j in range(1, r + 1):
            if j not in (k, k + 1):
                suites.append((f"s{k}-theta{j} r={r}", commutator(sgen[k], thetas[j])))
                suites.append((f"e{k}-theta{j} r={r}", commutator(e[k], thetas[j])))
        suites.append(
            (
                f"swap-theta-step s{k} r={r}",
                word_compose(sgen[k], thetas[k])
                - word_compose(thetas[k + 1], sgen[k])
                - e[k]
                + one,
            )
        )
        suites.append(
            (
                f"theta-swap-step s{k} r={r}",
                word_compose(thetas[k], sgen[k])
                - word_compose(sgen[k], thetas[k + 1])
                - e[k]
                + one,
            )
        )
        both = thetas[k] + thetas[k + 1]
        suites.append(
            (
                f"hook-theta-sum e{k} r={r}",
                word_compose(e[k], both) - e[k].scale(Poly.one() - delta),
            )
        )
        suites.append(
            (
                f"theta-sum-hook e{k} r={r}",
                word_compose(both, e[k]) - e[k].scale(Poly.one() - delta),
            )
        )
    return suites


def verify_relation_suites_varpi(r: int) -> Report:
    """Every relator maps to zero in the plain Brauer category, symbolic delta."""
    rep = Report(f"pole relations under strand-adding functor, r={r}")
    for name, relator in relation_suites(r):
        rep.expect_zero(name, varpi(relator))
    return rep
