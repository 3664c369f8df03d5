"""The affine Temperley-Lieb quotient: exact normal forms over K[z2].

Basis diagrams are non-crossing matchings on the bent boundary order together
with a pole-ordered family of arcs that each touch the pole once.  Composition
stitches diagrams, removes free loops as powers of delta, evaluates closed
pole-touching loops through the z2 recursion, and contracts repeated touches
on one strand with the quadratic touch relation; the result lands back in the
standard basis.  delta stays symbolic (coefficients are rational functions in
delta and z2) until explicitly specialised; delta = 0, 2 are degenerate and
rejected on specialisation.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from . import brauer
from .brauer import BOT, TOP, BrauerDiagram
from .polar import PolarElement, PolarWord
from .report import Report
from .scalars import LAM, Poly, RatFunc, delta, lam, zvar

Z2 = Poly.var(zvar(2))


class ATLDiagram:
    """A standard basis diagram: plain arcs plus pole-ordered pinned arcs.

    Points are (0, i) on the bottom and (1, j) on the top; ``pinned[k]`` is the
    arc whose pole touch sits at height k (bottom of the pole first).
    """

    __slots__ = ("r", "s", "plain", "pinned", "_hash")

    def __init__(self, r: int, s: int, plain, pinned=()):
        self.r, self.s = r, s
        self.plain = frozenset(frozenset(a) for a in plain)
        self.pinned = tuple(frozenset(a) for a in pinned)
        cover = [p for a in self.plain for p in a] + [p for a in self.pinned for p in a]
        expected = {(BOT, i) for i in range(1, r + 1)} | {(TOP, j) for j in range(1, s + 1)}
        if len(cover) != len(expected) or set(cover) != expected:
            raise ValueError("arcs do not partition the boundary points")
        self._hash = hash((r, s, self.plain, self.pinned))

    @property
    def t(self) -> int:
        return len(self.pinned)

    def __eq__(self, other):
        if not isinstance(other, ATLDiagram):
            return NotImplemented
        return (self.r, self.s, self.plain, self.pinned) == (
            other.r,
            other.s,
            other.plain,
            other.pinned,
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        def pname(p):
            return f"{'b' if p[0] == BOT else 't'}{p[1]}"

        def aname(a):
            return "".join(sorted(pname(p) for p in a))

        plain = " ".join(sorted(aname(a) for a in self.plain))
        pins = " ".join(aname(a) for a in self.pinned)
        return f"<atl {self.r}->{self.s} [{plain}] pole[{pins}]>"


def atl_identity(r: int) -> ATLDiagram:
    return ATLDiagram(r, r, [((BOT, i), (TOP, i)) for i in range(1, r + 1)])


class ATLElement:
    """A K[z2]-linear combination of standard diagrams (RatFunc coefficients)."""

    __slots__ = ("r", "s", "terms")

    def __init__(self, r: int, s: int, terms=None):
        self.r, self.s = r, s
        clean: dict = {}
        if terms:
            for d, c in terms.items():
                if (d.r, d.s) != (r, s):
                    raise ValueError("mixed arities in ATLElement")
                c = RatFunc.lift(c)
                if not c.is_zero():
                    clean[d] = clean[d] + c if d in clean else c
        self.terms = {d: c for d, c in clean.items() if not c.is_zero()}

    @staticmethod
    def from_diagram(d: ATLDiagram, coeff=1) -> "ATLElement":
        return ATLElement(d.r, d.s, {d: RatFunc.lift(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if isinstance(other, ATLDiagram):
            other = ATLElement.from_diagram(other)
        if (self.r, self.s) != (other.r, other.s):
            raise ValueError("arity mismatch")
        terms = dict(self.terms)
        for d, c in other.terms.items():
            acc = terms.get(d, RatFunc.lift(0)) + c
            if acc.is_zero():
                terms.pop(d, None)
            else:
                terms[d] = acc
        out = ATLElement.__new__(ATLElement)
        out.r, out.s, out.terms = self.r, self.s, terms
        return out

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        if isinstance(other, ATLDiagram):
            other = ATLElement.from_diagram(other)
        return self + (-other)

    def scale(self, c) -> "ATLElement":
        c = RatFunc.lift(c)
        return ATLElement(self.r, self.s, {d: v * c for d, v in self.terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (ATLElement, ATLDiagram)):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, other):
        if isinstance(other, (ATLElement, ATLDiagram)):
            return atl_compose(self, other)
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, ATLDiagram):
            other = ATLElement.from_diagram(other)
        if not isinstance(other, ATLElement):
            return NotImplemented
        return (self - other).is_zero()

    def __hash__(self):
        return hash((self.r, self.s, frozenset(self.terms.items())))

    def map_coefficients(self, f) -> "ATLElement":
        return ATLElement(self.r, self.s, {d: f(c) for d, c in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return f"ATLElement({self.r}->{self.s}: 0)"
        return " + ".join(f"({c})*{d!r}" for d, c in self.terms.items())


# -- closed-loop values over K[z2] -------------------------------------------


@lru_cache(maxsize=None)
def loop_value(ell: int) -> RatFunc:
    """Value of a closed loop with ``ell`` pole touches, reduced to delta and z2."""
    if ell == 0:
        return RatFunc(delta)
    if ell == 1:
        return RatFunc(0)
    if ell == 2:
        return RatFunc(Z2)
    half = RatFunc((delta - 2)) / 2
    return -half * loop_value(ell - 1) + (RatFunc(Z2) / delta) * loop_value(ell - 2)


def polar_coeff_to_ratfunc(c: Poly) -> RatFunc:
    """Convert a pole-category coefficient: higher z generators reduce to z2."""
    subs = {}
    for name in c.variables():
        if name.startswith("z") and name != zvar(2):
            subs[name] = loop_value(int(name[1:]))
    if not subs:
        return RatFunc(c)
    total = RatFunc(0)
    for mono, coeff in c.terms.items():
        term = RatFunc(Poly.const(coeff))
        for var, exp in mono:
            base = subs.get(var, RatFunc(Poly.var(var)))
            for _ in range(exp):
                term = term * base
        total = total + term
    return total


# -- the standard basis -------------------------------------------------------


def _bent_points(r: int, s: int) -> list:
    return [(TOP, j) for j in range(1, s + 1)] + [(BOT, i) for i in range(r, 0, -1)]


def _nc_matchings(entries: list):
    """Non-crossing perfect matchings; pin halves may only pair with points."""
    if not entries:
        yield []
        return
    first = entries[0]
    for k in range(1, len(entries), 2):
        other = entries[k]
        if first[0] == "pin" and other[0] == "pin":
            continue
        inner = entries[1:k]
        outer = entries[k + 1 :]
        for mi in _nc_matchings(inner):
            for mo in _nc_matchings(outer):
                yield [(first, other)] + mi + mo


def standard_basis(r: int, s: int, t: int | None = None) -> list:
    """All standard diagrams of shape (r, s), optionally with a fixed touch count."""
    if (r + s) % 2:
        return []
    pts = _bent_points(r, s)
    n = len(pts)
    out = []
    t_range = range(0, n // 2 + 1) if t is None else [t]
    for tt in t_range:
        entries = [("pt", p) for p in pts]
        for k in range(tt):
            entries.append(("pin", k, 0))
            entries.append(("pin", k, 1))
        for matching in _nc_matchings(entries):
            pinned_ends: dict = {}
            plain = []
            for a, b in matching:
                if a[0] == "pt" and b[0] == "pt":
                    plain.append((a[1], b[1]))
                else:
                    pin = a if a[0] == "pin" else b
                    pt = b if a[0] == "pin" else a
                    pinned_ends.setdefault(pin[1], []).append(pt[1])
            pinned = [frozenset(pinned_ends[k]) for k in range(tt)]
            out.append(ATLDiagram(r, s, plain, pinned))
    return out


def stratum_count(n2: int, t: int) -> int:
    """Expected number of standard diagrams with t touches on 2N points."""
    from math import comb

    N = n2 // 2
    lower = comb(n2, N - t - 1) if N - t - 1 >= 0 else 0
    return comb(n2, N - t) - lower


# -- composition --------------------------------------------------------------
#
# Internally a configuration is a planar chord system on the bent boundary
# circle where each pole touch is a pin with two halves: the minus half faces
# down the pole, the plus half up.  A curve through a pin enters one half and
# leaves the other; for a basis diagram planarity forces the endpoint with the
# larger bent position onto the minus half.  Swapping the two halves of a pin
# is exactly the skew-symmetry bend and costs a sign.


def _bent_rank(d: ATLDiagram) -> dict:
    return {p: i for i, p in enumerate(_bent_points(d.r, d.s), 1)}


def _disk_arcs(d: ATLDiagram, ns: str, node):
    """Arc list with explicit pin halves; ``node`` maps boundary points."""
    rank = _bent_rank(d)
    arcs = []
    for a in d.plain:
        x, y = tuple(a)
        arcs.append((node(x), node(y)))
    for k, a in enumerate(d.pinned):
        lo, hi = sorted(a, key=lambda p: rank[p])
        arcs.append((node(hi), ("pin", ns, k, 0)))
        arcs.append((("pin", ns, k, 1), node(lo)))
    return arcs


class _Config:
    """Partner map over boundary stubs and pin halves, plus the pole order."""

    __slots__ = ("partner", "pole")

    def __init__(self, partner, pole):
        self.partner = partner
        self.pole = pole  # list of pin ids, bottom of the pole first

    def clone(self):
        return _Config(dict(self.partner), list(self.pole))

    def connect(self, a, b):
        self.partner[a] = b
        self.partner[b] = a

    def flip_pin(self, pin):
        """Skew symmetry: exchange the two halves; the caller owes a sign."""
        lo, hi = ("pin",) + pin + (0,), ("pin",) + pin + (1,)
        pa, pb = self.partner[lo], self.partner[hi]
        self.connect(pa, hi)
        self.connect(pb, lo)

    def half(self, pin, side):
        return ("pin",) + pin + (side,)


def _stitch_config(upper: ATLDiagram, lower: ATLDiagram):
    """Glue lower below upper, contract the middle, count free loops."""

    def lo_node(p):
        return ("pt", p) if p[0] == BOT else ("m", p[1])

    def up_node(p):
        return ("m", p[1]) if p[0] == BOT else ("pt", p)

    arcs = _disk_arcs(lower, "L", lo_node) + _disk_arcs(upper, "U", up_node)
    # middle nodes have exactly two arc ends; contract paths through them
    touching: dict = {}
    for idx, (a, b) in enumerate(arcs):
        for end in (a, b):
            if end[0] == "m":
                touching.setdefault(end, []).append(idx)
    partner: dict = {}
    used = [False] * len(arcs)
    for idx, (a, b) in enumerate(arcs):
        if used[idx]:
            continue
        start = a if a[0] != "m" else (b if b[0] != "m" else None)
        if start is None:
            continue
        used[idx] = True
        cur = b if start == a else a
        prev_edge = idx
        while cur[0] == "m":
            nxt_edge = [e for e in touching[cur] if e != prev_edge][0]
            used[nxt_edge] = True
            na, nb = arcs[nxt_edge]
            cur = nb if na == cur else na
            prev_edge = nxt_edge
        partner[start] = cur
        partner[cur] = start
    free_loops = 0
    for idx in range(len(arcs)):
        if used[idx]:
            continue
        # a cycle entirely through middle nodes: a free loop
        free_loops += 1
        used[idx] = True
        cur, prev_edge = arcs[idx][1], idx
        while True:
            nxt = [e for e in touching[cur] if not used[e]]
            if not nxt:
                break
            prev_edge = nxt[0]
            used[prev_edge] = True
            na, nb = arcs[prev_edge]
            cur = nb if na == cur else na
    pole = [("L", k) for k in range(lower.t)] + [("U", k) for k in range(upper.t)]
    return _Config(partner, pole), free_loops


def _trace_components(cfg: _Config):
    """Open curves and closed loops as stub paths through the pins."""
    other = {0: 1, 1: 0}
    seen = set()
    curves, loops = [], []
    boundary = [s for s in cfg.partner if s[0] == "pt"]
    for start in boundary:
        if start in seen:
            continue
        path = [start]
        seen.add(start)
        cur = start
        while True:
            nxt = cfg.partner[cur]
            path.append(nxt)
            seen.add(nxt)
            if nxt[0] != "pin":
                break
            jump = ("pin",) + nxt[1:3] + (other[nxt[3]],)
            path.append(jump)
            seen.add(jump)
            cur = jump
        curves.append(path)
    for stub in cfg.partner:
        if stub in seen or stub[0] != "pin":
            continue
        path = [stub]
        seen.add(stub)
        cur = stub
        while True:
            nxt = cfg.partner[cur]
            if nxt == path[0]:
                break
            path.append(nxt)
            seen.add(nxt)
            jump = ("pin",) + nxt[1:3] + (other[nxt[3]],)
            if jump == path[0]:
                break
            path.append(jump)
            seen.add(jump)
            cur = jump
        loops.append(path)
    return curves, loops


def _pins_of(path):
    return [stub[1:3] for stub in path if stub[0] == "pin" and stub[3] == 0]


def _normalize_loop(cfg: _Config, pins):
    """Flip pins until a closed loop has the clean ascending shape; None if impossible."""
    for first_flip in (False, True):
        trial = cfg.clone()
        sign = 1
        if first_flip:
            trial.flip_pin(pins[0])
            sign = -sign
        ok = True
        for i in range(1, len(pins)):
            below = trial.half(pins[i], 0)
            expect = trial.half(pins[i - 1], 1)
            if trial.partner[below] != expect:
                trial.flip_pin(pins[i])
                sign = -sign
            if trial.partner[below] != expect:
                ok = False
                break
        if ok and trial.partner[trial.half(pins[0], 0)] == trial.half(pins[-1], 1):
            return trial, sign
    return None, None


def _reduce(cfg: _Config, r, s, coeff, out):
    """Rewrite a configuration into the standard basis, accumulating in out."""
    pole_pos = {pin: i for i, pin in enumerate(cfg.pole)}
    curves, loops = _trace_components(cfg)

    # closed loops: innermost first, each worth a z-recursion value
    if loops:
        loops.sort(
            key=lambda path: (
                max(pole_pos[p] for p in _pins_of(path))
                - min(pole_pos[p] for p in _pins_of(path))
            )
        )
        path = loops[0]
        pins = sorted(set(_pins_of(path)), key=lambda p: pole_pos[p])
        idxs = [pole_pos[p] for p in pins]
        if idxs != list(range(idxs[0], idxs[0] + len(idxs))):
            raise AssertionError("closed loop pins interleave another component")
        # skew flips until the loop reads as ascending runs plus the closing
        # arc from the lowest minus half to the highest plus half
        cfg, sign = _normalize_loop(cfg, pins)
        if cfg is None:
            raise AssertionError("unrecognised closed loop shape")
        value = loop_value(len(pins)) * sign
        if value.is_zero():
            return
        for pin in pins:
            del cfg.partner[cfg.half(pin, 0)]
            del cfg.partner[cfg.half(pin, 1)]
        cfg.pole = [p for p in cfg.pole if p not in set(pins)]
        _reduce(cfg, r, s, coeff * value, out)
        return

    # repeated touches along one curve: find the innermost pin-to-pin arc
    best = None
    for a, b in cfg.partner.items():
        if a[0] == "pin" and b[0] == "pin" and a < b:
            pa, pb = a[1:3], b[1:3]
            span = abs(pole_pos[pa] - pole_pos[pb])
            if best is None or span < best[0]:
                best = (span, a, b)
    if best is not None:
        span, a, b = best
        if span != 1:
            raise AssertionError("pole run between non-adjacent touches")
        pa, pb = a[1:3], b[1:3]
        if pole_pos[pa] > pole_pos[pb]:
            a, b, pa, pb = b, a, pb, pa
        sign = 1
        if a[3] != 1:  # lower pin must contribute its plus half
            cfg.flip_pin(pa)
            sign = -sign
        low_plus = cfg.half(pa, 1)
        if cfg.partner[low_plus][0:3] != ("pin",) + pb or cfg.partner[low_plus][3] != 0:
            cfg.flip_pin(pb)
            sign = -sign
        high_minus = cfg.half(pb, 0)
        if cfg.partner[low_plus] != high_minus:
            raise AssertionError("touch pair did not normalise to a run")
        out_low = cfg.partner[cfg.half(pa, 0)]
        out_high = cfg.partner[cfg.half(pb, 1)]
        half = RatFunc(delta - 2) / 2
        merged = cfg.clone()
        merged.connect(out_low, merged.half(pa, 0))
        merged.connect(out_high, merged.half(pa, 1))
        del merged.partner[merged.half(pb, 0)]
        del merged.partner[merged.half(pb, 1)]
        merged.pole = [p for p in merged.pole if p != pb]
        _reduce(merged, r, s, coeff * (-half) * sign, out)
        spliced = cfg.clone()
        for pin in (pa, pb):
            del spliced.partner[spliced.half(pin, 0)]
            del spliced.partner[spliced.half(pin, 1)]
        spliced.connect(out_low, out_high)
        spliced.pole = [p for p in spliced.pole if p not in (pa, pb)]
        _reduce(spliced, r, s, coeff * (RatFunc(Z2) / delta) * sign, out)
        return

    # terminal: every curve holds at most one pin; canonicalise the halves
    plain = []
    pinned = {}
    sign = 1
    bent = {}
    for idx, p in enumerate(
        [(TOP, j) for j in range(1, s + 1)] + [(BOT, i) for i in range(r, 0, -1)], 1
    ):
        bent[p] = idx

    def pt(stub):
        return stub[1]

    for path in curves:
        ends = (pt(path[0]), pt(path[-1]))
        pins = _pins_of(path)
        if not pins:
            plain.append(ends)
            continue
        (pin,) = set(pins)
        # the endpoint with the larger bent position must meet the minus half
        lo_stub = cfg.partner[cfg.half(pin, 0)]
        hi_end = max(ends, key=lambda p: bent[p])
        if pt(lo_stub) != hi_end:
            sign = -sign
        pinned[pin] = ends
    order = sorted(pinned, key=lambda p: pole_pos[p])
    dgm = ATLDiagram(r, s, plain, [pinned[p] for p in order])
    acc = out.get(dgm, RatFunc.lift(0)) + coeff * sign
    if acc.is_zero():
        out.pop(dgm, None)
    else:
        out[dgm] = acc


def atl_compose(upper, lower) -> ATLElement:
    """Composition expanded in the standard basis (upper after lower)."""
    if isinstance(upper, ATLDiagram):
        upper = ATLElement.from_diagram(upper)
    if isinstance(lower, ATLDiagram):
        lower = ATLElement.from_diagram(lower)
    if lower.s != upper.r:
        raise ValueError("arity mismatch in composition")
    out: dict = {}
    for dl, cl in lower.terms.items():
        for du, cu in upper.terms.items():
            cfg, free = _stitch_config(du, dl)
            coeff = cl * cu
            if free:
                coeff = coeff * RatFunc(delta) ** free
            _reduce(cfg, lower.r, upper.s, coeff, out)
    return ATLElement(lower.r, upper.s, out)


# -- from the pole category ---------------------------------------------------


def _pin_layer_diagram(n: int) -> ATLDiagram:
    """The basic pole touch on strand one as a standard diagram."""
    arcs = [((BOT, i), (TOP, i)) for i in range(2, n + 1)]
    return ATLDiagram(n, n, arcs, [((BOT, 1), (TOP, 1))])


def _apply_pin(element: ATLElement) -> ATLElement:
    """Touch the pole with the strand at position 1, above everything."""
    return atl_compose(_pin_layer_diagram(element.s), element)


def _brauer_layer_terms(dgm: BrauerDiagram):
    """The Temperley-Lieb expansion of one plain layer: (coeff, ATLDiagram) pairs."""
    if brauer.is_planar(dgm):
        return [(RatFunc(1), ATLDiagram(dgm.r, dgm.s, dgm.pairs))]
    acc = {brauer.identity(dgm.r): RatFunc(1)}
    for kind, i, n in brauer.factor_layers(dgm):
        new: dict = {}

        def push(d2, c2):
            if c2.is_zero():
                return
            acc2 = new.get(d2, RatFunc.lift(0)) + c2
            if acc2.is_zero():
                new.pop(d2, None)
            else:
                new[d2] = acc2

        for d, c in acc.items():
            if kind == "s":
                d1, loops = brauer.compose_diagrams(brauer.identity(n), d)
                push(d1, -c)
                e_layer = brauer.e_diagram(i, n)
                d2, loops = brauer.compose_diagrams(e_layer, d)
                push(d2, c * (RatFunc(2) / delta) * RatFunc(delta) ** loops)
            else:
                layer = brauer.layer_diagram(kind, i, n)
                d2, loops = brauer.compose_diagrams(layer, d)
                push(d2, c * RatFunc(delta) ** loops)
        acc = new
    return [(c, ATLDiagram(d.r, d.s, d.pairs)) for d, c in acc.items()]


def _unslide_layers(layers: tuple) -> tuple:
    """Ride each pole touch along its through strand to a leftmost position.

    Relocating a touch across a plain layer is exact whenever its strand runs
    straight through that layer, so after splitting the plain layers into
    elementary pieces each touch searches its corridor (bounded by the
    neighbouring touches) for a spot where its strand sits at position one.
    Touches that cannot reach the pole-adjacent strand this way are left in
    place.  No crossing is ever resolved here.
    """
    pieces: list = []
    for lay in layers:
        if lay[0] == "b":
            pieces += [
                polar_blayer(brauer.layer_diagram(*p))
                for p in brauer.factor_layers(lay[1])
            ]
        else:
            pieces.append(lay)
    changed = True
    while changed:
        changed = False
        for k, lay in enumerate(pieces):
            if lay[0] != "c" or lay[2] == 1:
                continue
            # breadth-first over (index, attach) within this touch's corridor
            start = (k, lay[2])
            seen = {start}
            frontier = [start]
            parent = {}
            goal = None
            while frontier and goal is None:
                nxt = []
                for state in frontier:
                    idx, attach = state
                    moves = []
                    if idx > 0 and pieces[idx - 1][0] == "b":
                        d = pieces[idx - 1][1]
                        p = d.partner((TOP, attach))
                        if p[0] == BOT:
                            moves.append((idx - 1, p[1]))
                    if idx + 1 < len(pieces) and pieces[idx + 1][0] == "b":
                        d = pieces[idx + 1][1]
                        p = d.partner((BOT, attach))
                        if p[0] == TOP:
                            moves.append((idx + 1, p[1]))
                    for mv in moves:
                        if mv in seen:
                            continue
                        seen.add(mv)
                        parent[mv] = state
                        if mv[1] == 1:
                            goal = mv
                            break
                        nxt.append(mv)
                    if goal:
                        break
                frontier = nxt
            if goal is None:
                continue
            # replay the path: move the connector step by step
            path = [goal]
            while path[-1] != start:
                path.append(parent[path[-1]])
            path.reverse()
            idx = k
            for nxt_idx, nxt_attach in path[1:]:
                if nxt_idx < idx:  # move below the plain piece
                    d = pieces[idx - 1][1]
                    pieces[idx - 1 : idx + 1] = [
                        polar_connector(d.r, nxt_attach),
                        polar_blayer(d),
                    ]
                else:  # move above it
                    d = pieces[idx + 1][1]
                    pieces[idx : idx + 2] = [
                        polar_blayer(d),
                        polar_connector(d.s, nxt_attach),
                    ]
                idx = nxt_idx
            changed = True
            break
    return tuple(pieces)


def polar_connector(n: int, attach: int):
    from .polar import connector

    return connector(n, attach)


def polar_blayer(d: BrauerDiagram):
    from .polar import blayer

    return blayer(d)


def atl_from_polar(w, symbolic: bool = True) -> ATLElement:
    """Image of a pole-category element in the quotient, in the standard basis.

    Pole touches away from the leftmost strand are first moved back by undoing
    through-strand slides.  Any remaining crossing or off-pole touch is
    resolved with the crossing substitution X -> -1 + (2/delta) hook; that
    substitution is only multiplicative at delta = -2, so generic-delta inputs
    are expected to stay in the planar leftmost-touch fragment.
    """
    if isinstance(w, PolarWord):
        w = PolarElement.from_word(w)
    total: ATLElement | None = None
    for word, coeff in w.terms.items():
        acc = ATLElement.from_diagram(atl_identity(word.r))
        for lay in _unslide_layers(word.layers):
            if lay[0] == "b":
                pieces = _brauer_layer_terms(lay[1])
                stacked = ATLElement(lay[1].r, lay[1].s, {d: c for c, d in pieces})
                acc = atl_compose(stacked, acc)
            else:
                n, attach = lay[1], lay[2]
                if attach != 1:
                    go = _brauer_layer_terms_elem(brauer.x_cycle(attach, 1, n))
                    back = _brauer_layer_terms_elem(brauer.x_cycle(1, attach, n))
                    acc = atl_compose(go, acc)
                    acc = _apply_pin(acc)
                    acc = atl_compose(back, acc)
                else:
                    acc = _apply_pin(acc)
        acc = acc.scale(polar_coeff_to_ratfunc(coeff))
        total = acc if total is None else total + acc
    if total is None:
        total = ATLElement(w.r, w.s, {})
    return total


def _brauer_layer_terms_elem(dgm: BrauerDiagram) -> ATLElement:
    pieces = _brauer_layer_terms(dgm)
    return ATLElement(dgm.r, dgm.s, {d: c for c, d in pieces})


def pin_element(r: int = 1, attach: int = 1) -> ATLElement:
    """The quotient image of the basic pole touch."""
    from . import polar

    return atl_from_polar(polar.h_connector(r, attach))


# -- specialisation -----------------------------------------------------------


def tlb_z2_value(lam_value=None):
    """The z2 value fixed by the type-B quotient: -delta*lam*((delta-2)/2 - lam)."""
    l = lam if lam_value is None else Poly.const(Fraction(lam_value))
    return RatFunc(-delta) * l * (RatFunc(delta - 2) / 2 - l)


def tlb_specialize(element: ATLElement, lam_value=None, delta_value=None) -> ATLElement:
    """Eliminate z2 through the type-B parameter; optionally fix delta too."""
    z2v = tlb_z2_value(lam_value)

    def convert(c: RatFunc) -> RatFunc:
        num = _subst_ratfunc(c, z2v)
        if delta_value is not None:
            dv = Fraction(delta_value)
            if dv in (0, 2):
                raise ValueError("delta = 0, 2 are degenerate for this quotient")
            num = num.substitute({"delta": dv})
        return num

    return element.map_coefficients(convert)


def _subst_ratfunc(c: RatFunc, z2v: RatFunc) -> RatFunc:
    def poly_part(p: Poly) -> RatFunc:
        total = RatFunc(0)
        for mono, coeff in p.terms.items():
            term = RatFunc(Poly.const(coeff))
            for var, exp in mono:
                base = z2v if var == zvar(2) else RatFunc(Poly.var(var))
                for _ in range(exp):
                    term = term * base
            total = total + term
        return total

    return poly_part(c.num) / poly_part(c.den)


# -- reports ------------------------------------------------------------------


def rank_report(max_n: int = 6) -> Report:
    """Basis sizes against the binomial rank and its touch-count strata."""
    from math import comb

    rep = Report(f"standard basis ranks, N <= {max_n}")
    for N in range(0, max_n + 1):
        n2 = 2 * N
        for r in range(0, n2 + 1):
            basis = standard_basis(r, n2 - r)
            rep.add(
                f"rank({r},{n2 - r}) = C({n2},{N})",
                len(basis) == comb(n2, N),
                f"got {len(basis)}",
            )
            by_t: dict = {}
            for d in basis:
                by_t[d.t] = by_t.get(d.t, 0) + 1
            for t in range(0, N + 1):
                got = by_t.get(t, 0)
                want = stratum_count(n2, t)
                if (got, want) != (0, 0):
                    rep.add(
                        f"stratum({r},{n2 - r},t={t})",
                        got == want,
                        f"got {got}, want {want}",
                    )
    return rep
