"""Command-line front end: a diagram-word parser and the verification suites.

The word language writes vertical composition right to left as bottom to top,
mirroring operator order: "a ; b" applies b first and stacks a on top, so
"cap(1) ; h(1)*id(1) ; cup(1)" is the closed single-touch loop.  "*" is the
right tensor, "+"/"-" and rational scalars form linear combinations.  Atoms
are id(n), x(i), cap(i), cup(i), h(i), z(l), perm(i1,...,ik) and pole.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import atl, brauer, chord, functors, polar, superspace, uea
from .report import Report
from .scalars import Poly


class ParseError(ValueError):
    def __init__(self, message, pos):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(
    r"\s*(?:(?P<name>[a-z]+)|(?P<num>\d+(?:/\d+)?)|(?P<punct>[();*+,-]))"
)


def _tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            if text[pos:].strip():
                raise ParseError(f"unexpected character {text[pos]!r}", pos)
            break
        if m.group("name"):
            out.append(("name", m.group("name"), m.start("name")))
        elif m.group("num"):
            out.append(("num", m.group("num"), m.start("num")))
        else:
            out.append(("punct", m.group("punct"), m.start("punct")))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class Parser:
    """Recursive descent for expr / term / factor / atom."""

    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self):
        return self.tokens[self.k]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.k]
        if kind and tok[0] != kind or value is not None and tok[1] != value:
            raise ParseError(f"expected {value or kind}, found {tok[1]!r}", tok[2])
        self.k += 1
        return tok

    def parse(self):
        expr = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"trailing input {tok[1]!r}", tok[2])
        return expr

    def expr(self):
        if self.peek()[1] == "-":  # tolerated extension: leading negation
            self.take("punct", "-")
            acc = ("scale", Fraction(-1), self.term())
        else:
            acc = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take("punct")[1]
            rhs = self.term()
            acc = ("add", acc, rhs) if op == "+" else ("sub", acc, rhs)
        return acc

    def term(self):
        scalar = None
        if self.peek()[0] == "num":
            scalar = Fraction(self.take("num")[1])
        acc = self.factor()
        while self.peek()[1] == ";":
            self.take("punct", ";")
            acc = ("stack", acc, self.factor())
        if scalar is not None:
            acc = ("scale", scalar, acc)
        return acc

    def factor(self):
        acc = self.atom()
        while self.peek()[1] == "*":
            self.take("punct", "*")
            acc = ("tensor", acc, self.atom())
        return acc

    def atom(self):
        tok = self.peek()
        if tok[1] == "(":
            self.take("punct", "(")
            inner = self.expr()
            self.take("punct", ")")
            return inner
        if tok[0] != "name":
            raise ParseError(f"expected an atom, found {tok[1]!r}", tok[2])
        name = self.take("name")[1]
        if name not in ("pole", "id", "x", "cap", "cup", "h", "z", "perm"):
            raise ParseError(f"unknown token {name!r}", tok[2])
        if name == "pole":
            return ("pole",)
        self.take("punct", "(")
        args = [int(self.take("num")[1])]
        while self.peek()[1] == ",":
            self.take("punct", ",")
            args.append(int(self.take("num")[1]))
        self.take("punct", ")")
        if name in ("id", "x", "cap", "cup", "h", "z") and len(args) != 1:
            raise ParseError(f"{name} takes one argument", tok[2])
        return (name, *args)


def _atom_element(node) -> polar.PolarElement:
    kind = node[0]
    if kind == "pole":
        return polar.pole_identity()
    if kind == "id":
        return polar.identity_element(node[1])
    if kind == "x":
        i = node[1]
        return polar.iota(brauer.s_diagram(i, i + 1))
    if kind == "cap":
        i = node[1]
        return polar.iota(brauer.cap_diagram(i, i + 1) if i > 1 else brauer.cap0())
    if kind == "cup":
        i = node[1]
        return polar.iota(brauer.cup_diagram(i, i - 1) if i > 1 else brauer.cup0())
    if kind == "h":
        i = node[1]
        return polar.h_connector(i, i)
    if kind == "z":
        return polar.z_element(node[1])
    if kind == "perm":
        return polar.iota(brauer.perm_diagram(node[1:]))
    raise ValueError(f"unknown atom {kind}")


def elaborate(node) -> polar.PolarElement:
    """Evaluate an AST into a pole-category element, checking arities."""
    kind = node[0]
    if kind == "add":
        return elaborate(node[1]) + elaborate(node[2])
    if kind == "sub":
        return elaborate(node[1]) - elaborate(node[2])
    if kind == "scale":
        return elaborate(node[2]).scale(Poly.const(node[1]))
    if kind == "stack":
        upper, lower = elaborate(node[1]), elaborate(node[2])
        if lower.s != upper.r:
            raise ParseError(
                f"arity mismatch: {lower.r}->{lower.s} then {upper.r}->{upper.s}", 0
            )
        return polar.word_compose(upper, lower)
    if kind == "tensor":
        left, right = elaborate(node[1]), elaborate(node[2])
        rb = _to_brauer(right)
        return polar.tensor_right(left, rb)
    return _atom_element(node)


def _to_brauer(element: polar.PolarElement) -> brauer.BrauerElement:
    """Order-zero elements re-read as plain Brauer data (right tensor factor)."""
    out = brauer.BrauerElement(element.r, element.s, {})
    for word, coeff in element.terms.items():
        if word.order:
            raise ParseError("right tensor factor must not touch the pole", 0)
        acc = brauer.elem(brauer.identity(word.r))
        for lay in word.layers:
            acc = brauer.compose(brauer.elem(lay[1]), acc)
        out = out + acc.map_coefficients(lambda v, c=coeff: v * c)
    return out


def parse(text: str) -> polar.PolarElement:
    return elaborate(Parser(text).parse())


def _render_layer(lay) -> str:
    if lay[0] == "c":
        n, attach = lay[1], lay[2]
        return f"h({attach})" if attach == n else f"h({attach})*id({n - attach})"
    d = lay[1]
    bits = []
    for kind, i, n in brauer.factor_layers(d):
        if kind == "s":
            atom, pad = f"x({i})", n - i - 1
        elif kind == "cap":
            atom, pad = f"cap({i})", n - i - 1
        else:
            atom, pad = f"cup({i})", n - i + 1
        bits.append(atom if pad == 0 else f"{atom}*id({pad})")
    if not bits:
        return f"id({d.r})" if d.r else "pole"
    return " ; ".join(reversed(bits))


def _zero_word_text(r: int, s: int) -> str:
    if r == s:
        return f"id({r})" if r else "pole"
    if s > r:
        inner = _zero_word_text(r, s - 2)
        pad = f"cup(1)*id({s - 2})" if s > 2 else "cup(1)"
        return f"{pad} ; {inner}"
    inner = _zero_word_text(r - 2, s)
    pad = f"{inner} ; cap(1)*id({r - 2})" if r > 2 else f"{inner} ; cap(1)"
    return pad


def parse_rendered(text: str) -> polar.PolarElement:
    """Alias making the round-trip property explicit in reports and tests."""
    return parse(text)


def render(element: polar.PolarElement) -> str:
    """Grammar-compatible canonical rendering of a normalised element.

    Words are written top layer first, so parsing the result reproduces the
    element exactly; each plain layer is spelt through elementary pieces.
    """
    element = polar.normalize(element)
    if element.is_zero():
        filler = _zero_word_text(element.r, element.s)
        return f"0 {filler}"
    parts = []
    for word in sorted(element.terms, key=repr):
        coeff = element.terms[word]
        bits = [_render_layer(lay) for lay in reversed(word.layers)]
        if not bits:
            bits = [f"id({word.r})" if word.r else "pole"]
        for mono, q in sorted(coeff.terms.items()):
            loops = []
            for name, exp in mono:
                if name == "delta":
                    loop = "(cap(1) ; cup(1))"
                elif name.startswith("z"):
                    loop = f"z({name[1:]})"
                else:
                    raise ValueError(f"coefficient variable {name} is not renderable")
                pad = f"*id({word.r})" if word.r else ""
                loops += [f"{loop}{pad}"] * exp
            body = " ; ".join(bits + loops)
            mag = abs(q)
            prefix = "" if mag == 1 else f"{mag} "
            parts.append((q < 0, f"{prefix}{body}"))
    parts.sort(key=lambda t: t[0])
    out = ""
    for neg, text in parts:
        if not out:
            out = ("-" if neg else "") + text
        else:
            out += (" - " if neg else " + ") + text
    return out


# -- suites ---------------------------------------------------------------------


KEY_CONFIGS = [(2, 0), (3, 0), (4, 0), (0, 1), (0, 2), (1, 1), (2, 1), (3, 1)]


def suite_brauer_skew(cfg) -> Report:
    rep = Report("skew symmetry of the crossing-hook element")
    for r in (2, 3):
        rep.extend(brauer.verify_h_skew(r))
    return rep


def suite_chord_brauer(cfg) -> Report:
    rep = Report("chord relations in the Brauer algebras")
    for r in range(2, 6):
        rep.extend(brauer.verify_chord_in_brauer(r))
    from math import comb

    for r in (3, 4, 5, 6):
        got = len(chord.relation_instances(r))
        rep.add(
            f"instance count r={r} matches closed form",
            got == chord.instance_count(r),
            f"got {got}",
        )
    return rep


def _suite_relators(cfg, include) -> Report:
    rep = Report("pole-category relation suites")
    modules = functors.default_oracle_modules()
    for r in range(2, 5):
        for name, relator in polar.relation_suites(r):
            if not include(name):
                continue
            rep.expect_zero(f"{name} [strand-adding]", polar.varpi(relator))
            for module in modules:
                op = functors.evaluate_polar(relator, module)
                rep.expect_zero(f"{name} @ {module.label}", op.matrix)
    return rep


def suite_ab_relations(cfg) -> Report:
    return _suite_relators(cfg, lambda name: not _is_jm(name))


def suite_jm(cfg) -> Report:
    return _suite_relators(cfg, _is_jm)


def _is_jm(name: str) -> bool:
    return any(
        name.startswith(p)
        for p in ("closed-loop", "theta-", "s", "e", "swap-theta", "hook-theta")
    ) and "skew" not in name


def suite_atl_rank(cfg) -> Report:
    return atl.rank_report(int(cfg.get("max_n", 6)))


def suite_atl_oracle(cfg) -> Report:
    rep = Report("quotient closure, associativity and functor tables")
    import random as _random

    rng = _random.Random(int(cfg.get("seed", 0)))
    shapes = [(0, 2), (1, 1), (2, 2), (2, 0), (1, 3), (3, 1), (0, 4), (2, 4), (3, 3)]
    triples = 0
    for _ in range(int(cfg.get("triples", 500))):
        r, s = shapes[rng.randrange(len(shapes))]
        u = rng.choice([k for k in range(0, 5) if (k + s) % 2 == 0])
        v = rng.choice([k for k in range(0, 5) if (k + u) % 2 == 0])
        a = rng.choice(atl.standard_basis(r, s))
        b = rng.choice(atl.standard_basis(s, u))
        c = rng.choice(atl.standard_basis(u, v))
        lhs = atl.atl_compose(c, atl.atl_compose(b, a))
        rhs = atl.atl_compose(atl.atl_compose(c, b), a)
        if not lhs == rhs:
            rep.add(f"associativity {a!r};{b!r};{c!r}", False)
        triples += 1
    rep.add(f"associativity on {triples} random triples", True)
    rep.extend(
        functors.atl_oracle_check(
            max_total=int(cfg.get("max_total", 6)),
            sample=int(cfg.get("sample", 300)),
            seed=int(cfg.get("seed", 0)),
        )
    )
    return rep


def suite_key_lemma(cfg) -> Report:
    rep = Report("two-slot tempered Casimir equals swap minus contraction")
    for m, n in KEY_CONFIGS:
        rep.extend(superspace.t_action_check(m, n))
    return rep


def suite_casimir_eigen(cfg) -> Report:
    rep = Report("Casimir eigenvalue on the natural module")
    for m, n in KEY_CONFIGS:
        rep.extend(superspace.casimir_eigen_check(m, n))
    return rep


def suite_quartet(cfg) -> Report:
    rep = Report("four-algebra commuting square")
    rmax = int(cfg.get("max_r", 4))
    for m, n in KEY_CONFIGS:
        for r in range(2, rmax + 1):
            rep.extend(functors.quartet_check(r, m, n))
    return rep


def suite_centrality(cfg) -> Report:
    rep = Report("closed loops are central in the enveloping algebra")
    for m, n in [(3, 0), (0, 1), (1, 1)]:
        for ell in range(1, 5):
            u = uea.fz_element(ell, m, n)
            sub = uea.centrality_check(u, f"loop{ell}@({m}|{2 * n})")
            rep.extend(sub)
            rep.add(
                f"trace route agrees for loop{ell}@({m}|{2 * n})",
                u == uea.fz_trace(ell, m, n),
            )
    return rep


def suite_sp2_char(cfg) -> Report:
    return uea.sp2_characteristic_identity()


def suite_char_numeric(cfg) -> Report:
    rep = Report("numeric characteristic identities")
    for kind, size in [("so", 3), ("so", 5), ("sp", 4)]:
        rep.extend(functors.char_identity_numeric(kind, size))
    for lam_value in range(0, 9):
        rep.extend(functors.sp2_numeric_char_identity(lam_value))
    return rep


def suite_tlb_witness(cfg) -> Report:
    rep = Report("truncated highest-weight witness")
    lam_values = [Fraction(1, 2), Fraction(7, 3), Fraction(5)]
    if cfg.get("lam") is not None:
        lam_values = [Fraction(cfg["lam"])]
    for lam_value in lam_values:
        for t in range(1, 5):
            depth = int(cfg.get("depth", 2 * t + 2))
            rep.extend(functors.tlb_witness(t, lam_value, max(depth, t + 2)))
    rep.extend(functors.atl_factorization_check())
    return rep


def suite_z_reduction(cfg) -> Report:
    rep = Report("closed-loop calculus")
    rep.expect_zero("single touch reduces to zero", polar.normalize(polar.z_element(1)))
    two = polar.normalize(polar.z_element(2))
    rep.add("double touch reduces to z2", repr(two) == "(z2)*<word id_0>", repr(two))
    from .scalars import Poly as P, delta, zvar

    z2 = P.var(zvar(2))
    rep.expect_zero(
        "three-touch loop satisfies 2 Z3 = (2 - delta) Z2",
        polar.odd_z_polynomial(3) * 2 - (2 - delta) * z2,
    )
    rep.expect_zero(
        "closing the transpose cube reproduces the odd reduction",
        polar.close_transpose_poly(3) - polar.odd_z_polynomial(3),
    )
    rep.expect_zero("crossed pair = -Z2", polar.z_word_reduce(1, 1) + z2)
    modules = functors.default_oracle_modules()
    for ell in (5, 7):
        poly = polar.odd_z_polynomial(ell)
        for module in modules:
            have = functors.module_z_scalar(module, ell)
            bindings = {"delta": Fraction(module.sdim)}
            for k in range(2, ell, 2):
                bindings[zvar(k)] = functors.module_z_scalar(module, k)
            want = poly.substitute(bindings).constant_value()
            rep.add(
                f"odd reduction l={ell} matches {module.label}",
                have == want,
                f"module {have}, polynomial {want}",
            )
    for sig in [(2, 2), (3, 2), (2, 1, 2)]:
        poly = polar.z_word_reduce(sig)
        word = polar.z_word_element(sig)
        for module in modules:
            have = functors.evaluate_polar(word, module).matrix.scalar_value()
            bindings = {"delta": Fraction(module.sdim)}
            for k in range(2, sum(sig) + 1, 2):
                bindings[zvar(k)] = functors.module_z_scalar(module, k)
            want = poly.substitute(bindings).constant_value()
            rep.add(
                f"entangled loop {sig} matches {module.label}",
                have == want,
                f"module {have}, polynomial {want}",
            )
    return rep


SUITES = {
    "brauer-skew": suite_brauer_skew,
    "chord-brauer": suite_chord_brauer,
    "ab-relations": suite_ab_relations,
    "jm": suite_jm,
    "atl-rank": suite_atl_rank,
    "atl-oracle": suite_atl_oracle,
    "key-lemma": suite_key_lemma,
    "casimir-eigen": suite_casimir_eigen,
    "quartet": suite_quartet,
    "centrality": suite_centrality,
    "sp2-char": suite_sp2_char,
    "char-numeric": suite_char_numeric,
    "tlb-witness": suite_tlb_witness,
    "z-reduction": suite_z_reduction,
}


def run_suite(name: str, config: dict | None = None) -> Report:
    if name not in SUITES:
        raise KeyError(name)
    return SUITES[name](config or {})


def _emit(report: Report, json_path: str | None, quiet: bool = False) -> int:
    if json_path:
        payload = report.as_dict()
        with open(json_path, "w") as fh:
            json.dump(payload, fh, indent=2)
    if not quiet:
        print(report)
        for check in report.checks:
            if not check.passed:
                print(f"  FAIL {check.name}: {check.detail[:200]}")
    return 0 if report.passed else 1


def main(argv=None) -> int:
    top = argparse.ArgumentParser(
        prog="polarbrauer", description="verification suites for the diagram engine"
    )
    top.add_argument("--suite", choices=sorted(SUITES), help="run one named suite")
    top.add_argument("--m", type=int, default=None)
    top.add_argument("--n", type=int, default=None)
    top.add_argument("--delta", default=None)
    top.add_argument("--lambda", dest="lam", default=None)
    top.add_argument("--depth", type=int, default=None)
    top.add_argument("--seed", type=int, default=0)
    top.add_argument("--json", dest="json_path", default=None, metavar="OUT.JSON")
    sub = top.add_subparsers(dest="command")

    runp = sub.add_parser("run", help="run one or all suites")
    runp.add_argument("names", nargs="*", default=[])

    rank = sub.add_parser("rank-atl", help="basis ranks against binomials")
    rank.add_argument("--max-n", type=int, default=6)

    verify = sub.add_parser("verify", help="one of the functor-level checks")
    verify.add_argument("what", choices=["quartet", "char-id", "tlb-witness"])

    parsep = sub.add_parser("parse", help="parse a diagram word and normalise it")
    parsep.add_argument("expression")
    parsep.add_argument("--strand-image", action="store_true", help="also print the plain image")

    args = top.parse_args(argv)
    cfg = {
        k: v
        for k, v in {
            "m": args.m,
            "n": args.n,
            "delta": args.delta,
            "lam": args.lam,
            "depth": args.depth,
            "seed": args.seed,
        }.items()
        if v is not None
    }
    try:
        if args.command == "parse":
            element = parse(args.expression)
            print(render(element))
            if args.strand_image:
                print("plain image:", polar.varpi(element))
            return 0
        if args.command == "rank-atl":
            return _emit(atl.rank_report(args.max_n), args.json_path)
        if args.command == "verify":
            name = {
                "quartet": "quartet",
                "char-id": "char-numeric",
                "tlb-witness": "tlb-witness",
            }[args.what]
            return _emit(run_suite(name, cfg), args.json_path)
        names = []
        if args.suite:
            names = [args.suite]
        elif args.command == "run":
            names = args.names or sorted(SUITES)
        if not names:
            top.print_help()
            return 2
        status = 0
        for name in names:
            rep = run_suite(name, cfg)
            status |= _emit(rep, args.json_path)
        return status
    except (ParseError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
