"""The acceptance gate: one test per criterion, every check exact (tolerance zero).

Each test prints a single pass/fail line (visible with ``pytest -s`` or in the
captured output); the full suite is sized to finish well inside ten minutes.
"""

import random
import time
from fractions import Fraction
from math import comb

import pytest

from polarbrauer import atl, brauer, chord, functors as F, polar, uea
from polarbrauer import superspace as sp
from polarbrauer.scalars import DELTA, Poly, RatFunc, delta, lam, zvar

KEY_CONFIGS = [(2, 0), (3, 0), (4, 0), (0, 1), (0, 2), (1, 1), (2, 1), (3, 1)]


def _line(name, ok, t0):
    status = "PASS" if ok else "FAIL"
    print(f"criterion {name}: {status} ({time.time() - t0:.1f}s)")
    assert ok


def test_criterion_01_key_lemma():
    t0 = time.time()
    ok = True
    for m, n in KEY_CONFIGS:
        maps = sp.structure_maps(m, n)
        ok &= (sp.t_action(m, n) - (maps["tau"] - maps["eMap"])).is_zero()
    _line("01 two-slot tempered Casimir = swap - contraction", ok, t0)


def test_criterion_02_casimir_eigenvalue():
    t0 = time.time()
    ok = True
    for m, n in KEY_CONFIGS:
        d = m + 2 * n
        expected = sp.SuperMatrix.identity(d).scale(m - 2 * n - 1)
        ok &= (sp.casimir_action(m, n) - expected).is_zero()
    ok &= sp.casimir_action(0, 1) == sp.SuperMatrix.identity(2).scale(-3)
    _line("02 Casimir eigenvalue sdim - 1", ok, t0)


def test_criterion_03_chord_relations_in_brauer():
    t0 = time.time()
    ok = True
    for r in range(2, 6):
        ok &= brauer.verify_chord_in_brauer(r).passed
    _line("03 chord relations for H_ij, r <= 5, symbolic delta", ok, t0)


def test_criterion_04_relation_suites_everywhere():
    t0 = time.time()
    ok = True
    modules = F.default_oracle_modules()
    for r in (2, 3, 4):
        for name, relator in polar.relation_suites(r):
            if not polar.varpi(relator).is_zero():
                ok = False
                print(f"  strand-adding image nonzero: {name}")
            for module in modules:
                if not F.evaluate_polar(relator, module).matrix.is_zero():
                    ok = False
                    print(f"  module image nonzero: {name} @ {module.label}")
    _line("04 relation suites vanish under the functor and all modules", ok, t0)


def test_criterion_05_z_structure():
    t0 = time.time()
    ok = polar.normalize(polar.z_element(1)).is_zero()
    z2 = Poly.var(zvar(2))
    ok &= polar.odd_z_polynomial(3) * 2 == (2 - delta) * z2
    ok &= polar.close_transpose_poly(3) == polar.odd_z_polynomial(3)
    modules = F.default_oracle_modules()
    for ell in (5, 7):
        poly = polar.odd_z_polynomial(ell)
        for module in modules:
            bindings = {DELTA: Fraction(module.sdim)}
            for k in range(2, ell, 2):
                bindings[zvar(k)] = F.module_z_scalar(module, k)
            ok &= F.module_z_scalar(module, ell) == poly.substitute(
                bindings
            ).constant_value()
    _line("05 closed-loop structure: vanishing, recursion, odd reduction", ok, t0)


def test_criterion_06_atl_ranks():
    t0 = time.time()
    ok = True
    for N in range(0, 7):
        n2 = 2 * N
        for r in range(0, n2 + 1):
            basis = atl.standard_basis(r, n2 - r)
            ok &= len(basis) == comb(n2, N)
            by_t = {}
            for d in basis:
                by_t[d.t] = by_t.get(d.t, 0) + 1
            for t in range(0, N + 1):
                ok &= by_t.get(t, 0) == atl.stratum_count(n2, t)
    _line("06 quotient ranks C(2N, N) and strata, N <= 6", ok, t0)


def test_criterion_07_atl_closure_and_coherence():
    t0 = time.time()
    ok = True
    shapes = []
    for r in range(0, 7):
        for s in range(0, 7 - r):
            if (r + s) % 2 == 0:
                for u in range(0, 7 - s):
                    if (s + u) % 2 == 0:
                        shapes.append((r, s, u))
    pairs = 0
    for r, s, u in shapes:
        for a in atl.standard_basis(r, s):
            for b in atl.standard_basis(s, u):
                out = atl.atl_compose(b, a)
                for d in out.terms:
                    ok &= (d.r, d.s) == (r, u)
                pairs += 1
    print(f"  closure over {pairs} composable basis pairs")
    rng = random.Random(0)
    basis_shapes = [(0, 2), (1, 1), (2, 2), (2, 0), (1, 3), (3, 1), (0, 4), (3, 3)]
    for _ in range(500):
        r, s = basis_shapes[rng.randrange(len(basis_shapes))]
        u = rng.choice([k for k in range(0, 5) if (k + s) % 2 == 0])
        v = rng.choice([k for k in range(0, 5) if (k + u) % 2 == 0])
        a = rng.choice(atl.standard_basis(r, s))
        b = rng.choice(atl.standard_basis(s, u))
        c = rng.choice(atl.standard_basis(u, v))
        ok &= atl.atl_compose(c, atl.atl_compose(b, a)) == atl.atl_compose(
            atl.atl_compose(c, b), a
        )
    rep_full = F.atl_oracle_check(max_total=4, lam_values=(1, 2, 3))
    rep_sampled = F.atl_oracle_check(max_total=6, lam_values=(1, 2, 3), sample=150)
    ok &= rep_full.passed and rep_sampled.passed
    _line("07 closure, associativity (500 triples), delta = -2 tables", ok, t0)


def test_criterion_08_tlb_quadratic():
    t0 = time.time()
    H = atl.pin_element(1, 1)
    idel = atl.ATLElement.from_diagram(atl.atl_identity(1))
    half = RatFunc(delta - 2) / 2
    lamr = RatFunc(lam)
    expr = atl.atl_compose(H + idel.scale(lamr), H + idel.scale(half - lamr))
    ok = atl.tlb_specialize(expr).is_zero()
    _line("08 type-B quadratic relation, symbolic in lam and delta", ok, t0)


def test_criterion_09_quartet_square():
    t0 = time.time()
    ok = True
    for m, n in KEY_CONFIGS:
        for r in (2, 3, 4):
            ok &= F.quartet_check(r, m, n).passed
    _line("09 commuting square for r <= 4 on all eight configurations", ok, t0)


def test_criterion_10_centrality():
    t0 = time.time()
    ok = True
    for m, n in [(3, 0), (0, 1), (1, 1)]:
        for ell in (1, 2, 3, 4):
            u = uea.fz_element(ell, m, n)
            ok &= uea.centrality_check(u, f"loop{ell}").passed
    _line("10 central loop elements, l <= 4, three configurations", ok, t0)


def test_criterion_11_sp2_characteristic_identity():
    t0 = time.time()
    ok = uea.sp2_characteristic_identity().passed
    _line("11 exact rank-two symplectic characteristic identity", ok, t0)


def test_criterion_12_numeric_characteristic_identities():
    t0 = time.time()
    ok = True
    for kind, size in [("so", 3), ("so", 5), ("sp", 4)]:
        ok &= F.char_identity_numeric(kind, size).passed
    for lam_value in range(0, 9):
        ok &= F.sp2_numeric_char_identity(lam_value).passed
    _line("12 derived-root products annihilate, exact rationals", ok, t0)


def test_criterion_13_truncated_witness():
    t0 = time.time()
    ok = True
    for lam_value in (Fraction(1, 2), Fraction(7, 3), Fraction(5)):
        for t in (1, 2, 3, 4):
            ok &= F.tlb_witness(t, lam_value, 2 * t + 2).passed
    _line("13 highest-weight witness (-2)^t m_t with vanishing competitors", ok, t0)


def test_criterion_14_bent_square_image():
    t0 = time.time()
    expr = (
        polar.h_transpose_word(2)
        - polar.PolarElement.from_word(
            polar.PolarWord(1, (polar.connector(1, 1), polar.connector(1, 1)))
        )
        - polar.h_connector().scale(delta - 2)
    )
    ok = True
    for module in F.default_oracle_modules():
        ok &= F.evaluate_polar(expr, module).matrix.is_zero()
    _line("14 bent square equals square plus (delta-2) touch on all modules", ok, t0)
