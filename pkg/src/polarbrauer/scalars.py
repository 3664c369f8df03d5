"""Exact coefficient arithmetic shared by all modules.

Scalars are rationals (``fractions.Fraction``), multivariate polynomials over
the rationals in named indeterminates (``delta``, ``lam``, ``z2``, ``z4``, ...),
and rational functions of such polynomials.  Everything is immutable and
canonical: two equal values compare equal structurally, and every acceptance
check in the package reduces to "equals zero exactly".
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Rational = Fraction

DELTA = "delta"
LAM = "lam"

ScalarLike = Union[int, Fraction, "Poly"]


def zvar(ell: int) -> str:
    """Name of the indeterminate recording the closed one-pole loop of size ``ell``."""
    return f"z{ell}"


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"not a rational scalar: {x!r}")


# A monomial is a sorted tuple of (name, positive exponent) pairs; () is 1.
Monomial = tuple


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for name, exp in b:
        d[name] = d.get(name, 0) + exp
    return tuple(sorted(d.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(exp for _, exp in m)


def _mono_sort_key(m: Monomial):
    # graded lexicographic, for deterministic rendering and term order
    return (_mono_degree(m), m)


class Poly:
    """A multivariate polynomial with Fraction coefficients in canonical form.

    Terms are stored as a dict mapping monomials to nonzero coefficients; the
    dict is never mutated after construction.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean = {}
        if terms:
            for mono, coeff in terms.items():
                coeff = _as_fraction(coeff)
                if coeff != 0:
                    clean[mono] = coeff
        self.terms = clean
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "Poly":
        return _ZERO

    @staticmethod
    def one() -> "Poly":
        return _ONE

    @staticmethod
    def const(q) -> "Poly":
        q = _as_fraction(q)
        return Poly({(): q}) if q else _ZERO

    @staticmethod
    def var(name: str, exp: int = 1) -> "Poly":
        if exp < 0:
            raise ValueError("negative exponent")
        if exp == 0:
            return _ONE
        return Poly({((name, exp),): Fraction(1)})

    @staticmethod
    def lift(x: ScalarLike) -> "Poly":
        if isinstance(x, Poly):
            return x
        return Poly.const(x)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        other = Poly.lift(other)
        terms = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = terms.get(mono, Fraction(0)) + coeff
            if s:
                terms[mono] = s
            else:
                terms.pop(mono, None)
        out = Poly.__new__(Poly)
        out.terms = terms
        out._hash = None
        return out

    __radd__ = __add__

    def __neg__(self):
        out = Poly.__new__(Poly)
        out.terms = {m: -c for m, c in self.terms.items()}
        out._hash = None
        return out

    def __sub__(self, other):
        return self + (-Poly.lift(other))

    def __rsub__(self, other):
        return Poly.lift(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, RatFunc):
            return NotImplemented
        other = Poly.lift(other)
        terms: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                s = terms.get(m, Fraction(0)) + c1 * c2
                if s:
                    terms[m] = s
                else:
                    terms.pop(m, None)
        out = Poly.__new__(Poly)
        out.terms = terms
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a Poly; use RatFunc")
        result = _ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            if q == 0:
                raise ZeroDivisionError("division of Poly by zero")
            return Poly({m: c / q for m, c in self.terms.items()})
        return RatFunc(self, other)

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self.terms.get((), Fraction(0))

    def variables(self) -> set:
        return {name for mono in self.terms for name, _ in mono}

    def degree(self, name: str | None = None) -> int:
        if not self.terms:
            return 0
        if name is None:
            return max(_mono_degree(m) for m in self.terms)
        return max((dict(m).get(name, 0) for m in self.terms), default=0)

    def coefficient(self, name: str, exp: int) -> "Poly":
        """Coefficient of ``name**exp`` as a polynomial in the other variables."""
        terms = {}
        for mono, coeff in self.terms.items():
            d = dict(mono)
            if d.pop(name, 0) == exp:
                terms[tuple(sorted(d.items()))] = coeff
        return Poly(terms)

    def substitute(self, bindings: Mapping[str, ScalarLike]) -> "Poly":
        """Exact substitution; indeterminates absent from ``bindings`` survive."""
        if not bindings:
            return self
        result = _ZERO
        for mono, coeff in self.terms.items():
            term = Poly.const(coeff)
            for name, exp in mono:
                if name in bindings:
                    term = term * Poly.lift(bindings[name]) ** exp
                else:
                    term = term * Poly.var(name, exp)
            result = result + term
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- rendering ---------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=_mono_sort_key, reverse=True):
            coeff = self.terms[mono]
            factors = [f"{n}^{e}" if e > 1 else n for n, e in mono]
            if not factors:
                body = str(coeff)
            elif coeff == 1:
                body = "*".join(factors)
            elif coeff == -1:
                body = "-" + "*".join(factors)
            else:
                body = "*".join([str(coeff)] + factors)
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self):
        return f"Poly({self})"


_ZERO = Poly.__new__(Poly)
_ZERO.terms = {}
_ZERO._hash = None
_ONE = Poly.__new__(Poly)
_ONE.terms = {(): Fraction(1)}
_ONE._hash = None

delta = Poly.var(DELTA)
lam = Poly.var(LAM)


def _poly_div_exact(p: Poly, q: Fraction) -> Poly:
    return Poly({m: c / q for m, c in p.terms.items()})


def _univariate_coeffs(p: Poly, name: str) -> list:
    """Dense coefficient list of a polynomial univariate in ``name``."""
    n = p.degree(name)
    coeffs = [Fraction(0)] * (n + 1)
    for mono, coeff in p.terms.items():
        d = dict(mono)
        e = d.pop(name, 0)
        if d:
            raise ValueError("not univariate")
        coeffs[e] += coeff
    return coeffs


def _univariate_gcd(a: list, b: list) -> list:
    """Monic gcd of dense rational coefficient lists (Euclid)."""

    def strip(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    def rem(num, den):
        num = num[:]
        while len(num) >= len(den) and num:
            factor = num[-1] / den[-1]
            shift = len(num) - len(den)
            for i, d in enumerate(den):
                num[i + shift] -= factor * d
            strip(num)
        return num

    a, b = strip(a[:]), strip(b[:])
    while b:
        a, b = b, rem(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def _coeffs_to_poly(coeffs: list, name: str) -> Poly:
    return Poly({(((name, e),) if e else ()): c for e, c in enumerate(coeffs) if c})


class RatFunc:
    """A quotient of two polynomials, reduced and with a normalised denominator.

    Used only where a parameter (``delta`` or ``delta - 2``) must be invertible.
    Cancellation is complete for the denominators that actually occur here
    (rational multiples of monomials, and univariate polynomials); equality is
    decided by exact cross-multiplication, so it never depends on cancellation.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = Poly.lift(num)
        den = Poly.lift(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        self.num, self.den = self._reduce(num, den)

    @staticmethod
    def lift(x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        return RatFunc(Poly.lift(x))

    @staticmethod
    def _reduce(num: Poly, den: Poly):
        if num.is_zero():
            return num, _ONE
        # cancel the common monomial content
        def content(p):
            its = iter(p.terms)
            acc = dict(next(its))
            for mono in its:
                d = dict(mono)
                acc = {n: min(e, d[n]) for n, e in acc.items() if n in d}
                if not acc:
                    break
            return acc

        common = content(num)
        if common:
            dcon = content(den)
            common = {n: min(e, dcon[n]) for n, e in common.items() if n in dcon}
        if common:
            def strip(p):
                terms = {}
                for mono, coeff in p.terms.items():
                    d = dict(mono)
                    for n, e in common.items():
                        d[n] -= e
                        if not d[n]:
                            del d[n]
                    terms[tuple(sorted(d.items()))] = coeff
                return Poly(terms)

            num, den = strip(num), strip(den)
        # univariate Euclid when numerator and denominator share one variable
        vs = num.variables() | den.variables()
        if len(vs) == 1 and not den.is_constant():
            (name,) = vs
            ca, cb = _univariate_coeffs(num, name), _univariate_coeffs(den, name)
            g = _univariate_gcd(ca, cb)
            if len(g) > 1:
                num = _coeffs_to_poly(_univariate_quot(ca, g), name)
                den = _coeffs_to_poly(_univariate_quot(cb, g), name)
        # normalise: denominator has leading coefficient 1
        lead = den.terms[max(den.terms, key=_mono_sort_key)]
        if lead != 1:
            num, den = _poly_div_exact(num, lead), _poly_div_exact(den, lead)
        return num, den

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        other = RatFunc.lift(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, other):
        return self + (-RatFunc.lift(other))

    def __rsub__(self, other):
        return RatFunc.lift(other) + (-self)

    def __mul__(self, other):
        other = RatFunc.lift(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return RatFunc(self.den, self.num) ** (-k)
        out = RatFunc(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        other = RatFunc.lift(other)
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return RatFunc.lift(other) / self

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Poly)):
            other = RatFunc.lift(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def substitute(self, bindings: Mapping[str, ScalarLike]) -> "RatFunc":
        den = self.den.substitute(bindings)
        if den.is_zero():
            raise ZeroDivisionError("denominator vanishes under substitution")
        return RatFunc(self.num.substitute(bindings), den)

    def as_poly(self) -> Poly:
        if self.den == _ONE:
            return self.num
        if self.den.is_constant():
            return _poly_div_exact(self.num, self.den.constant_value())
        raise ValueError(f"not polynomial: {self}")

    def __str__(self):
        if self.den == _ONE:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({self})"


def poly_arith(a: Poly, b: Poly, op: str) -> Poly:
    """Ring operation on polynomials; ``op`` is one of ``add``, ``sub``, ``mul``."""
    a, b = Poly.lift(a), Poly.lift(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_substitute(p: Poly, bindings: Mapping[str, ScalarLike]) -> Poly:
    """Exact substitution of indeterminates; unbound ones survive."""
    return Poly.lift(p).substitute(bindings)


def _univariate_quot(num: list, den: list) -> list:
    """Exact quotient of dense univariate coefficient lists."""
    num = num[:]
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        factor = num[-1] / den[-1]
        shift = len(num) - len(den)
        out[shift] = factor
        for i, d in enumerate(den):
            num[i + shift] -= factor * d
    return out
