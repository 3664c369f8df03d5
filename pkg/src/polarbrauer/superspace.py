"""Exact super linear algebra on V = C^(m|2n).

Builds the supersymmetric even form, the orthosymplectic generator matrices,
the swap/contraction maps on V (x) V, and the tempered-Casimir action, all
over exact rationals.  Sign conventions are baked into the matrices at
construction time (graded swap, slot-wise action with parity signs), so the
downstream linear algebra is sign-free.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .report import Report


class SuperMatrix:
    """Sparse exact matrix with optional Z2-parity metadata on rows/columns."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries=None):
        self.rows, self.cols = rows, cols
        self.entries = {}
        if entries:
            for (i, j), v in entries.items():
                if v:
                    self.entries[(i, j)] = Fraction(v)

    @staticmethod
    def identity(n: int) -> "SuperMatrix":
        return SuperMatrix(n, n, {(i, i): Fraction(1) for i in range(n)})

    @staticmethod
    def zero(rows: int, cols: int) -> "SuperMatrix":
        return SuperMatrix(rows, cols)

    def __getitem__(self, ij):
        return self.entries.get(ij, Fraction(0))

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other):
        assert (self.rows, self.cols) == (other.rows, other.cols)
        out = dict(self.entries)
        for ij, v in other.entries.items():
            acc = out.get(ij, Fraction(0)) + v
            if acc:
                out[ij] = acc
            else:
                out.pop(ij, None)
        m = SuperMatrix.__new__(SuperMatrix)
        m.rows, m.cols, m.entries = self.rows, self.cols, out
        return m

    def __neg__(self):
        m = SuperMatrix.__new__(SuperMatrix)
        m.rows, m.cols = self.rows, self.cols
        m.entries = {ij: -v for ij, v in self.entries.items()}
        return m

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "SuperMatrix":
        c = Fraction(c)
        m = SuperMatrix.__new__(SuperMatrix)
        m.rows, m.cols = self.rows, self.cols
        m.entries = {ij: c * v for ij, v in self.entries.items()} if c else {}
        return m

    def __rmul__(self, c):
        if isinstance(c, SuperMatrix):
            return NotImplemented
        return self.scale(c)

    def __mul__(self, other):
        if not isinstance(other, SuperMatrix):
            return self.scale(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        by_row: dict = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                ij = (i, j)
                acc = out.get(ij, Fraction(0)) + a * b
                if acc:
                    out[ij] = acc
                else:
                    out.pop(ij, None)
        m = SuperMatrix.__new__(SuperMatrix)
        m.rows, m.cols, m.entries = self.rows, other.cols, out
        return m

    def __pow__(self, k: int):
        assert self.rows == self.cols and k >= 0
        acc = SuperMatrix.identity(self.rows)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) and self.entries == other.entries

    def __hash__(self):
        return hash((self.rows, self.cols, frozenset(self.entries.items())))

    def transpose(self) -> "SuperMatrix":
        return SuperMatrix(self.cols, self.rows, {(j, i): v for (i, j), v in self.entries.items()})

    def tensor(self, other: "SuperMatrix") -> "SuperMatrix":
        """Plain Kronecker product (any graded signs must already be inside)."""
        out = {}
        for (i, j), a in self.entries.items():
            for (k, l), b in other.entries.items():
                out[(i * other.rows + k, j * other.cols + l)] = a * b
        return SuperMatrix(self.rows * other.rows, self.cols * other.cols, out)

    def apply(self, vec: dict) -> dict:
        out: dict = {}
        by_col: dict = {}
        for (i, j), v in self.entries.items():
            by_col.setdefault(j, []).append((i, v))
        for j, x in vec.items():
            for i, v in by_col.get(j, ()):
                acc = out.get(i, Fraction(0)) + v * x
                if acc:
                    out[i] = acc
                else:
                    out.pop(i, None)
        return out

    def trace(self) -> Fraction:
        return sum((v for (i, j), v in self.entries.items() if i == j), Fraction(0))

    def supertrace(self, parity) -> Fraction:
        return sum(
            ((-1) ** parity[i] * v for (i, j), v in self.entries.items() if i == j),
            Fraction(0),
        )

    def is_scalar(self) -> bool:
        if self.rows != self.cols:
            return False
        if not self.entries:
            return True
        vals = set()
        for (i, j), v in self.entries.items():
            if i != j:
                return False
            vals.add(v)
        return len(vals) == 1 and len(self.entries) == self.rows

    def scalar_value(self) -> Fraction:
        if not self.is_scalar():
            raise ValueError("matrix is not a scalar multiple of the identity")
        if not self.entries:
            return Fraction(0)
        return next(iter(self.entries.values()))

    def __repr__(self):
        return f"<SuperMatrix {self.rows}x{self.cols}, {len(self.entries)} nonzero>"


class SuperSpace:
    """C^(m|2n) with its standard homogeneous basis, indexed 0..m+2n-1."""

    __slots__ = ("m", "n", "dim", "sdim", "parity")

    def __init__(self, m: int, n: int):
        if m < 0 or n < 0 or m + 2 * n == 0:
            raise ValueError("need m, n >= 0 with m + 2n >= 1")
        self.m, self.n = m, n
        self.dim = m + 2 * n
        self.sdim = m - 2 * n
        self.parity = tuple([0] * m + [1] * (2 * n))

    def __repr__(self):
        return f"SuperSpace({self.m}|{2 * self.n})"


class GramForm:
    """The even supersymmetric form: g_upper[a][b] = form(e^a, e^b), g_lower its inverse."""

    __slots__ = ("g_upper", "g_lower", "dual_index")

    def __init__(self, g_upper: dict, g_lower: dict, dim: int):
        self.g_upper = g_upper
        self.g_lower = g_lower
        # with one nonzero per row, record the partner column and value
        self.dual_index = {}
        for (a, b), v in g_upper.items():
            self.dual_index[a] = (b, v)
        if len(self.dual_index) != dim:
            raise ValueError("form must have exactly one nonzero per row")

    def upper(self, a, b) -> Fraction:
        return self.g_upper.get((a, b), Fraction(0))

    def lower(self, a, b) -> Fraction:
        return self.g_lower.get((a, b), Fraction(0))


def build_space(m: int, n: int):
    """The super space together with its concrete form.

    The even block carries the identity form, the odd block the standard
    symplectic form [[0, I_n], [-I_n, 0]].
    """
    space = SuperSpace(m, n)
    gu, gl = {}, {}
    for i in range(m):
        gu[(i, i)] = Fraction(1)
        gl[(i, i)] = Fraction(1)
    for k in range(n):
        a, b = m + k, m + n + k
        gu[(a, b)] = Fraction(1)
        gu[(b, a)] = Fraction(-1)
        gl[(a, b)] = Fraction(-1)
        gl[(b, a)] = Fraction(1)
    return space, GramForm(gu, gl, space.dim)


def canonical_pairs(space: SuperSpace) -> list:
    """Index pairs (a, b) labelling a basis of the Lie superalgebra.

    Even-even pairs need a < b, odd-odd allow a <= b (the symmetric ones),
    mixed pairs take the even index first.
    """
    m, d = space.m, space.dim
    pairs = []
    for a in range(m):
        for b in range(a + 1, m):
            pairs.append((a, b))
    for a in range(m):
        for b in range(m, d):
            pairs.append((a, b))
    for a in range(m, d):
        for b in range(a, d):
            pairs.append((a, b))
    return pairs


def j_matrix(space: SuperSpace, form: GramForm, a: int, b: int) -> SuperMatrix:
    """The generator J_ab acting on column vectors in the standard basis."""
    par = space.parity
    entries: dict = {}

    def add_dual(target_col: int, dual_of: int, coeff: Fraction):
        # e_x = sum_c lower(x, c) e^c lands in column target_col
        for c in range(space.dim):
            v = form.lower(dual_of, c)
            if v:
                key = (c, target_col)
                acc = entries.get(key, Fraction(0)) + coeff * v
                if acc:
                    entries[key] = acc
                else:
                    entries.pop(key, None)

    add_dual(b, a, Fraction(1))
    add_dual(a, b, Fraction(-((-1) ** (par[a] * par[b]))))
    return SuperMatrix(space.dim, space.dim, entries)


def j_upper_matrix(space: SuperSpace, form: GramForm, a: int, b: int) -> SuperMatrix:
    """J^a_b = sum_{a'} form(e^a, e^{a'}) J_{a' b}; one term for this form."""
    ap, v = form.dual_index[a]
    return j_matrix(space, form, ap, b).scale(v)


def osp_generators(m: int, n: int) -> dict:
    """The J_ab matrices for the canonical index pairs."""
    space, form = build_space(m, n)
    return {(a, b): j_matrix(space, form, a, b) for (a, b) in canonical_pairs(space)}


def generator_parity(space: SuperSpace, pair) -> int:
    a, b = pair
    return (space.parity[a] + space.parity[b]) % 2


def act_on_slot(op: SuperMatrix, op_parity: int, factor_dims, factor_parities, slot: int) -> SuperMatrix:
    """Operator acting on one tensor factor, with the graded sign over earlier slots.

    factor_parities[i] is the parity vector of factor i; the operator picks up
    (-1)^(op_parity * sum of parities of the basis indices left of ``slot``).
    """
    dims = list(factor_dims)
    total = 1
    for d in dims:
        total *= d
    right = 1
    for d in dims[slot + 1 :]:
        right *= d
    block = dims[slot] * right
    entries = {}
    left_dims = dims[:slot]
    left_parities = factor_parities[:slot]
    for left in product(*[range(d) for d in left_dims]):
        if op_parity:
            sign = (-1) ** (sum(p[i] for p, i in zip(left_parities, left)) % 2)
        else:
            sign = 1
        base = 0
        for d, i in zip(left_dims, left):
            base = base * d + i
        base *= block
        for (i, j), v in op.entries.items():
            for rest in range(right):
                entries[(base + i * right + rest, base + j * right + rest)] = sign * v
    return SuperMatrix(total, total, entries)


def structure_maps(m: int, n: int) -> dict:
    """tau, the cap/cup contraction maps, and e = cup o cap on V (x) V."""
    space, form = build_space(m, n)
    d = space.dim
    par = space.parity
    tau = SuperMatrix(
        d * d,
        d * d,
        {
            (b * d + a, a * d + b): Fraction((-1) ** (par[a] * par[b]))
            for a in range(d)
            for b in range(d)
        },
    )
    chat = SuperMatrix(1, d * d, {(0, a * d + b): v for (a, b), v in form.g_upper.items()})
    # cup(1) = sum_a e^a (x) e_a = sum_{a,c} lower(a,c) e^a (x) e^c
    ccheck_entries = {}
    for a in range(d):
        for c in range(d):
            v = form.lower(a, c)
            if v:
                ccheck_entries[(a * d + c, 0)] = v
    ccheck = SuperMatrix(d * d, 1, ccheck_entries)
    return {
        "space": space,
        "form": form,
        "tau": tau,
        "chat": chat,
        "ccheck": ccheck,
        "eMap": ccheck * chat,
    }


def t_action(m: int, n: int) -> SuperMatrix:
    """The two-slot action of the tempered Casimir on V (x) V."""
    space, form = build_space(m, n)
    d = space.dim
    par = space.parity
    dims = (d, d)
    parities = (par, par)
    total = SuperMatrix.zero(d * d, d * d)
    for a in range(d):
        for b in range(d):
            xab = j_upper_matrix(space, form, a, b)
            if xab.is_zero():
                continue
            xba = j_upper_matrix(space, form, b, a)
            p = (par[a] + par[b]) % 2
            op = act_on_slot(xab, p, dims, parities, 0) * act_on_slot(xba, p, dims, parities, 1)
            total = total + op.scale(Fraction((-1) ** par[b], 2))
    return total


def casimir_action(m: int, n: int) -> SuperMatrix:
    """mu(C) = (1/2) sum (-1)^[b] J^a_b J^b_a on V."""
    space, form = build_space(m, n)
    d = space.dim
    par = space.parity
    total = SuperMatrix.zero(d, d)
    for a in range(d):
        for b in range(d):
            xab = j_upper_matrix(space, form, a, b)
            if xab.is_zero():
                continue
            xba = j_upper_matrix(space, form, b, a)
            total = total + (xab * xba).scale(Fraction((-1) ** par[b], 2))
    return total


def t_action_check(m: int, n: int) -> Report:
    """The tempered Casimir acts on V (x) V exactly as swap minus contraction."""
    rep = Report(f"t-action (m,n)=({m},{n})")
    maps = structure_maps(m, n)
    rep.expect_zero(
        "two-slot tempered Casimir = tau - e",
        t_action(m, n) - (maps["tau"] - maps["eMap"]),
    )
    return rep


def casimir_eigen_check(m: int, n: int) -> Report:
    rep = Report(f"casimir eigenvalue (m,n)=({m},{n})")
    d = m + 2 * n
    expected = SuperMatrix.identity(d).scale(m - 2 * n - 1)
    rep.expect_zero(f"mu(C) = ({m - 2 * n - 1}) id", casimir_action(m, n) - expected)
    return rep


def form_invariance_check(m: int, n: int, perturb: bool = False) -> Report:
    """Invariance of the form under every J_ab, over all index quadruples."""
    space, form = build_space(m, n)
    par = space.parity
    d = space.dim
    rep = Report(f"form invariance (m,n)=({m},{n})")
    bad = []
    for a, b in canonical_pairs(space):
        J = j_matrix(space, form, a, b)
        if perturb:
            J = j_matrix_perturbed(space, form, a, b)
        for c in range(d):
            for e in range(d):
                lhs = sum(
                    (form.upper(x, e) * J[(x, c)] for x in range(d)), Fraction(0)
                )
                rhs = sum(
                    (form.upper(c, x) * J[(x, e)] for x in range(d)), Fraction(0)
                )
                sign = (-1) ** ((par[a] + par[b]) * par[c] % 2)
                if lhs + sign * rhs:
                    bad.append((a, b, c, e))
    rep.add(
        "form(J v, w) + (-1)^([J][v]) form(v, J w) = 0 for all quadruples",
        not bad,
        "" if not bad else f"failures: {bad[:5]}",
    )
    return rep


def j_matrix_perturbed(space, form, a, b) -> SuperMatrix:
    """J_ab with the graded sign flipped; only used as a failing sanity input."""
    par = space.parity
    entries: dict = {}
    for c in range(space.dim):
        v = form.lower(a, c)
        if v:
            entries[(c, b)] = entries.get((c, b), Fraction(0)) + v
        v = form.lower(b, c)
        if v:
            entries[(c, a)] = entries.get((c, a), Fraction(0)) + v * ((-1) ** (par[a] * par[b]))
    return SuperMatrix(space.dim, space.dim, entries)


def bracket_closure_check(m: int, n: int) -> Report:
    """[J_ab, J_cd] matches the structure-constant expansion, all quadruples."""
    space, form = build_space(m, n)
    par = space.parity
    rep = Report(f"bracket closure (m,n)=({m},{n})")
    d = space.dim
    pairs = canonical_pairs(space)
    mats = {p: j_matrix(space, form, *p) for p in pairs}
    bad = []
    for a in range(d):
        for b in range(d):
            Jab = j_matrix(space, form, a, b)
            for c in range(d):
                for e in range(d):
                    Jcd = j_matrix(space, form, c, e)
                    sign = (-1) ** ((par[a] + par[b]) * (par[c] + par[e]) % 2)
                    lhs = Jab * Jcd - (Jcd * Jab).scale(sign)
                    rhs = (
                        j_matrix(space, form, a, e).scale(form.lower(c, b))
                        + j_matrix(space, form, b, c).scale(
                            form.lower(e, a) * (-1) ** (par[a] * (par[b] + par[c]) % 2)
                        )
                        - j_matrix(space, form, a, c).scale(
                            form.lower(e, b) * (-1) ** (par[c] * par[e])
                        )
                        - j_matrix(space, form, b, e).scale(
                            form.lower(c, a) * (-1) ** (par[a] * par[b])
                        )
                    )
                    if not (lhs - rhs).is_zero():
                        bad.append((a, b, c, e))
    rep.add("bracket table holds for all quadruples", not bad, f"failures: {bad[:5]}")
    dim_g = len(pairs)
    expected = m * (m - 1) // 2 + n * (2 * n + 1) + 2 * m * n
    rep.add(
        f"dim(g) = {expected}",
        dim_g == expected,
        f"got {dim_g}",
    )
    return rep
