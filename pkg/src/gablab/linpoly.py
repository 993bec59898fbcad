"""q-linearized polynomials and their skew algebra.

A linearized polynomial L(x) = sum a_i * x^(q^i) is stored as the tuple of
its coefficient codes, degree 0 first, with no trailing zeros, plus the
field context (the zero polynomial keeps the context alive with an empty
tuple).  The q-degree of zero is the distinguished marker ``NEG_INF``,
never -1, so degree comparisons behave in every branch.

Composition is the skew product: it is associative, distributes over
addition, but does not commute; evaluation is F_q-linear in the argument.
Right division ``f = h o g + r`` with ``deg_q r < deg_q g`` re-verifies its
reconstruction identity internally before returning.
"""

from __future__ import annotations

import itertools

from .field import BasisSpec, FieldCtx, FieldElement

NEG_INF = float("-inf")


class LinPoly:
    __slots__ = ("ctx", "codes")

    def __init__(self, ctx: FieldCtx, coeffs=()):
        codes = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.ctx is not ctx:
                    raise ValueError("coefficient from a different field context")
                codes.append(c.code)
            else:
                codes.append(ctx.element(int(c)).code)
        while codes and codes[-1] == 0:
            codes.pop()
        self.ctx = ctx
        self.codes = tuple(codes)

    @classmethod
    def zero(cls, ctx: FieldCtx) -> "LinPoly":
        return cls(ctx, ())

    @classmethod
    def x(cls, ctx: FieldCtx) -> "LinPoly":
        return cls(ctx, (1,))

    @classmethod
    def monomial(cls, ctx: FieldCtx, i: int, coeff=1) -> "LinPoly":
        """coeff * x^(q^i)"""
        if i < 0:
            raise ValueError("monomial q-degree must be nonnegative")
        return cls(ctx, (0,) * i + (coeff,))

    @property
    def deg_q(self):
        return len(self.codes) - 1 if self.codes else NEG_INF

    def is_zero(self) -> bool:
        return not self.codes

    def coeff(self, i: int) -> FieldElement:
        code = self.codes[i] if 0 <= i < len(self.codes) else 0
        return FieldElement(self.ctx, code)

    @property
    def coeffs(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.ctx, c) for c in self.codes)

    def __call__(self, u) -> FieldElement:
        ctx = self.ctx
        u = ctx.element(u)
        acc, up = 0, u.code
        for i, a in enumerate(self.codes):
            if i:
                up = ctx.frob(up)
            if a:
                acc = ctx.add(acc, ctx.mul(a, up))
        return FieldElement(ctx, acc)

    def _binop(self, other, op):
        if not isinstance(other, LinPoly):
            return NotImplemented
        if other.ctx is not self.ctx:
            raise ValueError("mixed field contexts in polynomial arithmetic")
        a, b = self.codes, other.codes
        if len(a) < len(b):
            a = a + (0,) * (len(b) - len(a))
        else:
            b = b + (0,) * (len(a) - len(b))
        return LinPoly(self.ctx, [op(x, y) for x, y in zip(a, b)])

    def __add__(self, other):
        return self._binop(other, self.ctx.add)

    def __sub__(self, other):
        return self._binop(other, self.ctx.sub)

    def __neg__(self):
        return LinPoly(self.ctx, [self.ctx.neg(c) for c in self.codes])

    def __mul__(self, scalar):
        """Scale every coefficient; composition is spelled .compose()."""
        if isinstance(scalar, LinPoly):
            raise TypeError("use .compose() for the skew product, * is scalar scaling")
        lam = self.ctx.element(scalar).code
        return LinPoly(self.ctx, [self.ctx.mul(lam, c) for c in self.codes])

    __rmul__ = __mul__

    def compose(self, other: "LinPoly") -> "LinPoly":
        """Skew product (self o other)(x) = self(other(x))."""
        if not isinstance(other, LinPoly):
            raise TypeError("can only compose with another LinPoly")
        if other.ctx is not self.ctx:
            raise ValueError("mixed field contexts in composition")
        ctx = self.ctx
        if self.is_zero() or other.is_zero():
            return LinPoly.zero(ctx)
        out = [0] * (len(self.codes) + len(other.codes) - 1)
        for i, a in enumerate(self.codes):
            if not a:
                continue
            for j, b in enumerate(other.codes):
                if b:
                    out[i + j] = ctx.add(out[i + j], ctx.mul(a, ctx.frob(b, i)))
        return LinPoly(ctx, out)

    def right_divmod(self, g: "LinPoly") -> tuple["LinPoly", "LinPoly"]:
        """h, r with self = h o g + r and deg_q r < deg_q g."""
        if not isinstance(g, LinPoly) or g.ctx is not self.ctx:
            raise ValueError("divisor must be a LinPoly over the same field context")
        if g.is_zero():
            raise ZeroDivisionError("right division by the zero polynomial")
        ctx = self.ctx
        e = g.deg_q
        ge = g.codes[-1]
        r = self
        hc = [0] * (len(self.codes) - len(g.codes) + 1) if self.deg_q >= e else []
        while r.deg_q >= e:
            d = r.deg_q - e
            lead = ctx.div(r.codes[-1], ctx.frob(ge, d))
            hc[d] = lead
            r = r - LinPoly.monomial(ctx, d, lead).compose(g)
        h = LinPoly(ctx, hc)
        if (h.compose(g) + r).codes != self.codes:
            raise ArithmeticError("right division failed its reconstruction check")
        return h, r

    def monic(self) -> tuple["LinPoly", FieldElement]:
        """(self / leading, leading); errors on the zero polynomial."""
        if self.is_zero():
            raise ValueError("the zero polynomial has no monic normalization")
        lead = self.codes[-1]
        if lead == 1:
            return self, FieldElement(self.ctx, 1)
        inv = self.ctx.inv(lead)
        return LinPoly(self.ctx, [self.ctx.mul(inv, c) for c in self.codes]), \
            FieldElement(self.ctx, lead)

    def __eq__(self, other):
        if not isinstance(other, LinPoly):
            return NotImplemented
        return other.ctx is self.ctx and other.codes == self.codes

    def __hash__(self):
        return hash(self.codes)

    def __repr__(self):
        return f"LinPoly({list(self.codes)})"


class SubspaceBasis:
    """An independent tuple of elements spanning an F_q-subspace.

    Construction rejects dependent generators, so a SubspaceBasis is a
    certificate of independence; the empty basis spans the zero space.
    """

    __slots__ = ("ctx", "gens")

    def __init__(self, ctx: FieldCtx, gens=()):
        gens = tuple(ctx.element(g) for g in gens)
        if ctx.span_dim(gens) != len(gens):
            raise ValueError("dependent generators cannot form a subspace basis")
        self.ctx = ctx
        self.gens = gens

    @property
    def dim(self) -> int:
        return len(self.gens)

    def elements(self):
        """All q^dim span members, coefficient odometer order (last gen fastest)."""
        ctx = self.ctx
        scalars = [e.code for e in ctx.subfield_elements()]
        gcodes = [g.code for g in self.gens]
        for combo in itertools.product(scalars, repeat=len(gcodes)):
            acc = 0
            for c, g in zip(combo, gcodes):
                acc = ctx.add(acc, ctx.mul(c, g))
            yield FieldElement(ctx, acc)

    def element_codes(self) -> frozenset[int]:
        return frozenset(e.code for e in self.elements())

    def contains(self, u) -> bool:
        u = self.ctx.element(u)
        if u.code == 0:
            return True
        return self.ctx.span_dim(self.gens + (u,)) == self.dim

    def same_span(self, other: "SubspaceBasis") -> bool:
        return self.dim == other.dim and all(self.contains(g) for g in other.gens)

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __getitem__(self, i):
        return self.gens[i]

    def __repr__(self):
        return f"SubspaceBasis({[g.code for g in self.gens]})"


# ---------------------------------------------------------------------------
# Linear algebra over the top field, on code matrices.  Deterministic partial
# pivoting: the first nonzero entry in row order is the pivot.


def _det_codes(ctx: FieldCtx, rows: list[list[int]]) -> int:
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    rows = [list(r) for r in rows]
    det = 1 % ctx.order
    negate = False
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            negate = not negate
        pv = rows[c][c]
        det = ctx.mul(det, pv)
        inv = ctx.inv(pv)
        for r in range(c + 1, n):
            if rows[r][c]:
                f = ctx.mul(rows[r][c], inv)
                rows[r] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(rows[r], rows[c])]
    return ctx.neg(det) if negate else det


def _solve_codes(ctx: FieldCtx, rows: list[list[int]], rhs: list[int]) -> list[int]:
    n = len(rows)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c]), None)
        if piv is None:
            raise ValueError("singular linear system")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = ctx.inv(aug[c][c])
        aug[c] = [ctx.mul(inv, v) for v in aug[c]]
        for r in range(c + 1, n):
            if aug[r][c]:
                f = aug[r][c]
                aug[r] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(aug[r], aug[c])]
    sol = [0] * n
    for c in range(n - 1, -1, -1):
        acc = aug[c][n]
        for j in range(c + 1, n):
            acc = ctx.sub(acc, ctx.mul(aug[c][j], sol[j]))
        sol[c] = acc
    return sol


def matrix_rank(rows) -> int:
    """Rank over the field of a matrix of FieldElements."""
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ctx = rows[0][0].ctx
    mat = [[e.code for e in r] for r in rows]
    nr, nc = len(mat), len(mat[0])
    rank = 0
    for c in range(nc):
        piv = next((r for r in range(rank, nr) if mat[r][c]), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        inv = ctx.inv(mat[rank][c])
        mat[rank] = [ctx.mul(inv, v) for v in mat[rank]]
        for r in range(nr):
            if r != rank and mat[r][c]:
                f = mat[r][c]
                mat[r] = [ctx.sub(a, ctx.mul(f, b)) for a, b in zip(mat[r], mat[rank])]
        rank += 1
        if rank == nr:
            break
    return rank


class MooreMatrix:
    """Matrix whose rows are successive q-power images of a fixed tuple.

    Entry (i, j) is elems[j] ** (q ** row_exps[i]); the exponent list is
    strictly increasing and defaults to 0..len(elems)-1.
    """

    __slots__ = ("ctx", "elems", "row_exps", "entries")

    def __init__(self, elems, row_exps=None):
        elems = tuple(elems)
        if not elems:
            raise ValueError("a Moore matrix needs at least one column")
        ctx = elems[0].ctx
        if any(e.ctx is not ctx for e in elems):
            raise ValueError("Moore matrix entries from mixed field contexts")
        if row_exps is None:
            row_exps = tuple(range(len(elems)))
        else:
            row_exps = tuple(int(e) for e in row_exps)
            if any(e < 0 for e in row_exps):
                raise ValueError("row exponents must be nonnegative")
            if any(a >= b for a, b in zip(row_exps, row_exps[1:])):
                raise ValueError("row exponents must be strictly increasing")
        self.ctx = ctx
        self.elems = elems
        self.row_exps = row_exps
        codes = [e.code for e in elems]
        entries = []
        prev_exp = 0
        row = list(codes)
        for e in row_exps:
            for _ in range(e - prev_exp):
                row = [ctx.frob(c) for c in row]
            prev_exp = e
            entries.append(list(row))
        self.entries = entries

    def det(self) -> FieldElement:
        if len(self.row_exps) != len(self.elems):
            raise ValueError("determinant of a non-square Moore matrix")
        return FieldElement(self.ctx, _det_codes(self.ctx, self.entries))


def moore_det(elems, deleted_row=None) -> FieldElement:
    """det of the Moore matrix of elems; optionally with one q-power row
    deleted from the (n+1)-row tall version, keeping it square."""
    elems = tuple(elems)
    n = len(elems)
    if deleted_row is None:
        return MooreMatrix(elems).det()
    if not 0 <= deleted_row <= n:
        raise ValueError(f"deleted row exponent must lie in 0..{n}")
    exps = [e for e in range(n + 1) if e != deleted_row]
    return MooreMatrix(elems, exps).det()


def annihilator(basis: SubspaceBasis) -> LinPoly:
    """Monic linearized polynomial whose roots are exactly the span.

    Built by the one-generator-at-a-time recurrence
    A_{V+<w>} = (x^q - A_V(w)^(q-1) x) o A_V; q-degree equals dim.
    """
    if not isinstance(basis, SubspaceBasis):
        raise TypeError("annihilator takes a SubspaceBasis")
    ctx = basis.ctx
    a = LinPoly.x(ctx)
    for w in basis.gens:
        val = a(w)
        if val.code == 0:
            raise ValueError("dependent generators passed to annihilator")
        c = ctx.pow(val.code, ctx.q - 1)
        a = LinPoly(ctx, (ctx.neg(c), 1)).compose(a)
    return a


def root_space(f: LinPoly) -> SubspaceBasis:
    """F_q-basis of the root set of f inside the top field."""
    if f.is_zero():
        raise ValueError("the zero polynomial has the whole field as roots")
    ctx = f.ctx
    from .field import _fp_nullspace  # local: keep field's helpers private

    n = ctx.sm
    cols = [ctx._digits(f(FieldElement(ctx, ctx.p ** j)).code) for j in range(n)]
    rows = [[cols[j][d] for j in range(n)] for d in range(n)]
    null = _fp_nullspace(rows, ctx.p)
    kept = ctx._greedy_codes(sorted(ctx._undigits(v) for v in null))
    if len(kept) * ctx.s != len(null):
        raise AssertionError("root set of a linearized polynomial must be F_q-linear")
    dim = len(kept)
    if f.deg_q is not NEG_INF and dim > f.deg_q:
        raise AssertionError("root space larger than the q-degree")
    return SubspaceBasis(ctx, [FieldElement(ctx, c) for c in kept])


def q_lagrange(points: SubspaceBasis, values) -> LinPoly:
    """The unique linearized polynomial of q-degree < n hitting the data.

    points must be independent (a SubspaceBasis of size n); values is the
    element sequence the polynomial must take on them.
    """
    if not isinstance(points, SubspaceBasis):
        raise TypeError("interpolation points must form a SubspaceBasis")
    ctx = points.ctx
    values = [ctx.element(v) for v in values]
    n = points.dim
    if len(values) != n:
        raise ValueError("point/value count mismatch")
    if n == 0:
        raise ValueError("interpolation needs at least one point")
    rows = []
    for g in points.gens:
        row, c = [], g.code
        for i in range(n):
            if i:
                c = ctx.frob(c)
            row.append(c)
        rows.append(row)
    sol = _solve_codes(ctx, rows, [v.code for v in values])
    return LinPoly(ctx, sol)


def q_lagrange_by_minors(points: SubspaceBasis, values) -> LinPoly:
    """Interpolation through an alternating sum of Moore-minor determinants.

    Independent cross-check route for the solver path; quadratic-cost, meant
    for small n only.
    """
    ctx = points.ctx
    values = [ctx.element(v) for v in values]
    n = points.dim
    if len(values) != n:
        raise ValueError("point/value count mismatch")
    den = moore_det(points.gens)
    if den.code == 0:
        raise ValueError("interpolation points are dependent")
    inv_den = ctx.inv(den.code)
    total = LinPoly.zero(ctx)
    for i in range(n):
        others = points.gens[:i] + points.gens[i + 1:]
        coeffs = []
        for t in range(n):
            if others:
                exps = [e for e in range(n) if e != t]
                sub = MooreMatrix(others, exps).det().code
            else:
                sub = 1
            if (t + n - 1) % 2:
                sub = ctx.neg(sub)
            coeffs.append(sub)
        term = LinPoly(ctx, coeffs)
        scale = ctx.mul(values[i].code, inv_den)
        if (n - 1 - i) % 2:
            scale = ctx.neg(scale)
        total = total + term * scale
    return total


def minor_coeff(basis: SubspaceBasis, i: int) -> FieldElement:
    """Ratio of Moore determinants giving the i-th annihilator coefficient.

    For a t-dim basis, the monic annihilator is
    x^(q^t) - h_1 x^(q^(t-1)) + h_2 x^(q^(t-2)) - ...; this returns h_i as
    det(tall Moore matrix with the q^(t-i) row deleted) / det(square Moore).
    """
    t = basis.dim
    if not 1 <= i <= t:
        raise ValueError(f"coefficient index must lie in 1..{t}")
    num = moore_det(basis.gens, deleted_row=t - i)
    den = moore_det(basis.gens)
    return num / den
