"""Arithmetic in the finite-field tower F_p < F_q = F_{p^s} < F_{q^m}.

The top field is realized exactly once as F_p[x]/(modulus) with a monic
irreducible modulus of degree s*m; the middle field F_q is the fixed set of
the (p^s)-power map, never a second quotient structure.  An element is
identified by its canonical integer code ``sum(coeffs[i] * p**i)`` where
``coeffs`` is the degree-0-first coefficient vector of its residue
polynomial.  Codes biject onto ``range(p**(s*m))`` and are the wire format
of every file and CLI interface in this package.

When a default modulus is requested, the lexicographically smallest monic
irreducible of the right degree is chosen, comparing coefficient sequences
from degree 0 upward as base-p integers, so a (p, s, m) triple always names
the same field.

A ``FieldCtx`` is immutable after construction and every operation is a
pure function of element codes, so contexts and elements can be shared
freely between threads and worker processes.  Small fields lazily build a
discrete-log table pair to speed up multiplication; the direct polynomial
route stays in place for larger fields and is what builds the tables in
the first place.  Codes from different contexts must never be mixed; the
element wrapper enforces this by reference identity of the context.
"""

from __future__ import annotations

import itertools

DEFAULT_FIELD_CAP = 1 << 24

# Above this order, multiplication falls back to direct polynomial
# arithmetic instead of materializing exp/log tables.
_TABLE_LIMIT = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n by trial division (desk scale)."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Dense polynomials over F_p (coefficient lists, degree 0 first, trimmed).
# Only used for modulus handling; element arithmetic works on codes.


def _ptrim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return _ptrim([c % p for c in out])


def _pdivmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = [c % p for c in a]
    _ptrim(r)
    q = [0] * max(len(r) - len(b) + 1, 0)
    inv_lead = pow(b[-1], p - 2, p)
    while len(r) >= len(b):
        d = len(r) - len(b)
        f = (r[-1] * inv_lead) % p
        q[d] = f
        for i, bc in enumerate(b):
            r[d + i] = (r[d + i] - f * bc) % p
        _ptrim(r)
    return _ptrim(q), r


def _pgcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = [c % p for c in a], [c % p for c in b]
    _ptrim(a)
    _ptrim(b)
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [(c * inv) % p for c in a]
    return a


def _p_pthpow_mod(g: list[int], mod: list[int], p: int) -> list[int]:
    # g(x)^p = g(x^p) for g with F_p coefficients.
    if not g:
        return []
    out = [0] * ((len(g) - 1) * p + 1)
    for i, c in enumerate(g):
        out[i * p] = c
    return _pdivmod(out, mod, p)[1]


def _poly_is_irreducible(poly: list[int], p: int) -> bool:
    """Rabin's criterion for a monic polynomial over F_p."""
    d = len(poly) - 1
    if d < 1:
        return False
    if d == 1:
        return True
    x = [0, 1]

    def x_ppow(k: int) -> list[int]:
        g = list(x)
        for _ in range(k):
            g = _p_pthpow_mod(g, poly, p)
        return g

    if x_ppow(d) != x:
        return False
    for r in _prime_factors(d):
        diff = list(x_ppow(d // r))
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        if _pgcd(_ptrim(diff), poly, p) != [1]:
            return False
    return True


def _smallest_irreducible(p: int, d: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree d over F_p."""
    for code in range(p ** d):
        low, rem = [], code
        for _ in range(d):
            rem, dig = divmod(rem, p)
            low.append(dig)
        cand = low + [1]
        if _poly_is_irreducible(cand, p):
            return tuple(cand)
    raise ValueError(f"no irreducible polynomial of degree {d} over GF({p})")  # unreachable


# ---------------------------------------------------------------------------
# F_p linear algebra on digit vectors (row lists).  Cold paths only; the hot
# rank computation has packed fast paths on FieldCtx.


def _fp_rref(rows: list[list[int]], p: int) -> tuple[list[list[int]], list[int]]:
    rows = [list(r) for r in rows]
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv) % p for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def _fp_nullspace(rows: list[list[int]], p: int) -> list[list[int]]:
    ncols = len(rows[0]) if rows else 0
    red, pivots = _fp_rref(rows, p)
    basis = []
    for fc in range(ncols):
        if fc in pivots:
            continue
        v = [0] * ncols
        v[fc] = 1
        for ri, pc in enumerate(pivots):
            v[pc] = (-red[ri][fc]) % p
        basis.append(v)
    return basis


def _fp_solve(rows: list[list[int]], rhs: list[int], p: int) -> list[int] | None:
    """One solution of rows * x = rhs, or None; free variables get 0."""
    aug = [list(r) + [b % p] for r, b in zip(rows, rhs)]
    ncols = len(rows[0]) if rows else 0
    red, pivots = _fp_rref(aug, p)
    if ncols in pivots:
        return None
    x = [0] * ncols
    for ri, pc in enumerate(pivots):
        x[pc] = red[ri][ncols]
    return x


class _RowSpaceGF2:
    """Incremental row space over F_2; vectors are packed ints."""

    __slots__ = ("rows",)

    def __init__(self):
        self.rows: dict[int, int] = {}

    def _reduce(self, v: int) -> int:
        rows = self.rows
        while v:
            w = rows.get(v.bit_length() - 1)
            if w is None:
                return v
            v ^= w
        return 0

    def member(self, v: int) -> bool:
        return self._reduce(v) == 0

    def insert(self, v: int) -> bool:
        v = self._reduce(v)
        if v == 0:
            return False
        self.rows[v.bit_length() - 1] = v
        return True


class _RowSpaceFp:
    """Incremental row space over F_p; vectors are digit lists."""

    __slots__ = ("p", "rows")

    def __init__(self, p: int):
        self.p = p
        self.rows: dict[int, list[int]] = {}

    def _reduce(self, v):
        p = self.p
        v = list(v)
        while True:
            lead = -1
            for i in range(len(v) - 1, -1, -1):
                if v[i]:
                    lead = i
                    break
            if lead < 0:
                return None
            row = self.rows.get(lead)
            if row is None:
                return lead, v
            f = v[lead]
            v = [(a - f * b) % p for a, b in zip(v, row)]

    def member(self, v) -> bool:
        return self._reduce(v) is None

    def insert(self, v) -> bool:
        red = self._reduce(v)
        if red is None:
            return False
        lead, vv = red
        inv = pow(vv[lead], self.p - 2, self.p)
        self.rows[lead] = [(x * inv) % self.p for x in vv]
        return True


class FieldCtx:
    """The tower F_p < F_{p^s} < F_{p^{s*m}} with a fixed modulus.

    Code-level arithmetic (``add``, ``mul``, ...) works on raw integer
    codes and is what the scanning loops use; ``element`` wraps a code in
    a :class:`FieldElement` for operator syntax.  Two contexts are never
    interchangeable, even with equal parameters: identity is the tag.
    """

    __slots__ = (
        "p", "s", "m", "q", "sm", "order", "modulus",
        "_mod_int", "_n1", "_exp", "_log", "_frob_tab",
        "_sub_pbasis", "_sub_codes",
    )

    def __init__(self, p: int, s: int, m: int, modulus=None, cap: int = DEFAULT_FIELD_CAP):
        if not _is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if s < 1 or m < 1:
            raise ValueError("tower exponents s and m must be >= 1")
        self.p = p
        self.s = s
        self.m = m
        self.sm = s * m
        self.q = p ** s
        order = p ** self.sm
        if order > cap:
            raise ValueError(
                f"field order {p}^{self.sm} = {order} exceeds the cap {cap}; "
                "pass a larger cap to override")
        self.order = order
        if modulus is None:
            self.modulus = _smallest_irreducible(p, self.sm)
        else:
            mod = tuple(int(c) for c in modulus)
            if len(mod) != self.sm + 1:
                raise ValueError(
                    f"modulus must have degree {self.sm}, got degree {len(mod) - 1}")
            if any(not 0 <= c < p for c in mod):
                raise ValueError("modulus coefficients must lie in [0, p)")
            if mod[-1] != 1:
                raise ValueError("modulus must be monic")
            if not _poly_is_irreducible(list(mod), p):
                raise ValueError("modulus is reducible over the prime field")
            self.modulus = mod
        self._mod_int = sum(c << i for i, c in enumerate(self.modulus)) if p == 2 else 0
        self._n1 = order - 1
        self._exp = None
        self._log = None
        self._frob_tab = None
        self._sub_pbasis = None
        self._sub_codes = None

    def __repr__(self):
        return f"FieldCtx(p={self.p}, s={self.s}, m={self.m})"

    # -- element construction ------------------------------------------------

    def element(self, value) -> "FieldElement":
        """Wrap an integer code, a coefficient sequence or an element."""
        if isinstance(value, FieldElement):
            if value.ctx is not self:
                raise ValueError("element belongs to a different field context")
            return value
        if isinstance(value, int):
            if not 0 <= value < self.order:
                raise ValueError(f"code {value} out of range for {self!r}")
            return FieldElement(self, value)
        return self.from_coeffs(value)

    def from_coeffs(self, coeffs) -> "FieldElement":
        coeffs = list(coeffs)
        if len(coeffs) > self.sm:
            raise ValueError("too many coefficients for this field")
        if any(not 0 <= c < self.p for c in coeffs):
            raise ValueError("coefficients must lie in [0, p)")
        coeffs += [0] * (self.sm - len(coeffs))
        return FieldElement(self, self._undigits(coeffs))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1 % self.order)

    def gen(self) -> "FieldElement":
        """Residue of the indeterminate (code p); the canonical generator."""
        if self.sm == 1:
            raise ValueError("prime field: the residue of x is not an element generator")
        return FieldElement(self, self.p)

    def elements(self):
        return (FieldElement(self, c) for c in range(self.order))

    def random_element(self, rng) -> "FieldElement":
        return FieldElement(self, rng.randrange(self.order))

    # -- digit plumbing -------------------------------------------------------

    def _digits(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.sm):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def _undigits(self, ds) -> int:
        code = 0
        for d in reversed(list(ds)):
            code = code * self.p + d
        return code

    # -- code arithmetic ------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        out, mult = 0, 1
        for _ in range(self.sm):
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            out += ((da + db) % p) * mult
            mult *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        out, mult = 0, 1
        for _ in range(self.sm):
            a, da = divmod(a, p)
            out += (-da % p) * mult
            mult *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def _mul_direct(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.p == 2:
            r = 0
            while b:
                if b & 1:
                    r ^= a
                a <<= 1
                b >>= 1
            deg, mint = self.sm, self._mod_int
            bl = r.bit_length()
            while bl > deg:
                r ^= mint << (bl - 1 - deg)
                bl = r.bit_length()
            return r
        p = self.p
        da, db = self._digits(a), self._digits(b)
        conv = [0] * (2 * self.sm - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] += x * y
        mod = self.modulus
        for d in range(len(conv) - 1, self.sm - 1, -1):
            c = conv[d] % p
            if c:
                off = d - self.sm
                for t in range(self.sm):
                    conv[off + t] -= c * mod[t]
            conv[d] = 0
        return self._undigits([c % p for c in conv[: self.sm]])

    def _pow_direct(self, a: int, e: int) -> int:
        r = 1 % self.order
        a %= self.order
        while e:
            if e & 1:
                r = self._mul_direct(r, a)
            a = self._mul_direct(a, a)
            e >>= 1
        return r

    def _build_tables(self):
        # Benign under races: every builder computes identical tables.
        if self._exp is not None:
            return
        n1 = self._n1
        if n1 <= 1:
            g = 1 % self.order
        else:
            g = None
            pf = _prime_factors(n1)
            for cand in range(2, self.order):
                if all(self._pow_direct(cand, n1 // r) != 1 for r in pf):
                    g = cand
                    break
            if g is None:
                raise AssertionError("no multiplicative generator found")
        exp = [0] * max(n1, 1)
        log = [0] * self.order
        e = 1 % self.order
        for i in range(max(n1, 1)):
            exp[i] = e
            log[e] = i
            e = self._mul_direct(e, g)
        qr = self.q % n1 if n1 > 1 else 0
        frob = [0] * self.order
        for a in range(1, self.order):
            frob[a] = exp[(log[a] * qr) % n1] if n1 > 1 else a
        self._exp, self._log, self._frob_tab = exp, log, frob

    def mul(self, a: int, b: int) -> int:
        if self._exp is None:
            if self.order > _TABLE_LIMIT:
                return self._mul_direct(a, b)
            self._build_tables()
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self._n1]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        if self._exp is None and self.order <= _TABLE_LIMIT:
            self._build_tables()
        if self._exp is not None:
            return self._exp[(-self._log[a]) % self._n1] if self._n1 > 1 else a
        return self._pow_direct(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 0 if e else 1 % self.order
        if self._exp is None and self.order <= _TABLE_LIMIT:
            self._build_tables()
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % self._n1] if self._n1 > 1 else a
        if e < 0:
            return self._pow_direct(self._pow_direct(a, self.order - 2), -e)
        return self._pow_direct(a, e)

    def frob(self, a: int, i: int = 1) -> int:
        """i-fold q-power map on a code; frob(a, m) == a for every a."""
        if i < 0:
            raise ValueError("frobenius power must be nonnegative")
        i %= self.m
        if i == 0:
            return a
        if self._frob_tab is None and self.order <= _TABLE_LIMIT:
            self._build_tables()
        if self._frob_tab is not None:
            tab = self._frob_tab
            for _ in range(i):
                a = tab[a]
            return a
        for _ in range(i):
            a = self.pow(a, self.q)
        return a

    # -- traces ---------------------------------------------------------------

    def trace_to_subfield(self, u: "FieldElement") -> "FieldElement":
        """Trace of the top field down to F_q (sum of q-power conjugates)."""
        u = self.element(u)
        acc, cur = 0, u.code
        for i in range(self.m):
            acc = self.add(acc, cur)
            cur = self.frob(cur)
        return FieldElement(self, acc)

    def trace_to_prime(self, u: "FieldElement") -> "FieldElement":
        """Absolute trace down to F_p (sum of p-power conjugates)."""
        u = self.element(u)
        acc, cur = 0, u.code
        for i in range(self.sm):
            acc = self.add(acc, cur)
            cur = self.pow(cur, self.p)
        return FieldElement(self, acc)

    # -- the middle field -----------------------------------------------------

    def _subfield_pbasis(self) -> tuple[int, ...]:
        """Codes of an F_p-basis of F_q, from the kernel of frob - id."""
        if self._sub_pbasis is None:
            n = self.sm
            cols = []
            for j in range(n):
                bj = self.p ** j
                cols.append(self._digits(self.sub(self.frob(bj), bj)))
            rows = [[cols[j][d] for j in range(n)] for d in range(n)]
            null = _fp_nullspace(rows, self.p)
            codes = sorted(self._undigits(v) for v in null)
            if len(codes) != self.s:
                raise AssertionError("fixed field of the q-power map has wrong size")
            self._sub_pbasis = tuple(codes)
        return self._sub_pbasis

    def subfield_elements(self) -> tuple["FieldElement", ...]:
        """All q elements of F_q inside the top field, ascending by code."""
        if self._sub_codes is None:
            basis = self._subfield_pbasis()
            codes = set()
            for combo in itertools.product(range(self.p), repeat=self.s):
                acc = 0
                for c, e in zip(combo, basis):
                    acc = self.add(acc, self.mul(c, e))
                codes.add(acc)
            if len(codes) != self.q:
                raise AssertionError("subfield enumeration produced a wrong count")
            self._sub_codes = tuple(sorted(codes))
        return tuple(FieldElement(self, c) for c in self._sub_codes)

    # -- F_q-linear structure --------------------------------------------------

    def _greedy_codes(self, codes) -> list[int]:
        lifts = self._subfield_pbasis()
        if self.p == 2:
            space = _RowSpaceGF2()
            tovec = lambda c: c
        else:
            space = _RowSpaceFp(self.p)
            tovec = self._digits
        kept = []
        for c in codes:
            if not space.member(tovec(c)):
                kept.append(c)
                for e in lifts:
                    space.insert(tovec(self.mul(e, c)))
        return kept

    def _rank_codes(self, codes) -> int:
        if self.p == 2 and self.s == 1:
            rows: dict[int, int] = {}
            r = 0
            for v in codes:
                while v:
                    h = v.bit_length() - 1
                    w = rows.get(h)
                    if w is None:
                        rows[h] = v
                        r += 1
                        break
                    v ^= w
            return r
        return len(self._greedy_codes(codes))

    def span_dim(self, elems) -> int:
        """Dimension over F_q of the span of the given elements."""
        return self._rank_codes([self.element(e).code for e in elems])

    def greedy_independent(self, elems) -> list["FieldElement"]:
        """First maximal F_q-independent sublist, scanning in input order."""
        codes = self._greedy_codes([self.element(e).code for e in elems])
        return [FieldElement(self, c) for c in codes]

    def coords(self, u: "FieldElement", basis: "BasisSpec") -> list["FieldElement"]:
        """Coordinates of u over F_q in the given full basis (exact)."""
        u = self.element(u)
        if not isinstance(basis, BasisSpec):
            basis = BasisSpec(basis)
        if basis.ctx is not self:
            raise ValueError("basis belongs to a different field context")
        lifts = self._subfield_pbasis()
        cols = []
        for beta in basis.elems:
            for e in lifts:
                cols.append(self._digits(self.mul(e, beta.code)))
        rows = [[col[d] for col in cols] for d in range(self.sm)]
        sol = _fp_solve(rows, self._digits(u.code), self.p)
        if sol is None:
            raise AssertionError("full basis failed to span the field")
        out = []
        for i in range(self.m):
            acc = 0
            for j, e in enumerate(lifts):
                acc = self.add(acc, self.mul(sol[i * self.s + j], e))
            out.append(FieldElement(self, acc))
        return out


class FieldElement:
    """An immutable element of a FieldCtx, identified by its integer code.

    Plain ints mixed into arithmetic or comparisons are taken as canonical
    codes of the same field.
    """

    __slots__ = ("ctx", "code")

    def __init__(self, ctx: FieldCtx, code: int):
        self.ctx = ctx
        self.code = code

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx:
                raise ValueError("mixed field contexts in arithmetic")
            return other.code
        if isinstance(other, int):
            if not 0 <= other < self.ctx.order:
                raise ValueError(f"code {other} out of range")
            return other
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.sub(self.code, c))

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.sub(c, self.code))

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.div(self.code, c))

    def __rtruediv__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return FieldElement(self.ctx, self.ctx.div(c, self.code))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.code, e))

    def frob(self, i: int = 1) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.frob(self.code, i))

    def in_subfield(self) -> bool:
        return self.ctx.frob(self.code) == self.code

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.ctx._digits(self.code))

    def is_zero(self) -> bool:
        return self.code == 0

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        return self.code

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return other.ctx is self.ctx and other.code == self.code
        if isinstance(other, int):
            return self.code == other
        return NotImplemented

    def __hash__(self):
        return hash(self.code)

    def __repr__(self):
        return f"GF({self.ctx.p}^{self.ctx.sm})[{self.code}]"

    def __str__(self):
        return str(self.code)


class BasisSpec:
    """A full basis of the top field over F_q (exactly m independent elements)."""

    __slots__ = ("ctx", "elems")

    def __init__(self, elems):
        elems = tuple(elems)
        if not elems:
            raise ValueError("a basis needs at least one element")
        if not all(isinstance(e, FieldElement) for e in elems):
            raise ValueError("basis entries must be field elements")
        ctx = elems[0].ctx
        if any(e.ctx is not ctx for e in elems):
            raise ValueError("basis entries from mixed field contexts")
        if len(elems) != ctx.m:
            raise ValueError(f"a full basis over F_q has {ctx.m} elements, got {len(elems)}")
        if ctx.span_dim(elems) != ctx.m:
            raise ValueError("basis elements are linearly dependent over F_q")
        self.ctx = ctx
        self.elems = elems

    def __len__(self):
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __getitem__(self, i):
        return self.elems[i]

    def __repr__(self):
        return f"BasisSpec({[e.code for e in self.elems]})"
