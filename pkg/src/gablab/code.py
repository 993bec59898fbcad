"""Evaluation codes of linearized polynomials and brute-force oracles.

A code is determined by n independent evaluation points g_1..g_n in the
top field and a message degree bound k: codewords are the evaluations of
every linearized polynomial of q-degree < k.  The generator matrix is the
square-free Moore matrix of the points, the code is F_{q^m}-linear, and
words of length n correspond one-to-one to polynomials of q-degree < n by
interpolation (``sigma_inverse``).

The distance functions here enumerate codewords outright and are the
ground truth the fast search paths in :mod:`gablab.deephole` are tested
against.  Enumeration order of messages is canonical: coefficient tuples
ascend with the degree-0 coefficient varying fastest, and reported
witnesses are the first minimizer in that order.
"""

from __future__ import annotations

import itertools

from .field import FieldCtx, FieldElement
from .linpoly import LinPoly, SubspaceBasis, q_lagrange

DEFAULT_ORACLE_CAP = 1 << 20
DEFAULT_WORD_SCAN_CAP = 1 << 20
_CODEWORD_CACHE_LIMIT = 1 << 16

METRICS = ("rank", "hamming")


def _check_metric(metric: str) -> str:
    if metric not in METRICS:
        raise ValueError(f"metric must be one of {METRICS}, got {metric!r}")
    return metric


class Word:
    """A length-n tuple of field elements; subtraction is entry-wise."""

    __slots__ = ("ctx", "entries")

    def __init__(self, ctx: FieldCtx, entries):
        self.ctx = ctx
        self.entries = tuple(ctx.element(e) for e in entries)
        if not self.entries:
            raise ValueError("a word needs at least one entry")

    @property
    def codes(self) -> tuple[int, ...]:
        return tuple(e.code for e in self.entries)

    def __sub__(self, other: "Word") -> "Word":
        if not isinstance(other, Word) or other.ctx is not self.ctx:
            raise ValueError("word arithmetic needs matching contexts")
        if len(other.entries) != len(self.entries):
            raise ValueError("word length mismatch")
        ctx = self.ctx
        return Word(ctx, [ctx.sub(a.code, b.code) for a, b in zip(self.entries, other.entries)])

    def __add__(self, other: "Word") -> "Word":
        if not isinstance(other, Word) or other.ctx is not self.ctx:
            raise ValueError("word arithmetic needs matching contexts")
        if len(other.entries) != len(self.entries):
            raise ValueError("word length mismatch")
        ctx = self.ctx
        return Word(ctx, [ctx.add(a.code, b.code) for a, b in zip(self.entries, other.entries)])

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return other.ctx is self.ctx and other.codes == self.codes

    def __hash__(self):
        return hash(self.codes)

    def __repr__(self):
        return f"Word({list(self.codes)})"


def _weight_codes(ctx: FieldCtx, codes, metric: str) -> int:
    if metric == "rank":
        return ctx._rank_codes(codes)
    return sum(1 for c in codes if c)


def weight(w: Word, metric: str) -> int:
    """Rank weight (span dimension over F_q) or Hamming weight of a word."""
    _check_metric(metric)
    return _weight_codes(w.ctx, w.codes, metric)


class GabidulinCode:
    __slots__ = ("ctx", "k", "span", "_cw_cache")

    def __init__(self, ctx: FieldCtx, points, k: int):
        self.ctx = ctx
        self.span = SubspaceBasis(ctx, points)  # rejects dependent points
        n = self.span.dim
        if not 1 <= k <= n:
            raise ValueError(f"message degree bound k must lie in 1..{n}, got {k}")
        self.k = k
        self._cw_cache = None

    @property
    def n(self) -> int:
        return self.span.dim

    @property
    def points(self) -> tuple[FieldElement, ...]:
        return self.span.gens

    def __repr__(self):
        return (f"GabidulinCode(n={self.n}, k={self.k}, "
                f"points={[g.code for g in self.points]})")

    def encode(self, msg: LinPoly) -> Word:
        if not isinstance(msg, LinPoly) or msg.ctx is not self.ctx:
            raise ValueError("message must be a LinPoly over the code's field context")
        if msg.deg_q >= self.k:
            raise ValueError(f"message q-degree must be < {self.k}")
        return Word(self.ctx, [msg(g).code for g in self.points])

    def evaluate(self, f: LinPoly) -> Word:
        """Word of f's values on the points, for any f of q-degree < n."""
        if not isinstance(f, LinPoly) or f.ctx is not self.ctx:
            raise ValueError("polynomial must be a LinPoly over the code's field context")
        if f.deg_q >= self.n:
            raise ValueError(f"representative q-degree must be < {self.n}")
        return Word(self.ctx, [f(g).code for g in self.points])

    def sigma_inverse(self, w: Word) -> LinPoly:
        """The unique q-degree < n polynomial whose value word is w."""
        if not isinstance(w, Word) or w.ctx is not self.ctx:
            raise ValueError("word must live over the code's field context")
        if len(w) != self.n:
            raise ValueError("word length mismatch")
        return q_lagrange(self.span, w.entries)

    def word(self, codes) -> Word:
        w = Word(self.ctx, codes)
        if len(w) != self.n:
            raise ValueError(f"expected {self.n} entries, got {len(w)}")
        return w

    def message_count(self) -> int:
        return self.ctx.order ** self.k

    def iter_codewords(self, oracle_cap: int = DEFAULT_ORACLE_CAP):
        """(message coefficient codes, codeword codes) pairs, canonical order."""
        count = self.message_count()
        if count > oracle_cap:
            raise ValueError(
                f"{count} codewords exceed the oracle cap {oracle_cap}; "
                "raise the cap to proceed")
        if self._cw_cache is not None:
            yield from self._cw_cache
            return
        ctx, k, n = self.ctx, self.k, self.n
        pows = []
        for g in self.points:
            row, c = [], g.code
            for i in range(k):
                if i:
                    c = ctx.frob(c)
                row.append(c)
            pows.append(row)
        collect = [] if count <= _CODEWORD_CACHE_LIMIT else None
        for idx in range(count):
            rem, mc = idx, []
            for _ in range(k):
                rem, c = divmod(rem, ctx.order)
                mc.append(c)
            wc = []
            for j in range(n):
                acc, pj = 0, pows[j]
                for i, a in enumerate(mc):
                    if a:
                        acc = ctx.add(acc, ctx.mul(a, pj[i]))
                wc.append(acc)
            pair = (tuple(mc), tuple(wc))
            if collect is not None:
                collect.append(pair)
            yield pair
        if collect is not None:
            self._cw_cache = collect


def dist_to_code_exhaustive(code: GabidulinCode, w: Word, metric: str,
                            oracle_cap: int = DEFAULT_ORACLE_CAP) -> tuple[int, LinPoly]:
    """Exact distance by enumerating every codeword, plus the first-closest
    message polynomial in canonical order."""
    _check_metric(metric)
    if len(w) != code.n:
        raise ValueError("word length mismatch")
    ctx = code.ctx
    wc = w.codes
    sub = ctx.sub
    best, best_msg = None, None
    for mc, cw in code.iter_codewords(oracle_cap):
        d = _weight_codes(ctx, [sub(a, b) for a, b in zip(wc, cw)], metric)
        if best is None or d < best:
            best, best_msg = d, mc
            if d == 0:
                break
    return best, LinPoly(ctx, best_msg)


def min_distance(code: GabidulinCode, metric: str,
                 oracle_cap: int = DEFAULT_ORACLE_CAP) -> int:
    """Exhaustive minimum weight over the nonzero codewords."""
    _check_metric(metric)
    ctx = code.ctx
    best = None
    for mc, cw in code.iter_codewords(oracle_cap):
        if not any(mc):
            continue
        d = _weight_codes(ctx, cw, metric)
        if best is None or d < best:
            best = d
            if best == 1:
                break
    if best is None:
        raise ValueError("code has no nonzero codewords")
    return best


def covering_radius_raw(code: GabidulinCode, metric: str,
                        word_cap: int = DEFAULT_WORD_SCAN_CAP,
                        oracle_cap: int = DEFAULT_ORACLE_CAP) -> tuple[int, dict[int, int]]:
    """max over ALL words of the exhaustive distance, with a histogram.

    Independent of the class-based scan: it visits every one of the
    order**n words.  Char-2 fields use a packed rank/weight table, checked
    elsewhere against the plain per-word oracle.
    """
    _check_metric(metric)
    ctx, n = code.ctx, code.n
    total = ctx.order ** n
    if total > word_cap:
        raise ValueError(
            f"{total} words exceed the scan cap {word_cap}; raise the cap to proceed")
    cws = [cw for _, cw in code.iter_codewords(oracle_cap)]
    hist: dict[int, int] = {}
    radius = 0
    if ctx.p == 2:
        sm, mask = ctx.sm, ctx.order - 1
        shifts = [j * ctx.sm for j in range(n)]
        packed_cws = [sum(c << sh for c, sh in zip(cw, shifts)) for cw in cws]
        if metric == "rank":
            rank = ctx._rank_codes
            wt = [rank([(pk >> sh) & mask for sh in shifts]) for pk in range(total)]
        else:
            wt = [sum(1 for sh in shifts if (pk >> sh) & mask) for pk in range(total)]
        for w in range(total):
            d = min(wt[w ^ c] for c in packed_cws)
            hist[d] = hist.get(d, 0) + 1
            if d > radius:
                radius = d
    else:
        sub = ctx.sub
        for wc in itertools.product(range(ctx.order), repeat=n):
            d = min(_weight_codes(ctx, [sub(a, b) for a, b in zip(wc, cw)], metric)
                    for cw in cws)
            hist[d] = hist.get(d, 0) + 1
            if d > radius:
                radius = d
    return radius, dict(sorted(hist.items()))


# ---------------------------------------------------------------------------
# Code-spec files: plain key=value lines naming a code over a tower.


def parse_code_spec(text: str, cap: int | None = None) -> GabidulinCode:
    kv = {}
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, val = line.partition("=")
        if not sep:
            raise ValueError(f"line {ln} of code spec is not key=value: {raw!r}")
        kv[key.strip()] = val.strip()
    missing = [k for k in ("p", "s", "m", "n", "k", "g") if k not in kv]
    if missing:
        raise ValueError(f"code spec is missing keys: {', '.join(missing)}")
    try:
        p, s, m = int(kv["p"]), int(kv["s"]), int(kv["m"])
        n, k = int(kv["n"]), int(kv["k"])
        gcodes = [int(c) for c in kv["g"].split(",")] if kv["g"] else []
        modulus = ([int(c) for c in kv["modulus"].split(",")]
                   if kv.get("modulus") else None)
    except ValueError as exc:
        raise ValueError(f"malformed number in code spec: {exc}") from None
    kwargs = {"cap": cap} if cap is not None else {}
    ctx = FieldCtx(p, s, m, modulus, **kwargs)
    if len(gcodes) != n:
        raise ValueError(f"code spec declares n={n} but lists {len(gcodes)} points")
    return GabidulinCode(ctx, [ctx.element(c) for c in gcodes], k)


def load_code_spec(path, cap: int | None = None) -> GabidulinCode:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_code_spec(fh.read(), cap)


def format_code_spec(code: GabidulinCode) -> str:
    ctx = code.ctx
    lines = [
        f"p={ctx.p}",
        f"s={ctx.s}",
        f"m={ctx.m}",
        "modulus=" + ",".join(str(c) for c in ctx.modulus),
        f"n={code.n}",
        f"k={code.k}",
        "g=" + ",".join(str(g.code) for g in code.points),
    ]
    return "\n".join(lines) + "\n"
