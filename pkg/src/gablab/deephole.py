"""Distance bounds, deep-hole classification and structured-family checks.

Words correspond to linearized polynomials of q-degree < n; translation by
codewords only changes coefficients below k, so distance is a function of
the coefficients a_k..a_{n-1} alone and scans can run over those classes
(the reduction itself is oracle-tested, not assumed).  For a representative
f with k <= deg_q f < n the distance is at least n - deg_q f, and it equals
n - t exactly when some v of q-degree < k agrees with f on a t-dimensional
subspace of the span of the evaluation points (Hamming: on a t-subset of
the points themselves).  The searches below walk t downward from deg_q f;
at t = k an interpolant through any k independent points always exists, so
every word sits within n - k of the code and ``is_deep_hole`` means
distance == n - k in both metrics.

Scaling f by a nonzero field scalar scales the word and permutes the code
(the code is F_{q^m}-linear) while both weights are invariant under entry
scaling, so monic normalization before a witness search is harmless; the
normalizing scalar is returned alongside nothing - it is simply dropped
after use.
"""

from __future__ import annotations

import itertools
import multiprocessing
from dataclasses import dataclass

from .code import GabidulinCode, Word, _check_metric, parse_code_spec
from .field import FieldCtx, FieldElement
from .linpoly import (LinPoly, NEG_INF, SubspaceBasis, annihilator,
                      minor_coeff, q_lagrange)
from .subspaces import gaussian_binomial, subspace_bases

DEFAULT_SUBSPACE_CAP = 10 ** 6
DEFAULT_CLASS_SCAN_CAP = 1 << 20

FAMILY_KINDS = ("frobenius_shift", "k_eq_n_minus_2", "k1_odd_m", "binary_quartic")

PREDICT_DEEP = "deep_hole"
PREDICT_NOT_DEEP = "not_deep_hole"
PREDICT_OPEN = "not_guaranteed"


@dataclass
class ClassifyResult:
    """Outcome of a distance search for one word.

    ``bound`` is n - deg_q f for representatives in the informative range
    k <= deg_q f < n and 0 otherwise; ``distance`` always satisfies
    bound <= distance <= n - k.  ``witness`` certifies the accepting level:
    a SubspaceBasis for the rank metric, a tuple of point indices for
    Hamming, or None when the word is a codeword.
    """

    distance: int
    bound: int
    is_deep_hole: bool
    metric: str
    witness: object = None


def _subspace_iter(code: GabidulinCode, t: int, cap: int):
    return subspace_bases(code.span, t, cap=cap)


def _subset_iter(code: GabidulinCode, t: int, cap: int):
    import math
    count = math.comb(code.n, t)
    if count > cap:
        raise ValueError(
            f"{count} candidate subsets exceed the cap {cap}; raise the cap to proceed")
    return itertools.combinations(range(code.n), t)


def equality_witness(code: GabidulinCode, f: LinPoly, metric: str,
                     subspace_cap: int = DEFAULT_SUBSPACE_CAP):
    """Witness that the distance of f's word meets its lower bound.

    For monic-normalized f with k <= deg_q f < n, searches for a
    deg_q(f)-dimensional subspace H of the point span (rank metric) or a
    deg_q(f)-subset E of the points (Hamming) whose annihilator differs
    from f only below q-degree k.  Returns the first such H / index tuple
    in canonical order, or None; existence is equivalent to
    distance == n - deg_q f.
    """
    _check_metric(metric)
    if f.ctx is not code.ctx:
        raise ValueError("polynomial must live over the code's field context")
    d = f.deg_q
    if d is NEG_INF or not code.k <= d < code.n:
        raise ValueError(f"representative q-degree must lie in {code.k}..{code.n - 1}")
    f = f.monic()[0]
    k = code.k
    if metric == "rank":
        for sub in _subspace_iter(code, d, subspace_cap):
            if (f - annihilator(sub)).deg_q < k:
                return sub
        return None
    for idx in _subset_iter(code, d, subspace_cap):
        pts = SubspaceBasis(code.ctx, [code.points[i] for i in idx])
        if (f - annihilator(pts)).deg_q < k:
            return idx
    return None


def _accepting_cover(code: GabidulinCode, f: LinPoly, t: int, metric: str,
                     subspace_cap: int):
    """First t-level witness (U, v interpolated through its first k members
    matching f on the rest), or None."""
    ctx, k = code.ctx, code.k
    if metric == "rank":
        for sub in _subspace_iter(code, t, subspace_cap):
            head = SubspaceBasis(ctx, sub.gens[:k])
            v = q_lagrange(head, [f(u) for u in head.gens])
            if all(v(u) == f(u) for u in sub.gens[k:]):
                return sub
        return None
    for idx in _subset_iter(code, t, subspace_cap):
        pts = [code.points[i] for i in idx]
        head = SubspaceBasis(ctx, pts[:k])
        v = q_lagrange(head, [f(u) for u in pts[:k]])
        if all(v(u) == f(u) for u in pts[k:]):
            return idx
    return None


def classify_poly(code: GabidulinCode, f: LinPoly, metric: str,
                  subspace_cap: int = DEFAULT_SUBSPACE_CAP) -> ClassifyResult:
    """Distance of the word represented by f, by descending witness search."""
    _check_metric(metric)
    if f.ctx is not code.ctx:
        raise ValueError("polynomial must live over the code's field context")
    if f.deg_q >= code.n:
        raise ValueError("representative q-degree must be < n")
    n, k = code.n, code.k
    d = f.deg_q
    if d is NEG_INF or d < k:
        return ClassifyResult(distance=0, bound=0, is_deep_hole=(n == k),
                              metric=metric, witness=None)
    bound = n - d
    for t in range(d, k - 1, -1):
        wit = _accepting_cover(code, f, t, metric, subspace_cap)
        if wit is not None:
            dist = n - t
            return ClassifyResult(distance=dist, bound=bound,
                                  is_deep_hole=(dist == n - k),
                                  metric=metric, witness=wit)
    raise AssertionError("level t = k must always accept")


def distance_by_search(code: GabidulinCode, w: Word, metric: str,
                       subspace_cap: int = DEFAULT_SUBSPACE_CAP) -> ClassifyResult:
    """Distance of a word via its interpolation representative."""
    return classify_poly(code, code.sigma_inverse(w), metric, subspace_cap)


def classify(code: GabidulinCode, w: Word, metric: str,
             subspace_cap: int = DEFAULT_SUBSPACE_CAP) -> ClassifyResult:
    """User-facing alias of :func:`distance_by_search`."""
    return distance_by_search(code, w, metric, subspace_cap)


def ratio_lemma_check(code: GabidulinCode, f: LinPoly, metric: str,
                      subspace_cap: int = DEFAULT_SUBSPACE_CAP):
    """Second witness route for representatives of q-degree exactly k+1.

    After monic normalization f = x^(q^(k+1)) - a_1 x^(q^k) + lower; the
    word misses deep-hole status iff some (k+1)-dimensional subspace of the
    point span (rank; Hamming: (k+1)-subset of the points) has first
    Moore-minor ratio equal to a_1.  Returns that witness or None; must
    agree with :func:`equality_witness` at this degree.
    """
    _check_metric(metric)
    if f.ctx is not code.ctx:
        raise ValueError("polynomial must live over the code's field context")
    k = code.k
    if f.deg_q != k + 1:
        raise ValueError(f"representative q-degree must be exactly {k + 1}")
    if k + 1 >= code.n:
        raise ValueError("degree k+1 must stay below the word length")
    f = f.monic()[0]
    ctx = code.ctx
    a1 = ctx.neg(f.codes[k] if k < len(f.codes) else 0)
    if metric == "rank":
        for sub in _subspace_iter(code, k + 1, subspace_cap):
            if minor_coeff(sub, 1).code == a1:
                return sub
        return None
    for idx in _subset_iter(code, k + 1, subspace_cap):
        pts = SubspaceBasis(ctx, [code.points[i] for i in idx])
        if minor_coeff(pts, 1).code == a1:
            return idx
    return None


# ---------------------------------------------------------------------------
# Class scans.  A class is the coefficient tuple (a_k, ..., a_{n-1}); its
# representative has zeros below q-degree k.  Workers rebuild their code
# from primitives so results merge deterministically regardless of order.


@dataclass
class ScanResult:
    radius: int
    histogram: dict[int, int]
    classes: int
    rows: list[tuple] | None = None


def _class_poly(code: GabidulinCode, idx: int) -> LinPoly:
    ctx, k, n = code.ctx, code.k, code.n
    coeffs = [0] * k
    rem = idx
    for _ in range(n - k):
        rem, c = divmod(rem, ctx.order)
        coeffs.append(c)
    return LinPoly(ctx, coeffs)


def _witness_codes(wit) -> tuple[int, ...] | None:
    if wit is None:
        return None
    if isinstance(wit, SubspaceBasis):
        return tuple(g.code for g in wit.gens)
    return tuple(wit)


def _scan_range(code: GabidulinCode, metric: str, start: int, stop: int,
                subspace_cap: int, collect_rows: bool):
    hist: dict[int, int] = {}
    rows = [] if collect_rows else None
    for idx in range(start, stop):
        f = _class_poly(code, idx)
        res = classify_poly(code, f, metric, subspace_cap)
        hist[res.distance] = hist.get(res.distance, 0) + 1
        if collect_rows:
            rows.append((idx, f.codes, metric, res.distance, res.is_deep_hole,
                         _witness_codes(res.witness)))
    return hist, rows


def _scan_worker(args):
    (spec_text, metric, start, stop, subspace_cap, collect_rows) = args
    code = parse_code_spec(spec_text)
    return _scan_range(code, metric, start, stop, subspace_cap, collect_rows)


def covering_radius_scan(code: GabidulinCode, metric: str,
                         scan_cap: int = DEFAULT_CLASS_SCAN_CAP,
                         subspace_cap: int = DEFAULT_SUBSPACE_CAP,
                         jobs: int = 1,
                         collect_rows: bool = False) -> ScanResult:
    """Max distance over all order**(n-k) translation classes.

    With jobs > 1 the class range is split into contiguous chunks and the
    chunk results are merged in index order, so output is identical for
    every worker count.
    """
    _check_metric(metric)
    total = code.ctx.order ** (code.n - code.k)
    if total > scan_cap:
        raise ValueError(
            f"{total} classes exceed the scan cap {scan_cap}; raise the cap to proceed")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    if jobs == 1 or total < 4 * jobs:
        hist, rows = _scan_range(code, metric, 0, total, subspace_cap, collect_rows)
    else:
        from .code import format_code_spec
        spec_text = format_code_spec(code)
        bounds = [total * i // jobs for i in range(jobs + 1)]
        tasks = [(spec_text, metric, bounds[i], bounds[i + 1], subspace_cap, collect_rows)
                 for i in range(jobs)]
        with multiprocessing.Pool(jobs) as pool:
            parts = pool.map(_scan_worker, tasks)
        hist = {}
        rows = [] if collect_rows else None
        for h, r in parts:
            for d, c in h.items():
                hist[d] = hist.get(d, 0) + c
            if collect_rows:
                rows.extend(r)
    radius = max(hist) if hist else 0
    return ScanResult(radius=radius, histogram=dict(sorted(hist.items())),
                      classes=total, rows=rows)


# ---------------------------------------------------------------------------
# Structured families.


@dataclass
class FamilyVerdict:
    kind: str
    params: dict
    predicted: str
    observed: ClassifyResult
    agree: bool


def excluded_leading_set(code: GabidulinCode) -> frozenset[int]:
    """Codes of (-1)^n * b^(1-q) over nonzero b.

    This is the exact image of the next-to-leading annihilator ratio h1
    over (n-1)-dimensional subspaces of F_{q^n}: the hyperplane that kills
    the trace form x -> Tr(bx) has monic annihilator sum_i b^(q^i - q^(n-1))
    x^(q^i), whose x^(q^(n-2)) coefficient is c^(1-q) with c = b^(q^(n-2)),
    and h1 is the negative of that coefficient.  A word with leading part
    x^(q^(n-1)) - a x^(q^(n-2)) at k = n-2 is a deep hole exactly when a
    misses this set.
    """
    ctx, n = code.ctx, code.n
    sign = 1 if n % 2 == 0 else ctx.neg(1)
    out = set()
    for b in range(1, ctx.order):
        out.add(ctx.mul(sign, ctx.pow(b, 1 - ctx.q)))
    return frozenset(out)


def _pair_quadric_value(ctx: FieldCtx, b1: int, b2: int) -> int:
    # x1^2 + x1*x2 + x2^2 at a pair of codes (char 2 census form).
    return ctx.add(ctx.add(ctx.mul(b1, b1), ctx.mul(b1, b2)), ctx.mul(b2, b2))


def family_check(code: GabidulinCode, kind: str, *, a=None, b=None, c=None,
                 low: LinPoly | None = None, metric: str = "rank",
                 subspace_cap: int = DEFAULT_SUBSPACE_CAP) -> FamilyVerdict:
    """Build one structured representative, predict, then classify.

    Hypothesis violations raise; they are never silently skipped.
    ``predicted`` is one of deep_hole / not_deep_hole / not_guaranteed, and
    ``agree`` is True when the observation does not contradict it.
    """
    _check_metric(metric)
    ctx, n, k = code.ctx, code.n, code.k
    params: dict = {}

    def coerce_low(max_deg: int) -> LinPoly:
        lw = low if low is not None else LinPoly.zero(ctx)
        if not isinstance(lw, LinPoly) or lw.ctx is not ctx:
            raise ValueError("low part must be a LinPoly over the code's field context")
        if lw.deg_q is not NEG_INF and lw.deg_q > max_deg:
            raise ValueError(f"low part must have q-degree <= {max_deg}")
        return lw

    if kind == "frobenius_shift":
        if n != ctx.m:
            raise ValueError("frobenius_shift family needs n == m")
        lw = coerce_low(k - 1)
        f = LinPoly.monomial(ctx, n - 1) + lw
        predicted = PREDICT_DEEP
        params = {"low": list(lw.codes)}
    elif kind == "k_eq_n_minus_2":
        if n != ctx.m:
            raise ValueError("k_eq_n_minus_2 family needs n == m")
        if k != n - 2:
            raise ValueError("k_eq_n_minus_2 family needs k == n - 2")
        if a is None:
            raise ValueError("k_eq_n_minus_2 family needs the coefficient a")
        ac = ctx.element(a).code
        lw = coerce_low(n - 3)
        f = (LinPoly.monomial(ctx, n - 1)
             - LinPoly.monomial(ctx, n - 2, ac) + lw)
        predicted = (PREDICT_DEEP if ac not in excluded_leading_set(code)
                     else PREDICT_OPEN)
        params = {"a": ac, "low": list(lw.codes)}
    elif kind == "k1_odd_m":
        if k != 1:
            raise ValueError("k1_odd_m family needs k == 1")
        if ctx.m % 2 == 0:
            raise ValueError("k1_odd_m family needs odd m")
        if not 3 <= n <= ctx.m:
            raise ValueError("k1_odd_m family needs 3 <= n <= m")
        cc = ctx.element(c).code if c is not None else 0
        f = LinPoly(ctx, (cc, 0, 1))
        predicted = PREDICT_DEEP
        params = {"c": cc}
    elif kind == "binary_quartic":
        if ctx.p != 2 or ctx.s != 1:
            raise ValueError("binary_quartic family needs q == 2 (p = 2, s = 1)")
        if k != 1:
            raise ValueError("binary_quartic family needs k == 1")
        if not 3 <= n <= ctx.m:
            raise ValueError("binary_quartic family needs 3 <= n <= m")
        bc = ctx.element(b).code if b is not None else 0
        cc = ctx.element(c).code if c is not None else 0
        f = LinPoly(ctx, (cc, bc, 1))
        if metric == "rank":
            span_codes = sorted(code.span.element_codes())
            pool = [x for x in span_codes if x]
        else:
            pool = [g.code for g in code.points]
        hit = any(_pair_quadric_value(ctx, b1, b2) == bc
                  for b1, b2 in itertools.combinations(pool, 2))
        predicted = PREDICT_NOT_DEEP if hit else PREDICT_DEEP
        params = {"b": bc, "c": cc}
    else:
        raise ValueError(f"unknown family kind {kind!r}; choose from {FAMILY_KINDS}")

    observed = classify_poly(code, f, metric, subspace_cap)
    agree = (predicted == PREDICT_OPEN
             or (predicted == PREDICT_DEEP) == observed.is_deep_hole)
    return FamilyVerdict(kind=kind, params=params, predicted=predicted,
                         observed=observed, agree=agree)


# ---------------------------------------------------------------------------
# Census of the plane quadric x1^2 + x1x2 + x2^2 = b over even-order fields,
# with coordinates restricted to distinct nonzero values.


@dataclass
class QuadricCensus:
    """N together with (optionally) the distinct-coordinate pair set.

    ``count`` follows the closed forms, which tally every pair
    with both coordinates nonzero; ``solutions`` additionally drops the
    diagonal, because only independent (hence distinct) pairs can seed a
    2-dimensional subspace.  In characteristic 2 the diagonal point
    (sqrt(b), sqrt(b)) lies on the quadric whenever b != 0, so count and
    len(solutions) then differ by exactly one.
    """

    b: FieldElement
    count: int
    solutions: list[tuple[FieldElement, FieldElement]] | None = None


def quadric_v(ctx: FieldCtx, b) -> int:
    """The stepped indicator used in point-count formulas: order-1 at zero,
    -1 elsewhere."""
    b = ctx.element(b)
    return ctx.order - 1 if b.code == 0 else -1


def quadric_census(ctx: FieldCtx, b, materialize: bool = False) -> QuadricCensus:
    """Exhaustive census of x1^2 + x1x2 + x2^2 = b over nonzero pairs."""
    if ctx.p != 2 or ctx.s != 1:
        raise ValueError("the quadric census is defined over fields of order 2^m")
    b = ctx.element(b)
    sols = [] if materialize else None
    count = 0
    for c1 in range(1, ctx.order):
        for c2 in range(1, ctx.order):
            if _pair_quadric_value(ctx, c1, c2) == b.code:
                count += 1
                if materialize and c1 != c2:
                    sols.append((FieldElement(ctx, c1), FieldElement(ctx, c2)))
    return QuadricCensus(b=b, count=count, solutions=sols)
