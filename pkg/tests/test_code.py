"""Code construction, brute-force distance oracles, and spec-file I/O.

The packed char-2 word scan in covering_radius_raw is cross-checked here
against the plain per-word oracle, and the generic odd-characteristic
branch runs on GF(27).
"""

import random

import pytest

from gablab import (GabidulinCode, LinPoly, Word, covering_radius_raw,
                    covering_radius_scan, dist_to_code_exhaustive,
                    format_code_spec, min_distance, parse_code_spec, weight)


@pytest.fixture(scope="module")
def gf4_code(gf4):
    return GabidulinCode(gf4, (1, 2), 1)


# -- words and weights ----------------------------------------------------------


def test_word_construction_and_arithmetic(gf8):
    w = Word(gf8, (1, 2, 4))
    assert w.codes == (1, 2, 4)
    assert len(w) == 3
    assert w[1].code == 2
    v = Word(gf8, (1, 1, 1))
    assert (w - v).codes == (0, 3, 5)
    assert (w + v).codes == (0, 3, 5)  # char 2: add = sub
    assert w - v == w + v
    with pytest.raises(ValueError):
        Word(gf8, ())
    with pytest.raises(ValueError):
        w - Word(gf8, (1, 2))


def test_weight_definitions(gf16):
    w = Word(gf16, (1, 2, 3, 0))  # 3 = 1 + 2: rank 2, hamming 3
    assert weight(w, "hamming") == 3
    assert weight(w, "rank") == 2
    assert weight(Word(gf16, (0, 0, 0, 0)), "rank") == 0
    assert weight(Word(gf16, (5, 5, 5, 5)), "rank") == 1
    with pytest.raises(ValueError):
        weight(w, "euclidean")


def test_rank_weight_via_middle_field(tower16):
    # Over q = 4 the entries 1 and 6 are dependent (6 lies in F_4).
    w = Word(tower16, (1, 6, 0))
    assert weight(w, "rank") == 1
    assert weight(w, "hamming") == 2


# -- code construction ------------------------------------------------------------


def test_code_requires_independent_points_and_valid_k(gf16):
    with pytest.raises(ValueError):
        GabidulinCode(gf16, (1, 2, 3), 1)  # dependent points
    with pytest.raises(ValueError):
        GabidulinCode(gf16, (1, 2, 4), 0)
    with pytest.raises(ValueError):
        GabidulinCode(gf16, (1, 2, 4), 4)  # k > n
    code = GabidulinCode(gf16, (1, 2, 4), 3)
    assert code.n == 3
    assert code.message_count() == 16**3


def test_frozen_gf4_encode_and_distances(gf4, gf4_code):
    w = gf4_code.encode(LinPoly(gf4, (2,)))
    assert w.codes == (2, 3)
    d, msg = dist_to_code_exhaustive(gf4_code, gf4_code.word((1, 1)), "rank")
    assert d == 1
    assert msg.codes == ()
    d, msg = dist_to_code_exhaustive(gf4_code, gf4_code.word((1, 1)), "hamming")
    assert d == 1
    assert msg.codes == (1,)
    assert min_distance(gf4_code, "rank") == 2
    assert min_distance(gf4_code, "hamming") == 2


def test_encode_rejects_bad_messages(gf16, gf8):
    code = GabidulinCode(gf16, (1, 2, 4, 8), 2)
    with pytest.raises(ValueError):
        code.encode(LinPoly(gf16, (0, 0, 1)))  # degree 2 >= k
    with pytest.raises(ValueError):
        code.encode(LinPoly(gf8, (1,)))  # wrong context
    with pytest.raises(ValueError):
        code.evaluate(LinPoly.monomial(gf16, 4))  # degree n
    code.evaluate(LinPoly.monomial(gf16, 3))  # degree n-1 is fine


def test_sigma_inverse_round_trip(code24):
    ctx = code24.ctx
    rng = random.Random(29)
    for _ in range(100):
        w = code24.word([rng.randrange(16) for _ in range(4)])
        f = code24.sigma_inverse(w)
        assert f.deg_q is not None
        assert code24.evaluate(f) == w
    for _ in range(50):
        f = LinPoly(ctx, [rng.randrange(16) for _ in range(4)])
        assert code24.sigma_inverse(code24.evaluate(f)) == f


def test_iter_codewords_order_and_cache(gf4_code):
    pairs = list(gf4_code.iter_codewords())
    # canonical order: message coefficient tuples ascend, degree-0 fastest
    assert [mc for mc, _ in pairs] == [(c,) for c in range(4)]
    assert pairs[0][1] == (0, 0)
    assert pairs == list(gf4_code.iter_codewords())  # cached second pass
    with pytest.raises(ValueError):
        list(gf4_code.iter_codewords(oracle_cap=3))


def test_codeword_set_is_linear_space(gf8):
    code = GabidulinCode(gf8, (1, 2, 4), 2)
    words = {cw for _, cw in code.iter_codewords()}
    assert len(words) == 64
    ctx = code.ctx
    sample = sorted(words)[:10]
    for a in sample:
        for b in sample:
            assert tuple(ctx.add(x, y) for x, y in zip(a, b)) in words


# -- brute oracles ------------------------------------------------------------------


def test_singleton_bounds_across_small_codes(gf8, gf16):
    for ctx, points in ((gf8, (1, 2, 4)), (gf16, (1, 2, 4, 8))):
        n = len(points)
        for k in range(1, n + 1):
            code = GabidulinCode(ctx, points, k)
            assert min_distance(code, "rank") == n - k + 1
            assert min_distance(code, "hamming") == n - k + 1


def test_distance_zero_iff_codeword(code24):
    rng = random.Random(31)
    for mc, cw in list(code24.iter_codewords())[:20]:
        d, msg = dist_to_code_exhaustive(code24, code24.word(cw), "rank")
        assert d == 0
        assert msg.codes == LinPoly(code24.ctx, mc).codes


def test_covering_radius_raw_frozen_gf8(gf8_code):
    radius, hist = covering_radius_raw(gf8_code, "rank")
    assert radius == 2
    assert hist == {0: 8, 1: 392, 2: 112}
    radius_h, hist_h = covering_radius_raw(gf8_code, "hamming")
    assert radius_h == 2
    assert sum(hist_h.values()) == 512
    assert hist_h[0] == 8


def test_packed_scan_matches_per_word_oracle(gf8_code):
    # The packed char-2 fast path against one-word-at-a-time distances.
    ctx = gf8_code.ctx
    for metric in ("rank", "hamming"):
        _, hist = covering_radius_raw(gf8_code, metric)
        recount: dict[int, int] = {}
        for a in range(8):
            for b in range(8):
                for c in range(8):
                    d, _ = dist_to_code_exhaustive(
                        gf8_code, gf8_code.word((a, b, c)), metric)
                    recount[d] = recount.get(d, 0) + 1
        assert recount == hist


def test_generic_branch_matches_class_scan_gf27(gf27):
    # Odd characteristic exercises the non-packed word loop; the class scan
    # (translation-invariance route) must produce a consistent histogram.
    code = GabidulinCode(gf27, (1, 3), 1)
    radius, hist = covering_radius_raw(code, "rank")
    scan = covering_radius_scan(code, "rank")
    assert radius == scan.radius == 1
    assert hist == {d: c * 27 for d, c in scan.histogram.items()}
    radius_h, hist_h = covering_radius_raw(code, "hamming")
    scan_h = covering_radius_scan(code, "hamming")
    assert radius_h == scan_h.radius
    assert hist_h == {d: c * 27 for d, c in scan_h.histogram.items()}


def test_word_cap_guards(gf16):
    code = GabidulinCode(gf16, (1, 2, 4, 8), 2)
    with pytest.raises(ValueError):
        covering_radius_raw(code, "rank", word_cap=100)


# -- spec files ----------------------------------------------------------------------


def test_format_parse_round_trip(code24, gf27):
    code27 = GabidulinCode(gf27, (1, 3, 9), 2)
    for code in (code24, code27):
        text = format_code_spec(code)
        back = parse_code_spec(text)
        assert back.k == code.k
        assert back.ctx.modulus == code.ctx.modulus
        assert [g.code for g in back.points] == [g.code for g in code.points]


def test_parse_code_spec_defaults_and_comments():
    text = """
# evaluation code over GF(2^3)
p=2
s=1
m=3

n=3
k=1
g=1,2,4
"""
    code = parse_code_spec(text)
    assert code.ctx.modulus == (1, 1, 0, 1)  # default modulus kicks in
    assert code.n == 3


@pytest.mark.parametrize("mutation,fragment", [
    ("drop", "missing keys"),
    ("noeq", "not key=value"),
    ("badnum", "malformed number"),
    ("badcount", "lists 2 points"),
    ("dependent", "dependent"),
])
def test_parse_code_spec_malformed(mutation, fragment):
    base = {"p": "2", "s": "1", "m": "3", "n": "3", "k": "1", "g": "1,2,4"}
    lines = []
    if mutation == "drop":
        base.pop("k")
    elif mutation == "badnum":
        base["k"] = "one"
    elif mutation == "badcount":
        base["g"] = "1,2"
    elif mutation == "dependent":
        base["g"] = "1,2,3"
    lines = [f"{k}={v}" for k, v in base.items()]
    if mutation == "noeq":
        lines.append("just some text")
    with pytest.raises(ValueError, match=fragment):
        parse_code_spec("\n".join(lines))


def test_parse_respects_field_cap():
    text = "p=2\ns=1\nm=3\nn=3\nk=1\ng=1,2,4"
    parse_code_spec(text, cap=8)
    with pytest.raises(ValueError):
        parse_code_spec(text, cap=7)
