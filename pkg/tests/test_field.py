"""Field-tower arithmetic: frozen constants, algebraic laws, tower structure.

The irreducibility oracle here is independent of the library's Rabin
check: plain trial division against every lower-degree monic polynomial.
"""

import itertools
import random

import pytest

from gablab import BasisSpec, FieldCtx
from gablab.field import _pdivmod, _poly_is_irreducible


def _irreducible_by_trial_division(poly: list[int], p: int) -> bool:
    d = len(poly) - 1
    if d < 1:
        return False
    for ddeg in range(1, d // 2 + 1):
        for low in itertools.product(range(p), repeat=ddeg):
            div = list(low) + [1]
            if not _pdivmod(poly, div, p)[1]:
                return False
    return True


# -- frozen default moduli ----------------------------------------------------

FROZEN_MODULI = [
    (2, 1, 2, (1, 1, 1)),
    (2, 1, 3, (1, 1, 0, 1)),
    (2, 1, 4, (1, 1, 0, 0, 1)),
    (2, 1, 5, (1, 0, 1, 0, 0, 1)),
    (3, 1, 3, (1, 2, 0, 1)),
    (2, 2, 2, (1, 1, 0, 0, 1)),
]


@pytest.mark.parametrize("p,s,m,expected", FROZEN_MODULI)
def test_default_modulus_is_smallest_irreducible(p, s, m, expected):
    ctx = FieldCtx(p, s, m)
    assert ctx.modulus == expected
    assert _irreducible_by_trial_division(list(expected), p)
    # Nothing smaller in the degree-0-first lexicographic order works.
    d = s * m
    for code in range(sum(c * p**i for i, c in enumerate(expected[:-1]))):
        low, rem = [], code
        for _ in range(d):
            rem, dig = divmod(rem, p)
            low.append(dig)
        assert not _irreducible_by_trial_division(low + [1], p)


def test_rabin_matches_trial_division_for_gf2_cubics():
    for code in range(8):
        poly = [code & 1, (code >> 1) & 1, (code >> 2) & 1, 1]
        assert _poly_is_irreducible(poly, 2) == _irreducible_by_trial_division(poly, 2)


# -- frozen hand values -------------------------------------------------------


def test_gf4_hand_values(gf4):
    w = gf4.element(2)
    assert (w * w).code == 3
    assert (1 / w).code == 3
    assert gf4.frob(2) == 3
    assert gf4.trace_to_prime(w).code == 1


def test_gf27_hand_values(gf27):
    assert gf27.neg(5) == 7
    assert gf27.mul(3, 9) == 5


# -- arithmetic laws ----------------------------------------------------------


@pytest.mark.parametrize("params", [(2, 1, 4), (3, 1, 3), (2, 2, 2)])
def test_field_axioms_exhaustive_on_small_fields(params):
    ctx = FieldCtx(*params)
    codes = range(ctx.order)
    for a in codes:
        assert ctx.add(a, 0) == a
        assert ctx.mul(a, 1) == a
        assert ctx.add(a, ctx.neg(a)) == 0
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1
    rng = random.Random(7)
    for _ in range(300):
        a, b, c = (rng.randrange(ctx.order) for _ in range(3))
        assert ctx.add(a, b) == ctx.add(b, a)
        assert ctx.mul(a, b) == ctx.mul(b, a)
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))


def test_table_path_matches_direct_path(gf16, gf27):
    for ctx in (gf16, gf27):
        ctx.mul(1, 1)  # force table build
        for a in range(ctx.order):
            for b in range(ctx.order):
                assert ctx.mul(a, b) == ctx._mul_direct(a, b)


def test_pow_matches_repeated_multiplication(gf27):
    for a in range(1, gf27.order):
        acc = 1
        for e in range(1, 6):
            acc = gf27.mul(acc, a)
            assert gf27.pow(a, e) == acc
        assert gf27.pow(a, 0) == 1
        assert gf27.mul(gf27.pow(a, -1), a) == 1
    assert gf27.pow(0, 0) == 1
    assert gf27.pow(0, 5) == 0
    with pytest.raises(ZeroDivisionError):
        gf27.pow(0, -1)
    with pytest.raises(ZeroDivisionError):
        gf27.inv(0)


# -- frobenius ----------------------------------------------------------------


def test_frobenius_is_qth_power_and_field_automorphism(gf16, gf27, tower16):
    for ctx in (gf16, gf27, tower16):
        rng = random.Random(11)
        for a in range(ctx.order):
            assert ctx.frob(a) == ctx.pow(a, ctx.q)
            assert ctx.frob(a, ctx.m) == a
        for _ in range(200):
            a, b = rng.randrange(ctx.order), rng.randrange(ctx.order)
            assert ctx.frob(ctx.add(a, b)) == ctx.add(ctx.frob(a), ctx.frob(b))
            assert ctx.frob(ctx.mul(a, b)) == ctx.mul(ctx.frob(a), ctx.frob(b))
        assert ctx.frob(1, 3) == ctx.frob(ctx.frob(ctx.frob(1)))


def test_frobenius_iterate_reduces_mod_m(gf16):
    for a in range(gf16.order):
        assert gf16.frob(a, 5) == gf16.frob(a, 1)
        assert gf16.frob(a, 4) == a
    with pytest.raises(ValueError):
        gf16.frob(3, -1)


def test_subfield_is_fixed_field_of_frobenius(gf16, tower16):
    # q = 2: two elements; q = 4 inside GF(16): four, closed under + and *.
    assert [e.code for e in gf16.subfield_elements()] == [0, 1]
    sub = tower16.subfield_elements()
    assert len(sub) == 4
    codes = {e.code for e in sub}
    for a in sub:
        assert a.in_subfield()
        for b in sub:
            assert (a + b).code in codes
            assert (a * b).code in codes
    fixed = {c for c in range(tower16.order) if tower16.frob(c) == c}
    assert codes == fixed


# -- traces ---------------------------------------------------------------------


def test_traces_are_additive_and_land_in_the_right_field(gf16, tower16):
    for ctx in (gf16, tower16):
        rng = random.Random(3)
        for _ in range(100):
            a, b = ctx.random_element(rng), ctx.random_element(rng)
            ta, tb = ctx.trace_to_subfield(a), ctx.trace_to_subfield(b)
            assert ta.in_subfield()
            assert ctx.trace_to_subfield(a + b) == ta + tb
            tp = ctx.trace_to_prime(a)
            assert tp.code in range(ctx.p)  # prime subfield codes are 0..p-1
            assert ctx.trace_to_prime(a.frob()) == tp


def test_trace_to_prime_composes_through_the_middle_field(tower16):
    # Absolute trace = (trace to F_4) then (p-power trace of F_4 to F_2).
    for c in range(tower16.order):
        u = tower16.element(c)
        mid = tower16.trace_to_subfield(u).code
        down = tower16.add(mid, tower16.pow(mid, tower16.p))
        assert down == tower16.trace_to_prime(u).code


# -- linear structure -----------------------------------------------------------


def test_span_dim_and_greedy_independent(gf16, tower16):
    assert gf16.span_dim([1, 2, 4, 8]) == 4
    assert gf16.span_dim([1, 2, 3]) == 2  # 3 = 1 + 2
    assert gf16.span_dim([0]) == 0
    kept = gf16.greedy_independent([1, 2, 3, 4, 0, 8])
    assert [e.code for e in kept] == [1, 2, 4, 8]
    # q = 4: scalar multiples from the middle field collapse to one line.
    sub = [e.code for e in tower16.subfield_elements() if e.code]
    one_dim = [tower16.mul(c, 5) for c in sub]
    assert tower16.span_dim(one_dim) == 1
    assert tower16.span_dim(sub) == 1
    assert tower16.span_dim([1, 5]) == 2  # 5 is outside the middle field


def test_coords_reconstruct_the_element(gf16, tower16):
    rng = random.Random(19)
    for ctx, basis_codes in ((gf16, (1, 2, 4, 8)), (gf16, (15, 7, 3, 1)),
                             (tower16, (1, 4)), (tower16, (7, 9))):
        basis = BasisSpec([ctx.element(c) for c in basis_codes])
        for _ in range(50):
            u = ctx.random_element(rng)
            cs = ctx.coords(u, basis)
            acc = ctx.zero()
            for coef, beta in zip(cs, basis):
                assert coef.in_subfield()
                acc = acc + coef * beta
            assert acc == u


# -- construction and validation -------------------------------------------------


def test_ctx_validation_errors():
    with pytest.raises(ValueError):
        FieldCtx(4, 1, 2)  # p not prime
    with pytest.raises(ValueError):
        FieldCtx(2, 0, 3)
    with pytest.raises(ValueError):
        FieldCtx(2, 1, 30)  # over the default cap
    with pytest.raises(ValueError):
        FieldCtx(2, 1, 2, modulus=(1, 1))  # wrong degree
    with pytest.raises(ValueError):
        FieldCtx(2, 1, 2, modulus=(1, 1, 2))  # coefficient out of range / not monic
    with pytest.raises(ValueError):
        FieldCtx(2, 1, 2, modulus=(1, 0, 1))  # x^2 + 1 = (x+1)^2 over GF(2)
    alt = FieldCtx(2, 1, 3, modulus=(1, 0, 1, 1))
    assert alt.modulus == (1, 0, 1, 1)
    assert alt.mul(2, 2) == 4  # x * x = x^2, still below the modulus


def test_element_wrapping_and_context_separation(gf4, gf8):
    with pytest.raises(ValueError):
        gf4.element(4)
    with pytest.raises(ValueError):
        gf4.element(gf8.element(1))
    with pytest.raises(ValueError):
        gf4.element(gf8.one()) + gf4.one()
    a = gf4.element((1, 1))
    assert a.code == 3
    assert a.coeffs == (1, 1)
    assert a == 3  # int comparison means code equality
    assert gf4.one() + 0 == 1
    with pytest.raises(ValueError):
        gf4.from_coeffs((1, 1, 1))
    with pytest.raises(ValueError):
        gf4.from_coeffs((2, 0))


def test_basis_spec_validation(gf16, gf4):
    with pytest.raises(ValueError):
        BasisSpec([])
    with pytest.raises(ValueError):
        BasisSpec([gf16.element(1), gf16.element(2)])  # too short
    with pytest.raises(ValueError):
        BasisSpec([gf16.element(c) for c in (1, 2, 3, 4)])  # dependent
    with pytest.raises(ValueError):
        BasisSpec([gf16.element(1), gf16.element(2), gf16.element(4), gf4.element(1)])
    with pytest.raises(ValueError):
        BasisSpec([1, 2, 4, 8])  # raw ints are not elements
    b = BasisSpec([gf16.element(c) for c in (15, 7, 3, 1)])
    assert len(b) == 4
    assert b[0].code == 15


def test_gen_is_the_residue_of_x(gf8):
    g = gf8.gen()
    assert g.code == 2
    # x^3 = x + 1 under the frozen modulus.
    assert (g**3).code == 3
    with pytest.raises(ValueError):
        FieldCtx(3, 1, 1).gen()
