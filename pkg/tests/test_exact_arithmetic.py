"""Exact layer: localized rationals, Prüfer components, and the ring R."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modcheck.errors import (
    ShapeMismatch,
    UnresolvedDivision,
    WrongBranch,
    ZeroInput,
)
from modcheck.exact.counterexample import representing_r
from modcheck.exact.pruefer import PrueferElement
from modcheck.exact.rationals import (
    LocalizedRational,
    as_fraction,
    decompose_x,
    in_localization,
    valuation,
    xgcd,
)
from modcheck.exact.ring import RElement, UElement, sample_relements, sample_uelements

rationals = st.fractions(
    min_value=Fraction(-100), max_value=Fraction(100), max_denominator=60
)
nonzero_rationals = rationals.filter(lambda x: x != 0)


@given(nonzero_rationals, st.sampled_from((2, 3, 5)))
@settings(max_examples=200, deadline=None)
def test_valuation_strips_exactly(x, p):
    v = valuation(x, p)
    reduced = x / Fraction(p) ** v
    assert valuation(reduced, p) == 0
    assert reduced.numerator % p != 0 and reduced.denominator % p != 0


@given(nonzero_rationals, nonzero_rationals, st.sampled_from((2, 3)))
@settings(max_examples=150, deadline=None)
def test_valuation_is_additive_on_products(x, y, p):
    assert valuation(x * y, p) == valuation(x, p) + valuation(y, p)


def test_valuation_of_zero_is_an_error():
    with pytest.raises(ZeroInput):
        valuation(Fraction(0), 2)


@given(st.integers(1, 500), st.integers(1, 500))
@settings(max_examples=200, deadline=None)
def test_xgcd_bezout_identity(a, b):
    g, u, v = xgcd(a, b)
    assert u * a + v * b == g
    assert a % g == 0 and b % g == 0


def test_in_localization():
    assert in_localization(Fraction(3, 5), 2)
    assert not in_localization(Fraction(3, 4), 2)
    assert in_localization(Fraction(0), 7)


@given(rationals, rationals)
@settings(max_examples=150, deadline=None)
def test_localized_arithmetic_mirrors_fractions(x, y):
    p = 3
    if not (in_localization(x, p) and in_localization(y, p)):
        return
    a = LocalizedRational(x, p)
    b = LocalizedRational(y, p)
    assert (a + b).value == x + y
    assert (a - b).value == x - y
    assert (a * b).value == x * y
    assert (-a).value == -x


def test_localized_division_certifies_or_refuses():
    a = LocalizedRational(Fraction(1), 2)
    two = LocalizedRational(Fraction(2), 2)
    with pytest.raises(UnresolvedDivision):
        a.divide(two)  # 1/2 leaves Z_(2)
    five = LocalizedRational(Fraction(5), 2)
    assert a.divide(five).value == Fraction(1, 5)
    assert five.is_unit() and not two.is_unit()
    with pytest.raises(UnresolvedDivision):
        a.divide(LocalizedRational(Fraction(0), 2))


def test_localized_rational_rejects_foreign_denominators():
    with pytest.raises(ShapeMismatch):
        LocalizedRational(Fraction(1, 2), 2)
    with pytest.raises(ShapeMismatch):
        LocalizedRational(Fraction(1, 3), 2) + LocalizedRational(Fraction(1, 2), 3)


@given(nonzero_rationals)
@settings(max_examples=200, deadline=None)
def test_decompose_x_reconstructs(x):
    p, q = 2, 3
    if not in_localization(x, p) or valuation(x, q) >= 0:
        return
    m, n, t, s = decompose_x(x, p, q)
    assert x == Fraction(p) ** m * Fraction(t, s) / Fraction(q) ** n
    assert m >= 0 and n > 0
    for part in (t, s):
        assert part % p != 0 and part % q != 0


def test_decompose_x_rejects_the_direct_branch():
    with pytest.raises(WrongBranch):
        decompose_x(Fraction(3, 5), 2, 3)  # v_3 >= 0: no q-denominator to clear
    with pytest.raises(WrongBranch):
        decompose_x(Fraction(1, 2), 2, 3)  # not even in Z_(2)
    with pytest.raises(ZeroInput):
        decompose_x(Fraction(0), 2, 3)


# -- Prüfer component ---------------------------------------------------------


@given(rationals, rationals)
@settings(max_examples=200, deadline=None)
def test_pruefer_addition_matches_rational_addition(x, y):
    q = 3
    a = PrueferElement.from_rational(q, x)
    b = PrueferElement.from_rational(q, y)
    assert a + b == PrueferElement.from_rational(q, x + y)
    assert (a - a).is_zero()


@given(rationals)
@settings(max_examples=150, deadline=None)
def test_pruefer_representative_differs_by_a_localized_rational(x):
    q = 2
    a = PrueferElement.from_rational(q, x)
    diff = x - a.representative()
    assert diff == 0 or valuation(diff, q) >= 0
    rep = a.representative()
    assert 0 <= rep < 1


def test_pruefer_canonical_form_and_order():
    a = PrueferElement.from_rational(3, Fraction(5, 9))
    assert (a.n, a.k) == (2, 5)
    assert a.order() == 9
    b = PrueferElement.from_rational(3, Fraction(1, 3))
    assert a + b == PrueferElement.from_rational(3, Fraction(8, 9))
    # 5/9 + 4/9 = 1 vanishes in the quotient
    assert (a + PrueferElement.from_rational(3, Fraction(4, 9))).is_zero()
    with pytest.raises(ShapeMismatch):
        PrueferElement(3, 2, 6)  # 6/9 is not in lowest canonical form


def test_pruefer_scale_respects_localization():
    a = PrueferElement.from_rational(3, Fraction(1, 9))
    assert a.scale(Fraction(5)) == PrueferElement.from_rational(3, Fraction(5, 9))
    assert a.scale(Fraction(9)).is_zero()
    with pytest.raises(ShapeMismatch):
        a.scale(Fraction(1, 3))
    zero = PrueferElement.zero(3)
    assert zero.scale(Fraction(1, 3)).is_zero()  # 0 scales by anything


# -- the ring R and the module U ----------------------------------------------


def test_relement_multiplication_is_associative_on_samples():
    rs = sample_relements(2, 3)[:6]
    for a in rs:
        for b in rs:
            for c in rs:
                assert (a * b) * c == a * (b * c)


def test_relement_one_is_neutral_and_addition_commutes():
    p, q = 2, 3
    one = RElement.one(p, q)
    rs = sample_relements(p, q)
    for r in rs:
        assert one * r == r and r * one == r
        for s in rs[:4]:
            assert r + s == s + r
            assert (r + s) * rs[2] == r * rs[2] + s * rs[2]


def test_uelement_action_is_a_module_action_on_samples():
    p, q = 2, 3
    us = sample_uelements(p, q)[:5]
    rs = sample_relements(p, q)[:5]
    for u in us:
        for r in rs:
            for s in rs:
                assert u.act(r).act(s) == u.act(r * s)
                assert u.act(r + s) == u.act(r) + u.act(s)
    one = RElement.one(p, q)
    for u in us:
        assert u.act(one) == u


def test_uelement_generator_reaches_every_sample():
    p, q = 2, 3
    gen = UElement.generator(p, q)
    for u in sample_uelements(p, q):
        r = representing_r(u)
        assert gen.act(r) == u


def test_mixed_prime_pairs_are_rejected():
    with pytest.raises(ShapeMismatch):
        RElement.one(2, 3) + RElement.one(2, 5)
    with pytest.raises(ShapeMismatch):
        UElement.generator(2, 3).act(RElement.one(3, 2))


def test_as_fraction_accepts_strings_and_integers():
    assert as_fraction("7/5") == Fraction(7, 5)
    assert as_fraction(4) == Fraction(4)
    assert as_fraction(Fraction(1, 3)) == Fraction(1, 3)
    with pytest.raises(ShapeMismatch):
        as_fraction(1.5)
