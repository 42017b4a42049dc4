"""Tests for the coefficient arithmetic layer."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nekwall.algebra import (
    EpsPoleError,
    GaussianRational,
    GR_I,
    GR_ONE,
    LogElem,
    MultiSeries,
    QSeries,
    RatFn,
    TLaurent,
    TruncationMismatchError,
    WindowError,
    eps_limit,
    expand_at_infinity,
    extract_coeff,
    ratfn_arith,
    series_exp,
    series_log,
    series_reverse,
)

E1 = RatFn.var("e1")
E2 = RatFn.var("e2")
AA = RatFn.var("a")
TT = RatFn.var("t")
ONE = RatFn.one()


# -- GaussianRational ---------------------------------------------------------


def test_gaussian_basic_arithmetic():
    x = GaussianRational(Fraction(1, 2), Fraction(3, 4))
    y = GaussianRational(2, -1)
    assert x + y == GaussianRational(Fraction(5, 2), Fraction(-1, 4))
    assert x * GR_I == GaussianRational(Fraction(-3, 4), Fraction(1, 2))
    assert (x / x) == GR_ONE
    assert GR_I * GR_I == GaussianRational(-1)


def test_gaussian_text_roundtrip():
    samples = [
        GaussianRational(0),
        GaussianRational(3),
        GaussianRational(Fraction(-7, 3)),
        GaussianRational(0, 1),
        GaussianRational(0, Fraction(-5, 8)),
        GaussianRational(Fraction(1, 2), Fraction(3, 4)),
        GaussianRational(Fraction(1, 2), Fraction(-3, 4)),
        GaussianRational(-2, -2),
    ]
    for g in samples:
        assert GaussianRational.from_text(g.to_text()) == g
    assert GaussianRational(3).to_text() == "3"
    assert GaussianRational(Fraction(-7, 3)).to_text() == "-7/3"
    assert GaussianRational(Fraction(1, 2), Fraction(3, 4)).to_text() == "1/2+3/4*i"
    assert GaussianRational(0, -1).to_text() == "-1*i"


@given(
    st.fractions(min_value=-30, max_value=30, max_denominator=9),
    st.fractions(min_value=-30, max_value=30, max_denominator=9),
)
def test_gaussian_text_roundtrip_random(re, im):
    g = GaussianRational(re, im)
    assert GaussianRational.from_text(g.to_text()) == g


# -- RatFn ---------------------------------------------------------------------


def test_ratfn_inverse_pair():
    assert ratfn_arith(E1 / E2, E2 / E1, "mul") == ONE


def test_ratfn_partial_fraction_sum():
    lhs = ratfn_arith(
        ONE / (E1 + E2 + AA + AA), ONE / (E1 + E2 - AA - AA), "add"
    )
    two = RatFn.from_scalar(2)
    rhs = (two * (E1 + E2)) / ((E1 + E2) ** 2 - (two * AA) ** 2)
    assert lhs == rhs


def test_ratfn_cancellation():
    assert (E1 * E1 - E2 * E2) / (E1 - E2) == E1 + E2


def test_ratfn_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ratfn_arith(ONE, RatFn.zero(), "div")


def test_eps_limit_values():
    f = RatFn.from_scalar(2) / ((E1 + E2) ** 2 - RatFn.from_scalar(4) * AA * AA)
    assert eps_limit(f) == RatFn.from_scalar(Fraction(-1, 2)) / (AA * AA)
    assert eps_limit((E1 * E2) / (E1 * E2)) == ONE
    with pytest.raises(EpsPoleError):
        eps_limit(ONE / E1)


def test_ratfn_diff_quotient_rule():
    f = (E1 * E1) / E2
    assert f.diff("e1") == (RatFn.from_scalar(2) * E1) / E2
    g = ONE / E1
    assert g.diff("e1") == -(ONE / (E1 * E1))


_small_fraction = st.fractions(min_value=-6, max_value=6, max_denominator=4)


@st.composite
def _ratfns(draw):
    def poly(nonzero=False):
        p = RatFn.zero()
        terms = draw(st.lists(
            st.tuples(
                st.integers(0, 2), st.integers(0, 2), st.integers(0, 1),
                _small_fraction,
            ),
            min_size=1 if nonzero else 0,
            max_size=3,
        ))
        for i, j, k, c in terms:
            p = p + (E1 ** i) * (E2 ** j) * (AA ** k) * RatFn.from_scalar(c)
        if nonzero and p.is_zero():
            p = p + ONE
        return p

    return poly() / poly(nonzero=True)


@settings(max_examples=40, deadline=None)
@given(_ratfns(), _ratfns(), _ratfns())
def test_ratfn_ring_laws(f, g, h):
    assert (f + g) + h == f + (g + h)
    assert f + g == g + f
    assert (f * g) * h == f * (g * h)
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h


@settings(max_examples=25, deadline=None)
@given(_ratfns(), _ratfns())
def test_eps_limit_commutes_with_arithmetic(f, g):
    try:
        lf, lg = eps_limit(f), eps_limit(g)
        assert eps_limit(f + g) == lf + lg
        assert eps_limit(f * g) == lf * lg
    except EpsPoleError:
        pass


# -- TLaurent -------------------------------------------------------------------


def test_expand_simple_pole():
    b = E1 + E2 * E2
    L = expand_at_infinity(ONE / (b + TT), 4)
    assert extract_coeff(L, -1) == ONE
    assert extract_coeff(L, -2) == -b
    assert extract_coeff(L, -3) == b * b
    assert extract_coeff(L, -4) == -(b * b * b)
    assert extract_coeff(L, 5) == RatFn.zero()
    with pytest.raises(WindowError):
        extract_coeff(L, -5)


def test_expand_polynomial_passthrough():
    L = expand_at_infinity(TT * TT, 3)
    assert L.is_exact()
    assert extract_coeff(L, 2) == ONE
    assert extract_coeff(L, -100) == RatFn.zero()


def test_expand_double_pole():
    c = E1
    L = expand_at_infinity(ONE / ((TT - c) ** 2), 5)
    assert extract_coeff(L, -2) == ONE
    assert extract_coeff(L, -3) == RatFn.from_scalar(2) * c
    assert extract_coeff(L, -4) == RatFn.from_scalar(3) * c * c


@st.composite
def _t_ratfns(draw):
    num = RatFn.zero()
    for j, c in enumerate(draw(st.lists(_small_fraction, min_size=1, max_size=3))):
        num = num + RatFn.from_scalar(c) * TT ** j
    b = draw(st.integers(-3, 3))
    den = TT - RatFn.from_scalar(b) * E1
    if draw(st.booleans()):
        den = den * (TT + E2)
    return num / den


@settings(max_examples=25, deadline=None)
@given(_t_ratfns(), _t_ratfns())
def test_expand_is_multiplicative(f, g):
    depth = 4
    lhs = expand_at_infinity(f * g, depth)
    rhs = expand_at_infinity(f, depth + 4) * expand_at_infinity(g, depth + 4)
    for d in range(-depth, 3):
        assert extract_coeff(lhs, d) == extract_coeff(rhs, d)


def test_tlaurent_floor_tracking():
    f = expand_at_infinity(ONE / (TT - E1), 3)
    g = expand_at_infinity(ONE / (TT - E2), 5)
    prod = f * g
    # f is unknown below t^-3, and g's top degree is -1, so the product
    # is unknown below t^-4 even though g is known deeper
    assert prod.floor == -4
    with pytest.raises(WindowError):
        extract_coeff(prod, -5)


# -- QSeries ---------------------------------------------------------------------


def test_qseries_log_exp_roundtrip():
    s = QSeries({0: GR_ONE, 8: GaussianRational(1)}, 0, 80)
    l = series_log(s)
    assert extract_coeff(l, 8) == GR_ONE
    assert extract_coeff(l, 16) == GaussianRational(Fraction(-1, 2))
    assert extract_coeff(l, 24) == GaussianRational(Fraction(1, 3))
    assert series_exp(l) == s


def test_qseries_log_requires_unit_constant():
    s = QSeries({0: GaussianRational(2)}, 0, 16)
    with pytest.raises(ValueError):
        series_log(s)


def test_qseries_inverse_fractional_order():
    t = QSeries({1: GaussianRational(2), 9: GaussianRational(2)}, 1, 41)
    prod = t * t.inverse()
    assert extract_coeff(prod, 0) == GR_ONE
    assert all(n == 0 for n, _ in prod.items())


def test_qseries_window_mixing_is_an_error():
    s1 = QSeries({0: GR_ONE}, 0, 16)
    s2 = QSeries({0: GR_ONE}, 0, 24)
    with pytest.raises(TruncationMismatchError):
        s1 + s2


def test_qseries_weights():
    u = QSeries({0: GR_ONE}, 0, 16, 2)
    v = QSeries({0: GR_ONE}, 0, 16, 1)
    assert (u * v).lam_weight == 3
    assert u.inverse().lam_weight == -2
    with pytest.raises(ValueError):
        u + v


@given(st.integers(1, 3), st.integers(1, 3))
def test_qseries_weight_additivity_random(w1, w2):
    s1 = QSeries({0: GR_ONE, 3: GaussianRational(2)}, 0, 20, w1)
    s2 = QSeries({1: GR_ONE}, 1, 20, w2)
    assert (s1 * s2).lam_weight == w1 + w2


def test_qseries_extraction_below_low_is_zero():
    t = QSeries({1: GaussianRational(2)}, 1, 9)
    assert extract_coeff(t, 0) == GaussianRational(0)
    with pytest.raises(WindowError):
        extract_coeff(t, 9)


def test_series_reverse_identity():
    s = QSeries({1: GR_ONE}, 1, 6)
    assert series_reverse(s) == s


def test_series_reverse_scaling():
    s = QSeries({1: GaussianRational(2)}, 1, 6)
    w = series_reverse(s)
    assert extract_coeff(w, 1) == GaussianRational(Fraction(1, 2))
    assert all(n == 1 for n, _ in w.items())


def test_series_reverse_quadratic():
    s = QSeries({1: GR_ONE, 2: GR_ONE}, 1, 6)
    w = series_reverse(s)
    expected = {1: 1, 2: -1, 3: 2, 4: -5, 5: 14}
    assert {n: c for n, c in w.items()} == {
        n: GaussianRational(c) for n, c in expected.items()
    }


@settings(max_examples=20, deadline=None)
@given(
    st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=0, max_size=4),
    st.sampled_from([1, 2, -1, Fraction(1, 2)]),
)
def test_series_reverse_is_compositional_inverse(tail, lead):
    ceiling = 8
    coeffs = {1: GaussianRational(lead)}
    for off, c in enumerate(tail):
        if c:
            coeffs[2 + off] = GaussianRational(c)
    s = QSeries(coeffs, 1, ceiling)
    w = series_reverse(s)
    # substitute w into s: the result must be the identity series
    acc = QSeries.zero(ceiling)
    wp = QSeries.monomial(GR_ONE, 0, ceiling)
    for n in range(1, ceiling):
        wp = (wp * w).truncate(ceiling)
        c = s.coeffs.get(n)
        if c:
            acc = acc + wp.scale(c)
    assert acc.items() == [(1, GR_ONE)]


# -- MultiSeries -------------------------------------------------------------------


def _ms(vals, orders=(4,)):
    return MultiSeries(("Lambda",), orders, vals, "ratfn")


def test_multiseries_log_exp():
    c = ONE / (E1 * E2)
    s = _ms({(0,): ONE, (1,): c})
    l = series_log(s)
    assert extract_coeff(l, (1,)) == c
    assert extract_coeff(l, (2,)) == RatFn.from_scalar(Fraction(-1, 2)) * c * c
    assert series_exp(l) == s


def test_multiseries_log_needs_unit():
    with pytest.raises(ValueError):
        series_log(_ms({(1,): ONE}))


def test_multiseries_window_checks():
    a = _ms({(0,): ONE})
    b = MultiSeries(("Lambda",), (5,), {(0,): ONE}, "ratfn")
    with pytest.raises(TruncationMismatchError):
        a + b
    with pytest.raises(WindowError):
        extract_coeff(a, (5,))


def test_multiseries_eps_limit_maps_coefficients():
    s = _ms({(1,): (E1 + AA) / (E2 + ONE)})
    assert extract_coeff(eps_limit(s), (1,)) == AA


@settings(max_examples=20, deadline=None)
@given(st.lists(_small_fraction, min_size=1, max_size=3),
       st.lists(_small_fraction, min_size=1, max_size=3))
def test_multiseries_exp_is_multiplicative(c1, c2):
    orders = (4,)
    def build(cs):
        return MultiSeries(
            ("Lambda",), orders,
            {(j + 1,): RatFn.from_scalar(c) for j, c in enumerate(cs) if j < 4},
            "ratfn",
        )
    f, g = build(c1), build(c2)
    assert series_exp(f + g) == series_exp(f) * series_exp(g)


# -- LogElem -------------------------------------------------------------------------


def test_logelem_bookkeeping():
    pi_term = LogElem.symbol((1, 0, 0), RatFn.from_scalar(2))
    lt_term = LogElem.symbol((0, 1, 0), E1)
    total = pi_term + lt_term
    assert total.coeff((1, 0, 0)) == TLaurent.monomial(RatFn.from_scalar(2), 0)
    assert (total - total).is_zero()
    scaled = total.scale(E2)
    assert scaled.coeff((0, 1, 0)) == TLaurent.monomial(E1 * E2, 0)
