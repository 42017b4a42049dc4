"""Tests for the theta constants, the derived q-series and the modular
wallcrossing bracket."""

from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nekwall.algebra import GR_I, GR_ONE, GaussianRational, QSeries, RatFn
from nekwall.modular import (
    ab_checks,
    contact_checks,
    e2_series,
    q_of_a,
    sw_series,
    theta_series,
    wallcross_modular,
)


def real(num, den=1):
    return GaussianRational(Fraction(num, den))


def imag(num, den=1):
    return GaussianRational(0, Fraction(num, den))


# -- theta constants and E2 --------------------------------------------------


def test_theta_leading_terms():
    th = theta_series("00", 40)
    assert th.coeffs == {0: real(1), 4: real(2), 16: real(2), 36: real(2)}
    th = theta_series("01", 40)
    assert th.coeffs == {0: real(1), 4: real(-2), 16: real(2), 36: real(-2)}
    th = theta_series("10", 40)
    assert th.coeffs == {1: real(2), 9: real(2), 25: real(2)}


def test_theta_validation():
    with pytest.raises(ValueError):
        theta_series("11", 8)
    with pytest.raises(ValueError):
        theta_series("00", 0)


def test_e2_leading_terms():
    s = e2_series(25)
    assert s.coeffs == {0: real(1), 8: real(-24), 16: real(-72), 24: real(-96)}


@settings(deadline=None, max_examples=25)
@given(st.integers(min_value=2, max_value=40))
def test_jacobi_identity(ceiling):
    p00 = theta_series("00", ceiling) ** 4
    p01 = theta_series("01", ceiling) ** 4
    p10 = theta_series("10", ceiling) ** 4
    c = min(p00.ceiling, p01.ceiling, p10.ceiling)
    assert p00.truncate(c) == p01.truncate(c) + p10.truncate(c)


# -- derived series ----------------------------------------------------------

# First validated coefficients of the four derived series, computed
# independently ahead of time from the defining theta quotients (see
# notes outside the package).  Keys count eighths.
U_HAT = {-2: real(-1, 4), 2: real(-5), 6: real(31, 2), 10: real(-54),
         14: real(641, 4)}
V_HAT = {-1: imag(1), 3: imag(-2), 7: imag(3), 11: imag(-6), 15: imag(11)}
A_HAT = {-1: imag(1, 2), 3: imag(3), 7: imag(-21, 2), 11: imag(33),
         15: imag(-165, 2)}
T_HAT = {2: real(1), 6: real(-2), 10: real(6), 14: real(-16)}


def test_sw_series_tables():
    sw = sw_series(16)
    assert sw.u.coeffs == U_HAT
    assert sw.duda.coeffs == V_HAT
    assert sw.a.coeffs == A_HAT
    assert sw.T.coeffs == T_HAT


def test_sw_series_weights():
    sw = sw_series(16)
    weights = (sw.u.lam_weight, sw.duda.lam_weight, sw.a.lam_weight,
               sw.T.lam_weight)
    assert weights == (2, 1, 1, 2)
    assert sw.theta00.lam_weight == 0
    assert sw.e2.lam_weight == 0


def test_sw_series_supports():
    sw = sw_series(16)
    assert min(sw.u.coeffs) == -2
    assert min(sw.duda.coeffs) == -1
    assert min(sw.a.coeffs) == -1
    # the q^(-1/4) and constant parts of T cancel exactly
    assert min(sw.T.coeffs) == 2
    assert all(n % 4 == 0 for n in sw.theta00.coeffs)
    assert all(n % 4 == 0 for n in sw.theta01.coeffs)
    assert all(n % 8 == 1 for n in sw.theta10.coeffs)
    assert all(n % 8 == 0 for n in sw.e2.coeffs)
    assert sw.e2.extract_coeff(0) == GR_ONE


def test_sw_series_validation():
    with pytest.raises(ValueError):
        sw_series(1)


def test_weight_mismatch_guard():
    sw = sw_series(8)
    with pytest.raises(ValueError):
        sw.u + sw.a


def test_duda_times_dadu_is_one():
    sw = sw_series(12)
    v = sw.duda.with_weight(0)
    assert (v * v.inverse()).coeffs == {0: GR_ONE}


# -- reversion ---------------------------------------------------------------


def test_q_of_a_leading_and_parity():
    rev = q_of_a(12)
    assert rev.extract_coeff(1) == imag(1, 2)
    assert all(n % 2 == 1 for n in rev.coeffs)


@settings(deadline=None, max_examples=10)
@given(st.integers(min_value=3, max_value=14))
def test_q_of_a_round_trip(ceiling):
    rev = q_of_a(ceiling)
    w = sw_series(ceiling).a.with_weight(0).inverse().truncate(ceiling)
    acc = QSeries.zero(ceiling)
    for n, c in rev.items():
        acc = acc + (w ** n).truncate(ceiling).scale(c)
    assert acc.coeffs == {1: GR_ONE}


# -- contact and branch comparisons ------------------------------------------


def test_contact_checks_depth_eight():
    report = contact_checks(8)
    assert report["ok"], report
    assert report["window_eighths"] == 10


def test_contact_checks_depth_sixteen():
    report = contact_checks(16)
    assert report["ok"], report


def test_contact_checks_validation():
    with pytest.raises(ValueError):
        contact_checks(6)


def test_ab_checks():
    report = ab_checks(8)
    assert report["ok"], report
    assert report["duda_constant"] == GR_ONE
    assert report["theta_constant"] == GR_ONE


# -- wallcrossing bracket ----------------------------------------------------


def test_anchor_bracket_value():
    sw = sw_series(8)
    iv = sw.duda.with_weight(0).scale(GR_I)
    bracket = (iv ** 3) * (sw.theta01 ** 8)
    assert bracket.mul_monomial(GR_ONE, 3).extract_coeff(0) == real(-1)


def test_wallcross_anchor_slice():
    ms = wallcross_modular(-3, -1, 8, 0, 1, {"alpha_xi": 0, "alpha_sq": 0}, 0, 0)
    assert ms.extract_coeff((0, 0)) == RatFn.one()


# Wall H - 2E on the blown up plane paired against alpha = H: the three
# nonvanishing slices with n <= 4, m <= 1, frozen from an independent
# run of the bracket (see notes outside the package).
def test_wallcross_first_wall_table():
    ms = wallcross_modular(-3, -1, 8, 0, 1, {"alpha_xi": 1, "alpha_sq": 1}, 4, 1)
    want = {
        (0, 0): Fraction(1),
        (4, 0): Fraction(-13, 64),
        (2, 1): Fraction(7, 16),
    }
    for n in range(5):
        for m in range(2):
            got = ms.extract_coeff((n, m))
            if (n, m) in want:
                assert got == RatFn.from_scalar(want[(n, m)])
            else:
                assert got.is_zero()


def test_wallcross_faraway_wall_vanishes():
    # H - 4E first contributes at Lambda^12, far beyond these slices
    ms = wallcross_modular(-15, 1, 8, 0, 1, {"alpha_xi": 1, "alpha_sq": 1}, 4, 1)
    assert ms.coeffs == {}


def test_wallcross_validation():
    with pytest.raises(ValueError):
        wallcross_modular(-3, -1, 9, 0, 1, {"alpha_xi": 0, "alpha_sq": 0}, 0, 0)
    with pytest.raises(ValueError):
        wallcross_modular(-3, -1, 8, 0, 1, {"alpha_xi": 0, "alpha_sq": 0}, -1, 0)
