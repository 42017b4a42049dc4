"""Instanton partition function, its logarithm, and the tau-shift check.

The partition function is a sum over pairs of Young diagrams graded by
Lambda^{4 |pair|}.  Each pair contributes its tau-coupling factor divided
by the product of the four Euler factors.  Weight and framing
substitutions are applied to the memoized symbolic factors afterwards,
never baked into them, so the same pair cache serves every fixed point
of every surface.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..algebra.mpoly import (
    _IA,
    _IT,
    MPoly,
    RING,
    RatFn,
    _fraction_from_dom,
    poly_subst_many,
)
from ..algebra.multiseries import MultiSeries
from ..partitions import pairs_of_total
from .efactor import _order_tuple, e_factor
from .euler import _euler_poly
from .pert import c_coeffs, pert_dlog


def _as_real_poly(value):
    """Unwrap a substitution form to a raw real ring element."""
    if isinstance(value, RatFn):
        value = value.as_poly()
    if isinstance(value, MPoly):
        if not value.is_real():
            raise ValueError("substitution forms must be real")
        return value.re
    return value


def _eps_linear_coeffs(w):
    """The (e1, e2) coefficients of a linear form in e1 and e2 alone."""
    ce1 = Fraction(0)
    ce2 = Fraction(0)
    for m, c in w.terms():
        if m[_IT] or m[_IA] or sum(m) != 1:
            raise ValueError("weights must be linear forms in e1 and e2")
        f = _fraction_from_dom(c)
        if m[3]:
            ce1 = f
        else:
            ce2 = f
    return ce1, ce2


def _substitution(weights, a_form) -> dict:
    mapping = {}
    if weights is not None:
        w1 = _as_real_poly(weights[0])
        w2 = _as_real_poly(weights[1])
        a1, b1 = _eps_linear_coeffs(w1)
        a2, b2 = _eps_linear_coeffs(w2)
        if a1 * b2 - a2 * b1 == 0:
            raise ValueError("substituted weights are linearly dependent")
        mapping["e1"] = w1
        mapping["e2"] = w2
    if a_form is not None:
        mapping["a"] = _as_real_poly(a_form)
    return mapping


@lru_cache(maxsize=None)
def _pair_term_default(pair) -> RatFn:
    den = RING.one
    for alpha in (1, 2):
        for beta in (1, 2):
            den = den * _euler_poly(pair, alpha, beta)
    return RatFn(MPoly(RING.one), MPoly(den))


def _pair_term(pair, mapping) -> RatFn:
    if not mapping:
        return _pair_term_default(pair)
    den = RING.one
    for alpha in (1, 2):
        for beta in (1, 2):
            f = poly_subst_many(_euler_poly(pair, alpha, beta), mapping)
            if not f:
                raise ValueError(
                    "euler factor vanishes after substitution:"
                    " pair=(%s, %s), alpha=%d, beta=%d"
                    % (pair.first.to_text(), pair.second.to_text(), alpha, beta)
                )
            den = den * f
    return RatFn(MPoly(RING.one), MPoly(den))


def zinst(order: int, weights=None, a_form=None, tau_depth: int = 0,
          tau_orders=1) -> MultiSeries:
    """The instanton partition function through Lambda^order.

    weights substitutes a linearly independent pair of linear forms in
    (e1, e2) for the two equivariant parameters; a_form substitutes any
    real form for a.  With tau_depth > 0 the result is a MultiSeries in
    Lambda and tau_1..tau_R; otherwise in Lambda alone.  Coefficients at
    Lambda exponents not divisible by 4 vanish.
    """
    if order < 0:
        raise ValueError("order must be >= 0")
    mapping = _substitution(weights, a_form)
    if not mapping and tau_depth == 0:
        return _zinst_plain(order)
    torders = _order_tuple(tau_depth, tau_orders)
    names = ("Lambda",) + tuple("tau%d" % r for r in range(1, tau_depth + 1))
    orders = (order,) + torders
    coeffs = {}
    for n in range(order // 4 + 1):
        if tau_depth == 0:
            total = RatFn.zero()
            for pair in pairs_of_total(n):
                total = total + _pair_term(pair, mapping)
            if not total.is_zero():
                coeffs[(4 * n,)] = total
        else:
            total = MultiSeries.zero(names[1:], torders, "ratfn")
            for pair in pairs_of_total(n):
                term = _pair_term(pair, mapping)
                efac = e_factor(pair, tau_depth, torders)
                if mapping:
                    efac = efac.map_coeffs(lambda c: c.subst_many(mapping))
                total = total + efac.scale(term)
            for m, c in total.coeffs.items():
                coeffs[(4 * n,) + m] = c
    return MultiSeries(names, orders, coeffs, "ratfn")


@lru_cache(maxsize=None)
def _zinst_plain(order: int) -> MultiSeries:
    coeffs = {}
    for n in range(order // 4 + 1):
        total = RatFn.zero()
        for pair in pairs_of_total(n):
            total = total + _pair_term_default(pair)
        if not total.is_zero():
            coeffs[(4 * n,)] = total
    return MultiSeries(("Lambda",), (order,), coeffs, "ratfn")


@lru_cache(maxsize=None)
def _finst_plain(order: int) -> MultiSeries:
    return _zinst_plain(order).log()


def finst(order: int, weights=None, a_form=None, tau_depth: int = 0,
          tau_orders=1) -> MultiSeries:
    """log of the instanton partition function, same windows as zinst."""
    if weights is None and a_form is None and tau_depth == 0:
        return _finst_plain(order)
    return zinst(order, weights, a_form, tau_depth, tau_orders).log()


def tau_shift_check(order: int, tau1_order: int) -> dict:
    """Check the tau_1 coupling against a rescaling of Lambda.

    The coupled series must equal the tau-free one with Lambda^{4n}
    scaled by e^{-n tau_1}, plus a tau_1-linear constant assembled here
    from the c-coefficients and the log-Lambda derivative of the
    perturbation part (each gamma summand is exactly linear in
    log Lambda after one derivative, so there is no higher correction).
    Returns a report dict; on failure first_mismatch holds the smallest
    offending (Lambda, tau_1) exponent with both coefficient values.
    """
    lhs = finst(order, tau_depth=1, tau_orders=tau1_order)
    base = finst(order)
    cc = c_coeffs(2)
    quarter = RatFn.from_scalar(Fraction(-1, 4))
    linear_01 = quarter * cc[2] + quarter * pert_dlog()

    first_mismatch = None
    for i in range(order + 1):
        for k in range(tau1_order + 1):
            got = lhs.extract_coeff((i, k))
            want = RatFn.zero()
            if i % 4 == 0:
                n = i // 4
                scale = Fraction((-n) ** k, factorial(k))
                want = base.extract_coeff((i,)) * RatFn.from_scalar(scale)
                if i == 0 and k == 1:
                    want = want + linear_01
            if got != want:
                first_mismatch = {
                    "exponent": (i, k),
                    "lhs": got.to_text(),
                    "rhs": want.to_text(),
                }
                break
        if first_mismatch:
            break
    return {
        "ok": first_mismatch is None,
        "order": order,
        "tau1_order": tau1_order,
        "first_mismatch": first_mismatch,
    }
