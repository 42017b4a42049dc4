"""Expansion coefficients and symbol expansions of the perturbation part.

The perturbation part is F^pert(e1, e2, a; Lambda) = -gamma(2a) - gamma(-2a)
where

    gamma(x; Lambda) = c0 (-x^2 log(x/Lambda)/2 + 3 x^2/4)
                       - c1 (-x log(x/Lambda) + x)
                       - (c2/2) log(x/Lambda)
                       + sum_{n>=3} c_n x^{2-n} / (n(n-1)(n-2))

and c_n are the coefficients produced by c_coeffs.  Logarithms never stay
as opaque calls: log(x/Lambda) is rewritten into the Pi/Lt symbols of
LogElem plus an explicit Laurent tail, with the branch fixed once and for
all by log(-x) = log(x) + Pi (counter-clockwise continuation).

fpert_expand produces the expansion of a single gamma summand; callers
assemble the combination they need (the perturbation part itself is the
two-term alternating sum above, and the fixed-point sums of the
wallcrossing identity are built from many summands with shifted
arguments).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from ..algebra.logelem import LT_KEY, PI_KEY, SERIES_KEY, LogElem
from ..algebra.mpoly import (
    _IA,
    _IT,
    A,
    E1,
    E2,
    MPoly,
    RING,
    RatFn,
    T,
    poly_t_decompose,
)
from ..algebra.tlaurent import TLaurent, expand_at_infinity

_EPS2 = MPoly(E1 * E2)


@dataclass(frozen=True)
class CCoeffs:
    """Coefficients c_0..c_N of 1/((e^{e1 t}-1)(e^{e2 t}-1)) = sum c_n t^{n-2}/n!.

    c_n is a rational function homogeneous of degree n - 2 in (e1, e2),
    with c_0 = 1/(e1 e2).
    """

    values: tuple

    def __getitem__(self, n: int) -> RatFn:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)


@lru_cache(maxsize=None)
def c_coeffs(count: int) -> CCoeffs:
    """c_0 through c_count, by exact division of the double exponential."""
    if count < 0:
        raise ValueError("count must be >= 0")
    top = count + 2
    d = _exp_m1(E1, top) * _exp_m1(E2, top)
    slices = poly_t_decompose(d)
    # every t-coefficient of the product carries a factor e1 e2
    u = {j - 2: slices[j].quo(_EPS2.re) for j in slices if 2 < j <= top}
    e = [RING.one]
    for m in range(1, count + 1):
        total = RING.zero
        for j, uj in u.items():
            if j <= m:
                total = total + uj * e[m - j]
        e.append(-total)
    return CCoeffs(
        tuple(RatFn(MPoly(factorial(n) * e[n]), _EPS2) for n in range(count + 1))
    )


def _exp_m1(eps, top: int):
    """e^{eps t} - 1 as a polynomial, through t-degree top."""
    out = RING.zero
    term = RING.one
    fact = 1
    for k in range(1, top + 1):
        term = term * eps * T
        fact *= k
        out = out + term.quo_ground(RING.domain.convert(fact))
    return out


def pert_dlog() -> RatFn:
    """d F^pert / d log Lambda in closed form.

    Each gamma summand contributes c0 x^2/2 - c1 x + c2/2 (the tail is
    log Lambda-free), and the second derivative vanishes, so a Lambda
    rescaling shifts F^pert by an exactly linear amount.
    """
    cc = c_coeffs(2)
    half = RatFn.from_scalar(Fraction(1, 2))

    def gamma_dlog(x: RatFn) -> RatFn:
        return cc[0] * x * x * half - cc[1] * x + cc[2] * half

    two_a = RatFn.from_poly(MPoly(2 * A))
    return -(gamma_dlog(two_a)) - gamma_dlog(-two_a)


def fpert_expand(kind: str, sign: int, shift=None, eps_order: int = 2,
                 t_depth: int = 0) -> LogElem:
    """Expansion of one gamma summand into the Pi/Lt symbol ring.

    kind "t" takes x = sign*(t - shift) with shift a linear form in e1
    and e2; log(x/Lambda) becomes Lt plus the Laurent tail of
    log(1 - shift/t), plus Pi when sign is -1, and the negative powers
    x^{2-n} are expanded at t = infinity down to t^{-t_depth}.  Since
    every t-slice of the result is homogeneous in (e1, e2) of degree
    minus the t-degree, t_depth alone fixes the window and each kept
    slice is exact; eps_order is ignored here.

    kind "a" takes x = sign*2a with a left symbolic and shift None; the
    Lt symbol then stands for log(2a/Lambda) and the tail is cut at
    c_{eps_order+2}, the last coefficient of e-degree <= eps_order.  The
    result lives entirely in t-degree 0 and t_depth is ignored.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if kind == "a":
        if shift is not None:
            raise ValueError("kind 'a' takes no shift")
        return _expand_a(sign, eps_order)
    if kind != "t":
        raise ValueError("kind must be 't' or 'a'")
    return _expand_t(sign, shift, t_depth)


def _gamma_log_prefactor(cc: CCoeffs, x_sq, x):
    """-c0 x^2/2 + c1 x - c2/2, the multiplier of log(x/Lambda)."""
    minus_half = RatFn.from_scalar(Fraction(-1, 2))
    return (
        x_sq.scale(cc[0] * minus_half)
        + x.scale(cc[1])
        + TLaurent.monomial(cc[2] * minus_half, 0)
    )


def _gamma_plain(cc: CCoeffs, x_sq, x):
    """3 c0 x^2/4 - c1 x, the log-free brace part."""
    return x_sq.scale(cc[0] * RatFn.from_scalar(Fraction(3, 4))) + x.scale(-cc[1])


def _tail_scalar(cc: CCoeffs, n: int) -> RatFn:
    return cc[n] * RatFn.from_scalar(Fraction(1, n * (n - 1) * (n - 2)))


def _expand_t(sign: int, shift, t_depth: int) -> LogElem:
    if t_depth < 0:
        raise ValueError("t_depth must be >= 0")
    c = _shift_poly(shift)
    n_max = t_depth + 2
    cc = c_coeffs(n_max)
    sign_rf = RatFn.from_scalar(sign)

    t_minus_c = TLaurent.from_ratfn_poly(RatFn(MPoly(T - c), MPoly(RING.one)))
    x = t_minus_c.scale(sign_rf)
    x_sq = t_minus_c * t_minus_c

    prefactor = _gamma_log_prefactor(cc, x_sq, x)
    plain = _gamma_plain(cc, x_sq, x)

    # log(x/Lambda) = [Pi if sign < 0] + Lt + log(1 - c/t); the tail runs
    # two orders deeper than requested so that the product with the
    # degree-2 prefactor is still exact at t^{-t_depth}
    log_tail = _log_one_minus(c, t_depth + 2)

    series = plain + prefactor * log_tail
    inv = RatFn.one() / RatFn(MPoly(T - c), MPoly(RING.one))
    for n in range(3, n_max + 1):
        power = expand_at_infinity(inv ** (n - 2), t_depth)
        if sign < 0 and n % 2 == 1:
            power = power.scale(RatFn.from_scalar(-1))
        series = series + power.scale(_tail_scalar(cc, n))

    coeffs = {LT_KEY: prefactor, SERIES_KEY: series.truncate(-t_depth)}
    if sign < 0:
        coeffs[PI_KEY] = prefactor
    return LogElem(coeffs)


def _expand_a(sign: int, eps_order: int) -> LogElem:
    if eps_order < 0:
        raise ValueError("eps_order must be >= 0")
    n_max = eps_order + 2
    cc = c_coeffs(n_max)
    two_a = RatFn.from_poly(MPoly(2 * A))

    x = TLaurent.monomial(two_a * RatFn.from_scalar(sign), 0)
    x_sq = TLaurent.monomial(two_a * two_a, 0)

    prefactor = _gamma_log_prefactor(cc, x_sq, x)
    tail = RatFn.zero()
    for n in range(3, n_max + 1):
        tail = tail + _tail_scalar(cc, n) * (two_a * RatFn.from_scalar(sign)) ** (2 - n)
    series = _gamma_plain(cc, x_sq, x) + TLaurent.monomial(tail, 0)

    coeffs = {LT_KEY: prefactor, SERIES_KEY: series}
    if sign < 0:
        coeffs[PI_KEY] = prefactor
    return LogElem(coeffs)


def _shift_poly(shift):
    """Validate and unwrap the shift of the t-kind to a raw ring element."""
    if shift is None:
        return RING.zero
    if isinstance(shift, RatFn):
        shift = shift.as_poly()
    if isinstance(shift, MPoly):
        if not shift.is_real():
            raise ValueError("shift must be real")
        shift = shift.re
    for m, _ in shift.terms():
        if m[_IT] or m[_IA] or sum(m) != 1:
            raise ValueError("shift must be a linear form in e1 and e2")
    return shift


def _log_one_minus(c, depth: int) -> TLaurent:
    """log(1 - c/t) as a Laurent tail down to t^{-depth}."""
    if not c:
        return TLaurent({}, None, -depth)
    out = {}
    power = RING.one
    for k in range(1, depth + 1):
        power = power * c
        out[-k] = RatFn(MPoly(-power), MPoly(k * RING.one))
    return TLaurent(out, -1 if out else None, -depth)
