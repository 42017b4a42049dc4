"""Theta constants, E2, the series u, du/da, a, T, and the modular form
of the wallcrossing coefficient.

Exponents count eighths of a power of q throughout (the QSeries
convention).  The lam_weight on each series records the power of the
scale Lambda its value carries: u scales like Lambda^2, du/da and a like
Lambda, the theta constants and E2 are scale free.  The letter w below
always abbreviates Lambda/a.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import (
    GR_I,
    GR_ONE,
    GaussianRational,
    LL_KEY,
    LT_KEY,
    MultiSeries,
    PI_KEY,
    QSeries,
    RatFn,
    SERIES_KEY,
    TruncationMismatchError,
    WindowError,
    series_reverse,
)
from .nekrasov import prepotential_parts

_A_RF = RatFn.var("a")


def theta_series(kind: str, ceiling: int) -> QSeries:
    """One of the three theta constants as an exact q-series.

    Kind 00 sums q^(n^2/2) over the integers, kind 01 the same with sign
    (-1)^n, kind 10 sums q^((n+1/2)^2/2).
    """
    if ceiling <= 0:
        raise ValueError("ceiling must be positive")
    if kind in ("00", "01"):
        coeffs = {0: GR_ONE}
        n = 1
        while 4 * n * n < ceiling:
            sign = -2 if (kind == "01" and n % 2) else 2
            coeffs[4 * n * n] = GaussianRational(sign)
            n += 1
        return QSeries(coeffs, 0, ceiling)
    if kind == "10":
        coeffs = {}
        n = 0
        while (2 * n + 1) ** 2 < ceiling:
            coeffs[(2 * n + 1) ** 2] = GaussianRational(2)
            n += 1
        return QSeries(coeffs, 1, ceiling)
    raise ValueError("kind must be 00, 01 or 10")


def e2_series(ceiling: int) -> QSeries:
    """Weight-two Eisenstein series 1 - 24 sum sigma_1(n) q^n."""
    if ceiling <= 0:
        raise ValueError("ceiling must be positive")
    coeffs = {0: GR_ONE}
    for n in range(1, (ceiling + 7) // 8):
        sigma = sum(d for d in range(1, n + 1) if n % d == 0)
        coeffs[8 * n] = GaussianRational(-24 * sigma)
    return QSeries(coeffs, 0, ceiling)


@dataclass(frozen=True)
class SWSeries:
    """The derived q-series, all truncated at one shared ceiling."""

    u: QSeries
    duda: QSeries
    a: QSeries
    T: QSeries
    theta00: QSeries
    theta01: QSeries
    theta10: QSeries
    e2: QSeries
    ceiling: int


@lru_cache(maxsize=None)
def sw_series(ceiling: int) -> SWSeries:
    """u, du/da, a and the contact term T from the theta constants.

        u     = -(th00^4 + th10^4) / (th00 th10)^2          weight 2
        du/da = 2 sqrt(-1) / (th00 th10)                    weight 1
        a     = sqrt(-1) (2 E2 + th00^4 + th10^4)
                    / (3 th00 th10)                         weight 1
        T     = (du/da)^2 E2 / 24 - u / 6                   weight 2

    Everything is computed a little deeper than requested so the series
    inversions keep a full window, then truncated back to `ceiling`.
    """
    if ceiling <= 1:
        raise ValueError("ceiling must exceed 1")
    pad = ceiling + 8
    th00 = theta_series("00", pad)
    th01 = theta_series("01", pad)
    th10 = theta_series("10", pad)
    e2 = e2_series(pad)
    p00 = (th00 * th00 * th00 * th00).truncate(pad)
    p10 = (th10 * th10 * th10 * th10).truncate(pad)
    quartic = p00 + p10
    d1 = (th00 * th10).truncate(pad)
    d2 = (d1 * d1).truncate(pad)
    inv1 = d1.inverse()
    u = (-(quartic * d2.inverse())).with_weight(2)
    duda = inv1.scale(2 * GR_I).with_weight(1)
    a = ((e2.scale(2) + quartic) * inv1).scale(GR_I / 3).with_weight(1)
    half = (duda * duda * e2).scale(Fraction(1, 24))
    tt = _add_common(half, u.scale(Fraction(-1, 6)))

    def fit(s: QSeries) -> QSeries:
        # Tightening low to the first stored key is exact: inside the
        # window zero coefficients were computed and dropped, below the
        # old bound they are zero by construction.
        s = s.truncate(ceiling)
        if s.coeffs:
            return QSeries(s.coeffs, min(s.coeffs), ceiling, s.lam_weight)
        return s

    return SWSeries(
        u=fit(u),
        duda=fit(duda),
        a=fit(a),
        T=fit(tt),
        theta00=fit(th00),
        theta01=fit(th01),
        theta10=fit(th10),
        e2=fit(e2),
        ceiling=ceiling,
    )


def _add_common(x: QSeries, y: QSeries) -> QSeries:
    c = min(x.ceiling, y.ceiling)
    return x.truncate(c) + y.truncate(c)


def q_of_a(ceiling: int) -> QSeries:
    """q^(1/8) as a series in w = Lambda/a, by reversion of 1/a(q).

    The exponents of the result count powers of w, not of q.  Reversion
    cannot fail while the leading coefficient of Lambda/a stays at
    -2 sqrt(-1); that is checked before reverting.
    """
    if ceiling <= 1:
        raise ValueError("ceiling must exceed 1")
    sw = sw_series(ceiling)
    w = sw.a.with_weight(0).inverse().truncate(ceiling)
    if w.extract_coeff(1) != GaussianRational(0, -2):
        raise ArithmeticError(
            "leading coefficient of Lambda/a drifted: %s" % w.extract_coeff(1)
        )
    return series_reverse(w)


def contact_checks(order: int) -> dict:
    """Compare the logarithmic Lambda-derivatives of F0 with -4u and T.

    Both sides are q-series after substituting a = a(q): the first
    derivative is -4a^2 plus 4n times the Lambda^{4n} coefficients of
    F0, and one 32nd of the second derivative keeps n^2/2 times the same
    coefficients.  The window is sharp in the instanton depth: the first
    term missing from a depth-`order` expansion enters at
    q^{(order+2)/8}, so the comparison runs below that.
    """
    if order <= 0 or order % 4:
        raise ValueError("order must be a positive multiple of 4")
    parts = prepotential_parts(order)
    bound = order + 2
    sw = sw_series(bound + 1)
    ahat = sw.a.with_weight(0)
    inv = ahat.inverse()
    asq = (ahat * ahat).with_weight(2)

    lt = parts.F0_pert.coeff(LT_KEY).extract_coeff(0)
    pert = (lt * _A_RF ** (-2)).as_scalar()
    lhs_u = asq.truncate(bound).scale(-pert)
    lhs_t = QSeries.zero(bound, 2)
    for n in range(1, order // 4 + 1):
        c = (parts.F0.extract_coeff((4 * n,)) * _A_RF ** (4 * n - 2)).as_scalar()
        p = (asq * inv ** (4 * n)).with_weight(2).truncate(bound)
        lhs_u = lhs_u + p.scale(4 * n * c)
        lhs_t = lhs_t + p.scale(c * Fraction(n * n, 2))

    mu = _first_mismatch(lhs_u, sw.u.scale(-4).truncate(bound))
    mt = _first_mismatch(lhs_t, sw.T.truncate(bound))
    return {
        "ok": mu is None and mt is None,
        "order": order,
        "window_eighths": bound,
        "u_first_mismatch": mu,
        "t_first_mismatch": mt,
    }


def _first_mismatch(lhs: QSeries, rhs: QSeries):
    diff = lhs - rhs
    if not diff.coeffs:
        return None
    e = min(diff.coeffs)
    return (e, lhs.extract_coeff(e), rhs.extract_coeff(e))


def ab_checks(order: int) -> dict:
    """Compare exp(2A) against sqrt(-1) du/da / Lambda and exp(2B - 2A)
    against theta01^2, after substituting a = a(q).

    The squared forms keep everything on the eighth-exponent lattice.
    The perturbative parts contribute a power of 2a/Lambda and a root of
    unity, both read off the stored log-data; the instanton parts are
    exponentiated series in (Lambda/a)^4.  Each comparison is reported
    as the ratio of the two sides, a constant series when the identity
    holds, with the constant itself quoted verbatim.
    """
    if order <= 0 or order % 4:
        raise ValueError("order must be a positive multiple of 4")
    parts = prepotential_parts(order)
    bound = order + 4
    sw = sw_series(bound)
    ahat = sw.a.with_weight(0)
    inv = ahat.inverse()

    def inst_scalars(series):
        return {
            n: (series.extract_coeff((4 * n,)) * _A_RF ** (4 * n)).as_scalar()
            for n in range(1, order // 4 + 1)
        }

    def inst_exp(scalars):
        s = QSeries.zero(bound)
        for n, c in scalars.items():
            s = s + (inv ** (4 * n)).truncate(bound).scale(2 * c)
        return s.exp()

    a_sc = inst_scalars(parts.A)
    b_sc = inst_scalars(parts.B)
    lhs_a = _branch_factor(parts.A_pert, ahat, bound) * inst_exp(a_sc)
    rhs_a = sw.duda.with_weight(0).scale(GR_I)
    diff = {n: b_sc[n] - a_sc[n] for n in a_sc}
    lhs_b = _branch_factor(parts.B_pert - parts.A_pert, ahat, bound) * inst_exp(diff)
    rhs_b = (sw.theta01 * sw.theta01).truncate(bound)

    ca, ea = _ratio_constant(lhs_a, rhs_a)
    cb, eb = _ratio_constant(lhs_b, rhs_b)
    return {
        "ok": ea is None and eb is None,
        "order": order,
        "duda_constant": ca,
        "duda_first_nonconstant": ea,
        "theta_constant": cb,
        "theta_first_nonconstant": eb,
    }


def _branch_factor(le, ahat: QSeries, ceiling: int) -> QSeries:
    """exp(2 le) for a log-element with constant log and branch entries.

    The result is (2a/Lambda)^k times sqrt(-1)^j where k is twice the
    log coefficient (a nonnegative integer here) and j is four times the
    branch coefficient (an integer precisely when the branch term is an
    even multiple of half Pi, which is what the identities guarantee).
    """
    if not le.coeff(SERIES_KEY).is_zero() or not le.coeff(LL_KEY).is_zero():
        raise ValueError("unexpected series entries in branch data")
    lt = le.coeff(LT_KEY).extract_coeff(0).as_scalar()
    pi = le.coeff(PI_KEY).extract_coeff(0).as_scalar()
    k = 2 * lt
    j = 4 * pi
    if k.im or j.im or k.re.denominator != 1 or j.re.denominator != 1 or k.re < 0:
        raise ValueError(
            "branch data does not exponentiate to a monomial: log %s, branch %s"
            % (lt, pi)
        )
    base = ahat.scale(2) ** int(k.re)
    return base.scale(GR_I ** int(j.re)).truncate(ceiling)


def _ratio_constant(lhs: QSeries, rhs: QSeries):
    ratio = lhs / rhs
    const = ratio.extract_coeff(0)
    other = sorted(e for e in ratio.coeffs if e != 0)
    return const, (other[0] if other else None)


def wallcross_modular(
    xi_sq: int,
    xi_k: int,
    k_sq: int,
    sigma: int,
    chi_o: int,
    pairings: dict,
    z_order: int,
    x_order: int,
) -> MultiSeries:
    """Wallcrossing coefficients from the q^0 bracket of modular series.

    The coefficient of z^n x^m is

        sqrt(-1)^(xi_k - 1) * [ q^(-xi_sq/8)
            * sum_j (du/da <a,xi>/2)^(n-2j) (T <a^2>)^j / ((n-2j)! j!)
            * (-u)^m / m!
            * (sqrt(-1) du/da / Lambda)^(2 chi_o + 1)
            * theta01^(sigma + 8) ]_{q^0},

    a number that multiplies Lambda^(n + 2m + 1 - chi_o).  `pairings`
    carries the two intersection numbers under the keys "alpha_xi" and
    "alpha_sq".  The residue presentation of the same quantity differs
    from this bracket by one du/da theta01^8 measure factor and a
    quarter turn of the phase; the normalization used here is pinned by
    the anchor case xi_sq = -3, alpha = 0, which evaluates to 1.

    The q-window is sized from the most negative exponent the integrand
    can reach and widened automatically if the window arithmetic still
    comes up short.
    """
    if k_sq - sigma != 8 * chi_o:
        raise ValueError(
            "k_sq - sigma must equal 8 chi_o, got %d - %d with chi_o %d"
            % (k_sq, sigma, chi_o)
        )
    if z_order < 0 or x_order < 0:
        raise ValueError("orders must be nonnegative")
    axi = Fraction(pairings["alpha_xi"]) / 2
    asq = Fraction(pairings["alpha_sq"])
    deepest = -xi_sq - z_order - 2 * x_order - abs(2 * chi_o + 1)
    ceiling = max(4, 5 - min(deepest, 0))
    err = None
    for _ in range(4):
        try:
            return _bracket_series(
                xi_sq, xi_k, sigma, chi_o, axi, asq, z_order, x_order, ceiling
            )
        except (WindowError, TruncationMismatchError) as caught:
            err = caught
            ceiling = 2 * ceiling + 8
    raise WindowError(
        "q-window %d/8 still insufficient for the bracket" % ceiling
    ) from err


def _bracket_series(xi_sq, xi_k, sigma, chi_o, axi, asq, z_order, x_order, ceiling):
    sw = sw_series(ceiling)
    measure = sw.duda.with_weight(0).scale(GR_I) ** (2 * chi_o + 1)
    measure = measure * sw.theta01 ** (sigma + 8)
    pref = measure.mul_monomial(GR_ONE, -xi_sq)
    vpow = _powers(sw.duda, z_order)
    tpow = _powers(sw.T, z_order // 2)
    upow = _powers(sw.u, x_order)
    phase = GR_I ** (xi_k - 1)
    out = {}
    for n in range(z_order + 1):
        for m in range(x_order + 1):
            acc = None
            for j in range(n // 2 + 1):
                c = (
                    axi ** (n - 2 * j)
                    * asq ** j
                    * Fraction(
                        (-1) ** m,
                        math.factorial(n - 2 * j)
                        * math.factorial(j)
                        * math.factorial(m),
                    )
                )
                if not c:
                    continue
                term = (vpow[n - 2 * j] * tpow[j] * upow[m] * pref).scale(c)
                term = term.truncate(1)
                acc = term if acc is None else acc + term
            if acc is None:
                continue
            val = acc.extract_coeff(0) * phase
            if val.im:
                raise ArithmeticError(
                    "bracket coefficient at z^%d x^%d has imaginary part %s"
                    % (n, m, val.im)
                )
            if val:
                out[(n, m)] = RatFn.from_scalar(val)
    return MultiSeries(("z", "x"), (z_order, x_order), out, "ratfn")


def _powers(base: QSeries, top: int):
    out = [QSeries.monomial(GR_ONE, 0, base.ceiling)]
    for _ in range(top):
        out.append(out[-1] * base)
    return out
