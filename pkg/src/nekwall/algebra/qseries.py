"""Laurent series in q^(1/8) over the Gaussian rationals.

Exponents are stored as integers counting eighths, so the key n stands
for q^(n/8).  One global lattice covers every series that appears: theta
constants live on halves, their quotients and the wall prefactors on
eighths.

A series knows three pieces of window data:

- ``low``: a hard lower bound, every exponent below it is genuinely zero;
- ``ceiling``: exclusive truncation bound, coefficients at exponents >=
  ceiling were dropped and are unknown;
- ``lam_weight``: the scaling weight of the modular quantity the series
  represents.  Weights add under multiplication, and addition refuses to
  mix different weights.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import TruncationMismatchError, WindowError
from .gaussian import GR_ONE, GR_ZERO, GaussianRational


class QSeries:
    __slots__ = ("coeffs", "low", "ceiling", "lam_weight")

    def __init__(self, coeffs, low, ceiling, lam_weight=0):
        self.coeffs = {n: c for n, c in coeffs.items() if c}
        self.low = low
        self.ceiling = ceiling
        self.lam_weight = lam_weight
        for n in self.coeffs:
            if n < low or n >= ceiling:
                raise ValueError(
                    "exponent %s/8 outside window [%s/8, %s/8)"
                    % (n, low, ceiling)
                )

    @staticmethod
    def zero(ceiling, lam_weight=0) -> "QSeries":
        return QSeries({}, ceiling, ceiling, lam_weight)

    @staticmethod
    def monomial(c, n, ceiling, lam_weight=0) -> "QSeries":
        """c * q^(n/8), truncated at ceiling."""
        c = GaussianRational._coerce(c)
        return QSeries({n: c} if n < ceiling else {}, n, ceiling, lam_weight)

    def is_zero(self) -> bool:
        return not self.coeffs

    def order(self) -> int:
        """Exponent of the first nonzero coefficient, in eighths."""
        if not self.coeffs:
            raise ValueError("zero series has no order")
        return min(self.coeffs)

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        if self.ceiling != other.ceiling:
            raise TruncationMismatchError(
                "ceilings differ: %s vs %s" % (self.ceiling, other.ceiling)
            )
        if self.lam_weight != other.lam_weight:
            raise ValueError(
                "weights differ: %s vs %s" % (self.lam_weight, other.lam_weight)
            )
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            out[n] = out.get(n, GR_ZERO) + c
        return QSeries(out, min(self.low, other.low), self.ceiling, self.lam_weight)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QSeries(
            {n: -c for n, c in self.coeffs.items()},
            self.low,
            self.ceiling,
            self.lam_weight,
        )

    def scale(self, c) -> "QSeries":
        c = GaussianRational._coerce(c)
        return QSeries(
            {n: v * c for n, v in self.coeffs.items()},
            self.low,
            self.ceiling,
            self.lam_weight,
        )

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        ceiling = min(
            self.ceiling + other.low, other.ceiling + self.low
        )
        low = self.low + other.low
        weight = self.lam_weight + other.lam_weight
        out = {}
        for n1, c1 in self.coeffs.items():
            for n2, c2 in other.coeffs.items():
                n = n1 + n2
                if n >= ceiling:
                    continue
                out[n] = out.get(n, GR_ZERO) + c1 * c2
        return QSeries(out, low, ceiling, weight)

    def mul_monomial(self, c, n, dweight=0) -> "QSeries":
        """Multiply by c * q^(n/8), shifting the weight by dweight."""
        c = GaussianRational._coerce(c)
        return QSeries(
            {m + n: v * c for m, v in self.coeffs.items()},
            self.low + n,
            self.ceiling + n,
            self.lam_weight + dweight,
        )

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return QSeries.monomial(GR_ONE, 0, self.ceiling)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def inverse(self) -> "QSeries":
        """Reciprocal of a series with invertible leading coefficient."""
        if not self.coeffs:
            raise ZeroDivisionError("inverse of zero series")
        lo = self.order()
        if lo != self.low:
            # tighten so the window arithmetic below stays sharp
            return QSeries(
                self.coeffs, lo, self.ceiling, self.lam_weight
            ).inverse()
        c0 = self.coeffs[lo]
        span = self.ceiling - lo
        # r = s / (c0 q^lo) - 1 has order >= 1 and window [1, span)
        r = {n - lo: c / c0 for n, c in self.coeffs.items() if n != lo}
        acc = {0: GR_ONE}
        total = {0: GR_ONE}
        for _ in range(span - 1):
            nxt = {}
            for n1, c1 in acc.items():
                for n2, c2 in r.items():
                    n = n1 + n2
                    if n >= span:
                        continue
                    nxt[n] = nxt.get(n, GR_ZERO) - c1 * c2
            acc = {n: c for n, c in nxt.items() if c}
            if not acc:
                break
            for n, c in acc.items():
                total[n] = total.get(n, GR_ZERO) + c
        return QSeries(
            {n - lo: c / c0 for n, c in total.items()},
            -lo,
            self.ceiling - 2 * lo,
            -self.lam_weight,
        )

    def __truediv__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self * other.inverse()

    # -- calculus ----------------------------------------------------------

    def q_derivative(self) -> "QSeries":
        """d/dq, exponent n/8 maps to (n/8) q^(n/8 - 1)."""
        out = {}
        for n, c in self.coeffs.items():
            if n == 0:
                continue
            out[n - 8] = c * Fraction(n, 8)
        return QSeries(out, self.low - 8, self.ceiling - 8, self.lam_weight)

    def _q_integral(self) -> "QSeries":
        out = {}
        for n, c in self.coeffs.items():
            if n == -8:
                raise ValueError("q^-1 term has no series antiderivative")
            out[n + 8] = c / Fraction(n + 8, 8)
        return QSeries(out, self.low + 8, self.ceiling + 8, self.lam_weight)

    def log(self) -> "QSeries":
        """Series logarithm; the constant term must be 1."""
        if self.lam_weight != 0:
            raise ValueError("log of a series with nonzero weight")
        if self.extract_coeff(0) != GR_ONE or (self.coeffs and self.order() < 0):
            raise ValueError("constant term is not 1")
        ds = self.q_derivative()
        return (ds * self.inverse())._q_integral()

    def exp(self) -> "QSeries":
        """Series exponential; requires strictly positive order."""
        if self.lam_weight != 0:
            raise ValueError("exp of a series with nonzero weight")
        if self.coeffs and self.order() <= 0:
            raise ValueError("constant term is not 0")
        if self.low < 0:
            raise ValueError("exp needs a nonnegative window bound")
        out = {0: GR_ONE}
        for n in range(1, self.ceiling):
            acc = GR_ZERO
            for m, c in self.coeffs.items():
                if m <= n and (n - m) in out:
                    acc = acc + c * m * out[n - m]
            if acc:
                out[n] = acc / n
        return QSeries(out, 0, self.ceiling, 0)

    # -- access -------------------------------------------------------------

    def extract_coeff(self, n: int) -> GaussianRational:
        """Coefficient of q^(n/8); n below the low bound is a true zero."""
        if n >= self.ceiling:
            raise WindowError(
                "exponent %d/8 at or above truncation ceiling %d/8"
                % (n, self.ceiling)
            )
        return self.coeffs.get(n, GR_ZERO)

    def truncate(self, ceiling: int) -> "QSeries":
        if ceiling > self.ceiling:
            raise TruncationMismatchError(
                "cannot widen window from %s/8 to %s/8" % (self.ceiling, ceiling)
            )
        return QSeries(
            {n: c for n, c in self.coeffs.items() if n < ceiling},
            min(self.low, ceiling),
            ceiling,
            self.lam_weight,
        )

    def with_weight(self, lam_weight: int) -> "QSeries":
        return QSeries(self.coeffs, self.low, self.ceiling, lam_weight)

    def items(self):
        return sorted(self.coeffs.items())

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.coeffs == other.coeffs
            and self.ceiling == other.ceiling
            and self.lam_weight == other.lam_weight
        )

    def __repr__(self):
        if not self.coeffs:
            body = "0"
        else:
            body = " + ".join(
                "(%s)*q8^%d" % (c.to_text(), n) for n, c in self.items()
            )
        return "QSeries(%s + O(q8^%d); w=%d)" % (body, self.ceiling, self.lam_weight)


def series_reverse(s: QSeries) -> "QSeries":
    """Compositional inverse on the eighth-exponent lattice.

    Treats the lattice generator w = q^(1/8) as the series variable, so
    the input must look like c1*w + c2*w^2 + ... with c1 invertible.
    Returns the series w(s) with s(w(s)) = s up to the input ceiling.
    """
    if s.is_zero() or s.order() != 1:
        raise ValueError("reversion needs a series starting at exact order 1")
    c1 = s.coeffs[1]
    if not c1:
        raise ValueError("leading coefficient is zero")
    ceiling = s.ceiling
    tail = {n: c for n, c in s.coeffs.items() if n >= 2}
    # fixed point: w = (s - tail(w)) / c1, gaining one order per pass
    w = QSeries({1: GR_ONE / c1}, 1, ceiling)
    ident = QSeries({1: GR_ONE}, 1, ceiling)
    for _ in range(ceiling - 1):
        acc = QSeries.zero(ceiling)
        wp = {1: w}

        def wpow(k):
            if k not in wp:
                wp[k] = (wpow(k - 1) * w).truncate(ceiling)
            return wp[k]

        for n, c in tail.items():
            acc = acc + wpow(n).scale(c)
        nxt = (ident - acc).scale(GR_ONE / c1)
        nxt = QSeries(nxt.coeffs, 1, ceiling)
        if nxt == w:
            break
        w = nxt
    return w
