"""Truncated power series in several formal variables.

A MultiSeries is a finite dict from exponent tuples to coefficients,
together with the variable names and one inclusive truncation order per
variable.  Coefficients are either all RatFn or all TLaurent (``kind``).

Window discipline is strict: combining two series requires identical
variables and identical orders.  Anything else raises, so a truncation
bug shows up at the call site instead of as a silently wrong
high-order coefficient.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import TruncationMismatchError, WindowError
from .mpoly import RatFn, ratfn_eps_limit
from .tlaurent import TLaurent


class MultiSeries:
    __slots__ = ("vars", "orders", "coeffs", "kind")

    def __init__(self, vars, orders, coeffs, kind):
        if kind not in ("ratfn", "tlaurent"):
            raise ValueError("kind must be ratfn or tlaurent")
        self.vars = tuple(vars)
        self.orders = tuple(orders)
        if len(self.vars) != len(self.orders):
            raise ValueError("one order per variable required")
        self.kind = kind
        clean = {}
        for m, c in coeffs.items():
            m = tuple(m)
            if len(m) != len(self.vars):
                raise ValueError("exponent arity mismatch")
            if any(e < 0 for e in m):
                raise ValueError("negative exponent %r" % (m,))
            if any(e > o for e, o in zip(m, self.orders)):
                raise ValueError("exponent %r beyond orders %r" % (m, self.orders))
            if not c.is_zero():
                clean[m] = c
        self.coeffs = clean

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(vars, orders, kind="ratfn") -> "MultiSeries":
        return MultiSeries(vars, orders, {}, kind)

    @staticmethod
    def one(vars, orders, kind="ratfn") -> "MultiSeries":
        z = tuple(0 for _ in vars)
        return MultiSeries(vars, orders, {z: _kind_one(kind)}, kind)

    @staticmethod
    def monomial(vars, orders, exponent, coeff, kind="ratfn") -> "MultiSeries":
        return MultiSeries(vars, orders, {tuple(exponent): coeff}, kind)

    def _zero_coeff(self):
        return RatFn.zero() if self.kind == "ratfn" else TLaurent.zero()

    def _check_window(self, other):
        if self.vars != other.vars or self.orders != other.orders:
            raise TruncationMismatchError(
                "windows differ: %r%r vs %r%r"
                % (self.vars, self.orders, other.vars, other.orders)
            )
        if self.kind != other.kind:
            raise ValueError("coefficient kinds differ")

    # -- ring operations -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        self._check_window(other)
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = out[m] + c if m in out else c
        return MultiSeries(self.vars, self.orders, out, self.kind)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return MultiSeries(
            self.vars, self.orders, {m: -c for m, c in self.coeffs.items()}, self.kind
        )

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        self._check_window(other)
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                if any(e > o for e, o in zip(m, self.orders)):
                    continue
                p = c1 * c2
                out[m] = out[m] + p if m in out else p
        return MultiSeries(self.vars, self.orders, out, self.kind)

    def scale(self, c: RatFn) -> "MultiSeries":
        if self.kind == "ratfn":
            return MultiSeries(
                self.vars,
                self.orders,
                {m: v * c for m, v in self.coeffs.items()},
                self.kind,
            )
        return MultiSeries(
            self.vars,
            self.orders,
            {m: v.scale(c) for m, v in self.coeffs.items()},
            self.kind,
        )

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined here")
        out = MultiSeries.one(self.vars, self.orders, self.kind)
        base = self
        for _ in range(k):
            out = out * base
        return out

    def shift(self, var: str, k: int) -> "MultiSeries":
        """Multiply by var^k; exponents beyond the order are dropped.

        The drop is the correct truncation of the product, but it does
        lose the top k orders, so callers should build at a window wide
        enough for what they extract later.
        """
        i = self.vars.index(var)
        out = {}
        for m, c in self.coeffs.items():
            e = m[i] + k
            if e > self.orders[i]:
                continue
            out[m[:i] + (e,) + m[i + 1 :]] = c
        return MultiSeries(self.vars, self.orders, out, self.kind)

    # -- log and exp ----------------------------------------------------------

    def log(self) -> "MultiSeries":
        """Series logarithm; the constant coefficient must equal 1."""
        z = tuple(0 for _ in self.vars)
        c0 = self.coeffs.get(z, self._zero_coeff())
        if c0 != _kind_one(self.kind):
            raise ValueError("constant term is not 1")
        r = self - MultiSeries.one(self.vars, self.orders, self.kind)
        out = MultiSeries.zero(self.vars, self.orders, self.kind)
        power = MultiSeries.one(self.vars, self.orders, self.kind)
        for k in range(1, sum(self.orders) + 1):
            power = power * r
            if not power.coeffs:
                break
            out = out + power.scale(RatFn.from_scalar(Fraction((-1) ** (k + 1), k)))
        return out

    def exp(self) -> "MultiSeries":
        """Series exponential; the constant coefficient must vanish."""
        z = tuple(0 for _ in self.vars)
        if z in self.coeffs:
            raise ValueError("constant term is not 0")
        out = MultiSeries.one(self.vars, self.orders, self.kind)
        power = MultiSeries.one(self.vars, self.orders, self.kind)
        for k in range(1, sum(self.orders) + 1):
            power = power * self
            if not power.coeffs:
                break
            out = out + power.scale(RatFn.from_scalar(Fraction(1, math.factorial(k))))
        return out

    # -- access ----------------------------------------------------------------

    def extract_coeff(self, exponent):
        m = tuple(exponent)
        if len(m) != len(self.vars):
            raise ValueError("exponent arity mismatch")
        if any(e > o for e, o in zip(m, self.orders)) or any(e < 0 for e in m):
            raise WindowError(
                "exponent %r outside window with orders %r" % (m, self.orders)
            )
        return self.coeffs.get(m, self._zero_coeff())

    def eps_limit(self) -> "MultiSeries":
        if self.kind == "ratfn":
            mapped = {m: ratfn_eps_limit(c) for m, c in self.coeffs.items()}
        else:
            mapped = {m: c.eps_limit() for m, c in self.coeffs.items()}
        return MultiSeries(self.vars, self.orders, mapped, self.kind)

    def map_coeffs(self, fn) -> "MultiSeries":
        return MultiSeries(
            self.vars, self.orders, {m: fn(c) for m, c in self.coeffs.items()}, self.kind
        )

    def items(self):
        return sorted(self.coeffs.items())

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (
            self.vars == other.vars
            and self.orders == other.orders
            and self.kind == other.kind
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        names = ",".join(self.vars)
        return "MultiSeries[%s; orders=%r; %d terms]" % (
            names,
            list(self.orders),
            len(self.coeffs),
        )


def _kind_one(kind):
    if kind == "ratfn":
        return RatFn.one()
    return TLaurent.monomial(RatFn.one(), 0)
