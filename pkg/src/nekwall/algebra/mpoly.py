"""Sparse polynomials and rational functions in e1, e2, a, t over Q(i).

Everything equivariant in this package has coefficients here.  A single
global ring holds all four variables; values simply do not use the ones
they do not need.  The monomial order is graded lex with t > a > e2 > e1,
which fixes a canonical form for every polynomial and hence a canonical
serialization for every rational function.

The complex unit is not a ring generator.  A polynomial is a pair of
real sympy ring elements (re, im); a rational function keeps its
denominator real by multiplying through with the conjugate.
"""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ
from sympy.polys.orderings import grlex
from sympy.polys.rings import ring

from .errors import EpsPoleError
from .gaussian import GaussianRational

RING, T, A, E2, E1 = ring("t,a,e2,e1", QQ, grlex)
_DOM = RING.domain
_ZERO_P = RING.zero
_ONE_P = RING.one

# index of each generator inside the exponent tuples of RING
_IT, _IA, _IE2, _IE1 = 0, 1, 2, 3

_VAR_INDEX = {"t": _IT, "a": _IA, "e2": _IE2, "e1": _IE1}
_VAR_GEN = {"t": T, "a": A, "e2": E2, "e1": E1}


def _dom_from_fraction(f):
    return _DOM.convert(f)


def _fraction_from_dom(c) -> Fraction:
    return Fraction(int(_DOM.numer(c)), int(_DOM.denom(c)))


def poly_from_rational(f) -> "RING.dtype":
    """Constant polynomial from an int or Fraction."""
    f = Fraction(f)
    if f == 0:
        return _ZERO_P
    return RING.from_dict({(0, 0, 0, 0): _dom_from_fraction(f)})


def poly_eps_zero(p):
    """The polynomial with e1 = e2 = 0 substituted, in the same ring."""
    return RING.from_dict(
        {m: c for m, c in p.terms() if m[_IE1] == 0 and m[_IE2] == 0}
    )


def poly_homog_part(p, d: int):
    """The total-degree-d homogeneous part of a real ring element."""
    return RING.from_dict({m: c for m, c in p.terms() if sum(m) == d})


def poly_degree_trunc(p, d: int):
    """Drop all terms of total degree above d."""
    return RING.from_dict({m: c for m, c in p.terms() if sum(m) <= d})


def poly_subst_many(p, mapping):
    """Simultaneous substitution of ring elements for several variables.

    INPUT:
    - ``p``: ring element
    - ``mapping``: dict from variable names ("t", "a", "e2", "e1") to
      ring elements; unnamed variables stay themselves

    OUTPUT:
    - Ring element with every listed variable replaced at once, so the
      result does not depend on any substitution order.
    """
    idxs = [(name, _VAR_INDEX[name]) for name in mapping]
    caches = {name: {0: _ONE_P, 1: mapping[name]} for name in mapping}

    def power(name, k):
        cache = caches[name]
        if k not in cache:
            cache[k] = power(name, k - 1) * mapping[name]
        return cache[k]

    out = _ZERO_P
    for m, c in p.terms():
        rest = list(m)
        factor = None
        for name, idx in idxs:
            k = rest[idx]
            if k:
                rest[idx] = 0
                piece = power(name, k)
                factor = piece if factor is None else factor * piece
        term = RING.from_dict({tuple(rest): c})
        out += term if factor is None else term * factor
    return out


def poly_t_decompose(p):
    """Split a real ring element by t-degree.

    OUTPUT:
    - dict {j: ring element free of t} with p = sum of t^j * value.
    """
    out = {}
    for m, c in p.terms():
        j = m[_IT]
        rest = (0,) + m[1:]
        out[j] = out.get(j, _ZERO_P) + RING.from_dict({rest: c})
    return out


def poly_subst(p, var: str, value):
    """Substitute a ring element for one variable.

    INPUT:
    - ``p``: ring element
    - ``var``: one of "t", "a", "e2", "e1"
    - ``value``: ring element to substitute

    OUTPUT:
    - Ring element p(var = value), computed exactly.
    """
    idx = _VAR_INDEX[var]
    powers = {0: _ONE_P}

    def power(k):
        if k not in powers:
            powers[k] = power(k - 1) * value
        return powers[k]

    out = _ZERO_P
    for m, c in p.terms():
        rest = list(m)
        k = rest[idx]
        rest[idx] = 0
        out += RING.from_dict({tuple(rest): c}) * power(k)
    return out


def _poly_text(p, neg=False):
    """Canonical text of a real ring element, terms in ring order."""
    if not p:
        return "0"
    pieces = []
    for m, c in p.terms():
        f = _fraction_from_dom(c)
        if neg:
            f = -f
        mono = _mono_text(m)
        if mono == "1":
            body = _frac_text(abs(f))
        elif abs(f) == 1:
            body = mono
        else:
            body = _frac_text(abs(f)) + "*" + mono
        if not pieces:
            pieces.append(("-" if f < 0 else "") + body)
        else:
            pieces.append((" - " if f < 0 else " + ") + body)
    return "".join(pieces)


def _mono_text(m):
    factors = []
    for name in ("e1", "e2", "a", "t"):
        k = m[_VAR_INDEX[name]]
        if k == 1:
            factors.append(name)
        elif k > 1:
            factors.append("%s^%d" % (name, k))
    return "*".join(factors) if factors else "1"


def _frac_text(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


class MPoly:
    """A polynomial in e1, e2, a, t with GaussianRational coefficients."""

    __slots__ = ("re", "im")

    def __init__(self, re=None, im=None):
        self.re = _ZERO_P if re is None else re
        self.im = _ZERO_P if im is None else im

    @staticmethod
    def from_scalar(c) -> "MPoly":
        c = GaussianRational._coerce(c)
        return MPoly(poly_from_rational(c.re), poly_from_rational(c.im))

    @staticmethod
    def var(name: str) -> "MPoly":
        return MPoly(_VAR_GEN[name])

    def __add__(self, other):
        return MPoly(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return MPoly(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return MPoly(-self.re, -self.im)

    def __mul__(self, other):
        if not self.im and not other.im:
            return MPoly(self.re * other.re)
        return MPoly(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def conjugate(self):
        return MPoly(self.re, -self.im)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def to_text(self) -> str:
        if not self.im:
            return _poly_text(self.re)
        if not self.re:
            base = _poly_text(self.im)
            return "i*(%s)" % base
        return "(%s) + i*(%s)" % (_poly_text(self.re), _poly_text(self.im))

    def __repr__(self):
        return "MPoly(%s)" % self.to_text()


def _gcd3(p, q, r):
    g = p.gcd(q) if p else q
    g = g.gcd(r) if g else r
    return g


class RatFn:
    """A reduced rational function num/den with a real, monic denominator.

    The denominator's leading coefficient in the ring order is 1 and the
    fraction is gcd-reduced, so equal values have equal components; this
    makes equality, hashing and text output trivial.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MPoly, den: MPoly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not den.is_real():
            c = den.conjugate()
            num = num * c
            den = den * c
        nre, nim, d = num.re, num.im, den.re
        g = _gcd3(nre, nim, d)
        if g and g != _ONE_P:
            nre = nre.quo(g)
            nim = nim.quo(g)
            d = d.quo(g)
        lc = d.LC
        if lc != _DOM.one:
            nre = nre.quo_ground(lc)
            nim = nim.quo_ground(lc)
            d = d.quo_ground(lc)
        self.num = MPoly(nre, nim)
        self.den = MPoly(d)

    # -- constructors ---------------------------------------------------

    @staticmethod
    def from_scalar(c) -> "RatFn":
        return RatFn(MPoly.from_scalar(c), MPoly(_ONE_P))

    @staticmethod
    def from_poly(p) -> "RatFn":
        """Wrap a real ring element or MPoly as a rational function."""
        if not isinstance(p, MPoly):
            p = MPoly(p)
        return RatFn(p, MPoly(_ONE_P))

    @staticmethod
    def var(name: str) -> "RatFn":
        return RatFn.from_poly(MPoly.var(name))

    @staticmethod
    def zero() -> "RatFn":
        return _RF_ZERO

    @staticmethod
    def one() -> "RatFn":
        return _RF_ONE

    # -- arithmetic -----------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, RatFn):
            return NotImplemented
        if self.den == other.den:
            return RatFn(self.num + other.num, self.den)
        d1, d2 = self.den.re, other.den.re
        g = d1.gcd(d2)
        if g == _ONE_P:
            return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)
        r2 = d2.quo(g)
        num = self.num * MPoly(r2) + other.num * MPoly(d1.quo(g))
        return RatFn(num, MPoly(d1 * r2))

    def __sub__(self, other):
        if not isinstance(other, RatFn):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        out = object.__new__(RatFn)
        out.num = -self.num
        out.den = self.den
        return out

    def __mul__(self, other):
        if not isinstance(other, RatFn):
            return NotImplemented
        return RatFn(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not isinstance(other, RatFn):
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("division by zero RatFn")
        return RatFn(self.num * other.den, self.den * other.num)

    def __pow__(self, n: int):
        if n < 0:
            return RatFn.one() / self ** (-n)
        out = RatFn.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "RatFn":
        return RatFn.one() / self

    def diff(self, var: str) -> "RatFn":
        """Partial derivative with respect to "t", "a", "e2" or "e1"."""
        g = _VAR_GEN[var]
        n, d = self.num, self.den.re
        dn = MPoly(n.re.diff(g), n.im.diff(g))
        dd = d.diff(g)
        return RatFn(dn * MPoly(d) - n * MPoly(dd), MPoly(d * d))

    def subst_many(self, mapping) -> "RatFn":
        """Substitute ring elements for variables in numerator and denominator.

        ``mapping`` maps variable names to real ring elements; the
        substitution is simultaneous. Raises ZeroDivisionError when the
        denominator collapses to zero.
        """
        nre = poly_subst_many(self.num.re, mapping)
        nim = poly_subst_many(self.num.im, mapping)
        d = poly_subst_many(self.den.re, mapping)
        return RatFn(MPoly(nre, nim), MPoly(d))

    # -- predicates and views --------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_poly(self) -> bool:
        return self.den.re == _ONE_P

    def as_poly(self) -> MPoly:
        if not self.is_poly():
            raise ValueError("denominator is not 1: %s" % self.to_text())
        return self.num

    def as_scalar(self) -> GaussianRational:
        """The value as a number, requiring it to be constant."""
        p = self.as_poly()
        parts = []
        for side in (p.re, p.im):
            val = Fraction(0)
            for m, c in side.terms():
                if any(m):
                    raise ValueError("not a constant: %s" % self.to_text())
                val = _fraction_from_dom(c)
            parts.append(val)
        return GaussianRational(parts[0], parts[1])

    def __eq__(self, other):
        if isinstance(other, int):
            other = RatFn.from_scalar(other)
        if not isinstance(other, RatFn):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def to_text(self) -> str:
        n = self.num.to_text()
        if self.is_poly():
            return n
        d = self.den.to_text()
        if self.num.is_real() and len(self.num.re.terms()) <= 1:
            return "%s / (%s)" % (n, d)
        return "(%s) / (%s)" % (n, d)

    def __repr__(self):
        return "RatFn(%s)" % self.to_text()


_RF_ZERO = RatFn.from_scalar(0)
_RF_ONE = RatFn.from_scalar(1)


def ratfn_arith(lhs: RatFn, rhs: RatFn, op: str) -> RatFn:
    """Combine two rational functions; op is add, sub, mul or div."""
    if op == "add":
        return lhs + rhs
    if op == "sub":
        return lhs - rhs
    if op == "mul":
        return lhs * rhs
    if op == "div":
        return lhs / rhs
    raise ValueError("unknown op %r" % op)


def ratfn_eps_limit(f: RatFn) -> RatFn:
    """The value of f at e1 = e2 = 0, kept exact.

    Raises EpsPoleError when the reduced denominator vanishes there,
    which is a genuine pole of the reduced form.
    """
    d0 = poly_eps_zero(f.den.re)
    if not d0:
        raise EpsPoleError("pole at e1 = e2 = 0 in %s" % f.to_text())
    n0 = MPoly(poly_eps_zero(f.num.re), poly_eps_zero(f.num.im))
    return RatFn(n0, MPoly(d0))
