"""Gaussian rationals: exact numbers of the form re + im*sqrt(-1)."""

from __future__ import annotations

from fractions import Fraction


class GaussianRational:
    """An element of Q(i), stored as a pair of reduced Fractions.

    Equality, hashing and the canonical text form all go through the
    reduced components, so two equal values are indistinguishable.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- arithmetic ----------------------------------------------------

    @staticmethod
    def _coerce(x):
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction)):
            return GaussianRational(x)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GaussianRational(1) / self ** (-n)
        out = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    # -- predicates ----------------------------------------------------

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def is_real(self):
        return self.im == 0

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- canonical text form --------------------------------------------
    #
    # "p/q" for real values ("/q" dropped when q = 1), "r/s*i" for purely
    # imaginary ones, "p/q+r/s*i" or "p/q-r/s*i" in general.  This is the
    # form used verbatim in the JSON documents emitted by the cli module.

    def to_text(self) -> str:
        if self.im == 0:
            return _frac_text(self.re)
        imag = _frac_text(abs(self.im)) + "*i"
        if self.re == 0:
            return ("-" if self.im < 0 else "") + imag
        sign = "-" if self.im < 0 else "+"
        return _frac_text(self.re) + sign + imag

    @staticmethod
    def from_text(s: str) -> "GaussianRational":
        s = s.strip().replace(" ", "")
        if not s:
            raise ValueError("empty GaussianRational text")
        if not s.endswith("*i") and not s.endswith("i"):
            return GaussianRational(Fraction(s))
        # split off the imaginary tail at the last +/- that is not leading
        body = s[: -2] if s.endswith("*i") else s[:-1]
        cut = -1
        for k in range(len(body) - 1, 0, -1):
            if body[k] in "+-" and body[k - 1] not in "+-/*":
                cut = k
                break
        if cut == -1:
            re_part, im_part = "0", body
        else:
            re_part, im_part = body[:cut], body[cut:]
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        elif im_part[0] == "+":
            im_part = im_part[1:]
        return GaussianRational(Fraction(re_part), Fraction(im_part))

    def __repr__(self):
        return "GaussianRational(%s)" % self.to_text()

    def __str__(self):
        return self.to_text()


def _frac_text(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return "%d/%d" % (f.numerator, f.denominator)


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)
