"""Truncated Laurent series at t = infinity.

A TLaurent holds finitely many coefficients c_d for integer t-degrees d
with floor <= d <= top.  ``top`` is a hard bound: every coefficient above
it is genuinely zero.  ``floor`` is a truncation: coefficients below it
were discarded and are unknown.  ``floor = None`` means nothing was
discarded (the value is an exact Laurent polynomial).  Arithmetic tracks
the floors, so a coefficient is either exact or a WindowError, never
silently wrong.
"""

from __future__ import annotations

from .errors import WindowError
from .gaussian import GR_I
from .mpoly import RatFn, poly_t_decompose, ratfn_eps_limit


class TLaurent:
    __slots__ = ("coeffs", "top", "floor")

    def __init__(self, coeffs, top, floor):
        self.coeffs = {d: c for d, c in coeffs.items() if not c.is_zero()}
        self.top = top
        self.floor = floor
        if self.coeffs:
            hi, lo = max(self.coeffs), min(self.coeffs)
            if top is None or hi > top:
                raise ValueError("coefficient above declared top")
            if floor is not None and lo < floor:
                raise ValueError("coefficient below declared floor")

    @staticmethod
    def zero() -> "TLaurent":
        return TLaurent({}, None, None)

    @staticmethod
    def from_ratfn_poly(f: RatFn) -> "TLaurent":
        """Exact embedding of a rational function polynomial in t.

        The denominator must be free of t; each t-degree of the numerator
        becomes one exact coefficient.
        """
        if any(j != 0 for j in poly_t_decompose(f.den.re)):
            raise ValueError("denominator involves t: %s" % f.to_text())
        den = RatFn.from_poly(f.den)
        parts = {}
        for side, mk in ((f.num.re, False), (f.num.im, True)):
            for j, p in poly_t_decompose(side).items():
                q = RatFn.from_poly(p)
                if mk:
                    q = q * _RF_I
                parts[j] = parts.get(j, RatFn.zero()) + q / den
        if not parts:
            return TLaurent.zero()
        return TLaurent(parts, max(parts), None)

    @staticmethod
    def monomial(c: RatFn, d: int) -> "TLaurent":
        if c.is_zero():
            return TLaurent.zero()
        return TLaurent({d: c}, d, None)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_exact(self) -> bool:
        return self.floor is None

    # -- window bookkeeping ----------------------------------------------

    def _top_bound(self):
        if self.top is not None:
            return self.top
        if self.floor is not None:
            return self.floor - 1
        return None

    def __add__(self, other):
        if not isinstance(other, TLaurent):
            return NotImplemented
        floor = _none_max(self.floor, other.floor)
        top = _none_max(self._top_bound(), other._top_bound())
        out = dict(self.coeffs)
        for d, c in other.coeffs.items():
            out[d] = out.get(d, RatFn.zero()) + c
        out = {d: c for d, c in out.items() if floor is None or d >= floor}
        return TLaurent(out, top, floor)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TLaurent({d: -c for d, c in self.coeffs.items()}, self.top, self.floor)

    def scale(self, c: RatFn) -> "TLaurent":
        if c.is_zero():
            return TLaurent({}, self.top, self.floor)
        return TLaurent(
            {d: v * c for d, v in self.coeffs.items()}, self.top, self.floor
        )

    def __mul__(self, other):
        if not isinstance(other, TLaurent):
            return NotImplemented
        if (self.is_zero() and self.floor is None) or (
            other.is_zero() and other.floor is None
        ):
            return TLaurent.zero()
        t1, t2 = self._top_bound(), other._top_bound()
        cands = []
        if self.floor is not None and t2 is not None:
            cands.append(self.floor + t2)
        if other.floor is not None and t1 is not None:
            cands.append(other.floor + t1)
        floor = max(cands) if cands else None
        top = None if (t1 is None or t2 is None) else t1 + t2
        out = {}
        for d1, c1 in self.coeffs.items():
            for d2, c2 in other.coeffs.items():
                d = d1 + d2
                if floor is not None and d < floor:
                    continue
                out[d] = out.get(d, RatFn.zero()) + c1 * c2
        return TLaurent(out, top, floor)

    def shift(self, k: int) -> "TLaurent":
        """Multiply by t^k."""
        return TLaurent(
            {d + k: c for d, c in self.coeffs.items()},
            None if self.top is None else self.top + k,
            None if self.floor is None else self.floor + k,
        )

    def truncate(self, floor: int) -> "TLaurent":
        new_floor = floor if self.floor is None else max(self.floor, floor)
        return TLaurent(
            {d: c for d, c in self.coeffs.items() if d >= new_floor},
            self.top,
            new_floor,
        )

    # -- access -----------------------------------------------------------

    def extract_coeff(self, d: int) -> RatFn:
        if self.floor is not None and d < self.floor:
            raise WindowError(
                "t-degree %d below truncation floor %d" % (d, self.floor)
            )
        return self.coeffs.get(d, RatFn.zero())

    def items(self):
        """(degree, coefficient) pairs, ascending degree."""
        return sorted(self.coeffs.items())

    def eps_limit(self) -> "TLaurent":
        return TLaurent(
            {d: ratfn_eps_limit(c) for d, c in self.coeffs.items()},
            self.top,
            self.floor,
        )

    def __eq__(self, other):
        if not isinstance(other, TLaurent):
            return NotImplemented
        return (
            self.coeffs == other.coeffs
            and self.floor == other.floor
            and self._top_bound() == other._top_bound()
        )

    def __repr__(self):
        if not self.coeffs:
            body = "0"
        else:
            body = " + ".join(
                "(%s)*t^%d" % (c.to_text(), d) for d, c in self.items()
            )
        tail = "" if self.floor is None else " + O(t^%d)" % (self.floor - 1)
        return "TLaurent(%s%s)" % (body, tail)


def _none_max(a, b):
    if a is None:
        return b
    if b is None:
        return a
    return max(a, b)


_RF_I = RatFn.from_scalar(GR_I)


def expand_at_infinity(f: RatFn, depth: int) -> TLaurent:
    """Laurent expansion of a rational function at t = infinity.

    INPUT:
    - ``f``: rational function whose denominator, as a polynomial in t,
      has a nonzero leading coefficient (automatic in reduced form)
    - ``depth``: keep t-degrees >= -depth

    OUTPUT:
    - TLaurent with floor -depth, or an exact one when the denominator
      is free of t (polynomials pass through unchanged).
    """
    den_parts = poly_t_decompose(f.den.re)
    if not den_parts:
        raise ZeroDivisionError("zero denominator")
    degree = max(den_parts)
    lead = RatFn.from_poly(den_parts[degree])
    num = TLaurent.from_ratfn_poly(RatFn.from_poly(f.num))
    if degree == 0:
        return num.scale(lead.inverse())
    num_top = num.top if num.top is not None else 0
    recip_floor = -depth - max(num_top, 0)
    # 1/den = t^(-degree)/lead * sum_k (-u)^k with u of top degree -1
    u = TLaurent(
        {
            j - degree: RatFn.from_poly(p) / lead
            for j, p in den_parts.items()
            if j != degree
        },
        -1,
        None,
    )
    recip = TLaurent.monomial(RatFn.one(), 0)
    acc = TLaurent.monomial(RatFn.one(), 0)
    kmax = -recip_floor - degree
    for _ in range(kmax):
        acc = (-acc * u).truncate(recip_floor + degree)
        if acc.is_zero():
            break
        recip = recip + acc
    recip = recip.shift(-degree).scale(lead.inverse())
    recip = TLaurent(recip.coeffs, recip.top, recip_floor)
    return (num * recip).truncate(-depth)
