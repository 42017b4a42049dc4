"""A small formal ring for perturbation-part identities.

Values are polynomials in three commuting symbols with TLaurent
coefficients:

- ``Pi``: stands for pi * sqrt(-1), introduced by the continuation rule
  log(-x) = log(x) + Pi (counter-clockwise, applied once at the marked
  continuation step, never as a rewrite of an existing expression);
- ``Lt``: stands for log(t/Lambda);
- ``LL``: stands for a bare log(Lambda).

Identities between perturbation sums hold up to the 2 pi sqrt(-1)
ambiguity of the logarithm, so the interesting assertion on a
difference is "all of Lt, LL and the series part vanish and the Pi
part is an even integer".  Keeping LL separate from Lt instead of
folding the two together makes the log(Lambda) bookkeeping visible:
its cancellation is exactly the weight count of the identity under
test, and a wrong count would otherwise vanish into the Lt column.
"""

from __future__ import annotations

from .mpoly import RatFn
from .tlaurent import TLaurent

PI_KEY = (1, 0, 0)
LT_KEY = (0, 1, 0)
LL_KEY = (0, 0, 1)
SERIES_KEY = (0, 0, 0)


class LogElem:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = {
            tuple(k): c for k, c in coeffs.items() if not c.is_zero()
        }

    @staticmethod
    def zero() -> "LogElem":
        return LogElem({})

    @staticmethod
    def series(t: TLaurent) -> "LogElem":
        return LogElem({SERIES_KEY: t})

    @staticmethod
    def symbol(key, c: RatFn) -> "LogElem":
        return LogElem({tuple(key): TLaurent.monomial(c, 0)})

    def __add__(self, other):
        if not isinstance(other, LogElem):
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return LogElem(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return LogElem({k: -c for k, c in self.coeffs.items()})

    def scale(self, c: RatFn) -> "LogElem":
        return LogElem({k: v.scale(c) for k, v in self.coeffs.items()})

    def scale_series(self, t: TLaurent) -> "LogElem":
        """Multiply every symbol coefficient by a Laurent series in t."""
        return LogElem({k: v * t for k, v in self.coeffs.items()})

    def coeff(self, key) -> TLaurent:
        return self.coeffs.get(tuple(key), TLaurent.zero())

    def with_floor(self, floor: int) -> "LogElem":
        """Truncate every coefficient to the given t-degree floor."""
        return LogElem({k: c.truncate(floor) for k, c in self.coeffs.items()})

    def items(self):
        return sorted(self.coeffs.items())

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other):
        if not isinstance(other, LogElem):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "LogElem(0)"
        names = []
        for (i, j, k), c in self.items():
            sym = "*".join(
                ["Pi"] * i + ["Lt"] * j + ["LL"] * k
            ) or "1"
            names.append("%s*[%r]" % (sym, c))
        return "LogElem(%s)" % " + ".join(names)
