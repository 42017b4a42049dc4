"""Extraction of the prepotential coefficients F0, H, A and B.

Writing g = e1 e2 F, the four coefficients of the low-degree expansion
g = F0 + (e1+e2) H + e1 e2 A + (e1^2+e2^2) B/3 + O(degree 3) are read off
as

    F0 = g at e = 0,     H = d g/d e1 at e = 0,
    A  = d^2 g/(d e1 d e2) at e = 0,   B = (3/2) d^2 g/d e1^2 at e = 0.

The instanton part comes from finst; the perturbative summands come from
fpert_expand of -gamma(2a) - gamma(-2a) and stay symbolic (their Lt
symbol reads log(2a/Lambda)).
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ..algebra.logelem import LogElem
from ..algebra.mpoly import E1, E2, MPoly, RatFn, ratfn_eps_limit
from ..algebra.multiseries import MultiSeries
from ..algebra.tlaurent import TLaurent
from .pert import fpert_expand
from .zinst import finst

_EPS2_RF = RatFn.from_poly(MPoly(E1 * E2))


@dataclass(frozen=True)
class PrepotentialParts:
    """Instanton series (MultiSeries in Lambda) and perturbative summands
    (LogElem, all in t-degree 0) of the four prepotential coefficients."""

    F0: MultiSeries
    H: MultiSeries
    A: MultiSeries
    B: MultiSeries
    F0_pert: LogElem
    H_pert: LogElem
    A_pert: LogElem
    B_pert: LogElem


def _extract_four(g: RatFn):
    """(value, d/de1, d^2/de1de2, (3/2) d^2/de1^2), all at e = 0."""
    d1 = g.diff("e1")
    return (
        ratfn_eps_limit(g),
        ratfn_eps_limit(d1),
        ratfn_eps_limit(d1.diff("e2")),
        ratfn_eps_limit(d1.diff("e1")) * RatFn.from_scalar(Fraction(3, 2)),
    )


def _extract_four_logelem(part: LogElem):
    """Apply the four extractions to e1 e2 * (a symbolic summand)."""
    outs = [{}, {}, {}, {}]
    for key, series in part.items():
        for deg, c in series.items():
            if deg != 0:
                raise ValueError("perturbative summand must sit in t-degree 0")
            for slot, val in zip(outs, _extract_four(c * _EPS2_RF)):
                if not val.is_zero():
                    prev = slot.get(key, TLaurent.zero())
                    slot[key] = prev + TLaurent.monomial(val, 0)
    return tuple(LogElem(slot) for slot in outs)


@lru_cache(maxsize=None)
def prepotential_parts(order: int) -> PrepotentialParts:
    """The four prepotential coefficients through Lambda^order.

    Raises EpsPoleError if some Lambda coefficient of e1 e2 finst has a
    pole at e = 0; that would contradict the regularity this extraction
    relies on and so would falsify the implementation.
    """
    inst = finst(order).scale(_EPS2_RF)
    slots = [{}, {}, {}, {}]
    for m, g in inst.items():
        for slot, val in zip(slots, _extract_four(g)):
            if not val.is_zero():
                slot[m] = val
    vars_, orders = inst.vars, inst.orders
    f0, h, a, b = (MultiSeries(vars_, orders, s, "ratfn") for s in slots)

    pert = -(fpert_expand("a", 1, eps_order=2) + fpert_expand("a", -1, eps_order=2))
    f0p, hp, ap, bp = _extract_four_logelem(pert)
    return PrepotentialParts(f0, h, a, b, f0p, hp, ap, bp)
