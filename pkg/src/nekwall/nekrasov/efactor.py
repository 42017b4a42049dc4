"""The tau-coupling factor attached to a pair of Young diagrams.

Each diagram pair contributes exp(sum_rho tau_rho B_rho) where B_rho is
the degree-(rho-1) graded part of

    sum_alpha e^{a_alpha} (1 - (1-e^{-e1})(1-e^{-e2})
                               sum_{s in Y_alpha} e^{-l'(s) e1 - a'(s) e2})
    / (e1 e2)

with a' and l' the co-arm and co-leg of the cell, a_1 = -a, a_2 = a, and
every one of a, e1, e2 counted with degree 1.  Taking the degree-(rho-1)
part of the quotient means taking the degree-(rho+1) homogeneous part of
the numerator and dividing by e1 e2.
"""

from functools import lru_cache

from ..algebra.mpoly import (
    A,
    E1,
    E2,
    MPoly,
    RING,
    RatFn,
    _dom_from_fraction,
    poly_degree_trunc,
    poly_homog_part,
)
from ..algebra.multiseries import MultiSeries
from ..partitions import DiagramPair, coarm, coleg

_EPS2 = MPoly(E1 * E2)


def _exp_trunc(form, order: int):
    """exp of a ring element with no constant term, through total degree order."""
    out = RING.one
    term = RING.one
    fact = 1
    for k in range(1, order + 1):
        term = poly_degree_trunc(term * form, order)
        if not term:
            break
        fact *= k
        out = out + term.quo_ground(_dom_from_fraction(fact))
    return out


@lru_cache(maxsize=None)
def _tau_brackets(pair: DiagramPair, depth: int):
    """The linear coefficients B_1..B_depth of the tau couplings, as RatFn."""
    top = depth + 1
    mix = (RING.one - _exp_trunc(-E1, top)) * (RING.one - _exp_trunc(-E2, top))
    mix = poly_degree_trunc(mix, top)
    total = RING.zero
    for alpha in (1, 2):
        sign = -1 if alpha == 1 else 1
        diagram = pair.component(alpha)
        boxes = RING.zero
        for i, j in diagram.cells():
            boxes = boxes + _exp_trunc(
                -coleg(diagram, i, j) * E1 - coarm(diagram, i, j) * E2, top
            )
        inner = RING.one - poly_degree_trunc(mix * boxes, top)
        total = total + poly_degree_trunc(_exp_trunc(sign * A, top) * inner, top)
    return tuple(
        RatFn(MPoly(poly_homog_part(total, rho + 1)), _EPS2)
        for rho in range(1, depth + 1)
    )


def _order_tuple(depth: int, orders) -> tuple:
    if isinstance(orders, int):
        return (orders,) * depth
    orders = tuple(orders)
    if len(orders) != depth:
        raise ValueError("need one tau order per coupling, got %d for depth %d"
                         % (len(orders), depth))
    return orders


@lru_cache(maxsize=None)
def _e_factor_cached(pair: DiagramPair, depth: int, orders: tuple) -> MultiSeries:
    names = tuple("tau%d" % r for r in range(1, depth + 1))
    brackets = _tau_brackets(pair, depth)
    arg = MultiSeries.zero(names, orders, "ratfn")
    for r, b in enumerate(brackets):
        key = tuple(1 if i == r else 0 for i in range(depth))
        if orders[r] >= 1 and not b.is_zero():
            arg = arg + MultiSeries.monomial(names, orders, key, b, "ratfn")
    return arg.exp()


def e_factor(pair: DiagramPair, tau_depth: int, tau_orders=1) -> MultiSeries:
    """exp of the tau couplings of one diagram pair, as a tau-MultiSeries.

    tau_orders is an int applied to every coupling or one bound per
    coupling.  Depth 0 gives the empty-variable series 1.
    """
    if tau_depth < 0:
        raise ValueError("tau depth must be >= 0")
    return _e_factor_cached(pair, tau_depth, _order_tuple(tau_depth, tau_orders))
