"""Equivariant Euler factors attached to pairs of Young diagrams.

The factor for indices (alpha, beta) is a product of linear forms in
e1, e2 and a built from arm and leg lengths, where the arm is measured in
the diagram the cell belongs to and the leg in the other one.  Cells of
one diagram lying outside the other give negative lengths; those terms
are meaningful and must not be clamped.  The framing parameters are
a_1 = -a and a_2 = a, so the cross factors carry a_beta - a_alpha = +-2a
and the diagonal factors are a-free.
"""

from functools import lru_cache

from ..algebra.mpoly import A, E1, E2, MPoly, RING
from ..partitions import DiagramPair, arm, leg

_A_SIGN = {1: -1, 2: 1}


@lru_cache(maxsize=None)
def _euler_poly(pair: DiagramPair, alpha: int, beta: int):
    """Raw ring element for euler_factor, memoized per (pair, alpha, beta)."""
    ya = pair.component(alpha)
    yb = pair.component(beta)
    shift = (_A_SIGN[beta] - _A_SIGN[alpha]) * A
    out = RING.one
    for i, j in ya.cells():
        out = out * (-leg(yb, i, j) * E1 + (arm(ya, i, j) + 1) * E2 + shift)
    for i, j in yb.cells():
        out = out * ((leg(ya, i, j) + 1) * E1 - arm(yb, i, j) * E2 + shift)
    return out


def euler_factor(pair: DiagramPair, alpha: int, beta: int) -> MPoly:
    """The Euler factor n_{alpha,beta} of a pair of Young diagrams.

    The result is an exact polynomial of total degree |Y_alpha| + |Y_beta|;
    empty products give 1.
    """
    if alpha not in (1, 2) or beta not in (1, 2):
        raise ValueError("alpha and beta must be 1 or 2")
    return MPoly(_euler_poly(pair, alpha, beta))
