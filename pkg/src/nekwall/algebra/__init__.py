"""Exact coefficient arithmetic for everything downstream.

The submodules layer as follows: gaussian < mpoly < tlaurent < qseries,
multiseries, logelem.  This namespace re-exports the public surface and
provides the generic entry points that dispatch on value kind.
"""

from .errors import EpsPoleError, TruncationMismatchError, WindowError
from .gaussian import GR_I, GR_ONE, GR_ZERO, GaussianRational
from .logelem import LL_KEY, LT_KEY, PI_KEY, SERIES_KEY, LogElem
from .mpoly import (
    MPoly,
    RatFn,
    poly_degree_trunc,
    poly_eps_zero,
    poly_homog_part,
    poly_subst,
    poly_subst_many,
    poly_t_decompose,
    ratfn_arith,
    ratfn_eps_limit,
)
from .multiseries import MultiSeries
from .qseries import QSeries, series_reverse
from .tlaurent import TLaurent, expand_at_infinity

__all__ = [
    "EpsPoleError",
    "TruncationMismatchError",
    "WindowError",
    "GaussianRational",
    "GR_ZERO",
    "GR_ONE",
    "GR_I",
    "MPoly",
    "RatFn",
    "ratfn_arith",
    "ratfn_eps_limit",
    "poly_degree_trunc",
    "poly_eps_zero",
    "poly_homog_part",
    "poly_subst",
    "poly_subst_many",
    "poly_t_decompose",
    "TLaurent",
    "expand_at_infinity",
    "QSeries",
    "series_reverse",
    "MultiSeries",
    "LogElem",
    "PI_KEY",
    "LT_KEY",
    "LL_KEY",
    "SERIES_KEY",
    "series_log",
    "series_exp",
    "eps_limit",
    "extract_coeff",
]


def series_log(s):
    """Logarithm of a series with constant term 1 (MultiSeries or QSeries)."""
    return s.log()


def series_exp(s):
    """Exponential of a series with zero constant term."""
    return s.exp()


def eps_limit(value):
    """Set e1 = e2 = 0 in a RatFn, TLaurent or MultiSeries, exactly."""
    if isinstance(value, RatFn):
        return ratfn_eps_limit(value)
    return value.eps_limit()


def extract_coeff(value, key):
    """Uniform coefficient extraction across the series kinds.

    - MultiSeries: key is a multi-exponent tuple
    - TLaurent: key is an integer t-degree
    - QSeries: key is an integer number of eighths
    """
    return value.extract_coeff(key)
