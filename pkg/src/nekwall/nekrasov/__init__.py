"""Rank-2 instanton partition function and prepotential extraction."""

from .efactor import e_factor
from .euler import euler_factor
from .pert import CCoeffs, c_coeffs, fpert_expand, pert_dlog
from .prepotential import PrepotentialParts, prepotential_parts
from .zinst import finst, tau_shift_check, zinst

__all__ = [
    "CCoeffs",
    "PrepotentialParts",
    "c_coeffs",
    "e_factor",
    "euler_factor",
    "finst",
    "fpert_expand",
    "pert_dlog",
    "prepotential_parts",
    "tau_shift_check",
    "zinst",
]
