"""Exact-arithmetic instanton counting and wallcrossing on toric surfaces.

Subpackages and modules:

- ``algebra``: Gaussian rationals, sparse rational functions in
  (e1, e2, a, t), truncated Laurent series at t = infinity, fractional
  q-series, truncated multi-variable series, and a small formal log ring.
- ``partitions``: Young diagrams, arm/leg statistics, enumeration of
  diagram pairs and tuples.
- ``nekrasov``: the rank-2 instanton partition function, its logarithm,
  and the perturbative part.
- ``modular``: theta functions, E2, and the q-expansions entering the
  modular wallcrossing formula.
- ``toric``: toric surfaces as fixed-point data, equivariant classes,
  characters.
- ``wallcross``: wallcrossing terms by localization and by the modular
  formula, plus the comparison harness.
- ``p2``: the instanton-counting identity on the projective plane.
- ``cli``: command line entry points.
"""

__version__ = "0.1.0"
