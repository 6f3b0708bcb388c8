"""Exact symbolic engine for infinitesimal thickenings of smooth varieties.

Submodules, roughly bottom-up:

  exactalg    homogeneous Laurent fractions, forms and fields on chart covers
  truncated   truncated polynomial rings R[t]/(t^n), matrices, order lifts
  autgroup    truncated automorphism groups, exp/log, closed composition laws
  cech        cover cochains, cocycle tests, coboundary solving, trace forms
  pms         thickening cocycles, extension obstructions, symmetry actions
  projbundle  dimension bookkeeping for projectivized-bundle families
  cli         command-line front end
"""

__version__ = "0.1.0"
