"""Exact intersection numbers on the rank-2 odd-determinant moduli space.

Thin Python facade over the C++ core: closed Bernoulli forms, Quot-scheme
torus localization, and the residue reduction.  Every value is returned as a
``fractions.Fraction``; nothing is ever rounded.
"""

from ._core import (
    asymptotic_sum,
    in_large_n_regime,
    intersect_main,
    intersect_psi,
    lemma_bern_limit,
    quot_localized,
    reduction_prefactor,
    residue_closed,
    rhs_red,
)

__all__ = [
    "asymptotic_sum",
    "in_large_n_regime",
    "intersect_main",
    "intersect_psi",
    "lemma_bern_limit",
    "quot_localized",
    "reduction_prefactor",
    "residue_closed",
    "rhs_red",
]

__version__ = "1.0.0"
