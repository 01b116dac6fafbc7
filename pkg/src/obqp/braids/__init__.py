"""Braid words, the Artin action and compilation of disk-page words."""

from obqp.braids.artin import (
    BraidInvariants,
    FreeGroupEndo,
    artin_action,
    band_generator,
    braid_equal,
    braid_invariants,
    full_twist,
)
from obqp.braids.braid_word import BraidWord, permutation_cycles, sigma_permutation

__all__ = [
    "BraidInvariants",
    "BraidWord",
    "FreeGroupEndo",
    "artin_action",
    "band_generator",
    "braid_equal",
    "braid_invariants",
    "full_twist",
    "permutation_cycles",
    "sigma_permutation",
]
