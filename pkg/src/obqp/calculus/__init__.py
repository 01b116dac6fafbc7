"""Word calculus: homological action, rewriting and transport of monodromy words.

Word equality lives in ``obqp.calculus.equality``; it depends on the braid compiler.
"""

from obqp.calculus.homology import (
    DEFAULT_CONVENTION,
    HomologyAction,
    act_on_homology,
    homologically_nontrivial,
    image_point,
    symbol_class,
    symbol_endpoints,
    validate_letter,
    word_permutation,
)
from obqp.calculus.rewriting import (
    canonical_form,
    compose,
    conjugation_rewrite,
    expand_point_push,
    expand_point_pushes,
    free_reduce,
    inverse,
    unfold_images,
)

__all__ = [
    "DEFAULT_CONVENTION",
    "HomologyAction",
    "act_on_homology",
    "canonical_form",
    "compose",
    "conjugation_rewrite",
    "expand_point_push",
    "expand_point_pushes",
    "free_reduce",
    "homologically_nontrivial",
    "image_point",
    "inverse",
    "symbol_class",
    "symbol_endpoints",
    "unfold_images",
    "validate_letter",
    "word_permutation",
]
