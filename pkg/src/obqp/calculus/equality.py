"""Three-valued equality of monodromy words."""

import logging
from enum import Enum

from obqp.braids.artin import braid_equal
from obqp.braids.compiler import compile_word
from obqp.calculus.homology import DEFAULT_CONVENTION, act_on_homology
from obqp.calculus.rewriting import canonical_form
from obqp.exceptions import SurfaceMismatchError
from obqp.models.word import MonodromyWord, PushConvention

logger = logging.getLogger(__name__)


class WordEquality(str, Enum):
    EQUAL = "equal"
    DISTINCT = "distinct"
    UNKNOWN = "unknown"


def equal_words(
    first: MonodromyWord,
    second: MonodromyWord,
    convention: PushConvention = DEFAULT_CONVENTION,
) -> WordEquality:
    """Compare two words in the pointed mapping class group.

    Distinct when the homological representation separates them, Equal when
    canonical forms coincide or the disk oracle agrees, Unknown otherwise.
    Disk pages always get a definite answer.
    """
    if first.surface != second.surface:
        raise SurfaceMismatchError("Cannot compare words on different surfaces")

    if act_on_homology(first, convention) != act_on_homology(second, convention):
        return WordEquality.DISTINCT

    if canonical_form(first, convention) == canonical_form(second, convention):
        return WordEquality.EQUAL

    surface = first.surface
    if surface.is_disk:
        if surface.n == 0:
            return WordEquality.EQUAL
        same = braid_equal(compile_word(first, convention), compile_word(second, convention))
        logger.debug(f"Disk oracle verdict: {same}")
        return WordEquality.EQUAL if same else WordEquality.DISTINCT

    return WordEquality.UNKNOWN
