"""Compile monodromy words on disk pages to braid words."""

import logging
from typing import Optional, Union

from obqp.braids.artin import full_twist
from obqp.braids.braid_word import BraidWord
from obqp.calculus.homology import DEFAULT_CONVENTION
from obqp.calculus.rewriting import expand_point_pushes
from obqp.exceptions import DiskCompileError
from obqp.models.open_book import PointedOpenBook
from obqp.models.surface import ArcSymbol, CurveSymbol, DiskPlacement
from obqp.models.word import (
    Generator,
    GeneratorKind,
    ImageSymbol,
    MonodromyWord,
    PushConvention,
    Symbol,
)

logger = logging.getLogger(__name__)


def _conjugate(conjugator: tuple[int, ...], core: tuple[int, ...]) -> tuple[int, ...]:
    return conjugator + core + tuple(-x for x in reversed(conjugator))


def _placement_letters(symbol: Union[ArcSymbol, CurveSymbol], sign: int) -> tuple[int, ...]:
    placement: Optional[DiskPlacement] = symbol.disk
    if placement is None:
        raise DiskCompileError(f"{symbol.id} has no disk placement")
    if placement.kind == "arc":
        core: tuple[int, ...] = (sign * placement.start,)
    else:
        twist = full_twist(placement.start, placement.stop)
        core = twist if sign > 0 else tuple(-x for x in reversed(twist))
    return _conjugate(placement.conjugator, core)


def _symbol_letters(
    symbol: Symbol, sign: int, convention: PushConvention
) -> tuple[int, ...]:
    if isinstance(symbol, ImageSymbol):
        conj = compile_word(symbol.conjugator, convention).letters
        return _conjugate(conj, _symbol_letters(symbol.base, sign, convention))
    return _placement_letters(symbol, sign)


def _letter_letters(letter: Generator, convention: PushConvention) -> tuple[int, ...]:
    if letter.kind == GeneratorKind.POINT_PUSH:
        raise DiskCompileError("Point-push letters must be expanded before compiling")
    return _symbol_letters(letter.symbol, letter.sign, convention)


def compile_word(
    word: MonodromyWord, convention: PushConvention = DEFAULT_CONVENTION
) -> BraidWord:
    surface = word.surface
    if not surface.is_disk:
        raise DiskCompileError(
            f"Only disk pages compile to braids (page has g={surface.genus}, "
            f"b={surface.boundary_count})"
        )
    if surface.n == 0:
        raise DiskCompileError("A disk page without marked points has no braid")
    letters: list[int] = []
    for letter in expand_point_pushes(word, convention).letters:
        letters.extend(_letter_letters(letter, convention))
    return BraidWord(surface.n, tuple(letters))


def compile_pointed_word(
    pob: PointedOpenBook, convention: PushConvention = DEFAULT_CONVENTION
) -> BraidWord:
    """Braid word of a pointed open book on a disk page."""
    braid = compile_word(pob.word, convention)
    logger.debug(f"Compiled {len(pob.word)} letters to {len(braid)} sigma letters")
    return braid
