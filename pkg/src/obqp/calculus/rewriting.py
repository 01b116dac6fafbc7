"""Word rewriting: composition, free reduction, conjugation and point-push expansion."""

import logging
from typing import Mapping, Optional, Sequence, Union

from obqp.calculus.homology import DEFAULT_CONVENTION, image_point, push_copy_classes
from obqp.exceptions import NotAPointPushError, SurfaceMismatchError, SymbolValidationError
from obqp.models.surface import ArcSymbol, CurveSymbol, DiskPlacement, MarkedSurface
from obqp.models.word import (
    Generator,
    GeneratorKind,
    ImageSymbol,
    MonodromyWord,
    PushConvention,
    Symbol,
)
from obqp.surface.lattice import placement_permutation

logger = logging.getLogger(__name__)


def word_of(surface: MarkedSurface, letters: Sequence[Generator]) -> MonodromyWord:
    return MonodromyWord(surface, tuple(letters))


def compose(first: MonodromyWord, second: MonodromyWord) -> MonodromyWord:
    """first o second: the letters of ``second`` act before those of ``first``."""
    if first.surface != second.surface:
        raise SurfaceMismatchError("Cannot compose words on different surfaces")
    return MonodromyWord(first.surface, first.letters + second.letters)


def inverse(word: MonodromyWord) -> MonodromyWord:
    return MonodromyWord(word.surface, tuple(g.inverse() for g in reversed(word.letters)))


def free_reduce(word: MonodromyWord) -> MonodromyWord:
    """Cancel adjacent g * g^-1 pairs until none remain."""
    stack: list[Generator] = []
    for letter in word.letters:
        if stack and stack[-1].cancels(letter):
            stack.pop()
        else:
            stack.append(letter)
    return MonodromyWord(word.surface, tuple(stack))


def conjugation_rewrite(conjugator: MonodromyWord, letter: Generator) -> Generator:
    """Rewrite w * g * w^-1 as the single letter g about the image w(s)."""
    if conjugator.is_empty:
        return letter
    point = letter.point
    if letter.kind == GeneratorKind.POINT_PUSH and point is not None:
        point = image_point(conjugator, point)
    return Generator(letter.kind, ImageSymbol(letter.symbol, conjugator), letter.sign, point)


def unfold_letter(surface: MarkedSurface, letter: Generator) -> tuple[Generator, ...]:
    """Inverse of conjugation_rewrite, applied recursively down to declared symbols."""
    symbol = letter.symbol
    if not isinstance(symbol, ImageSymbol):
        return (letter,)
    conj = symbol.conjugator
    if conj.surface != surface:
        raise SurfaceMismatchError("Image symbol conjugator lives on a different surface")
    point = letter.point
    if letter.kind == GeneratorKind.POINT_PUSH and point is not None:
        point = image_point(inverse(conj), point)
    base_letter = Generator(letter.kind, symbol.base, letter.sign, point)
    return (
        unfold_images(conj).letters
        + unfold_letter(surface, base_letter)
        + unfold_images(inverse(conj)).letters
    )


def unfold_images(word: MonodromyWord) -> MonodromyWord:
    letters: list[Generator] = []
    for letter in word.letters:
        letters.extend(unfold_letter(word.surface, letter))
    return MonodromyWord(word.surface, tuple(letters))


def _widened_block(
    surface: MarkedSurface, placement: Optional[DiskPlacement], point: str, sign: int
) -> Optional[DiskPlacement]:
    """Block placement of the outer parallel copy of a disk loop, when it has one."""
    if placement is None or placement.kind != "block" or sign != 1:
        return None
    perm = placement_permutation(surface, placement)
    strand = perm.index(surface.point_index(point)) + 1
    if strand == placement.start - 1:
        return DiskPlacement("block", strand, placement.stop, placement.conjugator)
    if strand == placement.stop + 1:
        return DiskPlacement("block", placement.start, strand, placement.conjugator)
    return None


def expand_point_push(
    surface: MarkedSurface,
    letter: Generator,
    convention: PushConvention = DEFAULT_CONVENTION,
) -> MonodromyWord:
    """P[d,p]^e -> D[d_L]^e * D[d_R]^-e, the copies of d on either side of p."""
    if letter.kind != GeneratorKind.POINT_PUSH or letter.point is None:
        raise NotAPointPushError(f"{letter.to_text()} is not a point-push letter")

    symbol = letter.symbol
    if isinstance(symbol, ImageSymbol):
        conj = symbol.conjugator
        base_point = image_point(inverse(conj), letter.point)
        base = expand_point_push(
            surface,
            Generator(GeneratorKind.POINT_PUSH, symbol.base, letter.sign, base_point),
            convention,
        )
        return MonodromyWord(
            surface,
            tuple(
                Generator(g.kind, ImageSymbol(g.symbol, conj), g.sign, g.point)
                for g in base.letters
            ),
        )

    if not isinstance(symbol, CurveSymbol):
        raise SymbolValidationError(f"{symbol.id}: point-pushes run along loops, not arcs")

    left_class, right_class = push_copy_classes(surface, symbol, letter.point, convention)
    left = CurveSymbol(
        f"{symbol.id}_L",
        left_class,
        collar_avoiding=symbol.collar_avoiding,
        disk=symbol.disk,
    )
    right = CurveSymbol(
        f"{symbol.id}_R",
        right_class,
        collar_avoiding=symbol.collar_avoiding,
        disk=_widened_block(surface, symbol.disk, letter.point, convention.puncture_sign),
    )
    positive, negative = (left, right) if convention.positive_copy == "left" else (right, left)
    return MonodromyWord(
        surface,
        (
            Generator(GeneratorKind.DEHN, positive, letter.sign),
            Generator(GeneratorKind.DEHN, negative, -letter.sign),
        ),
    )


def expand_point_pushes(
    word: MonodromyWord, convention: PushConvention = DEFAULT_CONVENTION
) -> MonodromyWord:
    letters: list[Generator] = []
    for letter in word.letters:
        if letter.kind == GeneratorKind.POINT_PUSH:
            letters.extend(expand_point_push(word.surface, letter, convention).letters)
        else:
            letters.append(letter)
    return MonodromyWord(word.surface, tuple(letters))


def canonical_form(
    word: MonodromyWord, convention: PushConvention = DEFAULT_CONVENTION
) -> MonodromyWord:
    """Free reduction of the word with all images unfolded and all pushes expanded."""
    return free_reduce(expand_point_pushes(unfold_images(word), convention))


def collect_symbols(word: MonodromyWord) -> dict[str, Union[CurveSymbol, ArcSymbol]]:
    """Declared symbols a word references, including those inside image conjugators."""
    found: dict[str, Union[CurveSymbol, ArcSymbol]] = {}

    def visit(symbol: Symbol) -> None:
        if isinstance(symbol, ImageSymbol):
            visit(symbol.base)
            for inner in symbol.conjugator.letters:
                visit(inner.symbol)
        else:
            found.setdefault(symbol.id, symbol)

    for letter in word.letters:
        visit(letter.symbol)
    return found


def push_copy_symbols(
    surface: MarkedSurface,
    symbols: Mapping[str, Symbol],
    convention: PushConvention = DEFAULT_CONVENTION,
) -> dict[str, Symbol]:
    """The parallel copies ``<id>_L`` and ``<id>_R`` of every loop through one marked point."""
    copies: dict[str, Symbol] = {}
    for symbol in symbols.values():
        if not isinstance(symbol, CurveSymbol) or len(symbol.through_points) != 1:
            continue
        push = Generator(GeneratorKind.POINT_PUSH, symbol, 1, symbol.through_points[0])
        for letter in expand_point_push(surface, push, convention).letters:
            copies[letter.symbol.id] = letter.symbol
    return copies
