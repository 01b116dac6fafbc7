"""Positive and negative Markov stabilization of pointed open books."""

import logging
from dataclasses import dataclass

import numpy as np

from obqp.calculus.homology import letter_matrix, letter_permutation
from obqp.calculus.rewriting import collect_symbols
from obqp.calculus.transport import pull_word, push_word
from obqp.exceptions import EmptyBraidError, NotDestabilizableError, SymbolValidationError
from obqp.models.open_book import PointedOpenBook
from obqp.models.surface import ArcSymbol, CurveSymbol, DiskPlacement, MarkedPoint, MarkedSurface
from obqp.models.word import Generator, GeneratorKind, ImageSymbol, MonodromyWord, Symbol
from obqp.surface.lattice import (
    BasisEmbedding,
    identity_matrix,
    point_embedding,
    remove_last_point,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Stabilization:
    """A stabilized pointed open book with the arc and embedding that produced it."""

    result: PointedOpenBook
    arc: ArcSymbol
    embedding: BasisEmbedding

    @property
    def letter(self) -> Generator:
        return self.result.word.letters[0]


@dataclass(frozen=True)
class Destabilization:
    """A destabilized pointed open book with the half-twist letter that was removed."""

    result: PointedOpenBook
    letter: Generator
    leading: bool
    embedding: BasisEmbedding


def _fresh_point_id(surface: MarkedSurface) -> str:
    candidate = f"p{surface.n + 1}"
    suffix = 1
    while surface.has_point(candidate):
        candidate = f"p{surface.n + 1}_{suffix}"
        suffix += 1
    return candidate


def _fresh_arc_id(word: MonodromyWord, new_point: str, previous: str) -> str:
    taken = set(collect_symbols(word))
    candidate = f"s_{new_point}_{previous}"
    suffix = 1
    while candidate in taken:
        candidate = f"s_{new_point}_{previous}_{suffix}"
        suffix += 1
    return candidate


def stabilize(pob: PointedOpenBook, sign: int = 1) -> Stabilization:
    """Markov stabilization keeping track of the new arc and basis embedding."""
    if sign not in (1, -1):
        raise ValueError(f"Stabilization sign must be +1 or -1, got {sign}")
    surface = pob.surface
    if surface.n == 0:
        raise EmptyBraidError("Cannot stabilize an empty braid (no marked points)")

    previous = surface.point_ids[-1]
    new_id = _fresh_point_id(surface)
    target, embedding = point_embedding(surface, MarkedPoint(new_id, collar=True))
    disk = DiskPlacement("arc", surface.n, surface.n + 1) if target.is_disk else None
    arc = ArcSymbol(
        _fresh_arc_id(pob.word, new_id, previous),
        (new_id, previous),
        collar_avoiding=True,
        disk=disk,
    )
    moved = push_word(pob.word, embedding)
    letter = Generator(GeneratorKind.HALF_TWIST, arc, sign)
    result = PointedOpenBook(target, MonodromyWord(target, (letter,) + moved.letters))
    logger.debug(f"Stabilized with {letter.to_text()}: n={surface.n} -> n={target.n}")
    return Stabilization(result, arc, embedding)


def markov_stabilize(pob: PointedOpenBook, sign: int = 1) -> PointedOpenBook:
    """Add a collar point p_(n+1) and the half-twist H[p_(n+1), p_n]^sign in front of the word."""
    return stabilize(pob, sign).result


def _placement_touches(placement: DiskPlacement, strand: int) -> bool:
    if any(abs(letter) in (strand - 1, strand) for letter in placement.conjugator):
        return True
    if placement.kind == "arc":
        return strand in (placement.start, placement.start + 1)
    return placement.start <= strand <= placement.stop


def _symbol_touches(symbol: Symbol, point: str, strand: int) -> bool:
    if isinstance(symbol, ImageSymbol):
        if _symbol_touches(symbol.base, point, strand):
            return True
        return any(_letter_refers(g, point, strand) for g in symbol.conjugator.letters)
    if isinstance(symbol, ArcSymbol) and point in symbol.endpoints:
        return True
    if isinstance(symbol, CurveSymbol) and point in symbol.through_points:
        return True
    return symbol.disk is not None and _placement_touches(symbol.disk, strand)


def _letter_refers(letter: Generator, point: str, strand: int) -> bool:
    return letter.point == point or _symbol_touches(letter.symbol, point, strand)


def _letter_moves_point(surface: MarkedSurface, letter: Generator) -> bool:
    index = surface.n - 1
    if letter_permutation(surface, letter)[index] != index:
        return True
    e = surface.puncture_index(surface.point_ids[-1])
    matrix = letter_matrix(surface, letter)
    unit = identity_matrix(surface.rank)[e]
    return not (np.array_equal(matrix[e], unit) and np.array_equal(matrix[:, e], unit))


def _is_stabilization_letter(surface: MarkedSurface, letter: Generator) -> bool:
    if letter.kind != GeneratorKind.HALF_TWIST or not isinstance(letter.symbol, ArcSymbol):
        return False
    return set(letter.symbol.endpoints) == set(surface.point_ids[-2:])


def destabilize(pob: PointedOpenBook) -> Destabilization:
    """Syntactic destabilization: the last point must occur in exactly one outer half-twist."""
    surface = pob.surface
    if surface.n < 2:
        raise NotDestabilizableError("Destabilization needs at least two marked points")
    last = surface.marked_points[-1]
    if not last.collar:
        raise NotDestabilizableError(f"{last.id} is not a collar point")

    letters = pob.word.letters
    candidates: list[tuple[int, bool]] = []
    if letters:
        candidates.append((0, True))
        if len(letters) > 1:
            candidates.append((len(letters) - 1, False))

    for position, leading in candidates:
        letter = letters[position]
        if not _is_stabilization_letter(surface, letter):
            continue
        rest = letters[:position] + letters[position + 1 :]
        if any(
            _letter_refers(g, last.id, surface.n) or _letter_moves_point(surface, g)
            for g in rest
        ):
            continue
        smaller, embedding = remove_last_point(surface)
        try:
            word = pull_word(MonodromyWord(surface, rest), embedding)
        except SymbolValidationError as e:
            logger.debug(f"Restriction failed after removing {letter.to_text()}: {e}")
            continue
        logger.debug(f"Destabilized {'leading' if leading else 'trailing'} {letter.to_text()}")
        return Destabilization(PointedOpenBook(smaller, word), letter, leading, embedding)

    raise NotDestabilizableError(
        f"No outer half-twist joining {surface.point_ids[-2]} and {last.id} "
        f"is the only letter involving {last.id}"
    )


def markov_destabilize(pob: PointedOpenBook) -> PointedOpenBook:
    return destabilize(pob).result
