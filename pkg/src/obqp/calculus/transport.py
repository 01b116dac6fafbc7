"""Carry symbols and words across basis embeddings of surfaces."""

from dataclasses import replace
from functools import lru_cache

from obqp.exceptions import SymbolValidationError
from obqp.models.surface import ArcSymbol, HomologyClass, MarkedSurface
from obqp.models.word import Generator, ImageSymbol, MonodromyWord, Symbol
from obqp.surface.lattice import BasisEmbedding


def _arc_class(surface: MarkedSurface, arc: ArcSymbol) -> tuple[int, ...]:
    coords = [0] * surface.rank
    for point in arc.endpoints:
        coords[surface.puncture_index(point)] = 1
    return tuple(coords)


@lru_cache(maxsize=4096)
def push_symbol(symbol: Symbol, embedding: BasisEmbedding) -> Symbol:
    """Image of a symbol on the larger surface; disk placements survive only on disks."""
    if isinstance(symbol, ImageSymbol):
        return ImageSymbol(
            push_symbol(symbol.base, embedding), push_word(symbol.conjugator, embedding)
        )

    disk = symbol.disk if embedding.target.is_disk else None
    if isinstance(symbol, ArcSymbol):
        action = symbol.declared_action
        if action is not None:
            action = embedding.push_action(action, _arc_class(embedding.source, symbol))
        return replace(symbol, declared_action=action, disk=disk)

    action = symbol.declared_action
    if action is not None:
        action = embedding.push_action(action, symbol.h1_class.coords)
    h1_class = HomologyClass(embedding.push_forward(symbol.h1_class.coords))
    return replace(symbol, h1_class=h1_class, declared_action=action, disk=disk)


def push_letter(letter: Generator, embedding: BasisEmbedding) -> Generator:
    return Generator(letter.kind, push_symbol(letter.symbol, embedding), letter.sign, letter.point)


def push_word(word: MonodromyWord, embedding: BasisEmbedding) -> MonodromyWord:
    if word.surface != embedding.source:
        raise SymbolValidationError("Word does not live on the embedding's source surface")
    return MonodromyWord(
        embedding.target, tuple(push_letter(letter, embedding) for letter in word.letters)
    )


def _check_points(surface: MarkedSurface, symbol_id: str, points: tuple[str, ...]) -> None:
    missing = [p for p in points if not surface.has_point(p)]
    if missing:
        raise SymbolValidationError(f"{symbol_id} still uses marked point {missing[0]}")


def pull_symbol(symbol: Symbol, embedding: BasisEmbedding) -> Symbol:
    """Restrict a symbol to the smaller surface of an embedding."""
    if isinstance(symbol, ImageSymbol):
        return ImageSymbol(
            pull_symbol(symbol.base, embedding), pull_word(symbol.conjugator, embedding)
        )

    source = embedding.source
    if isinstance(symbol, ArcSymbol):
        _check_points(source, symbol.id, symbol.endpoints)
        action = symbol.declared_action
        if action is not None:
            action = embedding.pull_action(action)
        return replace(symbol, declared_action=action)

    _check_points(source, symbol.id, symbol.through_points)
    action = symbol.declared_action
    if action is not None:
        action = embedding.pull_action(action)
    h1_class = HomologyClass(embedding.pull_back(symbol.h1_class.coords))
    return replace(symbol, h1_class=h1_class, declared_action=action)


def pull_letter(letter: Generator, embedding: BasisEmbedding) -> Generator:
    if letter.point is not None:
        _check_points(embedding.source, letter.to_text(), (letter.point,))
    return Generator(letter.kind, pull_symbol(letter.symbol, embedding), letter.sign, letter.point)


def pull_word(word: MonodromyWord, embedding: BasisEmbedding) -> MonodromyWord:
    if word.surface != embedding.target:
        raise SymbolValidationError("Word does not live on the embedding's target surface")
    return MonodromyWord(
        embedding.source, tuple(pull_letter(letter, embedding) for letter in word.letters)
    )
