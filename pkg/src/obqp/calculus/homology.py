"""Homological and permutation representation of monodromy words."""

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Optional, Sequence

import numpy as np

from obqp.exceptions import SurfaceMismatchError, SymbolValidationError
from obqp.models.surface import (
    ArcSymbol,
    CurveSymbol,
    HomologyClass,
    HomologyQuotient,
    IntMatrix,
    MarkedSurface,
)
from obqp.models.word import (
    Generator,
    GeneratorKind,
    ImageSymbol,
    MonodromyWord,
    PushConvention,
    Symbol,
)
from obqp.surface.lattice import (
    as_matrix,
    identity_matrix,
    integer_inverse,
    picard_lefschetz,
    swap_matrix,
    to_rows,
    validate_symbol,
)

logger = logging.getLogger(__name__)

Permutation = tuple[int, ...]

DEFAULT_CONVENTION = PushConvention()


@dataclass(frozen=True)
class HomologyAction:
    """Action of a word on H1(F - P) together with its marked-point permutation."""

    matrix: IntMatrix
    permutation: Permutation

    def as_array(self) -> np.ndarray:
        return as_matrix(self.matrix)

    def to_dict(self) -> dict[str, Any]:
        return {
            "matrix": [list(row) for row in self.matrix],
            "permutation": list(self.permutation),
        }


def compose_permutations(outer: Permutation, inner: Permutation) -> Permutation:
    """(outer o inner)[k] = outer[inner[k]]."""
    return tuple(outer[k] for k in inner)


def invert_permutation(perm: Permutation) -> Permutation:
    result = [0] * len(perm)
    for k, image in enumerate(perm):
        result[image] = k
    return tuple(result)


def _read_only(matrix: np.ndarray) -> np.ndarray:
    matrix.setflags(write=False)
    return matrix


def _check_surface(surface: MarkedSurface, word: MonodromyWord) -> None:
    if word.surface != surface:
        raise SurfaceMismatchError("Conjugating word lives on a different surface")


@lru_cache(maxsize=8192)
def _symbol_data(
    surface: MarkedSurface, symbol: Symbol, convention: PushConvention = DEFAULT_CONVENTION
) -> tuple[np.ndarray, np.ndarray, Permutation]:
    """Matrices of the positive and negative twist about a symbol, and its permutation."""
    identity_perm = tuple(range(surface.n))

    if isinstance(symbol, ImageSymbol):
        _check_surface(surface, symbol.conjugator)
        base, base_inv, base_perm = _symbol_data(surface, symbol.base, convention)
        outer = act_on_homology(symbol.conjugator, convention)
        outer_matrix = outer.as_array()
        inner_matrix = _word_matrix(
            surface, _inverse_letters(symbol.conjugator.letters), convention
        )
        perm = compose_permutations(
            outer.permutation,
            compose_permutations(base_perm, invert_permutation(outer.permutation)),
        )
        forward = outer_matrix @ base @ inner_matrix
        backward = outer_matrix @ base_inv @ inner_matrix
        return _read_only(forward), _read_only(backward), perm

    if isinstance(symbol, ArcSymbol):
        i = surface.point_index(symbol.endpoints[0])
        j = surface.point_index(symbol.endpoints[1])
        perm_list = list(identity_perm)
        perm_list[i], perm_list[j] = j, i
        if symbol.declared_action is not None:
            forward = as_matrix(symbol.declared_action)
            backward = integer_inverse(forward)
            if backward is None:
                raise SymbolValidationError(f"{symbol.id}: declared action is not unimodular")
        else:
            forward = swap_matrix(surface, *symbol.endpoints)
            backward = forward.copy()
        return _read_only(forward), _read_only(backward), tuple(perm_list)

    if symbol.declared_action is not None:
        forward = as_matrix(symbol.declared_action)
        backward = integer_inverse(forward)
        if backward is None:
            raise SymbolValidationError(f"{symbol.id}: declared action is not unimodular")
    else:
        forward = picard_lefschetz(surface, symbol.h1_class, 1)
        backward = picard_lefschetz(surface, symbol.h1_class, -1)
    return _read_only(forward), _read_only(backward), identity_perm


def _inverse_letters(letters: Sequence[Generator]) -> tuple[Generator, ...]:
    return tuple(letter.inverse() for letter in reversed(letters))


def push_copy_classes(
    surface: MarkedSurface,
    loop: CurveSymbol,
    point: str,
    convention: PushConvention = DEFAULT_CONVENTION,
) -> tuple[HomologyClass, HomologyClass]:
    """Classes of the left and right parallel copies of a pushing loop."""
    right = list(loop.h1_class.coords)
    right[surface.puncture_index(point)] += convention.puncture_sign
    return loop.h1_class, HomologyClass(tuple(right))


@lru_cache(maxsize=8192)
def _push_matrix(
    surface: MarkedSurface,
    symbol: Symbol,
    point: str,
    sign: int,
    convention: PushConvention,
) -> np.ndarray:
    if isinstance(symbol, ImageSymbol):
        _check_surface(surface, symbol.conjugator)
        conj = symbol.conjugator
        base_point = image_point(_inverse_word(conj), point)
        inner = _push_matrix(surface, symbol.base, base_point, sign, convention)
        outer = act_on_homology(conj, convention).as_array()
        back = _word_matrix(surface, _inverse_letters(conj.letters), convention)
        return _read_only(outer @ inner @ back)
    if not isinstance(symbol, CurveSymbol):
        raise SymbolValidationError(f"{symbol.id}: point-pushes run along loops, not arcs")
    left, right = push_copy_classes(surface, symbol, point, convention)
    if convention.positive_copy == "right":
        left, right = right, left
    return _read_only(
        picard_lefschetz(surface, left, sign) @ picard_lefschetz(surface, right, -sign)
    )


def _inverse_word(word: MonodromyWord) -> MonodromyWord:
    return MonodromyWord(word.surface, _inverse_letters(word.letters))


def letter_matrix(
    surface: MarkedSurface,
    letter: Generator,
    convention: PushConvention = DEFAULT_CONVENTION,
) -> np.ndarray:
    if letter.kind == GeneratorKind.POINT_PUSH:
        if letter.point is None:
            raise SymbolValidationError("Point-push letter without a marked point")
        return _push_matrix(surface, letter.symbol, letter.point, letter.sign, convention)
    forward, backward, _ = _symbol_data(surface, letter.symbol, convention)
    return forward if letter.sign > 0 else backward


def letter_permutation(surface: MarkedSurface, letter: Generator) -> Permutation:
    if letter.kind == GeneratorKind.POINT_PUSH:
        return tuple(range(surface.n))
    return _symbol_data(surface, letter.symbol)[2]


def _word_matrix(
    surface: MarkedSurface,
    letters: Sequence[Generator],
    convention: PushConvention = DEFAULT_CONVENTION,
) -> np.ndarray:
    result = identity_matrix(surface.rank)
    for letter in letters:
        result = result @ letter_matrix(surface, letter, convention)
    return result


def word_permutation(word: MonodromyWord) -> Permutation:
    """Marked-point permutation of a word; perm[k] is where p_(k+1) is sent."""
    perm: Permutation = tuple(range(word.surface.n))
    for letter in word.letters:
        perm = compose_permutations(perm, letter_permutation(word.surface, letter))
    return perm


def image_point(word: MonodromyWord, point: str) -> str:
    """Marked point that ``word`` sends ``point`` to."""
    surface = word.surface
    return surface.point_ids[word_permutation(word)[surface.point_index(point)]]


def act_on_homology(
    word: MonodromyWord, convention: PushConvention = DEFAULT_CONVENTION
) -> HomologyAction:
    """Matrix M_g1 ... M_gm and permutation of a word (rightmost letter applied first)."""
    matrix = _word_matrix(word.surface, word.letters, convention)
    return HomologyAction(to_rows(matrix), word_permutation(word))


def symbol_class(
    surface: MarkedSurface,
    symbol: Symbol,
    convention: PushConvention = DEFAULT_CONVENTION,
) -> HomologyClass:
    """Homology class carried by a curve or arc symbol (e_i + e_j for arcs)."""
    if isinstance(symbol, ImageSymbol):
        base = symbol_class(surface, symbol.base, convention)
        outer = act_on_homology(symbol.conjugator, convention).as_array()
        return HomologyClass.from_vector(outer @ base.vector())
    if isinstance(symbol, ArcSymbol):
        coords = [0] * surface.rank
        for point in symbol.endpoints:
            coords[surface.puncture_index(point)] = 1
        return HomologyClass(tuple(coords))
    return symbol.h1_class


def symbol_endpoints(surface: MarkedSurface, symbol: Symbol) -> tuple[str, str]:
    """Endpoints of an arc symbol, following images through their conjugators."""
    if isinstance(symbol, ImageSymbol):
        first, second = symbol_endpoints(surface, symbol.base)
        return image_point(symbol.conjugator, first), image_point(symbol.conjugator, second)
    if isinstance(symbol, ArcSymbol):
        return symbol.endpoints
    raise SymbolValidationError(f"{symbol.id} is a curve, not an arc")


def symbol_points(surface: MarkedSurface, symbol: Symbol) -> frozenset[str]:
    """Marked points a symbol runs into: arc endpoints or loop base points."""
    if isinstance(symbol, ImageSymbol):
        inner = symbol_points(surface, symbol.base)
        return frozenset(image_point(symbol.conjugator, p) for p in inner)
    if isinstance(symbol, ArcSymbol):
        return frozenset(symbol.endpoints)
    return frozenset(symbol.through_points)


def push_point_error(surface: MarkedSurface, letter: Generator) -> Optional[str]:
    """Why a point-push letter's marked point is not on its loop, or None."""
    if letter.kind != GeneratorKind.POINT_PUSH:
        return None
    if letter.point is None or not surface.has_point(letter.point):
        return f"{letter.to_text()}: unknown marked point {letter.point}"
    if letter.symbol.is_arc:
        return f"{letter.to_text()}: point-pushes run along loops, not arcs"
    on_loop = symbol_points(surface, letter.symbol)
    if letter.point not in on_loop:
        through = ", ".join(sorted(on_loop)) or "no marked point"
        return (
            f"{letter.to_text()}: {letter.point} is not on the loop, "
            f"which runs through {through}"
        )
    return None


def validate_letter(surface: MarkedSurface, letter: Generator) -> None:
    """Check a letter's symbol, and every point-push inside it, against the surface."""
    validate_symbol(surface, letter.symbol)
    _check_pushes(surface, letter)


def _check_pushes(surface: MarkedSurface, letter: Generator) -> None:
    symbol = letter.symbol
    while isinstance(symbol, ImageSymbol):
        for inner in symbol.conjugator.letters:
            _check_pushes(surface, inner)
        symbol = symbol.base
    problem = push_point_error(surface, letter)
    if problem is not None:
        raise SymbolValidationError(problem)


def h1f_block(surface: MarkedSurface, matrix: np.ndarray) -> np.ndarray:
    """Induced action on H1(F), the quotient by the puncture classes."""
    k = surface.puncture_offset
    return matrix[:k, :k]


def quotient_coordinates(
    surface: MarkedSurface, h1_class: HomologyClass, quotient: HomologyQuotient
) -> tuple[int, ...]:
    if quotient == HomologyQuotient.H1F:
        return h1_class.coords[: surface.puncture_offset]
    return h1_class.coords


def homologically_nontrivial(
    surface: MarkedSurface,
    h1_class: HomologyClass,
    quotient: HomologyQuotient = HomologyQuotient.H1F,
) -> bool:
    """Whether a class survives in H1(F) (default) or in H1(F - P)."""
    return any(quotient_coordinates(surface, h1_class, quotient))


def actions_agree(
    first: MonodromyWord,
    second: MonodromyWord,
    convention: Optional[PushConvention] = None,
) -> bool:
    conv = convention or DEFAULT_CONVENTION
    return act_on_homology(first, conv) == act_on_homology(second, conv)
