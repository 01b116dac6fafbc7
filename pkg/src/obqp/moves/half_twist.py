"""Carry an added half-twist through a script of conjugations and positive stabilizations."""

import logging
from dataclasses import dataclass

from obqp.calculus.rewriting import conjugation_rewrite
from obqp.calculus.transport import push_letter
from obqp.exceptions import SymbolValidationError, UnsupportedMoveError
from obqp.models.open_book import Move, MoveKind, MoveScript, PointedOpenBook
from obqp.models.word import Generator, GeneratorKind, MonodromyWord, Symbol
from obqp.moves.markov import stabilize
from obqp.moves.script import conjugate_by
from obqp.surface.lattice import validate_symbol

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HalfTwistTransport:
    """Transported pointed open book, its leading half-twist and a move script reaching it.

    ``witness`` starts at H[arc]^sign * w0 on the original page and ends at a
    pointed open book whose word equals ``result.word`` as a mapping class.
    """

    result: PointedOpenBook
    letter: Generator
    witness: MoveScript


def _single(pob: PointedOpenBook, letter: Generator) -> MonodromyWord:
    return MonodromyWord(pob.surface, (letter,))


def transport_half_twist(script: MoveScript, arc: Symbol, sign: int = 1) -> HalfTwistTransport:
    """Add H[arc]^sign to the start of a script and follow it to the end.

    Conjugation by h turns the arc into its image h(arc); a positive
    stabilization leaves it alone, since the new arc is disjoint from it.
    """
    if sign not in (1, -1):
        raise ValueError(f"Half-twist sign must be +1 or -1, got {sign}")
    start = script.start
    if not arc.is_arc:
        raise SymbolValidationError(f"{arc.id} is a curve; only arcs carry half-twists")
    validate_symbol(start.surface, arc)

    letter = Generator(GeneratorKind.HALF_TWIST, arc, sign)
    witness_start = PointedOpenBook(
        start.surface, MonodromyWord(start.surface, (letter,) + start.word.letters)
    )
    witness_moves: list[Move] = []
    current = start

    for index, move in enumerate(script.moves):
        if move.kind == MoveKind.CONJUGATE and move.word is not None:
            current = conjugate_by(current, move.word)
            letter = conjugation_rewrite(move.word, letter)
            witness_moves.append(move)
        elif move.kind == MoveKind.STABILIZE and move.sign == 1:
            witness_moves.append(Move.conjugate(_single(current, letter.inverse())))
            stab = stabilize(current, 1)
            current = stab.result
            letter = push_letter(letter, stab.embedding)
            witness_moves.append(Move.stabilize(1))
            witness_moves.append(Move.conjugate(_single(current, letter)))
        else:
            raise UnsupportedMoveError(
                f"Move {index + 1} ({move.kind.value}, sign {move.sign}) is outside the "
                "conjugation and positive stabilization moves a half-twist can be carried through"
            )
        logger.debug(f"After move {index + 1}: transported letter {letter.to_text()}")

    result = PointedOpenBook(
        current.surface, MonodromyWord(current.surface, (letter,) + current.word.letters)
    )
    return HalfTwistTransport(result, letter, MoveScript(witness_start, tuple(witness_moves)))
