"""Conjugation moves, move scripts and their JSON records."""

import json
import logging
from typing import Any, Literal, Mapping, Optional, Union

from pydantic import BaseModel, TypeAdapter, ValidationError, model_validator

from obqp.calculus.rewriting import collect_symbols, compose, inverse
from obqp.calculus.transport import pull_symbol, pull_word, push_symbol, push_word
from obqp.exceptions import MoveError, SymbolValidationError, UnsupportedMoveError
from obqp.models.open_book import (
    Move,
    MoveKind,
    MoveScript,
    PointedOpenBook,
    ReplayResult,
    ReplayStep,
)
from obqp.models.surface import HandleVariant
from obqp.models.word import MonodromyWord, Symbol
from obqp.moves.hopf import stabilize_hopf
from obqp.moves.markov import destabilize, stabilize
from obqp.parsers.words import parse_hopf_curve_spec, parse_word_text
from obqp.surface.lattice import BasisEmbedding

logger = logging.getLogger(__name__)


def conjugate_by(pob: PointedOpenBook, h: MonodromyWord) -> PointedOpenBook:
    """Braid isotopy: replace the monodromy w by h * w * h^-1."""
    return PointedOpenBook(pob.surface, compose(compose(h, pob.word), inverse(h)))


def _apply(
    pob: PointedOpenBook, move: Move
) -> tuple[PointedOpenBook, Optional[BasisEmbedding], bool, dict[str, Symbol]]:
    """Result, basis embedding (if the surface changed), its direction and new symbols."""
    if move.kind == MoveKind.CONJUGATE:
        if move.word is None:
            raise MoveError("Conjugation move without a word")
        return conjugate_by(pob, move.word), None, True, {}
    if move.kind == MoveKind.STABILIZE:
        stab = stabilize(pob, move.sign)
        return stab.result, stab.embedding, True, {stab.arc.id: stab.arc}
    if move.kind == MoveKind.DESTABILIZE:
        destab = destabilize(pob)
        return destab.result, destab.embedding, False, {}
    if move.kind == MoveKind.HOPF:
        if move.variant is None or move.curve is None:
            raise MoveError("Hopf move needs a handle variant and a curve")
        hopf = stabilize_hopf(pob, move.variant, move.curve)
        return hopf.result, hopf.embedding, True, {hopf.curve.id: hopf.curve}
    raise UnsupportedMoveError(f"Unknown move kind: {move.kind}")


def apply_move(pob: PointedOpenBook, move: Move) -> ReplayStep:
    before = set(collect_symbols(pob.word))
    result, _, _, _ = _apply(pob, move)
    after = set(collect_symbols(result.word))
    return ReplayStep(
        move, result, tuple(sorted(after - before)), tuple(sorted(before - after))
    )


def replay(script: MoveScript) -> ReplayResult:
    """Apply the moves of a script in order from its recorded start."""
    outcome = ReplayResult(script.start)
    current = script.start
    for index, move in enumerate(script.moves):
        step = apply_move(current, move)
        logger.debug(f"Step {index + 1}: {move.kind.value} -> {step.result.word.to_text()}")
        outcome.steps.append(step)
        current = step.result
    return outcome


class MoveRecord(BaseModel):
    """One move as it appears in a JSON script."""

    move: Literal["conjugate", "stabilize", "destabilize", "hopf"]
    word: Optional[str] = None
    sign: int = 1
    variant: Optional[Literal["same", "two", "same_boundary", "two_boundaries"]] = None
    curve: Optional[str] = None

    @model_validator(mode="after")
    def _check_payload(self) -> "MoveRecord":
        if self.move == "conjugate" and self.word is None:
            raise ValueError("conjugate moves need a 'word'")
        if self.move == "stabilize" and self.sign not in (1, -1):
            raise ValueError("stabilize moves need sign +1 or -1")
        if self.move == "hopf" and (self.variant is None or self.curve is None):
            raise ValueError("hopf moves need a 'variant' and a 'curve'")
        return self


_RECORDS = TypeAdapter(list[MoveRecord])


def load_move_records(text: str) -> list[MoveRecord]:
    """Parse a JSON array of move records."""
    try:
        return _RECORDS.validate_python(json.loads(text))
    except json.JSONDecodeError as e:
        raise MoveError(f"Move script is not valid JSON: {e}") from e
    except ValidationError as e:
        raise MoveError(f"Invalid move script: {e}") from e


def dump_moves(moves: Union[MoveScript, list[Move], tuple[Move, ...]], indent: int = 2) -> str:
    items = moves.moves if isinstance(moves, MoveScript) else moves
    return json.dumps([move.to_record() for move in items], indent=indent, sort_keys=True)


def _transport_table(
    symbols: Mapping[str, Symbol], embedding: BasisEmbedding, forward: bool
) -> dict[str, Symbol]:
    table: dict[str, Symbol] = {}
    for name, symbol in symbols.items():
        if forward:
            table[name] = push_symbol(symbol, embedding)
            continue
        try:
            table[name] = pull_symbol(symbol, embedding)
        except SymbolValidationError:
            logger.debug(f"Dropping {name}: it does not survive destabilization")
    return table


def _transport_words(
    words: Mapping[str, MonodromyWord], embedding: BasisEmbedding, forward: bool
) -> dict[str, MonodromyWord]:
    table: dict[str, MonodromyWord] = {}
    for name, word in words.items():
        try:
            table[name] = push_word(word, embedding) if forward else pull_word(word, embedding)
        except SymbolValidationError:
            logger.debug(f"Dropping word {name}: it does not survive the move")
    return table


def record_to_move(
    record: MoveRecord,
    pob: PointedOpenBook,
    symbols: Mapping[str, Symbol],
    words: Optional[Mapping[str, MonodromyWord]] = None,
) -> Move:
    """Resolve a JSON record against the symbols in scope on the current page."""
    if record.move == "conjugate":
        return Move.conjugate(parse_word_text(record.word or "", pob.surface, symbols, words))
    if record.move == "stabilize":
        return Move.stabilize(record.sign)
    if record.move == "destabilize":
        return Move.destabilize()
    variant = HandleVariant.parse(record.variant or "")
    return Move.hopf(variant, parse_hopf_curve_spec(record.curve or ""))


def apply_records(
    start: PointedOpenBook,
    records: list[MoveRecord],
    symbols: Mapping[str, Symbol],
    words: Optional[Mapping[str, MonodromyWord]] = None,
) -> tuple[MoveScript, ReplayResult]:
    """Replay JSON records, carrying the symbol table across every change of page.

    Stabilization arcs and Hopf curves join the table under their own names, so
    later records can refer to them.
    """
    table: dict[str, Symbol] = dict(symbols)
    word_table: dict[str, MonodromyWord] = {
        name: word for name, word in (words or {}).items() if word.surface == start.surface
    }
    moves: list[Move] = []
    outcome = ReplayResult(start)
    current = start
    for record in records:
        move = record_to_move(record, current, table, word_table)
        before = set(collect_symbols(current.word))
        result, embedding, forward, added = _apply(current, move)
        if embedding is not None:
            table = _transport_table(table, embedding, forward)
            word_table = _transport_words(word_table, embedding, forward)
        table.update(added)
        after = set(collect_symbols(result.word))
        outcome.steps.append(
            ReplayStep(move, result, tuple(sorted(after - before)), tuple(sorted(before - after)))
        )
        moves.append(move)
        current = result
    logger.info(f"Applied {len(records)} move(s)")
    return MoveScript(start, tuple(moves)), outcome


def replay_summary(outcome: ReplayResult) -> dict[str, Any]:
    return {
        "steps": [
            {
                "move": step.move.to_record(),
                "word": step.result.word.to_text(),
                "n": step.result.surface.n,
                "added": list(step.added),
                "removed": list(step.removed),
            }
            for step in outcome.steps
        ],
        "end": outcome.end.word.to_text(),
    }
