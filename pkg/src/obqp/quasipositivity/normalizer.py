"""Bounded breadth-first search for a quasipositive rewriting of a word."""

import logging
from dataclasses import dataclass
from typing import Any, Callable, Iterable, Iterator, Optional

import numpy as np

from obqp.calculus.homology import (
    DEFAULT_CONVENTION,
    compose_permutations,
    letter_matrix,
    letter_permutation,
    symbol_points,
)
from obqp.calculus.rewriting import (
    conjugation_rewrite,
    expand_point_push,
    free_reduce,
    inverse,
    unfold_letter,
)
from obqp.calculus.transport import push_symbol, push_word
from obqp.constants import (
    DEFAULT_MAX_FOLD_WIDTH,
    DEFAULT_NORMALIZE_BUDGET,
    DEFAULT_NORMALIZE_MAX_STATES,
)
from obqp.exceptions import NotDestabilizableError, ObqpError
from obqp.models.certificate import (
    CertificateEntry,
    DehnEntry,
    HalfTwistEntry,
    NormalizationResult,
    QPCertificate,
    QPLevel,
    VerificationGrade,
)
from obqp.models.open_book import PointedOpenBook
from obqp.models.surface import HomologyQuotient, MarkedSurface
from obqp.models.word import (
    Generator,
    GeneratorKind,
    ImageSymbol,
    MonodromyWord,
    PushConvention,
)
from obqp.moves.markov import destabilize
from obqp.quasipositivity.certificates import conjugate_certificate, verify_certificate
from obqp.quasipositivity.engine import QPClassifier, dehn_witness
from obqp.surface.lattice import BasisEmbedding

logger = logging.getLogger(__name__)

Lift = Callable[[QPCertificate], QPCertificate]


def _identity(cert: QPCertificate) -> QPCertificate:
    return cert


@dataclass(frozen=True)
class _Rewrite:
    """One sound step from a word, with the way a certificate travels back across it."""

    label: str
    word: MonodromyWord
    lift: Lift = _identity


@dataclass(frozen=True)
class _Node:
    word: MonodromyWord
    path: tuple[str, ...] = ()
    lifts: tuple[Lift, ...] = ()


def _replace_range(
    word: MonodromyWord, start: int, stop: int, letters: Iterable[Generator]
) -> MonodromyWord:
    return MonodromyWord(
        word.surface, word.letters[:start] + tuple(letters) + word.letters[stop:]
    )


def _supports_disjoint(
    surface: MarkedSurface, first: Generator, second: Generator, convention: PushConvention
) -> bool:
    if first.point is not None or second.point is not None:
        return False
    if symbol_points(surface, first.symbol) & symbol_points(surface, second.symbol):
        return False
    a = letter_matrix(surface, first, convention)
    b = letter_matrix(surface, second, convention)
    if not np.array_equal(a @ b, b @ a):
        return False
    pa = letter_permutation(surface, first)
    pb = letter_permutation(surface, second)
    return compose_permutations(pa, pb) == compose_permutations(pb, pa)


def _embed_certificate(
    cert: QPCertificate,
    embedding: BasisEmbedding,
    letter: Generator,
    leading: bool,
    convention: PushConvention,
) -> QPCertificate:
    """Lift a certificate across a destabilization, re-inserting the removed half-twist."""
    target = embedding.target
    entries: list[CertificateEntry] = []
    for entry in cert.entries:
        if isinstance(entry, HalfTwistEntry):
            entries.append(
                HalfTwistEntry(
                    push_word(entry.conjugator, embedding),
                    push_symbol(entry.arc, embedding),
                    entry.sign,
                )
            )
            continue
        curve = push_symbol(entry.curve, embedding)
        witness = None
        if entry.witness is not None:
            witness = dehn_witness(target, curve, cert.quotient, convention)
        entries.append(DehnEntry(curve, entry.sign, witness))
    removed = HalfTwistEntry(MonodromyWord(target), letter.symbol, letter.sign)
    ordered = [removed] + entries if leading else entries + [removed]
    return QPCertificate(cert.level, target, tuple(ordered), cert.quotient)


class QPNormalizer:
    """Searches sound rewrites of a word for a form the classifier accepts.

    Rewrites, in the order they are tried: free reduction, point-push
    expansion, folding w * g * w^-1 into one image letter, unfolding image
    letters, commuting declared-disjoint neighbours, cyclic rotation and
    positive syntactic destabilization. Among certificates found at the
    smallest depth the one with the smallest text wins.
    """

    def __init__(
        self,
        level: QPLevel = QPLevel.QP,
        quotient: HomologyQuotient = HomologyQuotient.H1F,
        convention: PushConvention = DEFAULT_CONVENTION,
        max_states: int = DEFAULT_NORMALIZE_MAX_STATES,
        max_fold_width: int = DEFAULT_MAX_FOLD_WIDTH,
        disjoint_pairs: Iterable[tuple[str, str]] = (),
        seed: int = 0,
    ) -> None:
        self.level = level
        self.quotient = quotient
        self.convention = convention
        self.max_states = max_states
        self.max_fold_width = max_fold_width
        self.disjoint = {frozenset(pair) for pair in disjoint_pairs}
        self.classifier = QPClassifier(quotient, convention)
        self.rng = np.random.default_rng(seed)

    def _rewrites(self, word: MonodromyWord) -> Iterator[_Rewrite]:
        letters = word.letters
        surface = word.surface

        reduced = free_reduce(word)
        if reduced != word:
            yield _Rewrite("reduce", reduced)

        for i, letter in enumerate(letters):
            if letter.kind == GeneratorKind.POINT_PUSH:
                expansion = expand_point_push(surface, letter, self.convention)
                yield _Rewrite(f"expand {i}", _replace_range(word, i, i + 1, expansion.letters))

        for width in range(1, self.max_fold_width + 1):
            for i in range(len(letters) - 2 * width):
                conj = MonodromyWord(surface, letters[i : i + width])
                tail = letters[i + width + 1 : i + 2 * width + 1]
                if tail != inverse(conj).letters:
                    continue
                folded = conjugation_rewrite(conj, letters[i + width])
                yield _Rewrite(
                    f"fold {i}:{width}", _replace_range(word, i, i + 2 * width + 1, (folded,))
                )

        for i, letter in enumerate(letters):
            if isinstance(letter.symbol, ImageSymbol):
                yield _Rewrite(
                    f"unfold {i}", _replace_range(word, i, i + 1, unfold_letter(surface, letter))
                )

        for i in range(len(letters) - 1):
            first, second = letters[i], letters[i + 1]
            if frozenset((first.symbol.id, second.symbol.id)) not in self.disjoint:
                continue
            if _supports_disjoint(surface, first, second, self.convention):
                yield _Rewrite(f"commute {i}", _replace_range(word, i, i + 2, (second, first)))

        if len(letters) > 1:
            head, tail_letter = letters[0], letters[-1]
            yield _Rewrite(
                f"rotate_left {head.to_text()}",
                MonodromyWord(surface, letters[1:] + (head,)),
                lambda cert, g=head: conjugate_certificate(
                    cert, MonodromyWord(cert.surface, (g,)), self.convention
                ),
            )
            yield _Rewrite(
                f"rotate_right {tail_letter.to_text()}",
                MonodromyWord(surface, (tail_letter,) + letters[:-1]),
                lambda cert, g=tail_letter: conjugate_certificate(
                    cert, MonodromyWord(cert.surface, (g.inverse(),)), self.convention
                ),
            )

        try:
            destab = destabilize(PointedOpenBook(surface, word))
        except NotDestabilizableError:
            return
        if destab.letter.sign > 0:
            yield _Rewrite(
                f"destabilize {destab.letter.to_text()}",
                destab.result.word,
                lambda cert, d=destab: _embed_certificate(
                    cert, d.embedding, d.letter, d.leading, self.convention
                ),
            )

    def _candidate(
        self, node: _Node, pob: PointedOpenBook
    ) -> Optional[tuple[QPCertificate, VerificationGrade]]:
        result = self.classifier.classify_word(node.word)
        cert = result.certificates.get(self.level)
        if cert is None:
            return None
        for lift in reversed(node.lifts):
            cert = lift(cert)
        try:
            verdict = verify_certificate(pob, cert, self.convention)
        except ObqpError as e:
            logger.debug(f"Lifted certificate rejected: {e}")
            return None
        if not verdict.valid or verdict.grade is None:
            logger.debug(f"Lifted certificate rejected: {verdict.reason}")
            return None
        return cert, verdict.grade

    def normalize(
        self, pob: PointedOpenBook, budget: int = DEFAULT_NORMALIZE_BUDGET
    ) -> NormalizationResult:
        if budget < 0:
            raise ValueError(f"Budget must be non-negative, got {budget}")
        frontier = [_Node(pob.word)]
        seen = {pob.word}
        explored = 0
        capped = False

        for depth in range(budget + 1):
            order = self.rng.permutation(len(frontier))
            found: list[tuple[str, QPCertificate, VerificationGrade, tuple[str, ...]]] = []
            for index in order:
                node = frontier[int(index)]
                explored += 1
                candidate = self._candidate(node, pob)
                if candidate is not None:
                    cert, grade = candidate
                    found.append((cert.to_text(), cert, grade, node.path))
            if found:
                _, cert, grade, path = min(found, key=lambda item: (item[0], item[3]))
                logger.info(f"Found a {self.level.value} form at depth {depth}")
                return NormalizationResult(cert, list(path), grade, explored)
            if depth == budget:
                break

            children: dict[MonodromyWord, _Node] = {}
            for node in frontier:
                try:
                    rewrites = list(self._rewrites(node.word))
                except ObqpError as e:
                    logger.debug(f"Skipping rewrites of {node.word.to_text()}: {e}")
                    continue
                for rewrite in rewrites:
                    if rewrite.word in seen or rewrite.word in children:
                        continue
                    children[rewrite.word] = _Node(
                        rewrite.word, node.path + (rewrite.label,), node.lifts + (rewrite.lift,)
                    )
            ordered = sorted(
                children.values(), key=lambda n: (n.word.to_text(), n.word.surface.n, n.path)
            )
            if explored + len(ordered) > self.max_states:
                ordered = ordered[: max(0, self.max_states - explored)]
                logger.warning(f"State cap of {self.max_states} reached at depth {depth + 1}")
                capped = True
                if not ordered:
                    return NormalizationResult(None, states_explored=explored, exhausted=True)
            seen.update(n.word for n in ordered)
            frontier = ordered
            if not frontier:
                break

        logger.info(f"No {self.level.value} form within budget {budget}")
        return NormalizationResult(None, states_explored=explored, exhausted=capped)


def normalize_to_qp(
    pob: PointedOpenBook,
    budget: int = DEFAULT_NORMALIZE_BUDGET,
    level: QPLevel = QPLevel.QP,
    **options: Any,
) -> Optional[QPCertificate]:
    """Certificate for a quasipositive form within ``budget`` rewrites, if one is found."""
    return QPNormalizer(level=level, **options).normalize(pob, budget).certificate
