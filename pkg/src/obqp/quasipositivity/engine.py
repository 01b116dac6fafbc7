"""Syntactic classification of monodromy words into quasipositivity levels."""

import logging
from typing import Optional

from obqp.calculus.homology import DEFAULT_CONVENTION, quotient_coordinates, symbol_class
from obqp.calculus.rewriting import compose, expand_point_pushes
from obqp.models.certificate import (
    CertificateEntry,
    ClassificationResult,
    DehnEntry,
    HalfTwistEntry,
    QPCertificate,
    QPLevel,
)
from obqp.models.open_book import PointedOpenBook
from obqp.models.surface import HomologyQuotient, MarkedSurface
from obqp.models.word import (
    GeneratorKind,
    ImageSymbol,
    MonodromyWord,
    PushConvention,
    Symbol,
)
from obqp.quasipositivity.base import BaseLevelRule
from obqp.quasipositivity.builtin import (
    QuasipositiveRule,
    SteinQuasipositiveRule,
    StronglyQuasipositiveRule,
)

logger = logging.getLogger(__name__)

LEVEL_REGISTRY: dict[QPLevel, type[BaseLevelRule]] = {
    QPLevel.QP: QuasipositiveRule,
    QPLevel.SQP: StronglyQuasipositiveRule,
    QPLevel.STEIN: SteinQuasipositiveRule,
}


def flatten_image(surface: MarkedSurface, symbol: Symbol) -> tuple[MonodromyWord, Symbol]:
    """Split h2(h1(a)) into the conjugator h2 * h1 and the declared symbol a."""
    if not isinstance(symbol, ImageSymbol):
        return MonodromyWord(surface), symbol
    inner, base = flatten_image(surface, symbol.base)
    return compose(symbol.conjugator, inner), base


def dehn_witness(
    surface: MarkedSurface,
    curve: Symbol,
    quotient: HomologyQuotient,
    convention: PushConvention = DEFAULT_CONVENTION,
) -> tuple[int, ...]:
    return quotient_coordinates(surface, symbol_class(surface, curve, convention), quotient)


def build_certificate(
    word: MonodromyWord,
    level: QPLevel,
    quotient: HomologyQuotient = HomologyQuotient.H1F,
    convention: PushConvention = DEFAULT_CONVENTION,
) -> QPCertificate:
    """Certificate reading off a push-free word letter by letter."""
    surface = word.surface
    entries: list[CertificateEntry] = []
    for letter in word.letters:
        if letter.kind == GeneratorKind.HALF_TWIST:
            conjugator, arc = flatten_image(surface, letter.symbol)
            entries.append(HalfTwistEntry(conjugator, arc, letter.sign))
        else:
            witness = None
            if level == QPLevel.STEIN:
                witness = dehn_witness(surface, letter.symbol, quotient, convention)
            entries.append(DehnEntry(letter.symbol, letter.sign, witness))
    return QPCertificate(level, surface, tuple(entries), quotient)


class QPClassifier:
    """Runs the enabled level rules over a word and derives certificates."""

    def __init__(
        self,
        quotient: HomologyQuotient = HomologyQuotient.H1F,
        convention: PushConvention = DEFAULT_CONVENTION,
        levels: Optional[list[QPLevel]] = None,
    ) -> None:
        self.quotient = quotient
        self.convention = convention
        self._rules: dict[QPLevel, BaseLevelRule] = {}
        self._initialize_rules(levels or list(LEVEL_REGISTRY))

    def _initialize_rules(self, levels: list[QPLevel]) -> None:
        if QPLevel.QP not in levels:
            levels = [QPLevel.QP] + levels
        for level in levels:
            rule_class = LEVEL_REGISTRY[level]
            self._rules[level] = rule_class(self.quotient, self.convention)
            logger.debug(f"Enabled level rule: {level.value}")

    def classify_word(self, word: MonodromyWord) -> ClassificationResult:
        """Verdicts on the word as written, with point-pushes expanded first."""
        expanded = expand_point_pushes(word, self.convention)
        found = {level: rule.check(expanded) for level, rule in self._rules.items()}

        qp = not found.get(QPLevel.QP)
        sqp = qp and QPLevel.SQP in found and not found[QPLevel.SQP]
        stein = qp and QPLevel.STEIN in found and not found[QPLevel.STEIN]
        result = ClassificationResult(qp=qp, sqp=sqp, stein=stein, quotient=self.quotient)
        for violations in found.values():
            result.violations.extend(violations)

        for level in self._rules:
            if result.holds(level):
                result.certificates[level] = build_certificate(
                    expanded, level, self.quotient, self.convention
                )
        logger.debug(f"Classified {len(word)} letters: qp={qp} sqp={sqp} stein={stein}")
        return result

    def classify(self, pob: PointedOpenBook) -> ClassificationResult:
        return self.classify_word(pob.word)


def classify(
    pob: PointedOpenBook,
    quotient: HomologyQuotient = HomologyQuotient.H1F,
    convention: PushConvention = DEFAULT_CONVENTION,
) -> ClassificationResult:
    return QPClassifier(quotient, convention).classify(pob)
