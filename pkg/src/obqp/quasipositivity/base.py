"""Base class for quasipositivity level rules."""

from abc import ABC, abstractmethod
from typing import Optional

from obqp.calculus.homology import DEFAULT_CONVENTION
from obqp.models.certificate import LevelViolation, QPLevel
from obqp.models.surface import HomologyQuotient, MarkedSurface
from obqp.models.word import Generator, MonodromyWord, PushConvention


class BaseLevelRule(ABC):
    """A level of quasipositivity, checked letter by letter on a push-free word."""

    level: QPLevel = QPLevel.QP
    description: str = "Base quasipositivity level"

    def __init__(
        self,
        quotient: HomologyQuotient = HomologyQuotient.H1F,
        convention: PushConvention = DEFAULT_CONVENTION,
    ) -> None:
        self.quotient = quotient
        self.convention = convention

    def check_surface(self, surface: MarkedSurface) -> list[LevelViolation]:
        return []

    @abstractmethod
    def check_letter(
        self, surface: MarkedSurface, letter: Generator, position: int
    ) -> Optional[LevelViolation]:
        """Return a violation if the letter breaks this level's conditions."""
        pass

    def check(self, word: MonodromyWord) -> list[LevelViolation]:
        violations = self.check_surface(word.surface)
        for position, letter in enumerate(word.letters):
            violation = self.check_letter(word.surface, letter, position)
            if violation is not None:
                violations.append(violation)
        return violations

    def _violation(
        self, position: Optional[int], message: str, letter: Optional[Generator] = None
    ) -> LevelViolation:
        return LevelViolation(level=self.level, position=position, message=message, letter=letter)
