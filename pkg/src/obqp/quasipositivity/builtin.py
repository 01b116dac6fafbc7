"""Built-in quasipositivity level rules."""

from typing import Optional

from obqp.calculus.homology import homologically_nontrivial, symbol_class
from obqp.models.certificate import LevelViolation, QPLevel
from obqp.models.surface import MarkedSurface
from obqp.models.word import Generator, GeneratorKind
from obqp.quasipositivity.base import BaseLevelRule


class QuasipositiveRule(BaseLevelRule):
    """Positive half-twists and arbitrary Dehn twists."""

    level = QPLevel.QP
    description = "Every half-twist letter is positive"

    def check_letter(
        self, surface: MarkedSurface, letter: Generator, position: int
    ) -> Optional[LevelViolation]:
        if letter.kind == GeneratorKind.HALF_TWIST and letter.sign < 0:
            return self._violation(position, "Negative half-twist", letter)
        if letter.kind == GeneratorKind.POINT_PUSH:
            return self._violation(position, "Point-push letter was not expanded", letter)
        return None


class StronglyQuasipositiveRule(BaseLevelRule):
    """Marked points in the collar, every twist supported away from it."""

    level = QPLevel.SQP
    description = "Marked points are collar points and all symbols avoid the collar"

    def check_surface(self, surface: MarkedSurface) -> list[LevelViolation]:
        return [
            self._violation(None, f"Marked point {point.id} is not a collar point")
            for point in surface.marked_points
            if not point.collar
        ]

    def check_letter(
        self, surface: MarkedSurface, letter: Generator, position: int
    ) -> Optional[LevelViolation]:
        if not letter.symbol.collar_avoiding:
            return self._violation(
                position, f"{letter.symbol.id} is not declared collar_avoiding", letter
            )
        return None


class SteinQuasipositiveRule(BaseLevelRule):
    """Positive Dehn twists about homologically nontrivial curves only."""

    level = QPLevel.STEIN
    description = "Every Dehn letter is positive and homologically nontrivial"

    def check_letter(
        self, surface: MarkedSurface, letter: Generator, position: int
    ) -> Optional[LevelViolation]:
        if letter.kind != GeneratorKind.DEHN:
            return None
        if letter.sign < 0:
            return self._violation(position, "Negative Dehn twist", letter)
        h1_class = symbol_class(surface, letter.symbol, self.convention)
        if not homologically_nontrivial(surface, h1_class, self.quotient):
            return self._violation(
                position,
                f"{letter.symbol.id} is null-homologous in {self.quotient.value}",
                letter,
            )
        return None
