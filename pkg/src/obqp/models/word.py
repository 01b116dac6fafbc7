"""Data models for monodromy words over twist generators."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

from obqp.constants import PUSH_POSITIVE_COPY, PUSH_PUNCTURE_SIGN
from obqp.models.surface import ArcSymbol, CurveSymbol, MarkedSurface


class GeneratorKind(str, Enum):
    """Kinds of twist letters."""

    DEHN = "dehn"
    HALF_TWIST = "half_twist"
    POINT_PUSH = "point_push"

    @property
    def prefix(self) -> str:
        return {"dehn": "D", "half_twist": "H", "point_push": "P"}[self.value]


@dataclass(frozen=True)
class ImageSymbol:
    """Lazy image w(s) of a curve or arc symbol under a conjugating word."""

    base: "Symbol"
    conjugator: "MonodromyWord"

    @property
    def is_arc(self) -> bool:
        return self.base.is_arc

    @property
    def root(self) -> Union[CurveSymbol, ArcSymbol]:
        """The declared symbol at the bottom of a chain of images."""
        symbol: Symbol = self
        while isinstance(symbol, ImageSymbol):
            symbol = symbol.base
        return symbol

    @property
    def id(self) -> str:
        return symbol_text(self)

    @property
    def collar_avoiding(self) -> bool:
        if not self.base.collar_avoiding:
            return False
        return all(letter.symbol.collar_avoiding for letter in self.conjugator.letters)


Symbol = Union[CurveSymbol, ArcSymbol, ImageSymbol]


def symbol_text(symbol: Symbol) -> str:
    """Render a symbol as it is written inside a letter, e.g. ``a @ (D[c])``."""
    if isinstance(symbol, ImageSymbol):
        return f"{symbol_text(symbol.base)} @ ({symbol.conjugator.to_text()})"
    return symbol.id


@dataclass(frozen=True)
class Generator:
    """A signed twist letter.

    Point-push letters carry the marked point they move in ``point``; for a
    loop given as an image h(d) this is the image of the base point under h.
    """

    kind: GeneratorKind
    symbol: Symbol
    sign: int = 1
    point: Optional[str] = None

    def inverse(self) -> "Generator":
        return Generator(self.kind, self.symbol, -self.sign, self.point)

    def cancels(self, other: "Generator") -> bool:
        return (
            self.kind == other.kind
            and self.symbol == other.symbol
            and self.point == other.point
            and self.sign == -other.sign
        )

    def to_text(self) -> str:
        inner = symbol_text(self.symbol)
        if self.kind == GeneratorKind.POINT_PUSH:
            inner = f"{inner},{self.point}"
        text = f"{self.kind.prefix}[{inner}]"
        return text if self.sign > 0 else f"{text}^-1"


@dataclass(frozen=True)
class MonodromyWord:
    """Finite product g1 * g2 * ... * gm acting rightmost letter first."""

    surface: MarkedSurface
    letters: tuple[Generator, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def to_text(self) -> str:
        if not self.letters:
            return "id"
        return " * ".join(letter.to_text() for letter in self.letters)


@dataclass(frozen=True)
class PushConvention:
    """Which parallel copy of a pushing loop carries the push sign.

    ``positive_copy`` is "left" or "right"; ``puncture_sign`` is the sign of the
    puncture class in the right-hand copy.
    """

    positive_copy: str = PUSH_POSITIVE_COPY
    puncture_sign: int = PUSH_PUNCTURE_SIGN

    def __post_init__(self) -> None:
        if self.positive_copy not in ("left", "right"):
            raise ValueError(f"positive_copy must be 'left' or 'right', got {self.positive_copy!r}")
        if self.puncture_sign not in (1, -1):
            raise ValueError(f"puncture_sign must be +1 or -1, got {self.puncture_sign}")
