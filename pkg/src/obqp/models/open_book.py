"""Data models for pointed open books and the moves between them."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from obqp.exceptions import SurfaceMismatchError
from obqp.models.surface import HandleVariant, MarkedSurface
from obqp.models.word import MonodromyWord


@dataclass(frozen=True)
class PointedOpenBook:
    """Abstract pointed open book (F, P, phi) encoding a braid in the open book."""

    surface: MarkedSurface
    word: MonodromyWord

    def __post_init__(self) -> None:
        if self.word.surface != self.surface:
            raise SurfaceMismatchError("Monodromy word lives on a different surface")

    @classmethod
    def trivial(cls, surface: MarkedSurface) -> "PointedOpenBook":
        return cls(surface, MonodromyWord(surface))


class MoveKind(str, Enum):
    """Moves of the pointed open book calculus."""

    CONJUGATE = "conjugate"
    STABILIZE = "stabilize"
    DESTABILIZE = "destabilize"
    HOPF = "hopf"


@dataclass(frozen=True)
class HopfCurveSpec:
    """Curve added by a Hopf stabilization.

    ``base_class`` is given over the basis of the page before the handle is
    attached; ``handle_coefficient`` is the coordinate on the new handle class.
    """

    curve_id: str
    base_class: tuple[int, ...]
    handle_coefficient: int = 1
    collar_avoiding: bool = True

    def to_text(self) -> str:
        coords = ",".join(str(c) for c in self.base_class)
        text = f"{self.curve_id} class=[{coords}] handle={self.handle_coefficient}"
        if not self.collar_avoiding:
            text += " collar_avoiding=false"
        return text


@dataclass(frozen=True)
class Move:
    """One step of a move script."""

    kind: MoveKind
    word: Optional[MonodromyWord] = None
    sign: int = 1
    variant: Optional[HandleVariant] = None
    curve: Optional[HopfCurveSpec] = None

    @classmethod
    def conjugate(cls, word: MonodromyWord) -> "Move":
        return cls(MoveKind.CONJUGATE, word=word)

    @classmethod
    def stabilize(cls, sign: int = 1) -> "Move":
        return cls(MoveKind.STABILIZE, sign=sign)

    @classmethod
    def destabilize(cls) -> "Move":
        return cls(MoveKind.DESTABILIZE)

    @classmethod
    def hopf(cls, variant: HandleVariant, curve: HopfCurveSpec) -> "Move":
        return cls(MoveKind.HOPF, variant=variant, curve=curve)

    def to_record(self) -> dict[str, Any]:
        record: dict[str, Any] = {"move": self.kind.value}
        if self.kind == MoveKind.CONJUGATE and self.word is not None:
            record["word"] = self.word.to_text()
        elif self.kind == MoveKind.STABILIZE:
            record["sign"] = self.sign
        elif self.kind == MoveKind.HOPF and self.variant and self.curve:
            record["variant"] = "same" if self.variant == HandleVariant.SAME_BOUNDARY else "two"
            record["curve"] = self.curve.to_text()
        return record


@dataclass(frozen=True)
class MoveScript:
    """Ordered moves starting from a recorded pointed open book."""

    start: PointedOpenBook
    moves: tuple[Move, ...] = ()

    def __len__(self) -> int:
        return len(self.moves)


@dataclass(frozen=True)
class ReplayStep:
    """Effect of one replayed move on the symbol table."""

    move: Move
    result: PointedOpenBook
    added: tuple[str, ...] = ()
    removed: tuple[str, ...] = ()


@dataclass
class ReplayResult:
    """Outcome of replaying a move script."""

    start: PointedOpenBook
    steps: list[ReplayStep] = field(default_factory=list)

    @property
    def end(self) -> PointedOpenBook:
        return self.steps[-1].result if self.steps else self.start

    def renamings(self) -> list[dict[str, list[str]]]:
        return [{"added": list(s.added), "removed": list(s.removed)} for s in self.steps]
