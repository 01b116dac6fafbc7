"""Data models for marked surfaces and the curve and arc symbols on them."""

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from obqp.constants import (
    HANDLE_SAME_BOUNDARY,
    HANDLE_TWO_BOUNDARIES,
    QUOTIENT_H1F,
    QUOTIENT_H1F_MINUS_P,
)

IntMatrix = tuple[tuple[int, ...], ...]


class HomologyQuotient(str, Enum):
    """Group in which the Stein test measures homological nontriviality."""

    H1F = QUOTIENT_H1F
    H1F_MINUS_P = QUOTIENT_H1F_MINUS_P


class HandleVariant(str, Enum):
    """Ways of attaching an oriented 1-handle to a page."""

    SAME_BOUNDARY = HANDLE_SAME_BOUNDARY
    TWO_BOUNDARIES = HANDLE_TWO_BOUNDARIES

    @classmethod
    def parse(cls, text: str) -> "HandleVariant":
        aliases = {"same": cls.SAME_BOUNDARY, "two": cls.TWO_BOUNDARIES}
        if text in aliases:
            return aliases[text]
        return cls(text)


@dataclass(frozen=True)
class MarkedPoint:
    """A marked point of a page; ``collar`` places it on the collar's interior edge."""

    id: str
    collar: bool = False


@dataclass(frozen=True)
class MarkedSurface:
    """Abstract page F of genus g with b boundary components and ordered marked points.

    The homology basis of H1(F - P) is ordered a1, b1, ..., ag, bg, d1, ..., d(b-1),
    e1, ..., en and never changes once the surface is built.
    """

    genus: int
    boundary_count: int
    marked_points: tuple[MarkedPoint, ...] = ()

    @property
    def n(self) -> int:
        return len(self.marked_points)

    @property
    def rank(self) -> int:
        return 2 * self.genus + (self.boundary_count - 1) + self.n

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.boundary_count

    @property
    def is_disk(self) -> bool:
        return self.genus == 0 and self.boundary_count == 1

    @property
    def point_ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.marked_points)

    @property
    def puncture_offset(self) -> int:
        """Index of e1 in the basis."""
        return 2 * self.genus + self.boundary_count - 1

    def point_index(self, point_id: str) -> int:
        """Zero-based position of a marked point."""
        for index, point in enumerate(self.marked_points):
            if point.id == point_id:
                return index
        raise KeyError(point_id)

    def has_point(self, point_id: str) -> bool:
        return any(p.id == point_id for p in self.marked_points)

    def puncture_index(self, point_id: str) -> int:
        """Basis index of the puncture class e_k of a marked point."""
        return self.puncture_offset + self.point_index(point_id)

    def basis_labels(self) -> tuple[str, ...]:
        labels: list[str] = []
        for i in range(1, self.genus + 1):
            labels.extend([f"a{i}", f"b{i}"])
        labels.extend(f"d{j}" for j in range(1, self.boundary_count))
        labels.extend(f"e{k}" for k in range(1, self.n + 1))
        return tuple(labels)

    def describe(self) -> dict[str, object]:
        return {
            "genus": self.genus,
            "boundary_count": self.boundary_count,
            "marked_points": [{"id": p.id, "collar": p.collar} for p in self.marked_points],
            "rank": self.rank,
            "euler_characteristic": self.euler_characteristic,
        }


@dataclass(frozen=True)
class HomologyClass:
    """Integer coordinates over the fixed basis of H1(F - P)."""

    coords: tuple[int, ...]

    @classmethod
    def zero(cls, rank: int) -> "HomologyClass":
        return cls(tuple([0] * rank))

    @classmethod
    def from_vector(cls, vector: np.ndarray) -> "HomologyClass":
        return cls(tuple(int(x) for x in vector))

    def vector(self) -> np.ndarray:
        return np.array([int(x) for x in self.coords], dtype=object)

    def __len__(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class DiskPlacement:
    """Position of a symbol on a disk page, given as a braid image of a standard one.

    ``kind`` is "arc" for the standard arc joining strands start and start + 1,
    and "block" for the round curve enclosing strands start..stop. ``conjugator``
    holds sigma letters as signed strand indices.
    """

    kind: str
    start: int
    stop: int
    conjugator: tuple[int, ...] = ()


@dataclass(frozen=True)
class CurveSymbol:
    """A simple closed curve on the page, known only through declared algebraic data."""

    id: str
    h1_class: HomologyClass
    collar_avoiding: bool = False
    declared_action: Optional[IntMatrix] = None
    through_points: tuple[str, ...] = ()
    disk: Optional[DiskPlacement] = None

    @property
    def is_arc(self) -> bool:
        return False


@dataclass(frozen=True)
class ArcSymbol:
    """An embedded arc joining two distinct marked points."""

    id: str
    endpoints: tuple[str, str]
    collar_avoiding: bool = False
    declared_action: Optional[IntMatrix] = None
    disk: Optional[DiskPlacement] = None

    @property
    def is_arc(self) -> bool:
        return True
