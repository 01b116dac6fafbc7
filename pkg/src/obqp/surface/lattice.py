"""Marked surfaces, their homology lattice and symbol validation."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence, Union

import numpy as np

from obqp.braids.braid_word import sigma_permutation
from obqp.exceptions import (
    ClosedPageError,
    HandleVariantError,
    SurfaceError,
    SymbolValidationError,
)
from obqp.models.surface import (
    ArcSymbol,
    CurveSymbol,
    DiskPlacement,
    HandleVariant,
    HomologyClass,
    IntMatrix,
    MarkedPoint,
    MarkedSurface,
)
from obqp.models.word import ImageSymbol, Symbol

logger = logging.getLogger(__name__)

PointSpec = Union[MarkedPoint, str, tuple[str, bool]]


def build_surface(
    genus: int,
    boundary_count: int,
    marked_points: Sequence[PointSpec] = (),
) -> MarkedSurface:
    """Build a page of genus g with b boundary components and ordered marked points."""
    if boundary_count < 1:
        raise ClosedPageError(
            f"Pages of open books have boundary; got boundary_count={boundary_count}"
        )
    if genus < 0:
        raise SurfaceError(f"Genus must be non-negative, got {genus}")

    points: list[MarkedPoint] = []
    for spec in marked_points:
        if isinstance(spec, MarkedPoint):
            points.append(spec)
        elif isinstance(spec, str):
            points.append(MarkedPoint(spec))
        else:
            points.append(MarkedPoint(spec[0], bool(spec[1])))

    ids = [p.id for p in points]
    duplicates = sorted({i for i in ids if ids.count(i) > 1})
    if duplicates:
        raise SurfaceError(f"Duplicate marked point ids: {', '.join(duplicates)}")

    surface = MarkedSurface(genus, boundary_count, tuple(points))
    logger.debug(f"Built surface g={genus} b={boundary_count} n={surface.n} rank={surface.rank}")
    return surface


def subcritical_rank(surface: MarkedSurface) -> int:
    """Number of S1xS2 summands left after trivializing the monodromy."""
    return 2 * surface.genus + surface.boundary_count - 1


# Homology matrices hold Python ints: twist words grow their entries without bound.
EXACT = object


def _read_only(matrix: np.ndarray) -> np.ndarray:
    matrix.setflags(write=False)
    return matrix


def identity_matrix(rank: int) -> np.ndarray:
    return np.eye(rank, dtype=EXACT)


def exact_vector(coords: Sequence[int]) -> np.ndarray:
    return np.array([int(x) for x in coords], dtype=EXACT)


@lru_cache(maxsize=256)
def _form(genus: int, boundary_count: int, n: int) -> np.ndarray:
    rank = 2 * genus + boundary_count - 1 + n
    form = np.zeros((rank, rank), dtype=EXACT)
    for i in range(genus):
        form[2 * i, 2 * i + 1] = 1
        form[2 * i + 1, 2 * i] = -1
    return _read_only(form)


def intersection_form(surface: MarkedSurface) -> np.ndarray:
    """Matrix J of the intersection pairing, <x, y> = x^T J y."""
    return _form(surface.genus, surface.boundary_count, surface.n)


def pairing(surface: MarkedSurface, x: Sequence[int], y: Sequence[int]) -> int:
    form = intersection_form(surface)
    return int(exact_vector(x) @ form @ exact_vector(y))


def picard_lefschetz(
    surface: MarkedSurface,
    h1_class: Union[HomologyClass, Sequence[int]],
    power: int = 1,
) -> np.ndarray:
    """Action of D_gamma^power: x -> x + power * <x, gamma> gamma."""
    coords = h1_class.coords if isinstance(h1_class, HomologyClass) else tuple(h1_class)
    if len(coords) != surface.rank:
        raise SymbolValidationError(
            f"Class has {len(coords)} coordinates, surface rank is {surface.rank}"
        )
    gamma = exact_vector(coords)
    form = intersection_form(surface)
    return identity_matrix(surface.rank) + power * np.outer(gamma, form @ gamma)


def swap_matrix(surface: MarkedSurface, first: str, second: str) -> np.ndarray:
    """Default half-twist action: exchange the puncture classes of two points."""
    i = surface.puncture_index(first)
    j = surface.puncture_index(second)
    matrix = identity_matrix(surface.rank)
    matrix[[i, j]] = matrix[[j, i]]
    return matrix


def preserves_form(surface: MarkedSurface, matrix: np.ndarray) -> bool:
    form = intersection_form(surface)
    return bool(np.array_equal(matrix.T @ form @ matrix, form))


def integer_inverse(matrix: np.ndarray) -> Optional[np.ndarray]:
    """Exact inverse of a unimodular integer matrix, or None.

    Gauss-Jordan elimination over the rationals; the matrix is unimodular
    exactly when every entry of the inverse is an integer.
    """
    size = matrix.shape[0]
    if matrix.shape != (size, size):
        return None
    rows = [
        [Fraction(int(x)) for x in matrix[i]] + [Fraction(int(i == j)) for j in range(size)]
        for i in range(size)
    ]
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            return None
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        rows[col] = [x / lead for x in rows[col]]
        for r in range(size):
            factor = rows[r][col]
            if r != col and factor != 0:
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    inverse = [row[size:] for row in rows]
    if any(x.denominator != 1 for row in inverse for x in row):
        return None
    return np.array([[int(x) for x in row] for row in inverse], dtype=EXACT).reshape(size, size)


def as_matrix(rows: IntMatrix) -> np.ndarray:
    if not rows:
        return np.zeros((0, 0), dtype=EXACT)
    if len({len(row) for row in rows}) != 1:
        raise SymbolValidationError("Matrix rows have different lengths")
    return np.array([[int(x) for x in row] for row in rows], dtype=EXACT)


def to_rows(matrix: np.ndarray) -> IntMatrix:
    return tuple(tuple(int(x) for x in row) for row in matrix)


@dataclass(frozen=True)
class BasisEmbedding:
    """Inclusion of the homology basis of one surface into another.

    ``index_map[i]`` is the target index of source basis vector i; target
    indices outside the image are new classes (``new_index`` is the one a
    handle or point adds).
    """

    source: MarkedSurface
    target: MarkedSurface
    index_map: tuple[int, ...]
    new_index: Optional[int] = None

    def push_forward(self, coords: Sequence[int]) -> tuple[int, ...]:
        if len(coords) != self.source.rank:
            raise SymbolValidationError(
                f"Class has {len(coords)} coordinates, expected {self.source.rank}"
            )
        result = [0] * self.target.rank
        for i, value in enumerate(coords):
            result[self.index_map[i]] = int(value)
        return tuple(result)

    def pull_back(self, coords: Sequence[int]) -> tuple[int, ...]:
        if len(coords) != self.target.rank:
            raise SymbolValidationError(
                f"Class has {len(coords)} coordinates, expected {self.target.rank}"
            )
        mapped = set(self.index_map)
        dropped = [i for i in range(self.target.rank) if i not in mapped and coords[i] != 0]
        if dropped:
            labels = self.target.basis_labels()
            raise SymbolValidationError(
                f"Class has non-zero coordinates on {', '.join(labels[i] for i in dropped)}"
            )
        return tuple(int(coords[j]) for j in self.index_map)

    def push_action(self, rows: IntMatrix, h1_class: Sequence[int]) -> IntMatrix:
        """Extend a declared action to the target, as the twist about ``h1_class`` would."""
        source = as_matrix(rows)
        target = picard_lefschetz(self.target, self.push_forward(h1_class))
        index = np.array(self.index_map, dtype=np.int64)
        result = target.copy()
        result[np.ix_(index, index)] = source
        return to_rows(result)

    def pull_action(self, rows: IntMatrix) -> IntMatrix:
        matrix = as_matrix(rows)
        index = np.array(self.index_map, dtype=np.int64)
        return to_rows(matrix[np.ix_(index, index)])


def point_embedding(
    surface: MarkedSurface, point: MarkedPoint
) -> tuple[MarkedSurface, BasisEmbedding]:
    """Append a marked point; its puncture class becomes the last basis vector."""
    if surface.has_point(point.id):
        raise SurfaceError(f"Marked point {point.id} already exists")
    target = MarkedSurface(surface.genus, surface.boundary_count, surface.marked_points + (point,))
    embedding = BasisEmbedding(surface, target, tuple(range(surface.rank)), surface.rank)
    return target, embedding


def remove_last_point(surface: MarkedSurface) -> tuple[MarkedSurface, BasisEmbedding]:
    """Surface without its last marked point, with the embedding back into ``surface``."""
    if surface.n == 0:
        raise SurfaceError("Surface has no marked points")
    smaller = MarkedSurface(surface.genus, surface.boundary_count, surface.marked_points[:-1])
    embedding = BasisEmbedding(smaller, surface, tuple(range(smaller.rank)), smaller.rank)
    return smaller, embedding


def handle_embedding(
    surface: MarkedSurface, variant: HandleVariant
) -> tuple[MarkedSurface, BasisEmbedding]:
    """Attach an oriented 1-handle and embed the old basis into the new page."""
    g, b, n = surface.genus, surface.boundary_count, surface.n
    index_map: list[int] = []

    if variant == HandleVariant.SAME_BOUNDARY:
        target = MarkedSurface(g, b + 1, surface.marked_points)
        index_map.extend(range(2 * g + b - 1))
        index_map.extend(2 * g + b + k for k in range(n))
        new_index = 2 * g + b - 1
    elif variant == HandleVariant.TWO_BOUNDARIES:
        if b < 2:
            raise HandleVariantError(
                "A handle joining two boundary components needs at least two of them"
            )
        target = MarkedSurface(g + 1, b - 1, surface.marked_points)
        index_map.extend(range(2 * g))
        # d_1 .. d_(b-2) shift past the new genus pair; d_(b-1) becomes a_(g+1)
        index_map.extend(2 * g + 2 + j for j in range(b - 2))
        index_map.append(2 * g)
        index_map.extend(2 * g + b + k for k in range(n))
        new_index = 2 * g + 1
    else:
        raise HandleVariantError(f"Unknown handle variant: {variant}")

    logger.debug(
        f"Attached {variant.value} handle: (g={g}, b={b}) -> "
        f"(g={target.genus}, b={target.boundary_count})"
    )
    return target, BasisEmbedding(surface, target, tuple(index_map), new_index)


def attach_handle(surface: MarkedSurface, variant: HandleVariant) -> MarkedSurface:
    return handle_embedding(surface, variant)[0]


def placement_permutation(surface: MarkedSurface, placement: DiskPlacement) -> tuple[int, ...]:
    return sigma_permutation(placement.conjugator, surface.n)


def disk_arc_endpoints(surface: MarkedSurface, placement: DiskPlacement) -> tuple[str, str]:
    """Endpoints of the braid image of the standard arc joining strands i and i + 1."""
    perm = placement_permutation(surface, placement)
    points = surface.point_ids
    return points[perm[placement.start - 1]], points[perm[placement.stop - 1]]


def disk_curve_class(surface: MarkedSurface, placement: DiskPlacement) -> HomologyClass:
    """Class of the braid image of the round curve around strands start..stop."""
    perm = placement_permutation(surface, placement)
    coords = [0] * surface.rank
    for strand in range(placement.start - 1, placement.stop):
        coords[surface.puncture_offset + perm[strand]] = 1
    return HomologyClass(tuple(coords))


def _validate_placement(surface: MarkedSurface, symbol: Union[ArcSymbol, CurveSymbol]) -> None:
    placement = symbol.disk
    if placement is None:
        return
    if not surface.is_disk:
        raise SymbolValidationError(f"{symbol.id}: disk placements need a disk page")
    n = surface.n
    if placement.kind == "arc":
        if not symbol.is_arc:
            raise SymbolValidationError(f"{symbol.id}: curves take block placements")
        if placement.stop != placement.start + 1 or not 1 <= placement.start < n:
            raise SymbolValidationError(
                f"{symbol.id}: std({placement.start},{placement.stop}) is not a standard arc "
                f"on {n} strands"
            )
    elif placement.kind == "block":
        if symbol.is_arc:
            raise SymbolValidationError(f"{symbol.id}: arcs take std placements")
        if not 1 <= placement.start <= placement.stop <= n:
            raise SymbolValidationError(
                f"{symbol.id}: block({placement.start},{placement.stop}) is out of range "
                f"for {n} strands"
            )
    else:
        raise SymbolValidationError(f"{symbol.id}: unknown placement kind {placement.kind!r}")
    bad = [x for x in placement.conjugator if x == 0 or abs(x) > n - 1]
    if bad:
        raise SymbolValidationError(f"{symbol.id}: conjugator letters {bad} out of range")

    if isinstance(symbol, ArcSymbol):
        if set(disk_arc_endpoints(surface, placement)) != set(symbol.endpoints):
            raise SymbolValidationError(f"{symbol.id}: endpoints disagree with its disk placement")
    elif disk_curve_class(surface, placement) != symbol.h1_class:
        raise SymbolValidationError(f"{symbol.id}: class disagrees with its disk placement")


def _validate_declared_action(
    surface: MarkedSurface, symbol_id: str, rows: IntMatrix
) -> np.ndarray:
    matrix = as_matrix(rows)
    if matrix.shape != (surface.rank, surface.rank):
        raise SymbolValidationError(
            f"{symbol_id}: declared action is {matrix.shape[0]}x{matrix.shape[1]}, "
            f"expected {surface.rank}x{surface.rank}"
        )
    if not preserves_form(surface, matrix):
        raise SymbolValidationError(f"{symbol_id}: declared action does not preserve the pairing")
    if integer_inverse(matrix) is None:
        raise SymbolValidationError(f"{symbol_id}: declared action is not unimodular")
    return matrix


def validate_symbol(surface: MarkedSurface, symbol: Symbol) -> None:
    """Check that a symbol's declared data fits the surface."""
    if isinstance(symbol, ImageSymbol):
        validate_symbol(surface, symbol.base)
        if symbol.conjugator.surface != surface:
            raise SymbolValidationError(f"{symbol.id}: conjugator lives on another surface")
        for letter in symbol.conjugator.letters:
            validate_symbol(surface, letter.symbol)
        return

    if isinstance(symbol, ArcSymbol):
        first, second = symbol.endpoints
        if first == second:
            raise SymbolValidationError(f"{symbol.id}: arc endpoints must be distinct")
        for point in symbol.endpoints:
            if not surface.has_point(point):
                raise SymbolValidationError(f"{symbol.id}: unknown marked point {point}")
        if symbol.declared_action is not None:
            matrix = _validate_declared_action(surface, symbol.id, symbol.declared_action)
            coords = [0] * surface.rank
            coords[surface.puncture_index(first)] = 1
            coords[surface.puncture_index(second)] = 1
            if not np.array_equal(matrix @ matrix, picard_lefschetz(surface, coords)):
                raise SymbolValidationError(
                    f"{symbol.id}: declared action does not square to the boundary twist"
                )
        _validate_placement(surface, symbol)
        return

    if len(symbol.h1_class) != surface.rank:
        raise SymbolValidationError(
            f"{symbol.id}: class has {len(symbol.h1_class)} coordinates, "
            f"surface rank is {surface.rank}"
        )
    for point in symbol.through_points:
        if not surface.has_point(point):
            raise SymbolValidationError(f"{symbol.id}: unknown marked point {point}")
        if symbol.collar_avoiding and surface.marked_points[surface.point_index(point)].collar:
            raise SymbolValidationError(
                f"{symbol.id}: passes through collar point {point} but is declared collar_avoiding"
            )
    if symbol.declared_action is not None:
        matrix = _validate_declared_action(surface, symbol.id, symbol.declared_action)
        offset = surface.puncture_offset
        identity = identity_matrix(surface.rank)
        if not np.array_equal(matrix[:, offset:], identity[:, offset:]):
            raise SymbolValidationError(f"{symbol.id}: declared action moves puncture classes")
    _validate_placement(surface, symbol)
