"""Combinatorial Bennequin surfaces: one disk per marked point, one band per leading half-twist."""

import logging
import math
from typing import Optional

import networkx as nx

from obqp.braids.artin import braid_invariants
from obqp.braids.braid_word import permutation_cycles
from obqp.braids.compiler import compile_word
from obqp.calculus.homology import DEFAULT_CONVENTION, symbol_endpoints, word_permutation
from obqp.calculus.rewriting import expand_point_pushes
from obqp.exceptions import (
    BennequinConsistencyError,
    BennequinError,
    DiskCompileError,
    NotInBennequinFormError,
    SharpnessUndefinedError,
)
from obqp.models.bennequin import (
    Band,
    BennequinReport,
    BennequinSurfaceData,
    BoundaryGenus,
    SingularityCounts,
)
from obqp.models.open_book import PointedOpenBook
from obqp.models.word import GeneratorKind, PushConvention, symbol_text

logger = logging.getLogger(__name__)


def build_bennequin(
    pob: PointedOpenBook, convention: PushConvention = DEFAULT_CONVENTION
) -> BennequinSurfaceData:
    """Disks for the marked points and a band for each half-twist of the leading block.

    Letters after the block are the residual monodromy and add no bands; a
    half-twist among them means the word is not in Bennequin form.
    """
    surface = pob.surface
    if surface.n == 0:
        raise BennequinError("A Bennequin surface needs at least one marked point")

    word = expand_point_pushes(pob.word, convention)
    bands: list[Band] = []
    residual_start = len(word.letters)
    for position, letter in enumerate(word.letters):
        if letter.kind != GeneratorKind.HALF_TWIST:
            residual_start = position
            break
        bands.append(
            Band(
                index=len(bands) + 1,
                arc=symbol_text(letter.symbol),
                endpoints=symbol_endpoints(surface, letter.symbol),
                sign=letter.sign,
            )
        )

    residual = word.letters[residual_start:]
    for offset, letter in enumerate(residual):
        if letter.kind == GeneratorKind.HALF_TWIST:
            raise NotInBennequinFormError(
                f"Half-twist {letter.to_text()} at position {residual_start + offset + 1} "
                "follows a non-half-twist letter"
            )

    collar = all(p.collar for p in surface.marked_points) and all(
        letter.symbol.collar_avoiding for letter in word.letters
    )
    data = BennequinSurfaceData(
        disks=surface.point_ids,
        bands=tuple(bands),
        residual=tuple(letter.to_text() for letter in residual),
        permutation=word_permutation(pob.word),
        collar_conditions=collar,
        on_disk_page=surface.is_disk,
    )
    logger.debug(f"Built Bennequin surface: {data.n} disks, {data.band_count} bands")
    return data


def euler_characteristic(data: BennequinSurfaceData) -> int:
    return data.n - data.band_count


def singularity_counts(data: BennequinSurfaceData) -> SingularityCounts:
    positive = sum(1 for band in data.bands if band.sign > 0)
    return SingularityCounts(
        e_plus=data.n,
        e_minus=0,
        h_plus=positive,
        h_minus=data.band_count - positive,
    )


def band_graph(data: BennequinSurfaceData) -> nx.MultiGraph:
    graph = nx.MultiGraph()
    graph.add_nodes_from(data.disks)
    for band in data.bands:
        graph.add_edge(*band.endpoints, index=band.index, sign=band.sign)
    return graph


def boundary_and_genus(data: BennequinSurfaceData) -> BoundaryGenus:
    """Boundary components, connectivity and (for connected surfaces) genus."""
    components = len(permutation_cycles(data.permutation))
    graph = band_graph(data)
    pieces = nx.number_connected_components(graph)
    if pieces != 1:
        return BoundaryGenus(components, False, None, pieces)

    twice_genus = 2 - euler_characteristic(data) - components
    if twice_genus < 0 or twice_genus % 2:
        raise BennequinConsistencyError(
            f"Genus formula gives (2 - {euler_characteristic(data)} - {components})/2, "
            "which is not a non-negative integer"
        )
    return BoundaryGenus(components, True, twice_genus // 2, 1)


def self_linking_sqp(data: BennequinSurfaceData) -> int:
    """sl = -chi = l - n, defined when every band is positive."""
    if not data.all_bands_positive:
        negative = [band.index for band in data.bands if band.sign < 0]
        raise SharpnessUndefinedError(f"Bands {negative} are negative; sl is not determined")
    return data.band_count - data.n


def bennequin_bound_check(sl: int, chi: int) -> bool:
    """Whether sl <= -chi, the bound any Seifert surface imposes."""
    return sl <= -chi


def page_angles(data: BennequinSurfaceData) -> list[float]:
    count = data.band_count
    return [2 * math.pi * j / (count + 1) for j in range(1, count + 1)]


def _disk_self_linking(
    pob: PointedOpenBook, data: BennequinSurfaceData, convention: PushConvention
) -> Optional[int]:
    if not data.on_disk_page or data.residual:
        return None
    try:
        return braid_invariants(compile_word(pob.word, convention)).self_linking
    except DiskCompileError as e:
        logger.debug(f"No braid cross-check: {e}")
        return None


def bennequin_report(
    pob: PointedOpenBook, convention: PushConvention = DEFAULT_CONVENTION
) -> BennequinReport:
    """Everything about the Bennequin surface of a word, cross-checked on disk pages."""
    data = build_bennequin(pob, convention)
    chi = euler_characteristic(data)
    counts = singularity_counts(data)
    if counts.euler_characteristic != chi:
        raise BennequinConsistencyError(
            f"Singular point count {counts.euler_characteristic} differs from chi = {chi}"
        )

    sl: Optional[int] = None
    bound_holds: Optional[bool] = None
    if data.all_bands_positive:
        sl = self_linking_sqp(data)
        bound_holds = bennequin_bound_check(sl, chi)

    disk_sl = _disk_self_linking(pob, data, convention)
    if sl is not None and disk_sl is not None and disk_sl != sl:
        raise BennequinConsistencyError(f"Bennequin sl = {sl} but the braid gives {disk_sl}")

    return BennequinReport(
        data=data,
        chi=chi,
        counts=counts,
        boundary=boundary_and_genus(data),
        sl=sl,
        bound_holds=bound_holds,
        sharp=sl is not None and sl == -chi,
        angles=page_angles(data),
        disk_self_linking=disk_sl,
    )
