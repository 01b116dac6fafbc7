"""Hopf stabilization: attach a 1-handle and twist along a curve crossing it once."""

import logging
from dataclasses import dataclass

from obqp.calculus.rewriting import collect_symbols
from obqp.calculus.transport import push_word
from obqp.exceptions import EmptyBraidError, InvalidHopfCurveError
from obqp.models.open_book import HopfCurveSpec, PointedOpenBook
from obqp.models.surface import CurveSymbol, HandleVariant, HomologyClass
from obqp.models.word import Generator, GeneratorKind, MonodromyWord
from obqp.surface.lattice import BasisEmbedding, handle_embedding

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HopfStabilization:
    result: PointedOpenBook
    curve: CurveSymbol
    embedding: BasisEmbedding


def hopf_curve(spec: HopfCurveSpec, embedding: BasisEmbedding) -> CurveSymbol:
    """The curve of a Hopf stabilization as a symbol on the enlarged page."""
    if len(spec.base_class) != embedding.source.rank:
        raise InvalidHopfCurveError(
            f"{spec.curve_id}: class has {len(spec.base_class)} coordinates, "
            f"the page before stabilization has rank {embedding.source.rank}"
        )
    if spec.handle_coefficient % 2 == 0:
        raise InvalidHopfCurveError(
            f"{spec.curve_id}: handle coordinate {spec.handle_coefficient} is even, "
            "so the curve does not cross the new handle"
        )
    coords = list(embedding.push_forward(spec.base_class))
    coords[embedding.new_index] = spec.handle_coefficient
    return CurveSymbol(
        spec.curve_id, HomologyClass(tuple(coords)), collar_avoiding=spec.collar_avoiding
    )


def stabilize_hopf(
    pob: PointedOpenBook, variant: HandleVariant, spec: HopfCurveSpec
) -> HopfStabilization:
    surface = pob.surface
    if surface.n == 0:
        raise EmptyBraidError("Hopf stabilization needs a braid with at least one strand")
    if spec.curve_id in collect_symbols(pob.word):
        raise InvalidHopfCurveError(f"Symbol {spec.curve_id} is already used by the word")

    target, embedding = handle_embedding(surface, variant)
    curve = hopf_curve(spec, embedding)
    moved = push_word(pob.word, embedding)
    letter = Generator(GeneratorKind.DEHN, curve, 1)
    result = PointedOpenBook(target, MonodromyWord(target, moved.letters + (letter,)))
    logger.debug(
        f"Hopf stabilized along {curve.id}: chi {surface.euler_characteristic} -> "
        f"{target.euler_characteristic}"
    )
    return HopfStabilization(result, curve, embedding)


def hopf_stabilize(
    pob: PointedOpenBook, variant: HandleVariant, spec: HopfCurveSpec
) -> PointedOpenBook:
    """Attach a 1-handle and precompose the monodromy with D[curve]."""
    return stabilize_hopf(pob, variant, spec).result
