"""Tests for the word calculus: rewriting, homology action, equality and transport."""

import pytest

from obqp.calculus.equality import WordEquality, equal_words
from obqp.calculus.homology import (
    act_on_homology,
    image_point,
    symbol_class,
    symbol_endpoints,
    validate_letter,
    word_permutation,
)
from obqp.calculus.rewriting import (
    canonical_form,
    collect_symbols,
    compose,
    conjugation_rewrite,
    expand_point_pushes,
    free_reduce,
    inverse,
    push_copy_symbols,
    unfold_images,
)
from obqp.calculus.transport import pull_word, push_word
from obqp.exceptions import SurfaceMismatchError, SymbolValidationError
from obqp.models.open_book import PointedOpenBook
from obqp.models.surface import ArcSymbol, CurveSymbol, HomologyClass, MarkedPoint, MarkedSurface
from obqp.models.word import Generator, GeneratorKind, ImageSymbol, MonodromyWord, PushConvention
from obqp.parsers import parse_word_text
from obqp.parsers.session import Session
from obqp.surface.lattice import build_surface, point_embedding


def _torus() -> tuple[MarkedSurface, dict[str, CurveSymbol]]:
    surface = build_surface(1, 1, ["p1"])
    return surface, {
        "a": CurveSymbol("a", HomologyClass((1, 0, 0))),
        "b": CurveSymbol("b", HomologyClass((0, 1, 0))),
    }


class TestRewriting:
    """Tests for composition, inversion and free reduction."""

    def test_compose_concatenates(
        self, disk3: MarkedSurface, disk3_arcs: dict[str, ArcSymbol]
    ) -> None:
        """compose(first, second) lists the letters of first, then second."""
        first = parse_word_text("H[a1]", disk3, disk3_arcs)
        second = parse_word_text("H[a2]^-1", disk3, disk3_arcs)

        assert compose(first, second).to_text() == "H[a1] * H[a2]^-1"

    def test_compose_rejects_other_surface(
        self, disk3: MarkedSurface, disk3_arcs: dict[str, ArcSymbol]
    ) -> None:
        word = parse_word_text("H[a1]", disk3, disk3_arcs)
        with pytest.raises(SurfaceMismatchError):
            compose(word, MonodromyWord(build_surface(0, 1, ["p1", "p2"])))

    def test_inverse_reverses_and_flips(
        self, disk3: MarkedSurface, disk3_arcs: dict[str, ArcSymbol]
    ) -> None:
        word = parse_word_text("H[a1] * H[a2]^-1", disk3, disk3_arcs)
        assert inverse(word).to_text() == "H[a2] * H[a1]^-1"

    def test_free_reduce_cancels(
        self, disk3: MarkedSurface, disk3_arcs: dict[str, ArcSymbol]
    ) -> None:
        """w * w^-1 reduces to the identity."""
        word = parse_word_text("H[a1] * H[a2]^-1", disk3, disk3_arcs)
        assert free_reduce(compose(word, inverse(word))).is_empty

    def test_identity_text(self, disk3: MarkedSurface) -> None:
        assert MonodromyWord(disk3).to_text() == "id"

    def test_conjugation_rewrite_and_unfold(
        self, disk3: MarkedSurface, disk3_arcs: dict[str, ArcSymbol]
    ) -> None:
        """h * g * h^-1 folds into one image letter and unfolds back."""
        h = parse_word_text("H[a2]", disk3, disk3_arcs)
        letter = parse_word_text("H[a1]", disk3, disk3_arcs).letters[0]
        folded = conjugation_rewrite(h, letter)

        assert folded.to_text() == "H[a1 @ (H[a2])]"
        unfolded = unfold_images(MonodromyWord(disk3, (folded,)))
        assert unfolded.to_text() == "H[a2] * H[a1] * H[a2]^-1"

    def test_collect_symbols_sees_conjugators(
        self, disk3: MarkedSurface, disk3_arcs: dict[str, ArcSymbol]
    ) -> None:
        word = parse_word_text("H[a1 @ (H[a2])]", disk3, disk3_arcs)
        assert sorted(collect_symbols(word)) == ["a1", "a2"]


class TestPointPush:
    """Tests for point-push expansion."""

    def test_expansion_into_parallel_copies(self, annulus_pob: PointedOpenBook) -> None:
        """P[d1,p1] becomes D[d1_L] * D[d1_R]^-1."""
        expanded = expand_point_pushes(annulus_pob.word)

        assert expanded.to_text() == "D[d1_L] * D[d1_R]^-1"
        left, right = (letter.symbol for letter in expanded.letters)
        assert isinstance(left, CurveSymbol) and isinstance(right, CurveSymbol)
        assert left.h1_class.coords == (1, 0)
        assert right.h1_class.coords == (1, 1)

    def test_right_positive_convention(self, annulus_pob: PointedOpenBook) -> None:
        """Swapping the convention moves the positive letter to the right copy."""
        convention = PushConvention(positive_copy="right", puncture_sign=-1)
        expanded = expand_point_pushes(annulus_pob.word, convention)

        assert expanded.to_text() == "D[d1_R] * D[d1_L]^-1"
        assert expanded.letters[0].symbol.h1_class.coords == (1, -1)  # type: ignore[union-attr]

    def test_bad_convention_rejected(self) -> None:
        with pytest.raises(ValueError):
            PushConvention(positive_copy="up")

    def test_push_copy_symbols(self, annulus_session: Session) -> None:
        """Both copies of a single-point loop are addressable by name."""
        scope = annulus_session.scopes[0]
        copies = push_copy_symbols(scope.surface, scope.symbols)
        assert sorted(copies) == ["d1_L", "d1_R"]

    def test_point_must_lie_on_loop(self) -> None:
        surface = build_surface(0, 2, ["p1", "p2"])
        loop = CurveSymbol("d1", HomologyClass((1, 0, 0)), through_points=("p1",))

        validate_letter(surface, Generator(GeneratorKind.POINT_PUSH, loop, 1, "p1"))
        with pytest.raises(SymbolValidationError, match="p2 is not on the loop"):
            validate_letter(surface, Generator(GeneratorKind.POINT_PUSH, loop, 1, "p2"))

    def test_image_loop_runs_through_image_point(self) -> None:
        """Under H[h] the loop through p1 becomes a loop through p2."""
        surface = build_surface(0, 2, ["p1", "p2"])
        loop = CurveSymbol("d1", HomologyClass((1, 0, 0)), through_points=("p1",))
        swap = ArcSymbol("h", ("p1", "p2"))
        conjugator = MonodromyWord(surface, (Generator(GeneratorKind.HALF_TWIST, swap),))
        moved = ImageSymbol(loop, conjugator)

        validate_letter(surface, Generator(GeneratorKind.POINT_PUSH, moved, -1, "p2"))
        with pytest.raises(SymbolValidationError, match="p1 is not on the loop"):
            validate_letter(surface, Generator(GeneratorKind.POINT_PUSH, moved, 1, "p1"))

    def test_pushes_inside_conjugators_are_checked(self) -> None:
        surface = build_surface(0, 2, ["p1", "p2"])
        loop = CurveSymbol("d1", HomologyClass((1, 0, 0)), through_points=("p1",))
        stray = Generator(GeneratorKind.POINT_PUSH, loop, 1, "p2")
        image = ImageSymbol(loop, MonodromyWord(surface, (stray,)))
        with pytest.raises(SymbolValidationError, match="not on the loop"):
            validate_letter(surface, Generator(GeneratorKind.DEHN, image))

    def test_canonical_form_expands(self, annulus_pob: PointedOpenBook) -> None:
        canonical = canonical_form(annulus_pob.word)
        assert all(letter.kind == GeneratorKind.DEHN for letter in canonical.letters)


class TestHomologyAction:
    """Tests for the homological and permutation representation."""

    def test_planar_action_is_identity(self, annulus_pob: PointedOpenBook) -> None:
        """Twists on a planar page act trivially on homology."""
        action = act_on_homology(annulus_pob.word)
        assert action.matrix == ((1, 0), (0, 1))
        assert action.permutation == (0,)

    def test_half_twist_swaps_points(
        self, disk3: MarkedSurface, disk3_arcs: dict[str, ArcSymbol]
    ) -> None:
        word = parse_word_text("H[a1]", disk3, disk3_arcs)
        assert word_permutation(word) == (1, 0, 2)
        assert act_on_homology(word).matrix == ((0, 1, 0), (1, 0, 0), (0, 0, 1))

    def test_torus_twist_matrix(self) -> None:
        surface, curves = _torus()
        word = parse_word_text("D[a]", surface, curves)
        assert act_on_homology(word).matrix == ((1, -1, 0), (0, 1, 0), (0, 0, 1))

    def test_long_torus_word_is_exact(self) -> None:
        """(D[a] * D[b]^-1)^50 has Fibonacci entries far beyond int64."""
        surface, curves = _torus()
        word = parse_word_text(" * ".join(["D[a] * D[b]^-1"] * 50), surface, curves)
        f99 = 218922995834555169026
        f100 = 354224848179261915075
        f101 = 573147844013817084101

        action = act_on_homology(word)

        assert action.matrix == ((f101, -f100, 0), (-f100, f99, 0), (0, 0, 1))
        assert action.to_dict()["matrix"][0][0] == f101
        assert act_on_homology(compose(word, inverse(word))).matrix == (
            (1, 0, 0),
            (0, 1, 0),
            (0, 0, 1),
        )

    def test_image_symbol_endpoints(
        self, disk3: MarkedSurface, disk3_arcs: dict[str, ArcSymbol]
    ) -> None:
        """The image of a1 under H[a2] joins p1 and p3."""
        word = parse_word_text("H[a1 @ (H[a2])]", disk3, disk3_arcs)
        symbol = word.letters[0].symbol

        assert symbol_endpoints(disk3, symbol) == ("p1", "p3")
        assert symbol_class(disk3, symbol).coords == (1, 0, 1)

    def test_image_point(self, disk3: MarkedSurface, disk3_arcs: dict[str, ArcSymbol]) -> None:
        word = parse_word_text("H[a1] * H[a2]", disk3, disk3_arcs)
        # H[a2] acts first: p3 -> p2, then H[a1]: p2 -> p1
        assert image_point(word, "p3") == "p1"


class TestWordEquality:
    """Tests for three-valued word equality."""

    def test_braid_relation_on_disk(
        self, disk3: MarkedSurface, disk3_arcs: dict[str, ArcSymbol]
    ) -> None:
        """The disk oracle decides the braid relation."""
        first = parse_word_text("H[a1] * H[a2] * H[a1]", disk3, disk3_arcs)
        second = parse_word_text("H[a2] * H[a1] * H[a2]", disk3, disk3_arcs)
        assert equal_words(first, second) == WordEquality.EQUAL

    def test_inverse_half_twist_is_distinct(
        self, disk3: MarkedSurface, disk3_arcs: dict[str, ArcSymbol]
    ) -> None:
        """H and H^-1 act alike on homology but differ as braids."""
        first = parse_word_text("H[a1]", disk3, disk3_arcs)
        second = parse_word_text("H[a1]^-1", disk3, disk3_arcs)
        assert equal_words(first, second) == WordEquality.DISTINCT

    def test_folded_image_equals_conjugate(
        self, disk3: MarkedSurface, disk3_arcs: dict[str, ArcSymbol]
    ) -> None:
        first = parse_word_text("H[a1 @ (H[a2])]", disk3, disk3_arcs)
        second = parse_word_text("H[a2] * H[a1] * H[a2]^-1", disk3, disk3_arcs)
        assert equal_words(first, second) == WordEquality.EQUAL

    def test_homology_separates(self) -> None:
        surface, curves = _torus()
        first = parse_word_text("D[a]", surface, curves)
        second = parse_word_text("D[b]", surface, curves)
        assert equal_words(first, second) == WordEquality.DISTINCT

    def test_unknown_off_the_disk(self) -> None:
        """The braid relation between a and b is not decided on a torus page."""
        surface, curves = _torus()
        first = parse_word_text("D[a] * D[b] * D[a]", surface, curves)
        second = parse_word_text("D[b] * D[a] * D[b]", surface, curves)
        assert equal_words(first, second) == WordEquality.UNKNOWN

    def test_surface_mismatch(self, disk3: MarkedSurface) -> None:
        with pytest.raises(SurfaceMismatchError):
            equal_words(MonodromyWord(disk3), MonodromyWord(build_surface(0, 1)))


class TestTransport:
    """Tests for carrying words across basis embeddings."""

    def test_push_then_pull(self) -> None:
        """A word pushed onto a larger page restricts back to itself."""
        surface, curves = _torus()
        word = parse_word_text("D[a] * D[b]^-1", surface, curves)
        _, embedding = point_embedding(surface, MarkedPoint("p2"))

        pushed = push_word(word, embedding)
        assert pushed.surface.n == 2
        assert pushed.letters[0].symbol.h1_class.coords == (1, 0, 0, 0)  # type: ignore[union-attr]
        assert pull_word(pushed, embedding) == word

    def test_pull_rejects_new_point(self) -> None:
        surface, curves = _torus()
        target, embedding = point_embedding(surface, MarkedPoint("p2"))
        curve = CurveSymbol("c", HomologyClass((0, 0, 1, 1)))
        word = parse_word_text("D[c]", target, {"c": curve})
        with pytest.raises(SymbolValidationError):
            pull_word(word, embedding)
