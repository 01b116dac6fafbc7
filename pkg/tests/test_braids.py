"""Tests for braid words, the Artin action and the disk compiler."""

import pytest

from obqp.braids.artin import (
    artin_action,
    band_generator,
    braid_equal,
    braid_invariants,
    full_twist,
)
from obqp.braids.braid_word import BraidWord, permutation_cycles
from obqp.braids.compiler import compile_pointed_word, compile_word
from obqp.exceptions import BandIndexError, BraidError, DiskCompileError, StrandMismatchError
from obqp.models.open_book import PointedOpenBook
from obqp.models.word import MonodromyWord
from obqp.parsers import build_session, parse


class TestBraidWord:
    """Tests for the BraidWord model."""

    def test_parse_and_text(self) -> None:
        braid = BraidWord.parse("s1*s2^-1*s1", 3)
        assert braid.letters == (1, -2, 1)
        assert braid.to_text() == "s1*s2^-1*s1"

    def test_identity(self) -> None:
        assert BraidWord.parse("id", 2).letters == ()
        assert BraidWord(2).to_text() == "id"

    def test_invalid_letter(self) -> None:
        with pytest.raises(BraidError):
            BraidWord.parse("x1", 2)

    def test_index_out_of_range(self) -> None:
        """sigma_i needs i < n."""
        with pytest.raises(BraidError):
            BraidWord(2, (2,))

    def test_writhe_and_permutation(self) -> None:
        braid = BraidWord(3, (1, 2))
        assert braid.writhe() == 2
        assert braid.permutation() == (1, 2, 0)
        assert len(permutation_cycles(braid.permutation())) == 1

    def test_stabilized(self) -> None:
        """Markov stabilization appends sigma_n on n + 1 strands."""
        braid = BraidWord(2, (1, 1, 1)).stabilized(-1)
        assert braid.strand_count == 3
        assert braid.letters == (1, 1, 1, -2)

    def test_multiply_mismatched(self) -> None:
        with pytest.raises(BraidError):
            BraidWord(2, (1,)) * BraidWord(3, (2,))


class TestArtinAction:
    """Tests for the Artin action and exact braid equality."""

    def test_generator_action(self) -> None:
        """sigma_1 sends x1 to x1 x2 x1^-1 and x2 to x1."""
        action = artin_action(BraidWord(2, (1,)))
        assert action.to_dict() == {"x1": "x1 x2 x1^-1", "x2": "x1"}

    def test_inverse_cancels(self) -> None:
        assert braid_equal(BraidWord(3, (1, -1, 2, -2)), BraidWord(3))

    def test_braid_relation(self) -> None:
        assert braid_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))

    def test_far_commutation(self) -> None:
        assert braid_equal(BraidWord(4, (1, 3)), BraidWord(4, (3, 1)))

    def test_distinct(self) -> None:
        assert not braid_equal(BraidWord(3, (1, 2)), BraidWord(3, (2, 1)))

    def test_strand_mismatch(self) -> None:
        with pytest.raises(StrandMismatchError):
            braid_equal(BraidWord(2), BraidWord(3))

    def test_abelianization_is_permutation(self) -> None:
        """The exponent-sum matrix of a braid is its permutation matrix."""
        matrix = artin_action(BraidWord(3, (1,))).abelianization()
        assert matrix.tolist() == [[0, 1, 0], [1, 0, 0], [0, 0, 1]]

    def test_band_generator(self) -> None:
        assert band_generator(1, 3, 3).letters == (2, 1, -2)
        assert band_generator(2, 3, 3).letters == (2,)

    def test_band_generator_bounds(self) -> None:
        with pytest.raises(BandIndexError):
            band_generator(2, 2, 3)

    def test_full_twist(self) -> None:
        assert full_twist(1, 2) == (1, 1)
        assert full_twist(1, 3) == (1, 2, 1, 2, 1, 2)
        assert full_twist(2, 2) == ()

    def test_invariants(self) -> None:
        invariants = braid_invariants(BraidWord(2, (1, 1, 1)))
        assert invariants.to_dict() == {
            "writhe": 3,
            "permutation": [1, 0],
            "components": 1,
            "sl": 1,
        }


class TestCompileWord:
    """Tests for compiling disk-page words to braids."""

    def test_trefoil(self, trefoil_pob: PointedOpenBook) -> None:
        assert compile_pointed_word(trefoil_pob).letters == (1, 1, 1)

    def test_conjugated_arc(self) -> None:
        """conj(s1) std(2,3) compiles to s1 s2 s1^-1."""
        session = build_session(
            parse(
                "surface g=0 b=1\n"
                "point p1\npoint p2\npoint p3\n"
                "disk_arc b = conj(s1) std(2,3)\n"
                "word w = H[b]^-1\n"
            )
        )
        assert session.scopes[0].symbols["b"].endpoints == ("p1", "p3")  # type: ignore[union-attr]
        assert compile_word(session.words["w"]).letters == (1, -2, -1)

    def test_block_twist(self) -> None:
        """A round curve around two strands compiles to their full twist."""
        session = build_session(
            parse("surface g=0 b=1\npoint p1\npoint p2\ndisk_curve c = block(1,2)\nword w = D[c]\n")
        )
        assert compile_word(session.words["w"]).letters == (1, 1)

    def test_conjugation_by_word(self) -> None:
        """conj(word) places a symbol by the braid of an earlier word."""
        session = build_session(
            parse(
                "surface g=0 b=1\n"
                "point p1\npoint p2\npoint p3\n"
                "disk_arc a = std(1,2)\n"
                "word h = H[a]\n"
                "disk_arc b = conj(h) std(2,3)\n"
                "word w = H[b]\n"
            )
        )
        assert compile_word(session.words["w"]).letters == (1, 2, -1)

    def test_image_symbols(self) -> None:
        """Images compile to conjugates of the base symbol's braid."""
        session = build_session(
            parse(
                "surface g=0 b=1\n"
                "point p1\npoint p2\npoint p3\n"
                "disk_arc a = std(1,2)\n"
                "disk_arc c = std(2,3)\n"
                "word w = H[a @ (H[c])]\n"
            )
        )
        assert compile_word(session.words["w"]).letters == (2, 1, -2)

    def test_non_disk_rejected(self, annulus_pob: PointedOpenBook) -> None:
        with pytest.raises(DiskCompileError, match="disk"):
            compile_word(annulus_pob.word)

    def test_empty_disk_rejected(self) -> None:
        session = build_session(parse("surface g=0 b=1\nword w = id\n"))
        with pytest.raises(DiskCompileError):
            compile_word(session.words["w"])

    def test_symbol_without_placement(self) -> None:
        """Arcs declared by endpoints carry no braid."""
        session = build_session(
            parse("surface g=0 b=1\npoint p1\npoint p2\narc a from=p1 to=p2\nword w = H[a]\n")
        )
        with pytest.raises(DiskCompileError, match="placement"):
            compile_word(session.words["w"])

    def test_empty_word(self, trefoil_pob: PointedOpenBook) -> None:
        word = MonodromyWord(trefoil_pob.surface)
        assert compile_word(word).letters == ()
