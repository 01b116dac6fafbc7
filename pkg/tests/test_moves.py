"""Tests for Markov and Hopf stabilization, move scripts and half-twist transport."""

import json

import pytest

from obqp.braids.compiler import compile_word
from obqp.calculus.equality import WordEquality, equal_words
from obqp.exceptions import (
    EmptyBraidError,
    InvalidHopfCurveError,
    MoveError,
    NotDestabilizableError,
    UnsupportedMoveError,
)
from obqp.models.open_book import HopfCurveSpec, Move, MoveScript, PointedOpenBook
from obqp.models.surface import HandleVariant
from obqp.models.word import MonodromyWord
from obqp.moves.half_twist import transport_half_twist
from obqp.moves.hopf import hopf_stabilize, stabilize_hopf
from obqp.moves.markov import destabilize, markov_destabilize, markov_stabilize, stabilize
from obqp.moves.script import (
    apply_records,
    conjugate_by,
    dump_moves,
    load_move_records,
    replay,
    replay_summary,
)
from obqp.parsers import build_session, parse, parse_word_text
from obqp.parsers.session import Session
from obqp.surface.lattice import build_surface, subcritical_rank


class TestMarkovStabilization:
    """Tests for Markov stabilization and destabilization."""

    def test_positive_stabilization(self, trefoil_pob: PointedOpenBook) -> None:
        """A collar point p3 and H[s_p3_p2] are added in front of the word."""
        stab = stabilize(trefoil_pob, 1)
        result = stab.result

        assert result.surface.point_ids == ("p1", "p2", "p3")
        assert result.surface.marked_points[-1].collar
        assert result.word.to_text() == "H[s_p3_p2] * H[a] * H[a] * H[a]"
        assert stab.arc.endpoints == ("p3", "p2")
        assert stab.arc.collar_avoiding

    def test_stabilization_is_braid_stabilization(self, trefoil_pob: PointedOpenBook) -> None:
        """On a disk page the new letter compiles to sigma_n^sign."""
        result = markov_stabilize(trefoil_pob, -1)
        assert compile_word(result.word).letters == (-2, 1, 1, 1)

    def test_destabilization_inverts(self, trefoil_pob: PointedOpenBook) -> None:
        """Destabilizing a stabilization gives back the original exactly."""
        destab = destabilize(markov_stabilize(trefoil_pob, 1))

        assert destab.result == trefoil_pob
        assert destab.leading
        assert destab.letter.to_text() == "H[s_p3_p2]"

    def test_trailing_destabilization(self, trefoil_pob: PointedOpenBook) -> None:
        """The half-twist may also sit at the end of the word."""
        stabilized = markov_stabilize(trefoil_pob, 1)
        letters = stabilized.word.letters[1:] + stabilized.word.letters[:1]
        rotated = PointedOpenBook(stabilized.surface, MonodromyWord(stabilized.surface, letters))

        destab = destabilize(rotated)
        assert not destab.leading
        assert destab.result == trefoil_pob

    def test_not_destabilizable(self, trefoil_pob: PointedOpenBook) -> None:
        """p2 is used by more than one letter of the trefoil."""
        with pytest.raises(NotDestabilizableError):
            markov_destabilize(trefoil_pob)

    def test_destabilize_needs_two_points(self) -> None:
        surface = build_surface(0, 1, ["p1"])
        with pytest.raises(NotDestabilizableError):
            destabilize(PointedOpenBook.trivial(surface))

    def test_destabilize_needs_collar_point(self) -> None:
        """A lone H[std(1,2)] still cannot remove a point that is not on the collar."""
        document = (
            "surface g=0 b=1\npoint p1\npoint p2 collar=false\n"
            "disk_arc a = std(1,2)\nword w = H[a]\npob main = w\n"
        )
        pob = build_session(parse(document)).pob("main")
        with pytest.raises(NotDestabilizableError, match="p2 is not a collar point"):
            destabilize(pob)

        collared = build_session(parse(document.replace("collar=false", "collar=true")))
        assert destabilize(collared.pob("main")).result.surface.point_ids == ("p1",)

    def test_empty_braid(self) -> None:
        with pytest.raises(EmptyBraidError):
            stabilize(PointedOpenBook.trivial(build_surface(0, 1)))

    def test_bad_sign(self, trefoil_pob: PointedOpenBook) -> None:
        with pytest.raises(ValueError):
            stabilize(trefoil_pob, 2)

    def test_fresh_names(self, trefoil_pob: PointedOpenBook) -> None:
        """Stabilizing twice introduces distinct points and arcs."""
        twice = markov_stabilize(markov_stabilize(trefoil_pob, 1), 1)
        assert twice.surface.point_ids == ("p1", "p2", "p3", "p4")
        assert twice.word.letters[0].symbol.id == "s_p4_p3"


class TestHopfStabilization:
    """Tests for Hopf stabilization."""

    def test_same_boundary(self, torus_pob: PointedOpenBook) -> None:
        spec = HopfCurveSpec("h", (1, 0, 0), 1)
        hopf = stabilize_hopf(torus_pob, HandleVariant.SAME_BOUNDARY, spec)
        surface = hopf.result.surface

        assert (surface.genus, surface.boundary_count) == (1, 2)
        assert surface.euler_characteristic == torus_pob.surface.euler_characteristic - 1
        assert subcritical_rank(surface) == subcritical_rank(torus_pob.surface) + 1
        assert hopf.curve.h1_class.coords == (1, 0, 1, 0)
        assert hopf.result.word.to_text() == "D[a] * D[b] * D[h]"

    def test_two_boundaries(self, annulus_pob: PointedOpenBook) -> None:
        """Joining the two boundary components of an annulus gives a torus page."""
        result = hopf_stabilize(
            annulus_pob, HandleVariant.TWO_BOUNDARIES, HopfCurveSpec("h", (0, 0), 1)
        )
        assert (result.surface.genus, result.surface.boundary_count) == (1, 1)

    def test_even_handle_coordinate(self, torus_pob: PointedOpenBook) -> None:
        """A curve must cross the new handle an odd number of times."""
        with pytest.raises(InvalidHopfCurveError, match="even"):
            stabilize_hopf(torus_pob, HandleVariant.SAME_BOUNDARY, HopfCurveSpec("h", (1, 0, 0), 2))

    def test_wrong_class_length(self, torus_pob: PointedOpenBook) -> None:
        with pytest.raises(InvalidHopfCurveError, match="coordinates"):
            stabilize_hopf(torus_pob, HandleVariant.SAME_BOUNDARY, HopfCurveSpec("h", (1, 0), 1))

    def test_name_clash(self, torus_pob: PointedOpenBook) -> None:
        with pytest.raises(InvalidHopfCurveError, match="already"):
            stabilize_hopf(torus_pob, HandleVariant.SAME_BOUNDARY, HopfCurveSpec("a", (1, 0, 0)))

    def test_empty_braid(self) -> None:
        pob = PointedOpenBook.trivial(build_surface(0, 1))
        with pytest.raises(EmptyBraidError):
            stabilize_hopf(pob, HandleVariant.SAME_BOUNDARY, HopfCurveSpec("h", ()))

    def test_unknown_variant(self) -> None:
        with pytest.raises(ValueError):
            HandleVariant.parse("three")


class TestMoveScripts:
    """Tests for conjugation moves and JSON move scripts."""

    def test_conjugate_by(self, trefoil_pob: PointedOpenBook, trefoil_session: Session) -> None:
        symbols = trefoil_session.scopes[0].symbols
        h = parse_word_text("H[a]", trefoil_pob.surface, symbols)
        result = conjugate_by(trefoil_pob, h)

        assert result.word.to_text() == "H[a] * H[a] * H[a] * H[a] * H[a]^-1"
        assert equal_words(result.word, trefoil_pob.word) == WordEquality.EQUAL

    def test_replay(self, trefoil_pob: PointedOpenBook) -> None:
        script = MoveScript(trefoil_pob, (Move.stabilize(1), Move.destabilize()))
        outcome = replay(script)

        assert outcome.end == trefoil_pob
        assert outcome.renamings() == [
            {"added": ["s_p3_p2"], "removed": []},
            {"added": [], "removed": ["s_p3_p2"]},
        ]

    def test_apply_records(self, trefoil_pob: PointedOpenBook, trefoil_session: Session) -> None:
        records = load_move_records(
            json.dumps([{"move": "stabilize"}, {"move": "conjugate", "word": "H[a]"}])
        )
        script, outcome = apply_records(trefoil_pob, records, trefoil_session.scopes[0].symbols)

        assert len(script) == 2
        assert outcome.end.surface.n == 3
        assert outcome.end.word.letters[0].to_text() == "H[a]"

    def test_records_see_new_symbols(self, trefoil_pob: PointedOpenBook) -> None:
        """Arcs added by stabilization can be named by later records."""
        records = load_move_records(
            json.dumps([{"move": "stabilize"}, {"move": "conjugate", "word": "H[s_p3_p2]"}])
        )
        _, outcome = apply_records(trefoil_pob, records, {})
        assert outcome.end.word.letters[0].to_text() == "H[s_p3_p2]"

    def test_hopf_record(self, torus_pob: PointedOpenBook, torus_session: Session) -> None:
        records = load_move_records(
            json.dumps([{"move": "hopf", "variant": "same", "curve": "h class=[1,0,0]"}])
        )
        script, outcome = apply_records(torus_pob, records, torus_session.scopes[0].symbols)
        summary = replay_summary(outcome)

        assert summary["end"] == "D[a] * D[b] * D[h]"
        assert summary["steps"][0]["added"] == ["h"]
        assert json.loads(dump_moves(script)) == [
            {"curve": "h class=[1,0,0] handle=1", "move": "hopf", "variant": "same"}
        ]

    def test_invalid_json(self) -> None:
        with pytest.raises(MoveError, match="JSON"):
            load_move_records("[{")

    def test_conjugate_needs_word(self) -> None:
        with pytest.raises(MoveError):
            load_move_records(json.dumps([{"move": "conjugate"}]))

    def test_unknown_move(self) -> None:
        with pytest.raises(MoveError):
            load_move_records(json.dumps([{"move": "flip"}]))


class TestHalfTwistTransport:
    """Tests for carrying an added half-twist through a move script."""

    def test_through_stabilization(
        self, trefoil_pob: PointedOpenBook, trefoil_session: Session
    ) -> None:
        """The witness script reaches a word equal to the transported one."""
        arc = trefoil_session.scopes[0].symbols["a"]
        script = MoveScript(trefoil_pob, (Move.stabilize(1),))
        transport = transport_half_twist(script, arc)

        assert transport.result.word.to_text() == "H[a] * H[s_p3_p2] * H[a] * H[a] * H[a]"
        end = replay(transport.witness).end
        assert equal_words(end.word, transport.result.word) == WordEquality.EQUAL

    def test_through_conjugation(
        self, trefoil_pob: PointedOpenBook, trefoil_session: Session
    ) -> None:
        """Conjugation turns the arc into its image."""
        symbols = trefoil_session.scopes[0].symbols
        h = parse_word_text("H[a]^-1", trefoil_pob.surface, symbols)
        transport = transport_half_twist(MoveScript(trefoil_pob, (Move.conjugate(h),)), symbols["a"])

        assert transport.letter.to_text() == "H[a @ (H[a]^-1)]"

    def test_unsupported_move(self, trefoil_pob: PointedOpenBook, trefoil_session: Session) -> None:
        arc = trefoil_session.scopes[0].symbols["a"]
        script = MoveScript(trefoil_pob, (Move.stabilize(-1),))
        with pytest.raises(UnsupportedMoveError):
            transport_half_twist(script, arc)
