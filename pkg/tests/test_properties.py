"""Property-based tests for the word calculus, braids and moves."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from obqp.bennequin.surface import build_bennequin, euler_characteristic, self_linking_sqp
from obqp.braids.artin import braid_equal, braid_invariants
from obqp.braids.braid_word import BraidWord
from obqp.braids.compiler import compile_word
from obqp.calculus.equality import WordEquality, equal_words
from obqp.calculus.homology import act_on_homology
from obqp.calculus.rewriting import (
    canonical_form,
    compose,
    conjugation_rewrite,
    free_reduce,
    inverse,
)
from obqp.models.certificate import VerificationGrade
from obqp.models.open_book import HopfCurveSpec, Move, MoveScript, PointedOpenBook
from obqp.models.surface import ArcSymbol, HandleVariant
from obqp.models.word import MonodromyWord
from obqp.moves.half_twist import transport_half_twist
from obqp.moves.hopf import hopf_stabilize
from obqp.moves.markov import destabilize, markov_stabilize
from obqp.moves.script import replay
from obqp.quasipositivity.certificates import verify_certificate
from obqp.quasipositivity.engine import classify
from obqp.surface.lattice import subcritical_rank
from tests.strategies import (
    DISK,
    LEVELS,
    braids,
    collar_disk_words,
    disk_pobs,
    hopf_cases,
    level_pobs,
    level_words,
    pages,
    positive_words,
    signs,
    transport_cases,
    unreduced_words,
    word_over,
    words,
)


class TestWordLaws:
    """Group laws of the word calculus."""

    @given(words)
    def test_inverse_cancels(self, word: MonodromyWord) -> None:
        assert free_reduce(compose(word, inverse(word))).is_empty

    @given(words)
    def test_inverse_acts_as_identity(self, word: MonodromyWord) -> None:
        action = act_on_homology(compose(word, inverse(word)))
        assert action.matrix == tuple(
            tuple(int(i == j) for j in range(DISK.rank)) for i in range(DISK.rank)
        )

    @given(words)
    def test_canonical_form_is_idempotent(self, word: MonodromyWord) -> None:
        once = canonical_form(word)
        assert canonical_form(once) == once

    @given(words)
    @settings(deadline=None)
    def test_canonical_form_is_equal(self, word: MonodromyWord) -> None:
        assert equal_words(word, canonical_form(word)) == WordEquality.EQUAL

    @given(words, words)
    def test_compile_is_multiplicative(self, first: MonodromyWord, second: MonodromyWord) -> None:
        combined = compile_word(compose(first, second)).letters
        assert combined == compile_word(first).letters + compile_word(second).letters

    @given(st.data())
    @settings(deadline=None, max_examples=1000)
    def test_conjugation_rewrite_acts_like_conjugate(self, data: st.DataObject) -> None:
        """w * g * w^-1 and the single letter about w(s) act identically on homology."""
        surface, symbols = data.draw(pages())
        conjugator = data.draw(word_over(surface, symbols, 6))
        letter = data.draw(word_over(surface, symbols, 1, min_size=1)).letters[0]

        single = MonodromyWord(surface, (letter,))
        conjugated = compose(compose(conjugator, single), inverse(conjugator))
        rewritten = MonodromyWord(surface, (conjugation_rewrite(conjugator, letter),))

        assert act_on_homology(conjugated) == act_on_homology(rewritten)


class TestBraidLaws:
    """Exact braid equality."""

    @given(braids)
    @settings(deadline=None)
    def test_reflexive(self, braid: BraidWord) -> None:
        assert braid_equal(braid, braid)

    @given(braids)
    @settings(deadline=None)
    def test_inverse_is_identity(self, braid: BraidWord) -> None:
        assert braid_equal(braid * braid.inverse(), BraidWord(4))

    @given(unreduced_words())
    @settings(deadline=None, max_examples=1000)
    def test_free_reduction_is_equal(self, word: MonodromyWord) -> None:
        assert equal_words(word, free_reduce(word)) == WordEquality.EQUAL


class TestMoveLaws:
    """Moves and classification on random disk words."""

    @given(disk_pobs(), signs)
    @settings(deadline=None, max_examples=200)
    def test_destabilize_undoes_stabilize(self, pob: PointedOpenBook, sign: int) -> None:
        assert destabilize(markov_stabilize(pob, sign)).result == pob

    @given(positive_words)
    @settings(deadline=None)
    def test_positive_words_are_certified(self, word: MonodromyWord) -> None:
        pob = PointedOpenBook(DISK, word)
        certificate = classify(pob).preferred_certificate

        assert certificate is not None
        verdict = verify_certificate(pob, certificate)
        assert verdict.valid
        assert verdict.grade == VerificationGrade.EXACT

    @given(words)
    def test_classification_is_deterministic(self, word: MonodromyWord) -> None:
        pob = PointedOpenBook(DISK, word)
        assert classify(pob).to_dict() == classify(pob).to_dict()

    @given(transport_cases())
    @settings(deadline=None, max_examples=500)
    def test_half_twist_transport(
        self, case: tuple[PointedOpenBook, list[Move], ArcSymbol, int]
    ) -> None:
        """The witness script reaches a braid equal to the transported word."""
        pob, moves, arc, sign = case
        transport = transport_half_twist(MoveScript(pob, tuple(moves)), arc, sign)

        assert transport.letter.sign == sign
        assert transport.witness.start.word.letters[0].symbol == arc
        reached = replay(transport.witness).end
        assert reached.surface == transport.result.surface
        assert braid_equal(compile_word(reached.word), compile_word(transport.result.word))

    @given(hopf_cases())
    @settings(deadline=None, max_examples=200)
    def test_hopf_changes_rank_and_euler_characteristic(
        self, case: tuple[PointedOpenBook, HandleVariant, HopfCurveSpec]
    ) -> None:
        pob, variant, spec = case
        result = hopf_stabilize(pob, variant, spec)

        assert subcritical_rank(result.surface) == subcritical_rank(pob.surface) + 1
        assert result.surface.euler_characteristic == pob.surface.euler_characteristic - 1
        assert result.word.letters[-1].symbol.id == "k"

    @given(hopf_cases())
    @settings(deadline=None, max_examples=200)
    def test_hopf_keeps_qp_and_stein(
        self, case: tuple[PointedOpenBook, HandleVariant, HopfCurveSpec]
    ) -> None:
        pob, variant, spec = case
        before = classify(pob)
        after = classify(hopf_stabilize(pob, variant, spec))

        assert (after.qp, after.stein) == (before.qp, before.stein)

    @given(st.one_of(disk_pobs(), level_pobs()))
    @settings(deadline=None, max_examples=300)
    def test_positive_stabilization_keeps_levels(self, pob: PointedOpenBook) -> None:
        before = classify(pob)
        after = classify(markov_stabilize(pob, 1))

        for level in LEVELS:
            assert getattr(after, level) >= getattr(before, level), level


class TestSharpness:
    """Self-linking of strongly quasipositive Bennequin surfaces."""

    @given(collar_disk_words())
    @settings(deadline=None, max_examples=500)
    def test_self_linking_is_minus_euler_characteristic(self, word: MonodromyWord) -> None:
        pob = PointedOpenBook(word.surface, word)
        data = build_bennequin(pob)

        assert classify(pob).sqp
        sl = self_linking_sqp(data)
        assert sl == -euler_characteristic(data)
        assert sl == braid_invariants(compile_word(word)).self_linking

    @given(collar_disk_words(), signs)
    @settings(deadline=None, max_examples=500)
    def test_stabilization_effect(self, word: MonodromyWord, sign: int) -> None:
        """Positive stabilization keeps sl; negative stabilization lowers it by two."""
        pob = PointedOpenBook(word.surface, word)
        before = braid_invariants(compile_word(word)).self_linking
        after = braid_invariants(compile_word(markov_stabilize(pob, sign).word)).self_linking

        assert after == (before if sign > 0 else before - 2)

    @given(collar_disk_words())
    @settings(deadline=None, max_examples=500)
    def test_positive_stabilization_adds_a_disk_and_a_band(self, word: MonodromyWord) -> None:
        """One more disk and one more band leave chi and sl unchanged."""
        pob = PointedOpenBook(word.surface, word)
        before = build_bennequin(pob)
        after = build_bennequin(markov_stabilize(pob, 1))

        assert after.n == before.n + 1
        assert after.band_count == before.band_count + 1
        assert euler_characteristic(after) == euler_characteristic(before)
        assert self_linking_sqp(after) == self_linking_sqp(before)


class TestMonoidClosure:
    """Products of words passing a level still pass it."""

    @pytest.mark.parametrize("level", LEVELS)
    @settings(deadline=None, max_examples=500)
    @given(data=st.data())
    def test_concatenation(self, level: str, data: st.DataObject) -> None:
        first = data.draw(level_words(level))
        second = data.draw(level_words(level))

        assert getattr(classify(PointedOpenBook(first.surface, first)), level)
        assert getattr(classify(PointedOpenBook(second.surface, second)), level)
        product = compose(first, second)
        assert getattr(classify(PointedOpenBook(product.surface, product)), level)
