"""Unit tests for multipush systems and triviality verdicts."""

import pytest
from hypothesis import given, settings

from groups.errors import UnknownGeneratorError
from groups.words import Word, enumerate_ball, free_reduce, parse_word
from schreier.graphs import ExplicitGraph, Node
from actions.multipush import (
    MultipushSystem,
    OmittedCopy,
    abelian_system,
    coset_action,
    finite_shift_system,
    first_moved,
    free_system,
    multipush_is_trivial,
    one_ended_shift_system,
    shift_system,
    trajectory,
)
from actions.verdicts import Status, Undecided, Verdict
from tests.conftest import words_over


def two_letter_triangle():
    """s rotates the triangle, r swaps 0 and 1 and fixes 2."""
    edges = [(0, "s", 1), (1, "s", 2), (2, "s", 0), (0, "r", 1), (1, "r", 0), (2, "r", 2)]
    return MultipushSystem(ExplicitGraph([0, 1, 2], edges), ("r", "s"), name="triangle")


def assert_matches_free_reduction(system, words, window=None):
    for w in words:
        verdict = multipush_is_trivial(system, w, window)
        assert verdict.status is not Status.UNKNOWN, w
        assert verdict.is_trivial == (not free_reduce(w)), w


class TestVerdict:
    """Test verdict lines."""

    def test_lines(self):
        """Test the status, witness or reason, and the window tag."""
        assert Verdict.trivial(16).line() == "TRIVIAL [window=16]"
        assert Verdict.trivial().line() == "TRIVIAL"
        assert Verdict.nontrivial("moves 1 -> a", 4).line() == "NONTRIVIAL moves 1 -> a [window=4]"
        assert Verdict.unknown("no copy moves").line() == "UNKNOWN no copy moves"
        assert Verdict.truncated("levels beyond 8", 8).line() == "TRUNCATED levels beyond 8 [window=8]"

    def test_decided(self):
        """Test the status helpers."""
        assert Verdict.trivial().is_decided
        assert not Verdict.unknown("x").is_decided
        assert str(Undecided("overlap")) == "UNKNOWN overlap"


class TestCosetAction:
    """Test the action on copies, rightmost letter first."""

    def test_rightmost_letter_first(self):
        """Test that a b sends the basepoint to b a in F_2."""
        system = free_system(2)
        image = coset_action(system, parse_word("a b"), system.graph.basepoint)
        assert image == system.graph.node("b a")
        assert len(trajectory(system, parse_word("a b"), system.graph.basepoint)) == 3

    def test_omitted_copies_are_fixed(self):
        """Test that capped copies never move."""
        system = shift_system()
        copy = OmittedCopy("t", system.graph.basepoint)
        assert coset_action(system, parse_word("t^5"), copy) == copy
        assert str(copy) == "omitted[t@1]"

    def test_unknown_letter(self):
        """Test letters outside T."""
        with pytest.raises(UnknownGeneratorError):
            coset_action(free_system(2), parse_word("c"), Node(Word()))

    def test_omission_letter_must_be_in_t(self):
        """Test that omissions name a push letter."""
        system = shift_system()
        with pytest.raises(UnknownGeneratorError):
            MultipushSystem(system.graph, ("t",), omissions=(OmittedCopy("u", system.graph.basepoint),))


class TestFreeMultipushes:
    """Test that multipush words are trivial exactly when freely trivial."""

    def test_free_cayley_graph_ball(self):
        """Test every reduced word of length <= 8 over F_2."""
        assert_matches_free_reduction(free_system(2), enumerate_ball("ab", 8))

    def test_abelian_cayley_graph_ball(self):
        """Test every reduced word of length <= 6 over Z^2, commutators included."""
        assert_matches_free_reduction(abelian_system(2), enumerate_ball("ab", 6), window=3)

    def test_finite_explicit_graph_ball(self):
        """Test two letters on a triangle: words fixing every copy are still nontrivial."""
        system = two_letter_triangle()
        assert_matches_free_reduction(system, enumerate_ball(("r", "s"), 6))
        verdict = multipush_is_trivial(system, parse_word("s^3"))
        assert verdict.is_nontrivial
        assert verdict.witness.startswith("free word")

    @given(words_over("ab", max_size=16))
    @settings(max_examples=300, deadline=None)
    def test_random_words(self, w):
        """Test random unreduced words, cancellations included."""
        assert_matches_free_reduction(free_system(2), [w])
        assert_matches_free_reduction(two_letter_triangle(), [w.substitute({"a": parse_word("r"), "b": parse_word("s")})])

    @pytest.mark.slow
    @pytest.mark.parametrize("system, letters, window", [
        (free_system(2), "ab", None),
        (abelian_system(2), "ab", 3),
        (two_letter_triangle(), ("r", "s"), None),
    ], ids=["free", "abelian", "triangle"])
    def test_every_word_up_to_length_ten(self, system, letters, window):
        """Test the whole radius-10 ball on each graph."""
        assert_matches_free_reduction(system, enumerate_ball(letters, 10), window=window)

    @pytest.mark.slow
    @given(words_over("ab", max_size=16))
    @settings(max_examples=10_000, deadline=None)
    def test_ten_thousand_random_words(self, w):
        """Test random words of length <= 16 on the free, abelian and triangle graphs."""
        assert_matches_free_reduction(free_system(2), [w])
        assert_matches_free_reduction(abelian_system(2), [w], window=3)
        assert_matches_free_reduction(two_letter_triangle(), [w.substitute({"a": parse_word("r"), "b": parse_word("s")})])

    def test_witness_names_the_moved_copy(self):
        """Test the moves witness."""
        verdict = multipush_is_trivial(free_system(2), parse_word("a"), 4)
        assert verdict.line() == "NONTRIVIAL moves 1 -> a [window=4]"

    def test_default_window_from_settings(self):
        """Test that the window falls back to the configured radius."""
        assert multipush_is_trivial(free_system(2), parse_word("a a^-1")).window == 16


class TestSingleLetterCycles:
    """Test the finite-cycle caveat."""

    def test_decorated_cycle_is_nontrivial(self):
        """Test x_t^m on a 3-cycle with a non-sphere Ω for 1 <= m <= 30."""
        system = finite_shift_system(3, non_sphere_at=[0])
        for m in range(1, 31):
            assert multipush_is_trivial(system, Word.gen("t", m)).is_nontrivial, m

    def test_all_sphere_cycle_is_unknown(self):
        """Test that multiples of the period stay UNKNOWN when every Ω is a sphere."""
        system = finite_shift_system(3)
        for m in range(1, 31):
            verdict = multipush_is_trivial(system, Word.gen("t", m))
            if m % 3 == 0:
                assert verdict.status is Status.UNKNOWN, m
            else:
                assert verdict.is_nontrivial, m

    def test_infinite_orbit(self):
        """Test the one-ended shift on Z^2."""
        system = one_ended_shift_system()
        assert multipush_is_trivial(system, parse_word("a^2"), 3).is_nontrivial
        assert first_moved(system, parse_word("a a^-1"), 3) is None
