"""Unit tests for wreath systems."""

import pytest
from hypothesis import given, settings

from groups.errors import ShiftforgeError, UnknownGeneratorError
from groups.oracles import CyclicOracle, FreeOracle
from groups.words import Word, parse_word
from actions.multipush import free_system
from actions.wreath import (
    IntegerShift,
    WordPushGroup,
    WreathSystem,
    brute_force_agrees,
    lamp_at,
    lamplighter,
    simulate,
    wreath_is_trivial,
    wreath_normalize,
)
from constructions.wreath import embed_wreath
from tests.conftest import words_over


@pytest.fixture
def lamps():
    return lamplighter(CyclicOracle("a", 2))


class TestLamplighter:
    """Test Z/2 lamps over the integer shift."""

    def test_lamp_commutators_are_trivial(self, lamps):
        """Test [a, t^k a t^-k] for k = 1..5."""
        a = Word.gen("a")
        for k in range(1, 6):
            far = lamp_at(lamps, k, a)
            assert wreath_is_trivial(lamps, a.commutator(far)).is_trivial, k

    def test_shift_moves_lamps(self, lamps):
        """Test t lamp_λ t^-1 = lamp_(λ+1) for |λ| <= 8."""
        a = Word.gen("a")
        t = Word.gen("t")
        for position in range(-8, 9):
            moved = t * lamp_at(lamps, position, a) * t.inverse()
            assert wreath_normalize(lamps, moved) == wreath_normalize(lamps, lamp_at(lamps, position + 1, a))

    def test_lamp_positions(self, lamps):
        """Test the normal form of t a t^-1."""
        element = wreath_normalize(lamps, parse_word("t a t^-1"))
        assert element.positions == (1,)
        assert element.shift == 0
        assert str(element) == "lamps[1:a] shift[0]"

    def test_verdicts(self, lamps):
        """Test a lit lamp and a nonzero shift."""
        assert wreath_is_trivial(lamps, parse_word("a")).line().startswith("NONTRIVIAL lamp a at 0")
        assert wreath_is_trivial(lamps, parse_word("t^2")).witness == "shift by 2"
        assert wreath_is_trivial(lamps, parse_word("a a")).is_trivial

    def test_lamps_square_to_identity(self, lamps):
        """Test the lamp relation a^2 = 1 at a far copy."""
        assert wreath_is_trivial(lamps, lamp_at(lamps, 4, parse_word("a^2"))).is_trivial

    @given(words_over("at", max_size=10))
    @settings(max_examples=1000, deadline=None)
    def test_normal_form_matches_simulation(self, w):
        """Test the normal form against the letter-by-letter window action."""
        system = lamplighter(CyclicOracle("a", 2))
        assert brute_force_agrees(system, w, 3)

    def test_simulation_moves_copies(self, lamps):
        """Test where copies sit after a shift."""
        states = simulate(lamps, parse_word("t a"), 1)
        assert states[0] == (1, parse_word("a"))
        assert states[1] == (2, Word())


class TestWreathSystem:
    """Test construction checks and other push groups."""

    def test_overlapping_letters(self):
        """Test lamp and push alphabets must be disjoint."""
        with pytest.raises(ShiftforgeError):
            WreathSystem(CyclicOracle("t", 2), IntegerShift("t"))

    def test_unknown_letter(self, lamps):
        """Test letters outside both alphabets."""
        with pytest.raises(UnknownGeneratorError):
            wreath_normalize(lamps, parse_word("b"))

    def test_free_lamps(self):
        """Test Z lamps: a lamp and its inverse at one copy cancel."""
        system = lamplighter(FreeOracle(("a",)))
        assert wreath_is_trivial(system, parse_word("t a t^-1 t a^-1 t^-1")).is_trivial
        assert not wreath_is_trivial(system, parse_word("a^2")).is_trivial

    def test_lamps_over_multipushes(self):
        """Test lamps moved around the Cayley graph of F_2."""
        system = WreathSystem(CyclicOracle("z", 2), WordPushGroup(free_system(2)))
        assert system.alphabet == ("z", "a", "b")
        assert wreath_is_trivial(system, parse_word("[z, a z a^-1]")).is_trivial
        assert not wreath_is_trivial(system, parse_word("[a,b]")).is_trivial
        assert brute_force_agrees(system, parse_word("a z b z a^-1"), 2)


class TestEmbedWreath:
    """Test the wreath handle over each kind of push."""

    def test_integer_shift(self):
        """Test lamps over the named shift letter."""
        handle = embed_wreath(CyclicOracle("a", 2), "s")
        assert handle.kind == "wreath"
        assert handle.alphabet == ("a", "s")
        assert handle.solve_text("[a, s a s^-1]").is_trivial
        assert str(handle.normalize(parse_word("s a s^-1"))) == "lamps[1:a] shift[0]"

    def test_push_system(self):
        """Test that a push system is wrapped as a push group."""
        handle = embed_wreath(CyclicOracle("z", 3), free_system(2))
        assert isinstance(handle.system.push, WordPushGroup)
        assert handle.solve_text("z^3").is_trivial
        assert handle.solve_text("a z a^-1").is_nontrivial
