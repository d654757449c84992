"""Unit tests for intrinsic infinite-type witnesses."""

import pytest

from groups.errors import UnknownGeneratorError
from groups.words import parse_word
from surfaces.ends import EMPTY_ENDS, Finite
from surfaces.surface_type import PiSpec, SurfaceType, handle
from actions.intrinsic import END_PERMUTATION, HANDLE_SHIFT, intrinsic_type_witness
from actions.multipush import finite_shift_system, free_system, shift_system


def punctured_pi():
    return PiSpec(SurfaceType(0, 1, EMPTY_ENDS, Finite(1)), "punctured")


class TestIntrinsicWitness:
    """Test end permutations and handle shifts."""

    def test_handle_shift(self):
        """Test a net push of handles along the line."""
        witness = intrinsic_type_witness(shift_system(), parse_word("t^2"), handle())
        assert witness.kind == HANDLE_SHIFT
        assert str(witness) == "handle_shift: net t-exponent 2 on genus-1 copies"

    def test_end_permutation(self):
        """Test a moved copy of a Π with an end."""
        witness = intrinsic_type_witness(free_system(2), parse_word("a"), punctured_pi(), 4)
        assert witness.kind == END_PERMUTATION
        assert witness.detail == "ends of the copy at 1 go to the copy at a"

    def test_no_witness_on_a_finite_cycle(self):
        """Test that a finite orbit gives no handle shift."""
        assert intrinsic_type_witness(finite_shift_system(3), parse_word("t"), handle()) is None

    def test_no_witness_for_two_letters(self):
        """Test a commutator of handle pushes."""
        assert intrinsic_type_witness(free_system(2), parse_word("[a,b]"), handle(), 4) is None

    def test_zero_exponent(self):
        """Test a word with no net push."""
        assert intrinsic_type_witness(shift_system(), parse_word("t t^-1"), handle()) is None

    def test_ends_move_around_a_cycle(self):
        """Test that a finite orbit still permutes the ends of the copies."""
        witness = intrinsic_type_witness(finite_shift_system(3), parse_word("t"), punctured_pi())
        assert witness.kind == END_PERMUTATION

    def test_unknown_letter(self):
        """Test letters outside T."""
        with pytest.raises(UnknownGeneratorError):
            intrinsic_type_witness(shift_system(), parse_word("a"), handle())
