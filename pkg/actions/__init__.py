"""Homeomorphisms of Schreier surfaces: multipushes, supports, diagonals, wreaths and BS windows."""

from .bs_window import BSWindow, BSWindowResult, CopyState, apply_word, bs_window_action, window_matches_normal_form
from .diagonal import (
    DiagonalFactor,
    DiagonalSystem,
    NormalizedDiagonal,
    bar,
    diagonal_is_trivial,
    diagonal_normalize,
    diagonal_system,
    push_power,
)
from .displacement import deck_distance, displacement_profile, lift_displacement, multipush_displacement
from .intrinsic import END_PERMUTATION, HANDLE_SHIFT, IntrinsicWitness, intrinsic_type_witness
from .multipush import (
    MultipushSystem,
    OmittedCopy,
    PushSystem,
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
from .support import (
    EdgeFront,
    OmegaCell,
    PiCopy,
    SupportRegion,
    VertexFront,
    axis_conjugator,
    commute_by_disjoint_support,
    cross_commutator,
    cross_system,
    support_overlay,
    support_region,
)
from .verdicts import Status, Undecided, Verdict
from .wreath import (
    IntegerShift,
    PushGroup,
    WordPushGroup,
    WreathElement,
    WreathSystem,
    brute_force_agrees,
    lamp_at,
    lamplighter,
    simulate,
    wreath_is_trivial,
    wreath_normalize,
)

__all__ = [
    "BSWindow",
    "BSWindowResult",
    "CopyState",
    "DiagonalFactor",
    "DiagonalSystem",
    "END_PERMUTATION",
    "EdgeFront",
    "HANDLE_SHIFT",
    "IntegerShift",
    "IntrinsicWitness",
    "MultipushSystem",
    "NormalizedDiagonal",
    "OmegaCell",
    "OmittedCopy",
    "PiCopy",
    "PushGroup",
    "PushSystem",
    "Status",
    "SupportRegion",
    "Undecided",
    "Verdict",
    "VertexFront",
    "WordPushGroup",
    "WreathElement",
    "WreathSystem",
    "abelian_system",
    "apply_word",
    "axis_conjugator",
    "bar",
    "brute_force_agrees",
    "bs_window_action",
    "commute_by_disjoint_support",
    "coset_action",
    "cross_commutator",
    "cross_system",
    "deck_distance",
    "diagonal_is_trivial",
    "diagonal_normalize",
    "diagonal_system",
    "displacement_profile",
    "finite_shift_system",
    "first_moved",
    "free_system",
    "intrinsic_type_witness",
    "lamp_at",
    "lamplighter",
    "lift_displacement",
    "multipush_displacement",
    "multipush_is_trivial",
    "one_ended_shift_system",
    "push_power",
    "shift_system",
    "simulate",
    "support_overlay",
    "support_region",
    "trajectory",
    "window_matches_normal_form",
    "wreath_is_trivial",
    "wreath_normalize",
]
