"""Words, presentations, weight maps and group oracles."""

from .bs import NAdic, bs_multiply, bs_normal_form, bs_relator, bs_word
from .errors import (
    DegenerateSystemError,
    InvariantViolation,
    MissingOracleError,
    NotAHomomorphismError,
    NotSurjectiveError,
    ShiftforgeError,
    SpecReferenceError,
    SurfaceSpecError,
    UnknownGeneratorError,
    WordSyntaxError,
)
from .oracles import (
    BS1nOracle,
    CyclicOracle,
    DirectProductOracle,
    FreeAbelianOracle,
    FreeOracle,
    GroupOracle,
    OpaqueOracle,
    RaagOracle,
    cayley_table,
    default_names,
    oracle_is_trivial,
)
from .presentations import Presentation, ZeroSumResult, find_unit_word, is_homomorphism, zero_sum_presentation
from .raag import path_graph, raag_graph, raag_normalize
from .syllables import project_to_factor, syllable_decompose
from .weights import WeightMap, end_flux_weight_map, exponent_sum
from .words import (
    EMPTY,
    Letter,
    Word,
    as_word,
    ball_size,
    enumerate_ball,
    format_word,
    free_reduce,
    is_freely_trivial,
    letter_key,
    parse_word,
    signed_alphabet,
)

__all__ = [
    "BS1nOracle",
    "CyclicOracle",
    "DegenerateSystemError",
    "DirectProductOracle",
    "EMPTY",
    "FreeAbelianOracle",
    "FreeOracle",
    "GroupOracle",
    "InvariantViolation",
    "Letter",
    "MissingOracleError",
    "NAdic",
    "NotAHomomorphismError",
    "NotSurjectiveError",
    "OpaqueOracle",
    "Presentation",
    "RaagOracle",
    "ShiftforgeError",
    "SpecReferenceError",
    "SurfaceSpecError",
    "UnknownGeneratorError",
    "WeightMap",
    "Word",
    "WordSyntaxError",
    "ZeroSumResult",
    "as_word",
    "ball_size",
    "bs_multiply",
    "bs_normal_form",
    "bs_relator",
    "bs_word",
    "cayley_table",
    "default_names",
    "end_flux_weight_map",
    "enumerate_ball",
    "exponent_sum",
    "find_unit_word",
    "format_word",
    "free_reduce",
    "is_freely_trivial",
    "is_homomorphism",
    "letter_key",
    "oracle_is_trivial",
    "parse_word",
    "path_graph",
    "project_to_factor",
    "raag_graph",
    "raag_normalize",
    "signed_alphabet",
    "syllable_decompose",
    "zero_sum_presentation",
]
