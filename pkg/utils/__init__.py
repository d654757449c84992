"""Utility functions and helpers."""

from .logging import setup_logging
from .validators import (
    validate_alphabet,
    validate_generator_name,
    validate_radius,
    validate_spec_name,
    validate_word_token,
)

__all__ = [
    "setup_logging",
    "validate_alphabet",
    "validate_generator_name",
    "validate_radius",
    "validate_spec_name",
    "validate_word_token",
]
