"""Validation utilities for user-supplied names, tokens and bounds."""

import re
from typing import Iterable, Optional

GENERATOR_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$")
WORD_TOKEN = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*(\^-?\d+)?$")
SPEC_NAME = re.compile(r"^[A-Za-z0-9_][A-Za-z0-9_.\-]*$")


def validate_generator_name(name: Optional[str]) -> bool:
    """Validate a generator name (identifier, primes allowed)."""
    if not name:
        return False
    return bool(GENERATOR_NAME.match(name))


def validate_word_token(token: Optional[str]) -> bool:
    """Validate a single word token: `name`, `name^-1` or `name^k`."""
    if not token:
        return False
    return bool(WORD_TOKEN.match(token))


def validate_spec_name(name: Optional[str]) -> bool:
    """Validate a name used for cross-references inside a spec document."""
    if not name:
        return False
    return bool(SPEC_NAME.match(name))


def validate_radius(radius: Optional[int], maximum: Optional[int] = None) -> bool:
    """Check that a search radius is a non-negative int within the cap."""
    if radius is None or isinstance(radius, bool) or not isinstance(radius, int):
        return False
    if radius < 0:
        return False
    if maximum is not None and radius > maximum:
        return False
    return True


def validate_alphabet(names: Iterable[str]) -> bool:
    """An alphabet is a non-empty collection of distinct valid generator names."""
    names = list(names)
    if not names:
        return False
    if len(set(names)) != len(names):
        return False
    return all(validate_generator_name(n) for n in names)
