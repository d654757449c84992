"""Base configuration shared by the spec document models."""

from typing import Annotated, Iterable, List

from pydantic import AfterValidator, BaseModel, ConfigDict

from utils.validators import validate_alphabet, validate_generator_name, validate_spec_name


def _spec_name(value: str) -> str:
    if not validate_spec_name(value):
        raise ValueError(f"invalid name {value!r}")
    return value


def _generator(value: str) -> str:
    if not validate_generator_name(value):
        raise ValueError(f"invalid generator name {value!r}")
    return value


def _alphabet(values: List[str]) -> List[str]:
    if not validate_alphabet(values):
        raise ValueError(f"alphabet must be distinct generator names, got {values}")
    return values


SpecName = Annotated[str, AfterValidator(_spec_name)]
Generator = Annotated[str, AfterValidator(_generator)]
Alphabet = Annotated[List[str], AfterValidator(_alphabet)]


class SpecModel(BaseModel):
    """Base class for every spec document entry; unknown keys are rejected."""

    model_config = ConfigDict(extra="forbid")


def check_names(names: Iterable[str], section: str) -> None:
    for name in names:
        if not validate_spec_name(name):
            raise ValueError(f"invalid name {name!r} in {section}")
