"""Spec document entries for embedding systems and queries."""

from typing import Annotated, Dict, List, Literal, Optional, Union

from pydantic import Field, model_validator

from actions.verdicts import Status
from models.base import Alphabet, Generator, SpecModel, SpecName
from models.entries import NodeLabel

# Systems


class FreeSystemEntry(SpecModel):
    """Multipushes on a bare graph or on a Schreier surface; `omit` caps copies off."""

    kind: Literal["free"]
    graph: Optional[SpecName] = None
    surface: Optional[SpecName] = None
    letters: Optional[Alphabet] = None
    omit: int = Field(default=0, ge=0)

    @model_validator(mode="after")
    def _one_carrier(self) -> "FreeSystemEntry":
        if (self.graph is None) == (self.surface is None):
            raise ValueError("a free system needs exactly one of graph or surface")
        if self.omit and self.surface is None:
            raise ValueError("omitted copies need a surface")
        return self


class IndicableSystemEntry(SpecModel):
    kind: Literal["indicable"]
    group: SpecName
    weights: Dict[Generator, int]
    domain: Literal["shift", "one_ended_shift", "finite_shift"] = "shift"
    period: int = Field(default=1, ge=1)
    omit: int = Field(default=0, ge=0)
    non_sphere_at: List[int] = []


class FactorEntry(SpecModel):
    group: SpecName
    weights: Dict[Generator, int]


class StarSystemEntry(SpecModel):
    """Factors listed inline, or one of the catalogued RAAG families."""

    kind: Literal["star"]
    factors: List[FactorEntry] = []
    family: Optional[Literal["abelian", "free_abelian", "free"]] = None
    m: int = Field(default=1, ge=1)
    n: int = Field(default=1, ge=1)
    graph: Optional[SpecName] = None

    @model_validator(mode="after")
    def _factors_or_family(self) -> "StarSystemEntry":
        if bool(self.factors) == (self.family is not None):
            raise ValueError("a star system needs exactly one of factors or family")
        return self


class WreathSystemEntry(SpecModel):
    """Lamps from `lamp`; pushed by the integer shift `shift` or by the named push system."""

    kind: Literal["wreath"]
    lamp: SpecName
    shift: Generator = "t"
    push: Optional[SpecName] = None


class BSSystemEntry(SpecModel):
    kind: Literal["bs1n"]
    n: int = Field(ge=2)
    depth: Optional[int] = Field(default=None, ge=1)
    a: Generator = "a"
    t: Generator = "t"


class ExplicitPushSystemEntry(SpecModel):
    kind: Literal["explicit-push"]
    graph: SpecName
    letters: Optional[Alphabet] = None
    non_sphere: List[NodeLabel] = []


SystemEntry = Annotated[
    Union[
        FreeSystemEntry,
        IndicableSystemEntry,
        StarSystemEntry,
        WreathSystemEntry,
        BSSystemEntry,
        ExplicitPushSystemEntry,
    ],
    Field(discriminator="kind"),
]

# Queries


class EvalQuery(SpecModel):
    kind: Literal["eval"]
    system: SpecName
    words: List[str] = Field(min_length=1)
    expect: Optional[List[Status]] = None

    @model_validator(mode="after")
    def _one_expectation_per_word(self) -> "EvalQuery":
        if self.expect is not None and len(self.expect) != len(self.words):
            raise ValueError(f"{len(self.words)} words but {len(self.expect)} expected verdicts")
        return self


class ProbeQuery(SpecModel):
    kind: Literal["probe"]
    system: SpecName
    claimed: SpecName
    radius: int = Field(ge=0)
    expect_diverged: Optional[int] = Field(default=None, ge=0)


class CertifyQuery(SpecModel):
    kind: Literal["certify"]
    surface: SpecName
    m: int = Field(ge=0)
    n: int = Field(ge=0)
    expect_certificate: Optional[bool] = None


class ClassifyQuery(SpecModel):
    """`expect` is the quadruple as printed, e.g. "(inf, 0, finite(2), finite(2))"."""

    kind: Literal["classify"]
    surface: SpecName
    expect: Optional[str] = None


Query = Annotated[
    Union[EvalQuery, ProbeQuery, CertifyQuery, ClassifyQuery],
    Field(discriminator="kind"),
]
