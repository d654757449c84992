"""The spec document: named groups, graphs, surfaces, systems and the queries over them."""

import json
import logging
from pathlib import Path
from typing import Dict, List, Union

from pydantic import field_validator

from models.base import SpecModel, check_names
from models.entries import GraphEntry, GroupSpec, SchreierSurfaceEntry, SurfaceEntry
from models.systems import Query, SystemEntry

logger = logging.getLogger(__name__)


class SpecDocument(SpecModel):
    groups: Dict[str, GroupSpec] = {}
    graphs: Dict[str, GraphEntry] = {}
    pis: Dict[str, SurfaceEntry] = {}
    surfaces: Dict[str, SchreierSurfaceEntry] = {}
    systems: Dict[str, SystemEntry] = {}
    queries: List[Query] = []

    @field_validator("groups", "graphs", "pis", "surfaces", "systems")
    @classmethod
    def _valid_names(cls, value: Dict[str, object], info) -> Dict[str, object]:
        check_names(value, info.field_name)
        return value

    @classmethod
    def from_json(cls, text: str) -> "SpecDocument":
        return cls.model_validate_json(text)

    @classmethod
    def load(cls, path: Union[str, Path]) -> "SpecDocument":
        path = Path(path)
        logger.debug(f"loading spec document {path}")
        return cls.from_json(path.read_text(encoding="utf-8"))

    def to_json(self) -> str:
        """Canonical form: defaults left out, keys sorted, two-space indent, trailing newline."""
        data = self.model_dump(mode="json", exclude_defaults=True)
        return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"

    def dump(self, path: Union[str, Path]) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8")
