"""Unit tests for spec documents and the builder."""

import json

import pytest
from pydantic import ValidationError

from groups.errors import SpecReferenceError
from groups.oracles import FreeOracle
from models import SpecBuilder, SpecDocument, SurfaceEntry, node_label, surface_type
from constructions.handles import MultipushHandle
from tests.conftest import SPECS_DIR

SPEC_FILES = sorted(p.name for p in SPECS_DIR.glob("*.json"))


def document(data):
    return SpecDocument.from_json(json.dumps(data))


class TestSpecDocument:
    """Test loading, validation and the canonical form."""

    @pytest.mark.parametrize("name", SPEC_FILES)
    def test_round_trip(self, specs_dir, name):
        """Test that the canonical form reloads to the same document."""
        doc = SpecDocument.load(specs_dir / name)
        again = SpecDocument.from_json(doc.to_json())
        assert again == doc
        assert again.to_json() == doc.to_json()

    def test_canonical_form(self):
        """Test sorted keys, dropped defaults and the trailing newline."""
        text = document({"groups": {"z": {"kind": "free", "generators": ["t"]}}}).to_json()
        assert text.endswith("}\n")
        assert '"queries"' not in text
        assert json.loads(text) == {"groups": {"z": {"generators": ["t"], "kind": "free"}}}

    def test_dump(self, tmp_path):
        """Test writing the canonical form."""
        doc = document({"groups": {"z": {"kind": "free", "generators": ["t"]}}})
        target = tmp_path / "z.json"
        doc.dump(target)
        assert SpecDocument.load(target) == doc

    @pytest.mark.parametrize("data", [
        {"groups": {"g": {"kind": "mystery"}}},
        {"groups": {"g": {"kind": "free", "generators": ["a"], "colour": "red"}}},
        {"groups": {"g": {"kind": "free", "generators": ["a", "a"]}}},
        {"groups": {"g": {"kind": "free", "generators": ["a b"]}}},
        {"groups": {"bad name": {"kind": "free", "generators": ["a"]}}},
        {"groups": {"g": {"kind": "raag", "vertices": ["a"], "edges": [["a", "b"]]}}},
        {"groups": {"g": {"kind": "bs1n", "n": 1}}},
        {"pis": {"p": {"catalog": "one_holed_torus", "genus": 2}}},
        {"systems": {"s": {"kind": "free"}}},
        {"systems": {"s": {"kind": "free", "graph": "g", "omit": 1}}},
        {"systems": {"s": {"kind": "star", "family": "free", "factors": [{"group": "g", "weights": {"a": 1}}]}}},
        {"queries": [{"kind": "eval", "system": "s", "words": ["a"], "expect": ["TRIVIAL", "TRIVIAL"]}]},
        {"queries": [{"kind": "probe", "system": "s", "claimed": "c", "radius": -1}]},
        {"colour": "red"},
    ])
    def test_rejects_invalid_documents(self, data):
        """Test unknown kinds, extra keys and field constraints."""
        with pytest.raises(ValidationError):
            document(data)


class TestSpecBuilder:
    """Test name resolution."""

    @pytest.mark.parametrize("name", SPEC_FILES)
    def test_every_spec_resolves(self, spec_builder, name):
        """Test building every entry and query reference."""
        spec_builder(name).build_all()

    def test_caches_entries(self, spec_builder):
        """Test that a name resolves to one object."""
        builder = spec_builder("free.json")
        assert builder.system("free2") is builder.system("free2")
        assert isinstance(builder.system("free2"), MultipushHandle)

    def test_window_reaches_handles(self, spec_builder):
        """Test the builder window on the built handles."""
        assert spec_builder("free.json", window=5).system("free2").window == 5

    def test_unknown_name(self, spec_builder):
        """Test a reference to a missing entry."""
        with pytest.raises(SpecReferenceError):
            spec_builder("free.json").system("nowhere")

    def test_dangling_reference(self):
        """Test a graph naming a group the document lacks."""
        builder = SpecBuilder(document({"graphs": {"g": {"kind": "cayley", "group": "missing"}}}))
        with pytest.raises(SpecReferenceError):
            builder.graph("g")

    def test_self_reference(self):
        """Test a product group listing itself."""
        builder = SpecBuilder(document({"groups": {"p": {"kind": "product", "components": ["p"]}}}))
        with pytest.raises(SpecReferenceError):
            builder.oracle("p")

    def test_presentation_override(self):
        """Test declared relators parsed over the oracle's alphabet."""
        builder = SpecBuilder(document({"groups": {"f": {"kind": "free", "generators": ["a"], "relators": ["a^3"]}}}))
        assert isinstance(builder.oracle("f"), FreeOracle)
        assert [str(r) for r in builder.presentation("f").relators] == ["a^3"]
        with pytest.raises(SpecReferenceError):
            builder.presentation("g")

    def test_surface_entries(self):
        """Test catalogued surfaces and quadruples."""
        assert str(surface_type(SurfaceEntry(catalog="ladder"))) == "(inf, 0, finite(2), finite(2))"
        assert str(surface_type(SurfaceEntry(catalog="one_holed_torus"))) == "(1, 1, empty, empty)"
        quadruple = SurfaceEntry(genus="inf", boundary=1, nonplanar_ends="cantor", ends="cantor")
        assert str(surface_type(quadruple)) == "(inf, 1, cantor, cantor)"
        with pytest.raises(SpecReferenceError):
            surface_type(SurfaceEntry(catalog="teacup"))

    def test_node_labels(self):
        """Test that list labels become tuples."""
        assert node_label([1, 0]) == (1, 0)
        assert node_label("x") == "x"
