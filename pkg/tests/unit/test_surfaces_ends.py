"""Unit tests for the end-space descriptor algebra and surface types."""

import pytest

from groups.errors import SurfaceSpecError
from schreier.graphs import EndsTag
from surfaces.ends import (
    EMPTY_ENDS,
    INFINITE,
    Cantor,
    DisjointUnion,
    Finite,
    GraphEnds,
    Incomparable,
    OmegaPlusOne,
    ZTwoPoint,
    accumulate,
    cardinality,
    copies,
    equal,
    from_tag,
    is_countable,
    parse_ends,
    planar_count,
    to_text,
    union,
)
from surfaces.surface_type import (
    SURFACE_CATALOG,
    ClosureKind,
    DomainKind,
    PiSpec,
    SurfaceType,
    Symbolic,
    closed_surface,
    closure_of_compact_support,
    flute,
    handle,
    is_infinite_type,
    ladder,
    loch_ness_monster,
    one_holed_torus,
    push_domain_type,
    sphere,
)


class TestEndAlgebra:
    """Test canonical unions and comparisons."""

    def test_finite_sets_add(self):
        """Test finite unions."""
        assert union(Finite(2), Finite(3)) == Finite(5)
        assert union() == EMPTY_ENDS
        assert copies(Finite(1), 4) == Finite(4)

    def test_limit_points_absorb_isolated_ends(self):
        """Test omega+1 absorbing a finite set and two of them making z+2."""
        assert union(OmegaPlusOne(), Finite(3)) == OmegaPlusOne()
        assert union(OmegaPlusOne(), OmegaPlusOne()) == ZTwoPoint()
        assert union(Cantor(), Cantor()) == Cantor()

    def test_mixed_union(self):
        """Test a union the algebra keeps as two terms."""
        d = union(Cantor(), ZTwoPoint())
        assert isinstance(d, DisjointUnion)
        assert to_text(d) == "z+2 + cantor"

    def test_opaque_tags(self):
        """Test that uncatalogued ends only equal themselves."""
        assert equal(GraphEnds("bs"), GraphEnds("bs")) is True
        assert isinstance(equal(GraphEnds("bs"), Finite(2)), Incomparable)
        assert isinstance(cardinality(GraphEnds("bs")), Incomparable)
        assert from_tag(EndsTag.UNKNOWN, "bs") == GraphEnds("bs")
        assert from_tag(EndsTag.FOUR) == Finite(4)

    def test_incomparable_has_no_truth_value(self):
        """Test that undecided comparisons cannot be used as booleans."""
        with pytest.raises(TypeError):
            bool(Incomparable())

    def test_counts(self):
        """Test cardinality, countability and planar counts."""
        assert cardinality(Finite(3)) == 3
        assert cardinality(Cantor()) == INFINITE
        assert is_countable(ZTwoPoint()) is True
        assert is_countable(Cantor()) is False
        assert planar_count(Finite(3), Finite(1)) == 2
        assert planar_count(Cantor(), Cantor()) == 0
        assert planar_count(OmegaPlusOne(), Finite(1)) == INFINITE

    def test_accumulate(self):
        """Test copies of a space accumulating onto graph ends."""
        assert accumulate(EMPTY_ENDS, Finite(2)) == Finite(2)
        assert accumulate(Finite(1), Finite(1)) == OmegaPlusOne()
        assert accumulate(Finite(1), Finite(2)) == ZTwoPoint()
        assert accumulate(Cantor(), Finite(2)) == Cantor()
        assert accumulate(Finite(1), Cantor()) is None


class TestParseEnds:
    """Test the end-space grammar."""

    @pytest.mark.parametrize("text,expected", [
        ("empty", EMPTY_ENDS),
        ("finite(2)", Finite(2)),
        ("omega+1", OmegaPlusOne()),
        ("z+2", ZTwoPoint()),
        ("cantor", Cantor()),
        ("finite(1) + finite(2)", Finite(3)),
        ("graph-ends(bs)", GraphEnds("bs")),
    ])
    def test_terms(self, text, expected):
        """Test every term kind."""
        assert parse_ends(text) == expected

    def test_to_text_round_trip(self):
        """Test that parse_ends inverts to_text."""
        d = union(Cantor(), OmegaPlusOne())
        assert parse_ends(to_text(d)) == d

    def test_malformed(self):
        """Test unparseable descriptors."""
        with pytest.raises(SurfaceSpecError):
            parse_ends("finite(x)")


class TestSurfaceType:
    """Test classification quadruples."""

    def test_catalog_strings(self):
        """Test the printed quadruples."""
        assert str(ladder()) == "(inf, 0, finite(2), finite(2))"
        assert str(closed_surface(4)) == "(4, 0, empty, empty)"
        assert str(SURFACE_CATALOG["blooming_cantor_tree"]()) == "(inf, 0, cantor, cantor)"

    def test_genus_must_match_nonplanar_ends(self):
        """Test that finite genus forbids nonplanar ends and infinite genus needs one."""
        with pytest.raises(SurfaceSpecError):
            SurfaceType(1, 0, Finite(1), Finite(1))
        with pytest.raises(SurfaceSpecError):
            SurfaceType(INFINITE, 0, EMPTY_ENDS, Finite(1))
        with pytest.raises(SurfaceSpecError):
            SurfaceType(-1, 0, EMPTY_ENDS, EMPTY_ENDS)

    def test_matches(self):
        """Test homeomorphism by quadruple."""
        assert ladder().matches(ladder()) is True
        assert ladder().matches(loch_ness_monster()) is False
        assert sphere().matches(closed_surface(0)) is True

    def test_infinite_type(self):
        """Test infinite genus or infinitely many ends."""
        assert is_infinite_type(flute()) is True
        assert is_infinite_type(closed_surface(2)) is False
        assert is_infinite_type(ladder()) is True

    def test_pi_requirements(self):
        """Test one boundary component and not a disk."""
        assert handle().genus == 1
        with pytest.raises(SurfaceSpecError):
            PiSpec(closed_surface(1))
        with pytest.raises(SurfaceSpecError):
            PiSpec(sphere().with_boundary(1))


class TestPushDomains:
    """Test the interior types of push domains."""

    def test_shift_over_handle_is_ladder(self):
        """Test the bi-infinite strip with a handle at every integer."""
        assert push_domain_type(DomainKind.SHIFT, handle()) == ladder()

    def test_one_ended_shift_over_handle(self):
        """Test the strip whose two ends coincide."""
        assert push_domain_type("one_ended_shift", handle()) == loch_ness_monster()

    def test_finite_shift(self):
        """Test the annulus carrying `period` handles."""
        domain = push_domain_type(DomainKind.FINITE_SHIFT, handle(), period=3)
        assert domain == SurfaceType(3, 2, EMPTY_ENDS, EMPTY_ENDS)

    def test_planar_pi(self):
        """Test a punctured Π along a shift."""
        pi = PiSpec(SurfaceType(0, 1, EMPTY_ENDS, Finite(1)), "punctured")
        assert push_domain_type(DomainKind.SHIFT, pi) == SurfaceType(0, 0, EMPTY_ENDS, ZTwoPoint())

    def test_symbolic_when_uncatalogued(self):
        """Test Π with uncatalogued ends along a shift."""
        pi = PiSpec(SurfaceType(INFINITE, 1, GraphEnds("x"), GraphEnds("x")), "opaque")
        assert isinstance(push_domain_type(DomainKind.SHIFT, pi), Symbolic)


class TestClosure:
    """Test the closure of compactly supported mapping classes."""

    def test_catalog(self):
        """Test compact surfaces, the Loch Ness monster and the ladder."""
        assert closure_of_compact_support(closed_surface(2)) is ClosureKind.FULL
        assert closure_of_compact_support(one_holed_torus()) is ClosureKind.FULL
        assert closure_of_compact_support(loch_ness_monster()) is ClosureKind.FULL
        assert closure_of_compact_support(ladder()) is ClosureKind.PROPER
        assert isinstance(closure_of_compact_support(flute()), Incomparable)
