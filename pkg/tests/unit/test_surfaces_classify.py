"""Unit tests for Schreier surfaces, classification and complement invariants."""

from itertools import combinations

import pytest

from groups.errors import SurfaceSpecError
from groups.oracles import BS1nOracle, FreeOracle
from groups.words import parse_word
from schreier.graphs import CATALOG, CayleyGraph, Node, cycle_graph
from surfaces.ends import Cantor, Incomparable
from surfaces.invariants import (
    canonical_omission,
    complement_invariant,
    distinguished_conditions,
    distinguishes,
    family_membership,
)
from surfaces.schreier_surface import SchreierSurfaceSpec, classify
from surfaces.surface_type import PiSpec, SurfaceType, Symbolic, closed_surface, handle, sphere
from actions.multipush import PushSystem
from actions.support import PiCopy, SupportRegion, VertexFront, support_region


def ladder_spec():
    return SchreierSurfaceSpec.of(CayleyGraph(FreeOracle(("t",))), handle(), name="ladder")


class TestClassify:
    """Test the catalogued classification examples."""

    def test_blooming_cantor_tree(self):
        """Test handles over the Cayley graph of F_2."""
        spec = SchreierSurfaceSpec.of(CayleyGraph(FreeOracle("ab")), handle())
        assert str(classify(spec)) == "(inf, 0, cantor, cantor)"

    def test_ladder(self):
        """Test handles over the Cayley graph of Z."""
        assert str(classify(ladder_spec())) == "(inf, 0, finite(2), finite(2))"

    def test_closed_genus_four(self):
        """Test handles on a triangle: one cycle plus three handles."""
        spec = SchreierSurfaceSpec.of(cycle_graph(3), handle())
        assert str(classify(spec)) == "(4, 0, empty, empty)"

    def test_omega_adds_genus(self):
        """Test a closed Ω on the back of one vertex."""
        g = cycle_graph(3)
        spec = SchreierSurfaceSpec.of(g, handle(), {g.node(0): closed_surface(1)})
        assert str(classify(spec)) == "(5, 0, empty, empty)"

    def test_sphere_omegas_are_dropped(self):
        """Test that spheres on the back change nothing."""
        g = cycle_graph(3)
        spec = SchreierSurfaceSpec.of(g, handle(), {g.node(1): sphere()})
        assert spec.omega_items == ()
        assert not spec.is_non_sphere(g.node(1))

    def test_cross_graph(self):
        """Test the four-ended cross with handles."""
        spec = SchreierSurfaceSpec.of(CATALOG["cross"](), handle())
        assert str(classify(spec)) == "(inf, 0, finite(4), finite(4))"

    def test_symbolic_for_unknown_graphs(self):
        """Test a graph whose cycle rank is not catalogued."""
        spec = SchreierSurfaceSpec.of(CayleyGraph(BS1nOracle(2)), handle())
        assert isinstance(classify(spec), Symbolic)

    def test_rejects_omega_off_the_graph(self):
        """Test Ω at a vertex the finite graph does not have."""
        with pytest.raises(SurfaceSpecError):
            SchreierSurfaceSpec(cycle_graph(3), handle(), ((Node(7), closed_surface(1)),))

    def test_rejects_repeated_omega(self):
        """Test two Ω surfaces at one vertex."""
        g = cycle_graph(3)
        items = ((g.node(0), closed_surface(1)), (g.node(0), closed_surface(2)))
        with pytest.raises(SurfaceSpecError):
            SchreierSurfaceSpec(g, handle(), items)


class TestComplementInvariants:
    """Test invariants of the complement of the multipush supports."""

    def test_handle_is_distinguished(self):
        """Test that a one-holed torus satisfies all three conditions."""
        assert distinguished_conditions(handle()) == frozenset({1, 2, 3})

    def test_not_distinguished(self):
        """Test a Π with infinite genus and a Cantor set of ends."""
        pi = PiSpec(SurfaceType(float("inf"), 1, Cantor(), Cantor()), "blooming")
        assert distinguished_conditions(pi) == frozenset()
        spec = SchreierSurfaceSpec.of(CayleyGraph(FreeOracle(("t",))), pi)
        assert isinstance(complement_invariant(spec, 1), Incomparable)

    def test_canonical_omission_is_breadth_first(self):
        """Test the first m vertices from the basepoint."""
        spec = ladder_spec()
        nodes = canonical_omission(spec, 3)
        assert [str(v) for v in nodes] == ["1", "t", "t^-1"]
        assert canonical_omission(spec, 0) == ()
        with pytest.raises(SurfaceSpecError):
            canonical_omission(spec, -1)

    def test_omission_bounded_by_finite_graphs(self):
        """Test that a triangle has only three copies to omit."""
        spec = SchreierSurfaceSpec.of(cycle_graph(3), handle())
        with pytest.raises(SurfaceSpecError):
            canonical_omission(spec, 4)

    def test_ladder_invariants_pairwise_distinct(self):
        """Test omitting 0..3 copies of a handle from the ladder."""
        spec = ladder_spec()
        records = [complement_invariant(spec, m) for m in range(4)]
        assert [r.genus for r in records] == [0, 1, 2, 3]
        for first, second in combinations(records, 2):
            assert distinguishes(first, second) == "genus"

    def test_support_copies_do_not_count(self):
        """Test that omitted copies inside the support are excluded."""
        spec = ladder_spec()
        nodes = canonical_omission(spec, 2)
        region = SupportRegion(frozenset({PiCopy(nodes[0]), VertexFront(nodes[0])}), window=4)
        record = complement_invariant(spec, nodes, support=region)
        assert record.omitted == 1
        assert complement_invariant(spec, nodes, support=SupportRegion()).omitted == 2

    def test_support_region_of_a_shift(self):
        """Test that the shift along the ladder covers every omitted copy in its window."""
        spec = ladder_spec()
        nodes = canonical_omission(spec, 3)
        region = support_region(PushSystem(spec.graph, ("t",)), parse_word("t"), window=6)
        assert set(nodes) <= region.pi_nodes
        assert complement_invariant(spec, nodes, support=region).omitted == 0

    def test_family_membership(self):
        """Test the ladder with handles: in C(Π) and B, not in B∞."""
        flags = family_membership(handle(), ladder_spec())
        assert flags.in_c is True
        assert flags.in_b is True
        assert flags.in_b_infinity is False
