import pytest
from src.algebra.field import RATIONALS, prime_field
from src.errors import HomogeneityError, StructuralError
from src.modules import rings


class TestMakeRing:
    def test_polynomial_ring_invariants(self, space):
        assert space.is_polynomial_ring()
        assert (space.dim, space.depth) == (3, 3)
        assert space.is_cm and space.is_gorenstein
        assert str(space) == 'QQ[x, y, z]'


    def test_node_is_a_gorenstein_curve(self, node):
        assert (node.dim, node.depth, node.codim) == (1, 1, 1)
        assert node.is_cm
        assert node.is_gorenstein
        assert str(node) == 'QQ[x, y]/(x*y)'


    def test_three_lines_are_cm_but_not_gorenstein(self, three_lines):
        assert (three_lines.dim, three_lines.depth) == (1, 1)
        assert three_lines.is_cm
        assert not three_lines.is_gorenstein


    def test_unit_ideal_is_rejected(self, plane):
        x, y = plane.gens

        with pytest.raises(StructuralError):
            rings.quotient_ring(plane, [x - y, plane.poly_ring.one])


    def test_non_homogeneous_relation_is_rejected(self, plane):
        x, y = plane.gens

        with pytest.raises(HomogeneityError):
            rings.make_ring(RATIONALS, ('x', 'y'), [x ** 2 + y])


    def test_relation_from_another_ring_is_rejected(self, plane):
        other = rings.polynomial_ring(prime_field(5), ('x', 'y'))

        with pytest.raises(StructuralError):
            rings.make_ring(RATIONALS, ('x', 'y'), [other.gens[0]])


class TestRingEquality:
    def test_equal_rings_from_different_generators(self, plane):
        x, y = plane.gens
        first = rings.quotient_ring(plane, [x * y])
        second = rings.quotient_ring(plane, [2 * x * y])

        assert first == second
        assert first.key() == second.key()


    def test_ambient_ring(self, node, plane):
        assert node.ambient == plane
        assert plane.ambient is plane
