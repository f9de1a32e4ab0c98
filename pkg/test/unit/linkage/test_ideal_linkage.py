import pytest
from src.errors import InapplicableError
from src.linkage import ideal_linkage
from src.modules.presentation import cyclic_module


class TestLinkedByIdeal:
    def test_coordinate_axes_are_linked_by_their_product(self, plane):
        x, y = plane.gens

        result = ideal_linkage.linked_by_ideal(cyclic_module(plane, [x]), cyclic_module(plane, [y]), [x * y])

        assert result.linked
        assert not result.refuted
        assert str(result.ring) == 'QQ[x, y]/(x*y)'


    def test_linking_ideal_must_annihilate_both_modules(self, plane):
        x, y = plane.gens

        with pytest.raises(InapplicableError):
            ideal_linkage.linked_by_ideal(cyclic_module(plane, [x]), cyclic_module(plane, [y]), [x])


    def test_same_module_is_not_linked_to_itself(self, plane):
        x, y = plane.gens
        M = cyclic_module(plane, [x])

        result = ideal_linkage.linked_by_ideal(M, M, [x * y])

        assert result.refuted


class TestLinkedByZero:
    def test_branches_of_the_node(self, node):
        x, y = node.gens

        assert ideal_linkage.is_ideal_linked_by_zero([x], [y], node)
        assert not ideal_linkage.is_ideal_linked_by_zero([x], [x], node)


class TestIdealLinkPair:
    def test_cyclic_quotients_linked_by_their_product(self, plane):
        x, y = plane.gens
        pair = ideal_linkage.IdealLinkPair([x], [y], [x * y], plane)

        result = ideal_linkage.linked_ideals(pair)

        assert result.linked
        assert pair.modules() == (cyclic_module(plane, [x]), cyclic_module(plane, [y]))


    def test_linking_ideal_must_lie_in_the_intersection(self, plane):
        x, y = plane.gens

        with pytest.raises(InapplicableError):
            ideal_linkage.IdealLinkPair([x], [y], [x], plane)
