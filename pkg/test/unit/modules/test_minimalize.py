from src.modules import minimalize
from src.modules.presentation import ModulePresentation, as_ambient_module, cyclic_module, free_module


class TestMinimalize:
    def test_unit_entry_is_pivoted_away(self, plane):
        one, zero = plane.poly_ring.one, plane.poly_ring.zero
        redundant = ModulePresentation(plane, (0, 0), (0,), ((one, zero),))

        result = minimalize.minimalize(redundant)

        assert result == free_module(plane, [0])
        assert not minimalize.is_minimal(redundant)
        assert minimalize.is_minimal(result)


    def test_repeated_relations_are_pruned(self, plane):
        x, y = plane.gens

        result = minimalize.minimalize(cyclic_module(plane, [x, 2 * x, y, x + y]))

        assert result.num_generators == 1
        assert result.num_relations == 2


    def test_relations_implied_by_the_ring_are_dropped(self, node):
        x, y = node.gens

        result = minimalize.minimalize(cyclic_module(node, [x, x * y, x ** 2]))

        assert result.num_relations == 1


    def test_tracking_keeps_the_surviving_generators(self, plane):
        x, y = plane.gens
        one, zero = plane.poly_ring.one, plane.poly_ring.zero
        M = ModulePresentation(plane, (0, 0), (0, 1), ((one, zero), (zero, x)))

        result, kept = minimalize.minimalize_tracking(M)

        assert kept == (1,)
        assert result == cyclic_module(plane, [x])


    def test_minimal_presentation_is_unchanged(self, plane):
        x, y = plane.gens
        M = cyclic_module(plane, [x, y])

        assert minimalize.minimalize(M) == M


    def test_relations_in_two_degrees(self, plane):
        x, y = plane.gens
        M = cyclic_module(plane, [x, y ** 2, x * y])

        result = minimalize.minimalize(M)

        assert result == cyclic_module(plane, [x, y ** 2])
        assert minimalize.is_minimal(result)


    def test_two_generators_with_relations_in_two_degrees(self, plane):
        x, y = plane.gens
        zero = plane.poly_ring.zero
        M = ModulePresentation(plane, (0, 0), (1, 2), ((x, zero), (zero, y ** 2)))

        assert minimalize.minimalize(M) == M


    def test_relations_in_two_degrees_over_a_quotient_ring(self, node):
        x, y = node.gens

        result = minimalize.minimalize(cyclic_module(node, [x, y ** 2, x * y ** 2]))

        assert result.num_generators == 1
        assert result.num_relations == 2


    def test_ambient_view_of_a_quotient_module(self, node_modules):
        result = minimalize.minimalize(as_ambient_module(node_modules['R/(x)']))

        assert result.num_relations == 1
