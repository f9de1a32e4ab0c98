import math

import pytest
from src.errors import InapplicableError
from src.invariants import local_cohomology
from src.modules.presentation import cyclic_module, direct_sum, free_module, residue_field, zero_module
from src.services.corpus import generate_corpus


class TestDepthAndDimension:
    def test_depth_of_the_residue_field_and_the_ring(self, plane):
        assert local_cohomology.depth(residue_field(plane)) == 0
        assert local_cohomology.depth(free_module(plane, [0])) == 2


    def test_zero_module_conventions(self, plane):
        zero = zero_module(plane)

        assert local_cohomology.depth(zero) == math.inf
        assert local_cohomology.krull_dim(zero) == -1
        assert local_cohomology.is_cohen_macaulay(zero)
        assert local_cohomology.is_maximal_cohen_macaulay(zero)


    def test_krull_dimension(self, plane):
        x, y = plane.gens

        assert local_cohomology.krull_dim(cyclic_module(plane, [x])) == 1
        assert local_cohomology.krull_dim(residue_field(plane)) == 0


    def test_local_cohomology_of_the_node(self, node_modules):
        assert local_cohomology.local_cohomology_degrees(node_modules['R']) == [1]
        assert local_cohomology.local_cohomology_degrees(node_modules['k']) == [0]


class TestCohenMacaulay:
    def test_cyclic_modules_over_the_node(self, node_modules):
        assert local_cohomology.is_cohen_macaulay(node_modules['R/(x)'])
        assert local_cohomology.is_maximal_cohen_macaulay(node_modules['R/(x)'])
        assert local_cohomology.is_cohen_macaulay(node_modules['k'])
        assert not local_cohomology.is_maximal_cohen_macaulay(node_modules['k'])


    def test_mixed_dimensions_are_not_cohen_macaulay(self, plane):
        M = direct_sum(residue_field(plane), free_module(plane, [0]))

        assert not local_cohomology.is_cohen_macaulay(M)
        assert local_cohomology.cc(M) == 0


    def test_cc_needs_a_non_cohen_macaulay_module(self, plane):
        with pytest.raises(InapplicableError):
            local_cohomology.cc(free_module(plane, [0]))


    def test_finite_length(self, node_modules):
        assert local_cohomology.is_finite_length(node_modules['k']) == (True, 1)
        assert local_cohomology.is_finite_length(node_modules['R']) == (False, None)


    def test_maximal_ideal_as_associated_prime(self, node_modules):
        assert local_cohomology.m_in_ass(node_modules['k'])
        assert not local_cohomology.m_in_ass(node_modules['R'])


class TestEilenbergMacLaneAndGeneralizedCM:
    def test_cohomology_in_two_spots(self, plane):
        M = direct_sum(residue_field(plane), free_module(plane, [0]))

        assert local_cohomology.is_eilenberg_maclane(M)
        assert local_cohomology.is_generalized_cm(M)


    def test_cohomology_in_three_spots(self, space):
        x, y, z = space.gens
        M = direct_sum(direct_sum(residue_field(space), cyclic_module(space, [x])), free_module(space, [0]))

        assert not local_cohomology.is_eilenberg_maclane(M)


    def test_curve_component_is_not_generalized_cm(self, space):
        x, y, z = space.gens
        M = direct_sum(cyclic_module(space, [x]), cyclic_module(space, [x, y]))

        assert not local_cohomology.is_generalized_cm(M)


    def test_generalized_cm_needs_positive_dimension(self, space):
        with pytest.raises(InapplicableError):
            local_cohomology.is_generalized_cm(residue_field(space))


class TestLocalDuality:
    def test_extreme_degrees_are_depth_and_dimension(self, node, three_lines):
        for ring in (node, three_lines):
            for entry in generate_corpus(ring, 'small'):
                if entry.module.is_zero():
                    continue
                degrees = local_cohomology.local_cohomology_degrees(entry.module)

                assert min(degrees) == local_cohomology.depth(entry.module), entry.tag
                assert max(degrees) == local_cohomology.krull_dim(entry.module), entry.tag
