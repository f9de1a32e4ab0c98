import pytest
from src.homological import transpose
from src.modules.isomorphism import is_isomorphic
from src.modules.presentation import free_module


class TestTranspose:
    def test_free_modules_have_zero_transpose(self, plane):
        assert transpose.transpose(free_module(plane, [0, 1])).is_zero()


    def test_transpose_of_a_cyclic_module(self, node, node_modules):
        x, y = node.gens

        result = transpose.transpose(node_modules['R/(x)'])

        assert result.gen_twists == (-1,)
        assert result.rel_twists == (0,)
        assert result.columns == ((x,),)


    def test_double_transpose_of_a_stable_module(self, node_modules):
        M = node_modules['R/(x)']

        assert is_isomorphic(transpose.transpose(transpose.transpose(M)), M).is_isomorphic


    def test_transpose_with_respect_to_the_ring(self, node_modules):
        M = node_modules['k']

        result = transpose.transpose_wrt(M, node_modules['R'])

        assert is_isomorphic(result, transpose.transpose(M)).is_isomorphic


    def test_faults_are_off(self):
        assert transpose.FAULTS == {'skip_minimalization': False}


class TestLinkageOperator:
    def test_lambda_swaps_the_branches_of_the_node(self, node_modules):
        result = transpose.lambda_(node_modules['R/(x)'])

        assert is_isomorphic(result, node_modules['R/(y)']).is_isomorphic


    def test_lambda_of_a_free_module_is_zero(self, node_modules):
        assert transpose.lambda_(node_modules['R']).is_zero()


    def test_t_module_at_level_one_is_the_transpose(self, node_modules):
        M = node_modules['k']

        assert transpose.t_module(M, 1) == transpose.transpose(M)


    def test_t_module_needs_a_positive_level(self, node_modules):
        with pytest.raises(ValueError):
            transpose.t_module(node_modules['k'], 0)
