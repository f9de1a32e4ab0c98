import pytest
from src.errors import InapplicableError
from src.homological import biduality
from src.modules.isomorphism import is_isomorphic
from src.modules.presentation import cyclic_module, free_module, residue_field, twist


class TestBidualityDefect:
    def test_maximal_cohen_macaulay_module_over_a_gorenstein_ring_is_reflexive(self, node_modules):
        defect = biduality.biduality_defect(node_modules['R/(x)'], node_modules['R'])

        assert defect.reflexive


    def test_residue_field_is_not_torsionless(self, plane):
        defect = biduality.biduality_defect(residue_field(plane), free_module(plane, [0]))

        assert not defect.torsionless


class TestFirstSyzygy:
    def test_branch_of_the_node_is_a_syzygy(self, node_modules):
        assert biduality.is_first_syzygy(node_modules['R/(x)'])


    def test_residue_field_is_not_a_syzygy(self, node_modules):
        assert not biduality.is_first_syzygy(node_modules['k'])


    def test_torsion_free_degree(self, plane):
        assert biduality.torsion_free_degree(free_module(plane, [0]), 3) == 3
        assert biduality.torsion_free_degree(residue_field(plane), 3) == 0


class TestPushforward:
    def test_pushforward_of_a_branch(self, node, node_modules):
        x, y = node.gens

        pushforward = biduality.universal_pushforward(node_modules['R/(x)'], node_modules['R'])

        assert pushforward.m == 1
        assert pushforward.dual_exact
        assert is_isomorphic(pushforward.cokernel, twist(cyclic_module(node, [y]), 1)).is_isomorphic


    def test_pushforward_needs_ext_vanishing(self, plane):
        with pytest.raises(InapplicableError):
            biduality.universal_pushforward(residue_field(plane), free_module(plane, [0]))


    def test_syzygy_witness(self, plane):
        R = free_module(plane, [0])

        assert biduality.c_syzygy_witness(R, R, 2).holds
        witness = biduality.c_syzygy_witness(residue_field(plane), R, 1)
        assert witness.steps == 0
        assert not witness.holds


class TestEvaluationKernel:
    def test_reflexive_module_has_no_kernel(self, node_modules):
        assert biduality.evaluation_kernel(node_modules['R/(x)'], node_modules['R']).is_zero()


    def test_torsion_module_is_its_own_kernel(self, node_modules):
        kernel = biduality.evaluation_kernel(node_modules['k'], node_modules['R'])

        assert is_isomorphic(kernel, node_modules['k']).is_isomorphic
