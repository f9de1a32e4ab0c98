import pytest
from src.algebra.field import RATIONALS
from src.errors import InconsistentLinkageError
from src.linkage import horizontal
from src.modules.isomorphism import IsoKind, IsoVerdict, is_isomorphic
from src.modules.presentation import cyclic_module, direct_sum
from src.modules.rings import polynomial_ring, quotient_ring


@pytest.fixture
def dual_numbers():
    """QQ[x]/(x^2)"""
    line = polynomial_ring(RATIONALS, ('x',))
    x, = line.gens
    return quotient_ring(line, [x ** 2])


class TestStability:
    def test_branch_is_stable(self, node_modules):
        assert horizontal.is_stable(node_modules['R/(x)']) == (True, 0)


    def test_free_summand_is_detected(self, node_modules):
        M = direct_sum(node_modules['R'], node_modules['R/(x)'])

        assert horizontal.is_stable(M) == (False, 1)
        assert is_isomorphic(horizontal.stable_part(M), node_modules['R/(x)']).is_isomorphic


class TestLinkageReport:
    def test_branch_of_the_node_is_linked(self, node_modules):
        report = horizontal.linkage_report(node_modules['R/(x)'])

        assert report.stable
        assert report.syzygy_test
        assert report.first_syzygy
        assert report.verdict
        assert report.double_link_iso.kind is IsoKind.ISOMORPHIC
        assert report.consistent


    def test_residue_field_is_not_linked(self, node_modules):
        report = horizontal.linkage_report(node_modules['k'])

        assert report.stable
        assert not report.first_syzygy
        assert not report.verdict
        assert report.consistent


    def test_linked_module_passes_the_check(self, node_modules):
        assert horizontal.is_horizontally_linked(node_modules['R/(x)']).verdict


    def test_disagreeing_criteria_raise(self, mocker, node_modules):
        mocker.patch('src.linkage.horizontal.is_isomorphic',
                     return_value=IsoVerdict(IsoKind.NOT_ISOMORPHIC, certificate='forced'))

        with pytest.raises(InconsistentLinkageError):
            horizontal.is_horizontally_linked(node_modules['R/(x)'])


class TestLinks:
    def test_link_swaps_the_branches(self, node_modules):
        assert is_isomorphic(horizontal.link(node_modules['R/(x)']), node_modules['R/(y)']).is_isomorphic


    def test_branch_of_the_node_is_not_self_linked(self, node_modules):
        assert horizontal.is_self_linked(node_modules['R/(x)']).kind is IsoKind.NOT_ISOMORPHIC


    def test_residue_field_of_the_dual_numbers_is_self_linked(self, dual_numbers):
        x, = dual_numbers.gens

        assert horizontal.is_self_linked(cyclic_module(dual_numbers, [x])).is_isomorphic
