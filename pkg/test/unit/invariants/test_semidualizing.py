import pytest
from src.errors import InapplicableError
from src.invariants import semidualizing
from src.modules.isomorphism import is_isomorphic
from src.modules.presentation import free_module


class TestIsSemidualizing:
    def test_ring_is_semidualizing(self, node_modules):
        certificate = semidualizing.is_semidualizing(node_modules['R'], 3)

        assert certificate.valid


    def test_residue_field_is_not(self, node_modules):
        certificate = semidualizing.is_semidualizing(node_modules['k'], 3)

        assert not certificate.valid
        assert not certificate.homothety.is_isomorphic


    def test_canonical_module_of_three_lines(self, three_lines):
        omega = semidualizing.canonical_module(three_lines)

        certificate = semidualizing.is_semidualizing(omega, 2)

        assert omega.num_generators == 2
        assert certificate.valid


class TestCanonicalModule:
    def test_gorenstein_ring_is_its_own_canonical_module(self, node):
        omega = semidualizing.canonical_module(node)

        assert is_isomorphic(omega, free_module(node, [0])).is_isomorphic


    def test_reduced_ring_embeds_its_canonical_module(self, three_lines):
        ideal = semidualizing.embed_canonical_as_ideal(three_lines)

        assert len(ideal.generators) == 2
        assert any(ideal.generators)


class TestAuslanderClass:
    def test_everything_is_in_the_class_of_the_ring(self, node_modules):
        verdict = semidualizing.in_auslander_class(node_modules['k'], node_modules['R'], 3)

        assert verdict.holds
        assert verdict.note == 'C = R'


    def test_class_of_a_module_that_is_not_semidualizing(self, node_modules):
        with pytest.raises(InapplicableError):
            semidualizing.in_auslander_class(node_modules['R'], node_modules['k'], 2)


    def test_free_module_is_in_the_class_of_the_canonical_module(self, three_lines):
        omega = semidualizing.canonical_module(three_lines)

        verdict = semidualizing.in_auslander_class(free_module(three_lines, [0]), omega, 2)

        assert verdict.holds


class TestInducedSemidualizing:
    def test_principal_ideal_over_the_node(self, node, node_modules):
        x, y = node.gens

        K, certificate = semidualizing.induced_semidualizing([x], node_modules['R'], 3)

        assert K.num_generators == 1
        assert certificate.valid
