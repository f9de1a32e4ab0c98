from src.invariants import vanishing
from src.invariants.verdicts import BoundedVerdict, VerdictKind
from src.modules.presentation import cyclic_module, free_module


class TestExtVanishing:
    def test_first_nonvanishing_index_is_the_witness(self, plane):
        x, y = plane.gens

        verdict = vanishing.ext_vanishing(cyclic_module(plane, [x]), free_module(plane, [0]), 3)

        assert verdict.failed
        assert verdict.witness == 1


    def test_exact_once_the_resolution_ends(self, plane):
        verdict = vanishing.ext_vanishing(free_module(plane, [0]), free_module(plane, [1]), 3)

        assert verdict.kind is VerdictKind.TRUE


    def test_bounded_over_the_node(self, node_modules):
        verdict = vanishing.ext_vanishing(node_modules['R/(x)'], node_modules['R'], 3)

        assert verdict == BoundedVerdict.up_to(3)


    def test_empty_range_is_exact(self, node_modules):
        assert vanishing.ext_vanishing_through(node_modules['k'], node_modules['R'], 0).kind is VerdictKind.TRUE


    def test_through_a_finite_range(self, node_modules):
        verdict = vanishing.ext_vanishing_through(node_modules['R/(x)'], node_modules['R'], 2)

        assert verdict.kind is VerdictKind.TRUE


class TestTorVanishing:
    def test_independent_quotients(self, plane):
        x, y = plane.gens

        verdict = vanishing.tor_vanishing(cyclic_module(plane, [x]), cyclic_module(plane, [y]), 3)

        assert verdict.kind is VerdictKind.TRUE


    def test_residue_field_against_itself(self, node_modules):
        verdict = vanishing.tor_vanishing(node_modules['k'], node_modules['k'], 2)

        assert verdict.failed
        assert verdict.witness == 1
