import pytest
from src.errors import InapplicableError
from src.invariants import gc_dimension, semidualizing
from src.invariants.verdicts import GcDimKind, VerdictKind
from src.modules.presentation import free_module, residue_field, zero_module


class TestGcDim:
    def test_maximal_cohen_macaulay_over_a_gorenstein_ring(self, node_modules):
        verdict = gc_dimension.gc_dim(node_modules['R/(x)'], node_modules['R'], 3)

        assert verdict.kind is GcDimKind.ZERO


    def test_residue_field_over_a_gorenstein_ring(self, node_modules):
        verdict = gc_dimension.gc_dim(node_modules['k'], node_modules['R'], 3)

        assert verdict.kind is GcDimKind.FINITE
        assert verdict.value == 1


    def test_residue_field_over_a_non_gorenstein_ring(self, three_lines):
        verdict = gc_dimension.gc_dim(residue_field(three_lines), free_module(three_lines, [0]), 2)

        assert verdict.kind is GcDimKind.INFINITE


    def test_zero_module(self, node):
        R = free_module(node, [0])

        assert gc_dimension.gc_dim(zero_module(node), R, 3).is_zero


    def test_invalid_certificate(self, node_modules):
        certificate = semidualizing.is_semidualizing(node_modules['k'], 2)

        with pytest.raises(InapplicableError):
            gc_dimension.gc_dim(node_modules['R'], node_modules['k'], 2, certificate=certificate)


class TestPerfectIdeals:
    def test_complete_intersection_is_perfect_and_gorenstein(self, plane):
        x, y = plane.gens
        R = free_module(plane, [0])

        assert gc_dimension.is_gc_perfect([x, y], R, 4).holds
        assert gc_dimension.is_gc_gorenstein([x, y], R, 4).holds


    def test_non_gorenstein_perfect_ideal(self, plane):
        x, y = plane.gens
        R = free_module(plane, [0])

        assert gc_dimension.is_gc_perfect([x ** 2, x * y, y ** 2], R, 4).holds
        verdict = gc_dimension.is_gc_gorenstein([x ** 2, x * y, y ** 2], R, 4)
        assert verdict.kind is VerdictKind.FALSE


    def test_reduced_perfect_module(self, plane):
        assert gc_dimension.is_reduced_gc_perfect(residue_field(plane), free_module(plane, [0]), 4).holds
        assert gc_dimension.is_reduced_gc_perfect(free_module(plane, [0]), free_module(plane, [0]), 4).failed
