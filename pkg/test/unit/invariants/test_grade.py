import math

import pytest
from src.invariants import grade
from src.invariants.verdicts import InfinityUpTo
from src.modules.presentation import free_module, residue_field, zero_module


class TestGrade:
    def test_grade_over_a_cohen_macaulay_ring(self, plane, node_modules):
        assert grade.grade_module(residue_field(plane)) == 2
        assert grade.grade_module(node_modules['R/(x)']) == 0
        assert grade.grade_module(node_modules['k']) == 1


    def test_grade_of_zero(self, plane):
        assert grade.grade_module(zero_module(plane)) == math.inf


class TestReducedGrade:
    def test_first_nonvanishing_ext(self, plane):
        assert grade.reduced_grade(residue_field(plane), free_module(plane, [0]), 3) == 2


    def test_no_ext_up_to_the_bound(self, node_modules):
        result = grade.reduced_grade(node_modules['R/(x)'], node_modules['R'], 3)

        assert result == InfinityUpTo(3)


    def test_bound_must_be_positive(self, node_modules):
        with pytest.raises(ValueError):
            grade.reduced_grade(node_modules['k'], node_modules['R'], 0)


class TestProjectiveDimension:
    def test_auslander_buchsbaum_over_a_polynomial_ring(self, plane):
        assert grade.projective_dimension(residue_field(plane), 4) == 2
        assert grade.projective_dimension(free_module(plane, [0, 1]), 4) == 0


    def test_infinite_over_the_node(self, node_modules):
        assert grade.projective_dimension(node_modules['k'], 3) == InfinityUpTo(3)


    def test_zero_module(self, plane):
        assert grade.projective_dimension(zero_module(plane), 3) == -1
