from src.algebra import hilbert
from src.modules.presentation import cyclic_module, free_module, residue_field


class TestHilbertSeries:
    def test_quotient_by_a_square(self, plane):
        x, y = plane.gens

        series = hilbert.hilbert_series(cyclic_module(plane, [x ** 2]))

        assert str(series) == '(1 + t)/(1 - t)'
        assert series.dimension == 1
        assert series.coefficient(0) == 1
        assert series.coefficient(5) == 2


    def test_free_module_counts_monomials(self, space):
        series = hilbert.hilbert_series(free_module(space, [0]))

        assert series.dimension == 3
        assert series.coefficient(2) == 6
        assert series.length is None


    def test_twist_shifts_the_series(self, plane):
        series = hilbert.hilbert_series(free_module(plane, [2]))

        assert series.coefficient(1) == 0
        assert series.coefficient(2) == 1
        assert series.coefficient(3) == 2


    def test_residue_field_has_length_one(self, three_lines):
        series = hilbert.hilbert_series(residue_field(three_lines))

        assert series.dimension == 0
        assert series.length == 1
        assert str(series) == '1'


    def test_zero_module(self, plane):
        one = plane.poly_ring.one

        series = hilbert.hilbert_series(cyclic_module(plane, [one]))

        assert series.is_zero()
        assert series.dimension == -1
        assert str(series) == '0'


    def test_three_lines_grow_by_three(self, three_lines):
        series = hilbert.hilbert_series(free_module(three_lines, [0]))

        assert series.dimension == 1
        assert [series.coefficient(d) for d in range(4)] == [1, 3, 3, 3]


class TestArithmetic:
    def test_sum_and_difference(self):
        a = hilbert.HilbertSeries.from_dict({0: 1, 1: 1}, 1)
        b = hilbert.HilbertSeries.from_dict({1: 1}, 1)

        assert (a - b) == hilbert.HilbertSeries.from_dict({0: 1}, 1)
        assert (a + b).as_dict() == {0: 1, 1: 2}


    def test_reduced_cancels_common_factors(self):
        series = hilbert.HilbertSeries.from_dict({0: 1, 2: -1}, 2)

        numerator, power = series.reduced()

        assert numerator == {0: 1, 1: 1}
        assert power == 1
