from sympy.polys.domains import QQ

from src.algebra import linear


def q(*values):
    return [QQ(v) for v in values]


class TestRowReduction:
    def test_rank_of_dependent_rows(self):
        rows = [q(1, 2, 3), q(2, 4, 6), q(0, 1, 1)]

        assert linear.rank(rows, 3, QQ) == 2


    def test_nullspace_vectors_are_solutions(self):
        rows = [q(1, 2, 3), q(0, 1, 1)]

        basis = linear.nullspace(rows, 3, QQ)

        assert len(basis) == 1
        for row in rows:
            assert sum(a * b for a, b in zip(row, basis[0])) == 0


    def test_solve_consistent_system(self):
        rows = [q(1, 1), q(1, -1)]

        assert linear.solve(rows, q(3, 1), 2, QQ) == q(2, 1)


    def test_solve_inconsistent_system(self):
        rows = [q(1, 1), q(2, 2)]

        assert linear.solve(rows, q(1, 3), 2, QQ) is None


    def test_invertibility(self):
        assert linear.is_invertible([q(0, 1), q(1, 0)], QQ)
        assert not linear.is_invertible([q(1, 2), q(2, 4)], QQ)
        assert not linear.is_invertible([q(1, 2)], QQ)


class TestIncrementalEchelon:
    def test_dependent_vector_is_refused(self):
        echelon = linear.IncrementalEchelon(QQ)

        assert echelon.insert({0: QQ(1), 1: QQ(1)})
        assert echelon.insert({1: QQ(1)})
        assert not echelon.insert({0: QQ(2)})
        assert len(echelon) == 2


    def test_zero_vector_is_refused(self):
        echelon = linear.IncrementalEchelon(QQ)

        assert not echelon.insert({3: QQ(0)})
