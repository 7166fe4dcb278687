import random
from fractions import Fraction

from fpalg import FieldSpec, Scalar
from fpalg.linalg import scalar_matrix_rank, sparse_field_rank
from randgen import rich_scalar

Q = FieldSpec(0)
QT = FieldSpec(1)


def sparse_rows(rows):
    return [{j: v for j, v in enumerate(row) if v} for row in rows]


class TestKnownRanks:
    def test_identity(self):
        one, zero = Scalar.one(Q), Scalar.zero(Q)
        rows = [[one, zero], [zero, one]]
        assert scalar_matrix_rank(rows) == 2
        assert sparse_field_rank(sparse_rows(rows)) == 2

    def test_repeated_row(self):
        t = Scalar.generator(QT, 0)
        one = Scalar.one(QT)
        rows = [[t, one], [t, one], [t * t, t]]
        # third row is t * first row
        assert scalar_matrix_rank(rows) == 1
        assert sparse_field_rank(sparse_rows(rows)) == 1

    def test_rational_function_entries(self):
        t = Scalar.generator(QT, 0)
        one = Scalar.one(QT)
        rows = [[one / t, one], [one, t]]
        # det = 1/t * t - 1 = 0
        assert scalar_matrix_rank(rows) == 1

    def test_zero_matrix(self):
        zero = Scalar.zero(Q)
        assert scalar_matrix_rank([[zero, zero]]) == 0
        assert sparse_field_rank([{}]) == 0


class TestCrossValidation:
    def test_dense_and_sparse_agree_on_random_scalar_matrices(self):
        rng = random.Random(127)
        for _ in range(60):
            nrows = rng.randint(1, 5)
            ncols = rng.randint(1, 5)
            rows = [
                [rich_scalar(rng, QT, depth=1) for _ in range(ncols)]
                for _ in range(nrows)
            ]
            assert scalar_matrix_rank(rows) == sparse_field_rank(sparse_rows(rows))

    def test_sparse_rank_over_fractions(self):
        rng = random.Random(131)
        for _ in range(60):
            nrows = rng.randint(1, 6)
            ncols = rng.randint(1, 6)
            scalars = [
                [Scalar.from_fraction(Q, Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
                 for _ in range(ncols)]
                for _ in range(nrows)
            ]
            fractions = [
                {j: row[j].as_fraction() for j in range(ncols) if row[j]}
                for row in scalars
            ]
            assert sparse_field_rank(fractions) == scalar_matrix_rank(scalars)
