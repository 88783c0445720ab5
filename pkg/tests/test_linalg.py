"""Tests for exact matrix algebra and subspace operations."""

import random
from fractions import Fraction

import pytest

from subspace_hilbert.linalg import (
    IntEchelon,
    QMatrix,
    SubspaceBasis,
    annihilator,
    approx_rank,
    int_rank,
    intersect,
    kernel,
    primitive_int_vector,
    rank,
    rref,
    spans_equal,
    sum_subspaces,
)


def random_matrix(rng: random.Random, nrows: int, ncols: int) -> QMatrix:
    return QMatrix(
        [
            [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(ncols)]
            for _ in range(nrows)
        ],
        ncols=ncols,
    )


def random_subspace(rng: random.Random, ambient: int, max_vectors: int) -> SubspaceBasis:
    vectors = [
        [Fraction(rng.randint(-3, 3)) for _ in range(ambient)]
        for _ in range(rng.randint(0, max_vectors))
    ]
    return SubspaceBasis.span_of(ambient, vectors)


class TestQMatrix:
    def test_rejects_ragged_rows(self):
        with pytest.raises(ValueError):
            QMatrix([[1, 2], [3]])

    def test_empty_needs_ncols(self):
        with pytest.raises(ValueError):
            QMatrix([])
        m = QMatrix([], ncols=4)
        assert m.nrows == 0 and m.ncols == 4

    def test_matvec(self):
        m = QMatrix([[1, 2], [3, 4]])
        assert m.matvec([1, 1]) == (Fraction(3), Fraction(7))


class TestRref:
    def test_known_form(self):
        m = QMatrix([[2, 4], [1, 3]])
        reduced, pivots = rref(m)
        assert pivots == (0, 1)
        assert reduced.entries == (
            (Fraction(1), Fraction(0)),
            (Fraction(0), Fraction(1)),
        )

    def test_dependent_rows(self):
        m = QMatrix([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
        reduced, pivots = rref(m)
        assert pivots == (0, 1)
        assert reduced.entries[2] == (Fraction(0),) * 3

    def test_idempotent(self):
        rng = random.Random(701)
        for _ in range(50):
            m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
            reduced, pivots = rref(m)
            again, pivots2 = rref(reduced)
            assert again.entries == reduced.entries
            assert pivots2 == pivots

    def test_rank_nullity(self):
        rng = random.Random(702)
        for _ in range(60):
            m = random_matrix(rng, rng.randint(1, 12), rng.randint(1, 12))
            assert rank(m) + kernel(m).dim == m.ncols


class TestKernel:
    def test_vectors_annihilated(self):
        rng = random.Random(703)
        for _ in range(40):
            m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
            ker = kernel(m)
            for v in ker.vectors:
                assert m.matvec(v) == (Fraction(0),) * m.nrows

    def test_full_rank_kernel_trivial(self):
        assert kernel(QMatrix.identity(4)).dim == 0

    def test_zero_rows_kernel_full(self):
        assert kernel(QMatrix([], ncols=3)).dim == 3


class TestSubspaceBasis:
    def test_rejects_dependent(self):
        with pytest.raises(ValueError):
            SubspaceBasis(2, [[1, 0], [2, 0]])

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            SubspaceBasis(3, [[1, 0]])

    def test_span_of_reduces(self):
        s = SubspaceBasis.span_of(3, [[1, 0, 0], [2, 0, 0], [0, 1, 0]])
        assert s.dim == 2

    def test_zero_subspace(self):
        s = SubspaceBasis(5)
        assert s.dim == 0
        assert s.contains([0, 0, 0, 0, 0])
        assert not s.contains([1, 0, 0, 0, 0])

    def test_contains(self):
        s = SubspaceBasis(3, [[1, 0, 0], [0, 1, 0]])
        assert s.contains([3, -2, 0])
        assert not s.contains([0, 0, 1])


class TestSubspaceOps:
    def test_annihilator_count(self):
        rng = random.Random(704)
        for _ in range(40):
            s = random_subspace(rng, rng.randint(1, 6), 4)
            forms = annihilator(s)
            assert len(forms) == s.ambient_dim - s.dim
            for f in forms:
                for v in s.vectors:
                    assert sum(a * b for a, b in zip(f, v)) == 0

    def test_double_annihilator(self):
        rng = random.Random(705)
        for _ in range(30):
            s = random_subspace(rng, rng.randint(1, 6), 4)
            again = kernel(
                QMatrix(annihilator(s), ncols=s.ambient_dim)
            )
            assert spans_equal(s, again)

    def test_intersect_known(self):
        a = SubspaceBasis(3, [[1, 0, 0], [0, 1, 0]])
        b = SubspaceBasis(3, [[0, 1, 0], [0, 0, 1]])
        assert spans_equal(intersect(a, b), SubspaceBasis(3, [[0, 1, 0]]))

    def test_grassmann_dimension_formula(self):
        rng = random.Random(706)
        for _ in range(60):
            ambient = rng.randint(1, 6)
            a = random_subspace(rng, ambient, 4)
            b = random_subspace(rng, ambient, 4)
            both = intersect(a, b)
            total = sum_subspaces(a, b)
            assert a.dim + b.dim == both.dim + total.dim

    def test_intersect_commutes_up_to_span(self):
        rng = random.Random(707)
        for _ in range(30):
            ambient = rng.randint(1, 5)
            a = random_subspace(rng, ambient, 3)
            b = random_subspace(rng, ambient, 3)
            assert spans_equal(intersect(a, b), intersect(b, a))

    def test_intersect_with_full_space(self):
        full = SubspaceBasis.span_of(3, QMatrix.identity(3).entries)
        s = SubspaceBasis(3, [[1, 2, 3]])
        assert spans_equal(intersect(full, s), s)

    def test_intersection_contained_in_both(self):
        rng = random.Random(708)
        for _ in range(30):
            ambient = rng.randint(1, 5)
            a = random_subspace(rng, ambient, 3)
            b = random_subspace(rng, ambient, 3)
            for v in intersect(a, b).vectors:
                assert a.contains(v) and b.contains(v)


class TestPrimitiveIntVector:
    def test_clears_denominators(self):
        assert primitive_int_vector([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]

    def test_strips_gcd(self):
        assert primitive_int_vector([4, 6, 8]) == [2, 3, 4]

    def test_zero_vector(self):
        assert primitive_int_vector([0, 0]) == [0, 0]


class TestApproxRank:
    def test_exact_cases(self):
        assert approx_rank([[1.0, 0.0], [0.0, 1.0]]) == 2
        assert approx_rank([[1.0, 2.0], [2.0, 4.0]]) == 1
        assert approx_rank([[0.0, 0.0], [0.0, 0.0]]) == 0

    def test_tolerance_collapses_near_dependence(self):
        m = [[1.0, 2.0], [2.0, 4.0000001]]
        assert approx_rank(m, rel_tol=1e-4) == 1
        assert approx_rank(m, rel_tol=1e-12) == 2

    def test_matches_exact_rank_on_integer_matrices(self):
        rng = random.Random(709)
        for _ in range(40):
            nrows, ncols = rng.randint(1, 8), rng.randint(1, 8)
            rows = [[rng.randint(-5, 5) for _ in range(ncols)] for _ in range(nrows)]
            exact = rank(QMatrix(rows, ncols=ncols))
            assert approx_rank(rows) == exact

    def test_rejects_nonpositive_tolerance(self):
        with pytest.raises(ValueError):
            approx_rank([[1.0]], rel_tol=0.0)


class TestIntEchelon:
    def test_simple_rank(self):
        ech = IntEchelon(3)
        assert ech.add([1, 2, 3])
        assert not ech.add([2, 4, 6])
        assert ech.add([0, 1, 1])
        assert ech.rank == 2

    def test_matches_rational_rank(self):
        rng = random.Random(710)
        for _ in range(60):
            nrows, ncols = rng.randint(1, 10), rng.randint(1, 10)
            rows = [[rng.randint(-9, 9) for _ in range(ncols)] for _ in range(nrows)]
            assert int_rank(rows, ncols) == rank(QMatrix(rows, ncols=ncols))

    def test_large_entries_fall_back_exactly(self):
        big = 10**30
        rows = [[big, big + 1, 0], [big + 1, big, 0], [1, 1, 1]]
        assert int_rank(rows, 3) == 3
        rows = [[big, 2 * big], [3 * big, 6 * big]]
        assert int_rank(rows, 2) == 1

    def test_accumulated_overflow_is_avoided(self):
        # Repeated cross-multiplications grow entries; the result must still
        # agree with exact rational elimination.
        rng = random.Random(711)
        for _ in range(10):
            ncols = 8
            rows = [
                [rng.randint(-10**9, 10**9) for _ in range(ncols)] for _ in range(8)
            ]
            assert int_rank(rows, ncols) == rank(QMatrix(rows, ncols=ncols))

    def test_zero_rows_and_columns(self):
        ech = IntEchelon(3)
        assert not ech.add([0, 0, 0])
        assert ech.rank == 0
        assert int_rank([], 5) == 0

    def test_full_flag(self):
        ech = IntEchelon(2)
        ech.add([1, 0])
        assert not ech.full
        ech.add([0, 1])
        assert ech.full

    def test_rejects_wrong_length(self):
        with pytest.raises(ValueError):
            IntEchelon(3).add([1, 2])
