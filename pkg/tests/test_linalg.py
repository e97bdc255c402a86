from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from rowspace.families import build
from rowspace.graph import Graph, multiply_vertices
from rowspace.linalg import (
    RationalMatrix,
    adjacency_matrix,
    combine_rows,
    integer_row_echelon,
    is_row,
    nullity,
    rank,
    solve_membership,
)

HALF = Fraction(1, 2)


def sympy_rank(M: RationalMatrix) -> int:
    return sympy.Matrix(M.rows, M.cols, [sympy.Rational(e) for e in M.entries]).rank()


class TestRationalMatrix:
    def test_entries_normalized(self):
        M = RationalMatrix(1, 2, (Fraction(2, 4), Fraction(3, -6)))
        assert M.entries == (HALF, -HALF)

    def test_shape_validation(self):
        with pytest.raises(ValueError):
            RationalMatrix(2, 2, (Fraction(1),) * 3)
        with pytest.raises(ValueError):
            RationalMatrix.from_rows([[1, 2], [3]])

    def test_transpose_round_trip(self):
        M = RationalMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
        assert M.transpose().transpose() == M
        assert M.transpose().at(2, 1) == 6


class TestAdjacencyMatrix:
    def test_star_matches_pinned_matrix(self):
        M = adjacency_matrix(build("star", 4))
        expected = [
            [0, 1, 1, 1, 1],
            [1, 0, 0, 0, 0],
            [1, 0, 0, 0, 0],
            [1, 0, 0, 0, 0],
            [1, 0, 0, 0, 0],
        ]
        assert M == RationalMatrix.from_rows(expected)

    def test_c5_with_twin_matches_pinned_matrix(self):
        M = adjacency_matrix(build("c5-with-twin"))
        expected = [
            [0, 1, 0, 0, 1, 0],
            [1, 0, 1, 0, 0, 0],
            [0, 1, 0, 1, 0, 1],
            [0, 0, 1, 0, 1, 0],
            [1, 0, 0, 1, 0, 1],
            [0, 0, 1, 0, 1, 0],
        ]
        assert M == RationalMatrix.from_rows(expected)

    def test_edgeless_graph_is_zero_matrix(self):
        M = adjacency_matrix(Graph(3, (0, 0, 0)))
        assert all(e == 0 for e in M.entries)


class TestRank:
    @pytest.mark.parametrize(
        "family,size,expected",
        [
            ("path", 5, 4),
            ("cycle", 8, 6),
            ("petersen", None, 10),
            ("cycle", 5, 5),
            ("apexed-net", None, 7),
            ("complete", 4, 4),
        ],
    )
    def test_known_ranks(self, family, size, expected):
        assert rank(adjacency_matrix(build(family, size))) == expected

    def test_zero_matrix(self):
        assert rank(RationalMatrix(3, 3, (Fraction(0),) * 9)) == 0

    def test_rational_entries(self):
        M = RationalMatrix.from_rows([[HALF, 1], [Fraction(1, 3), Fraction(2, 3)]])
        assert rank(M) == sympy_rank(M) == 1

    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=8))
    def test_matches_sympy(self, g):
        assert rank(adjacency_matrix(g)) == sympy_rank(adjacency_matrix(g))

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=6))
    def test_rank_of_transpose(self, g):
        M = adjacency_matrix(g)
        assert rank(M) == rank(M.transpose())

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=6), st.data())
    def test_rank_permutation_invariant(self, g, data):
        perm = data.draw(st.permutations(range(g.n)))
        relabeled = Graph.from_edges(g.n, [(perm[u], perm[v]) for u, v in g.edges()])
        assert rank(adjacency_matrix(relabeled)) == rank(adjacency_matrix(g))

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=5), st.data())
    def test_rank_preserved_by_blowup(self, g, data):
        m = data.draw(st.lists(st.integers(1, 3), min_size=g.n, max_size=g.n))
        blown = multiply_vertices(g, m)
        assert rank(adjacency_matrix(blown)) == rank(adjacency_matrix(g))

    @settings(max_examples=80, deadline=None)
    @given(
        st.lists(
            st.lists(st.fractions(min_value=-5, max_value=5), min_size=4, max_size=4),
            min_size=1,
            max_size=5,
        )
    )
    def test_matches_sympy_on_rational_matrices(self, rows):
        M = RationalMatrix.from_rows(rows)
        assert rank(M) == sympy_rank(M)


class TestNullity:
    def test_examples(self):
        assert nullity(build("cycle", 8)) == 2
        assert nullity(build("complete", 4)) == 0
        assert nullity(build("path", 5)) == 1


class TestSolveMembership:
    def test_star_all_ones(self):
        M = adjacency_matrix(build("star", 4))
        cert = solve_membership(M, (1, 1, 1, 1, 1))
        assert cert is not None
        assert combine_rows(M, cert.coefficients) == (1, 1, 1, 1, 1)
        # the hand combination of the first two rows also certifies it
        assert combine_rows(M, (1, 1, 0, 0, 0)) == (1, 1, 1, 1, 1)

    def test_pinned_half_integer_combination(self):
        M = adjacency_matrix(build("rank5-2"))
        cert = solve_membership(M, (1,) * 6)
        assert cert is not None
        assert combine_rows(M, (HALF, -HALF, 0, 0, HALF, 1)) == (1,) * 6

    def test_zero_matrix_has_trivial_row_space(self):
        M = RationalMatrix(3, 3, (Fraction(0),) * 9)
        assert solve_membership(M, (1, 0, 0)) is None
        assert solve_membership(M, (0, 0, 0)) is not None

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            solve_membership(adjacency_matrix(build("cycle", 3)), (1, 0))

    def test_non_square_matrix(self):
        M = RationalMatrix.from_rows([[1, 0, 1], [0, 1, 1]])
        cert = solve_membership(M, (1, 1, 2))
        assert cert is not None
        assert combine_rows(M, cert.coefficients) == (1, 1, 2)
        assert solve_membership(M, (1, 1, 0)) is None

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=7), st.data())
    def test_every_row_is_a_member(self, g, data):
        M = adjacency_matrix(g)
        i = data.draw(st.integers(0, g.n - 1))
        row = tuple(int(e) for e in M.row(i))
        cert = solve_membership(M, row)
        assert cert is not None
        assert combine_rows(M, cert.coefficients) == tuple(Fraction(e) for e in row)

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=6), st.data())
    def test_agrees_with_rank_augmentation(self, g, data):
        M = adjacency_matrix(g)
        x = tuple(data.draw(st.integers(0, 1)) for _ in range(g.n))
        member = solve_membership(M, x) is not None
        rows = [[int(e) for e in M.row(i)] for i in range(M.rows)]
        augmented_rank = len(integer_row_echelon(rows + [list(x)])[1])
        assert member == (augmented_rank == rank(M))


class TestIsRow:
    def test_star_examples(self):
        M = adjacency_matrix(build("star", 4))
        assert is_row(M, (1, 1, 1, 1, 1)) is None
        assert is_row(M, (0, 1, 1, 1, 1)) == 0
        assert is_row(M, (1, 0, 0, 0, 0)) == 1  # smallest matching index

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            is_row(adjacency_matrix(build("cycle", 3)), (1, 0))

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=6), st.data())
    def test_own_rows_found(self, g, data):
        M = adjacency_matrix(g)
        k = data.draw(st.integers(0, g.n - 1))
        found = is_row(M, tuple(int(e) for e in M.row(k)))
        assert found is not None
        assert M.row(found) == M.row(k)
