from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from slackmat import Matrix, left_kernel_basis, rank, rank_factorization, rref, solve_linear
from slackmat.matrix import dot, inverse, is_zero_vec, ones, right_kernel_basis, unit

from golden import COUNTEREXAMPLE, PRISM, SQUARE_HOMOG
from oracles import sympy_rank

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    p = draw(st.integers(1, max_rows))
    q = draw(st.integers(1, max_cols))
    data = draw(st.lists(
        st.lists(fracs, min_size=q, max_size=q), min_size=p, max_size=p,
    ))
    return Matrix(data, cols=q)


class TestRref:
    def test_identity(self):
        r, pivots, rk = rref(Matrix.identity(3))
        assert r == Matrix.identity(3)
        assert pivots == (0, 1, 2)
        assert rk == 3

    def test_proportional_rows(self):
        r, pivots, rk = rref(Matrix([[1, 2], [2, 4]]))
        assert rk == 1
        assert pivots == (0,)
        assert r.data[0] == (F(1), F(2))

    def test_prism_rank_four(self):
        assert rank(PRISM) == 4

    @given(matrices())
    @settings(max_examples=100, deadline=None)
    def test_idempotent(self, m):
        r, _, _ = rref(m)
        r2, _, _ = rref(r)
        assert r2 == r

    @given(matrices())
    @settings(max_examples=100, deadline=None)
    def test_rank_matches_independent_oracle(self, m):
        assert rank(m) == sympy_rank(m)


class TestKernels:
    def test_identity_empty(self):
        assert left_kernel_basis(Matrix.identity(3)) == []

    def test_proportional_rows(self):
        basis = left_kernel_basis(Matrix([[1, 2], [2, 4]]))
        assert len(basis) == 1
        (y,) = basis
        assert y[0] * 1 + y[1] * 2 == 0

    def test_counterexample_zero_rows(self):
        basis = left_kernel_basis(COUNTEREXAMPLE)
        assert set(basis) == {unit(4, 2), unit(4, 3)}

    @given(matrices())
    @settings(max_examples=100, deadline=None)
    def test_annihilation_and_dimension(self, m):
        basis = left_kernel_basis(m)
        assert len(basis) == m.rows - rank(m)
        for y in basis:
            assert is_zero_vec(m.vecmat(y))


class TestSolveLinear:
    def test_identity(self):
        assert solve_linear(Matrix.identity(3), ones(3)) == ones(3)

    def test_prism_ones_solvable(self):
        mu = solve_linear(PRISM, ones(6))
        assert mu is not None
        assert PRISM.matvec(mu) == ones(6)

    def test_prism_transpose_ones_unsolvable(self):
        assert solve_linear(PRISM.transpose(), ones(5)) is None

    def test_rhs_length_checked(self):
        with pytest.raises(ValueError):
            solve_linear(Matrix.identity(2), ones(3))

    @given(matrices(), st.data())
    @settings(max_examples=100, deadline=None)
    def test_solution_or_rank_jump(self, m, data):
        b = data.draw(st.lists(fracs, min_size=m.rows, max_size=m.rows))
        x = solve_linear(m, b)
        aug = m.hstack(Matrix([[v] for v in b], cols=1))
        if x is None:
            assert rank(aug) > rank(m)
        else:
            assert m.matvec(x) == tuple(F(v) for v in b)
            assert rank(aug) == rank(m)


class TestRankFactorization:
    def test_identity(self):
        a, b = rank_factorization(Matrix.identity(3))
        assert a == Matrix.identity(3)
        assert b == Matrix.identity(3)

    def test_zero(self):
        a, b = rank_factorization(Matrix.zero(2, 2))
        assert a.cols == 0 and b.rows == 0
        assert a * b == Matrix.zero(2, 2)

    def test_square_example_inner_dimension(self):
        a, b = rank_factorization(SQUARE_HOMOG)
        assert a.cols == 3
        assert a * b == SQUARE_HOMOG

    @given(matrices())
    @settings(max_examples=100, deadline=None)
    def test_exact_reproduction_full_rank_factors(self, m):
        a, b = rank_factorization(m)
        k = rank(m)
        assert a.cols == k and b.rows == k
        assert a * b == m
        assert rank(a) == k and rank(b) == k


class TestInverse:
    def test_round_trip(self):
        m = Matrix([[2, 1], [1, 1]])
        assert m * inverse(m) == Matrix.identity(2)

    def test_singular_raises(self):
        with pytest.raises(ValueError):
            inverse(Matrix([[1, 2], [2, 4]]))


class TestRightKernel:
    @given(matrices())
    @settings(max_examples=100, deadline=None)
    def test_annihilation(self, m):
        for x in right_kernel_basis(m):
            assert is_zero_vec(m.matvec(x))
