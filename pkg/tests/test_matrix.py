"""
Tests for integer matrices and the Smith normal form.
"""

import pytest
from hypothesis import given

from src.abgrp.matrix import (
    IntMatrix,
    integer_kernel,
    inverse_unimodular,
    smith_normal_form,
    solve_integer_system,
)
from src.utils.error_handling import InputValidationError, InvariantBreachError
from tests.conftest import int_matrices


class TestIntMatrix:
    def test_from_rows_requires_cols_without_rows(self):
        """A matrix without rows needs an explicit column count."""
        with pytest.raises(InputValidationError):
            IntMatrix.from_rows([])
        assert IntMatrix.from_rows([], cols=3).shape == (0, 3)

    def test_ragged_rows_rejected(self):
        """Rows of different lengths are rejected."""
        with pytest.raises(InputValidationError):
            IntMatrix.from_rows([[1, 2], [3]])

    def test_from_columns_transposes(self):
        """from_columns places each vector as a column."""
        m = IntMatrix.from_columns([[1, 2], [3, 4], [5, 6]], rows=2)
        assert m.to_lists() == [[1, 3, 5], [2, 4, 6]]

    def test_product_and_shape_mismatch(self):
        """Multiplication checks inner dimensions."""
        a = IntMatrix.from_rows([[1, 2], [3, 4]])
        b = IntMatrix.from_rows([[0, 1], [1, 0]])
        assert (a @ b).to_lists() == [[2, 1], [4, 3]]
        with pytest.raises(InputValidationError):
            a @ IntMatrix.identity(3)

    def test_determinant(self):
        """Determinants of small matrices, 1 for the empty matrix."""
        assert IntMatrix.from_rows([[2, 4], [6, 8]]).determinant() == -8
        assert IntMatrix.identity(0).determinant() == 1


class TestSmithNormalForm:
    def test_known_matrix(self):
        """[[2, 4], [6, 8]] has invariant factors 2 and 4."""
        form = smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]]))
        assert form.invariants == (2, 4)
        assert form.rank == 2

    def test_rank_deficient(self):
        """A rank one matrix has a single non-zero invariant factor."""
        form = smith_normal_form(IntMatrix.from_rows([[1, 2, 3], [2, 4, 6]]))
        assert form.invariants == (1, 0)
        assert form.rank == 1

    def test_empty_matrix_keeps_shape(self):
        """Zero-row matrices get an empty diagonal of the right shape."""
        form = smith_normal_form(IntMatrix.zeros(0, 3))
        assert form.d.shape == (0, 3)
        assert form.u.shape == (0, 0)
        assert form.v == IntMatrix.identity(3)

    @given(int_matrices())
    def test_contract_on_random_matrices(self, m):
        """u·m·v = d with a non-negative divisibility chain and unimodular transforms."""
        d, u, v = smith_normal_form(m)
        assert u @ m @ v == d
        assert d.is_diagonal()
        diagonal = d.diagonal_entries()
        assert all(x >= 0 for x in diagonal)
        for a, b in zip(diagonal, diagonal[1:]):
            assert (b == 0) if a == 0 else (b % a == 0)
        assert abs(u.determinant()) == 1
        assert abs(v.determinant()) == 1


class TestLatticeHelpers:
    def test_integer_kernel(self):
        """The kernel of a 1x3 row has rank two and is annihilated."""
        m = IntMatrix.from_rows([[1, 2, 3]])
        kernel = integer_kernel(m)
        assert kernel.shape == (3, 2)
        assert (m @ kernel).is_zero()

    def test_solve_integer_system(self):
        """2x = 4 has a solution, 2x = 3 has none over Z."""
        m = IntMatrix.from_rows([[2]])
        assert solve_integer_system(m, (4,)) == (2,)
        assert solve_integer_system(m, (3,)) is None

    def test_inverse_unimodular(self):
        """Unimodular matrices invert over Z and others are refused."""
        u = IntMatrix.from_rows([[1, 1], [0, 1]])
        assert inverse_unimodular(u).to_lists() == [[1, -1], [0, 1]]
        with pytest.raises(InvariantBreachError):
            inverse_unimodular(IntMatrix.from_rows([[2, 0], [0, 1]]))
