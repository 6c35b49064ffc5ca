from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from kronrep import exactlin as el
from kronrep.exactlin import Field

from oracles import minor_rank
from strategies import matrices

F5, F7, Q = Field.prime(5), Field.prime(7), Field.rational()


def test_field_rejects_composite():
    with pytest.raises(ValueError):
        Field.prime(6)


def test_identity_has_full_rank_and_no_kernel():
    rk, K = el.rank_and_kernel(F5, F5.eye(3))
    assert rk == 3 and K.shape == (3, 0)


def test_zero_map_kernel_is_everything():
    rk, K = el.rank_and_kernel(F5, F5.zeros(2, 4))
    assert rk == 0 and K.shape == (4, 4)


def test_rref_by_hand_over_q():
    R, piv = el.rref(Q, [[0, 1], [0, 2]])
    assert R.tolist() == [[Fraction(0), Fraction(1)], [Fraction(0), Fraction(0)]]
    assert piv == [1]


def test_large_prime_uses_python_ints():
    F = Field.prime(2147483647)
    a = F.array([[123456, 999999], [2, 3]])
    assert a.dtype == object
    inv = el.inverse(F, a)
    assert F.matmul(a, inv).tolist() == [[1, 0], [0, 1]]


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_rank_matches_minor_oracle(data):
    a = data.draw(matrices(F7, 4, 4))
    assert el.rank(F7, a) == minor_rank(a, 7)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_rank_matches_minor_oracle_over_q(data):
    a = data.draw(matrices(Q, 3, 4))
    assert el.rank(Q, a) == minor_rank(a)


@settings(max_examples=60, deadline=None)
@given(st.data(), st.integers(1, 5), st.integers(1, 5))
def test_kernel_rank_and_rref_invariants(data, m, n):
    a = data.draw(matrices(F5, m, n))
    rk, K = el.rank_and_kernel(F5, a)
    assert rk + K.shape[1] == n
    assert el.is_zero(F5.matmul(a, K))
    assert rk == el.rank(F5, a.T)
    R, piv = el.rref(F5, a)
    assert len(piv) == rk
    assert np.array_equal(el.rref(F5, R)[0], R)
    assert el.rank(F5, np.vstack([R, a])) == rk  # same row space


def test_solve_identity_returns_rhs():
    B = F5.array([[1, 2], [3, 4], [0, 1]])
    assert np.array_equal(el.solve_linear(F5, F5.eye(3), B), B)


def test_solve_zero_system_with_nonzero_rhs_has_no_solution():
    assert el.solve_linear(F5, F5.zeros(2, 2), F5.array([[1], [0]])) is None


def test_solve_row_mismatch_is_an_error():
    with pytest.raises(ValueError):
        el.solve_linear(F5, F5.eye(2), F5.zeros(3, 1))


@settings(max_examples=60, deadline=None)
@given(st.data(), st.integers(1, 4), st.integers(1, 4))
def test_solve_consistent_and_inconsistent(data, m, n):
    A = data.draw(matrices(F5, m, n))
    X0 = data.draw(matrices(F5, n, 2))
    X = el.solve_linear(F5, A, F5.matmul(A, X0))
    assert np.array_equal(F5.matmul(A, X), F5.matmul(A, X0))
    B = data.draw(matrices(F5, m, 1))
    solvable = el.rank(F5, A) == el.rank(F5, np.hstack([A, B]))
    assert (el.solve_linear(F5, A, B) is not None) == solvable


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_complement_projector(data):
    S = el.column_basis(F5, data.draw(matrices(F5, 4, 2)))
    Q_, L = el.complement_projector(F5, S)
    assert el.is_zero(F5.matmul(Q_, S))
    assert np.array_equal(F5.matmul(Q_, L), F5.eye(Q_.shape[0]))
    assert Q_.shape[0] == 4 - S.shape[1]
