from __future__ import annotations

import pytest

from cofreehopf import linalg
from cofreehopf.errors import StructuralError
from cofreehopf.scalars import Scalar


def _s(v):
    return Scalar.coerce(v)


def test_invertibility_over_the_fraction_field():
    one, zero, q = Scalar.one(), Scalar.zero(), Scalar.q_power(1)
    assert linalg.is_invertible([[one, q], [zero, one]])
    assert linalg.is_invertible([[one + q, zero], [zero, one]])
    assert not linalg.is_invertible([[one, one], [one, one]])
    assert not linalg.is_invertible([[zero, zero], [zero, one]])


def test_inverse_with_laurent_entries():
    one, zero, q = Scalar.one(), Scalar.zero(), Scalar.q_power(1)
    inv = linalg.inverse([[one, q], [zero, one]])
    assert inv == [[one, -q], [zero, one]]
    inv = linalg.inverse([[q, zero], [zero, _s(2)]])
    assert inv[0][0] == Scalar.q_power(-1)
    assert inv[1][1] * _s(2) == one


def test_inverse_requires_monomial_determinant():
    one, zero, q = Scalar.one(), Scalar.zero(), Scalar.q_power(1)
    with pytest.raises(StructuralError):
        linalg.inverse([[one + q, zero], [zero, one]])
    with pytest.raises(StructuralError):
        linalg.inverse([[one, one], [one, one]])


def test_inverse_times_matrix_is_identity():
    one, zero, q = Scalar.one(), Scalar.zero(), Scalar.q_power(1)
    matrix = [[q, one, zero], [zero, one, q], [zero, zero, Scalar.q_power(-2)]]
    inv = linalg.inverse(matrix)
    n = 3
    for i in range(n):
        for j in range(n):
            entry = Scalar.zero()
            for k in range(n):
                entry = entry + matrix[i][k] * inv[k][j]
            assert entry == (one if i == j else zero)
