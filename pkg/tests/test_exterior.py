import pytest
from hypothesis import given, strategies as st

from hasse_schmidt.exterior import (DimensionMismatch, Multivector, contract, grade_project,
                                    sort_blade)

from strategies import multivectors

DIM = 5


def b(*idx, dim=DIM):
    return Multivector.blade(*idx, dim=dim)


def test_wedge_examples():
    assert b(2) ^ b(1) == -b(1, 2)
    assert b(1) ^ b(1) == 0
    assert (b(1) + b(2)) ^ b(1, 3) == -b(1, 2, 3)


def test_sort_blade_sign():
    assert sort_blade((3, 1, 2)) == ((1, 2, 3), 1)
    assert sort_blade((2, 1)) == ((1, 2), -1)
    assert sort_blade((1, 1))[1] == 0


def test_contract_examples():
    assert contract(1, b(1, 2)) == b(2)
    assert contract(2, b(1, 2)) == -b(1)
    assert contract(3, b(1, 2)) == 0


def test_grade_project_examples():
    u = Multivector.scalar(1, DIM) + b(1, 2)
    assert grade_project(u, 2) == b(1, 2)
    assert grade_project(b(1), 0) == 0


def test_dimension_checks():
    with pytest.raises(DimensionMismatch):
        Multivector({(1, 4): 1}, 3)
    with pytest.raises(DimensionMismatch):
        b(1, dim=2) ^ b(1, dim=3)


def test_parse_round_trip():
    u = 2 * b(1, 3) - b(2) + Multivector.scalar(3, DIM)
    assert Multivector.parse(str(u), DIM) == u
    assert Multivector.parse("b3^b1", DIM) == -b(1, 3)


@given(multivectors(DIM), multivectors(DIM), multivectors(DIM))
def test_wedge_associative(u, v, w):
    assert (u ^ v) ^ w == u ^ (v ^ w)


@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_graded_anticommutative(i, j, data):
    u = data.draw(multivectors(DIM, grade=i))
    v = data.draw(multivectors(DIM, grade=j))
    assert u ^ v == (-1) ** (i * j) * (v ^ u)


@given(st.integers(0, 3), st.integers(1, DIM), st.data())
def test_contract_antiderivation(g, j, data):
    u = data.draw(multivectors(DIM, grade=g))
    v = data.draw(multivectors(DIM))
    lhs = contract(j, u ^ v)
    rhs = (contract(j, u) ^ v) + (-1) ** g * (u ^ contract(j, v))
    assert lhs == rhs


@given(multivectors(DIM), st.integers(1, DIM))
def test_contract_squares_to_zero(u, j):
    assert contract(j, contract(j, u)) == 0


@given(multivectors(DIM))
def test_grade_projections_resum(u):
    total = Multivector({}, DIM)
    for g in range(DIM + 1):
        total = total + grade_project(u, g)
    assert total == u
