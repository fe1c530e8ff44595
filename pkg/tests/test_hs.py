from hypothesis import given, strategies as st

from hasse_schmidt.arith import MultiPoly, symbols
from hasse_schmidt.exterior import Multivector
from hasse_schmidt.hs import (apply_bar, apply_coeff, apply_series, check_hs_property,
                              check_integration_by_parts, compose, explicit_series,
                              hs_from_endomorphism, hs_inverse, invert_series)
from hasse_schmidt.matrices import Matrix

from strategies import int_matrices, multivectors, oracle_Dbar, oracle_Dk

ab = symbols("a", "b", "c")
a, b, c = (MultiPoly.var(ab, i) for i in (1, 2, 3))


def test_zero_endomorphism():
    D = hs_from_endomorphism(Matrix.zero(3), 3)
    assert D.coefficient_matrix(0) == 1
    assert all(D.coefficient_matrix(k) == 0 for k in (1, 2, 3))


def test_grade_one_restriction_is_powers():
    f = Matrix.diag([a, b, c])
    D = hs_from_endomorphism(f, 2)
    assert D.coefficient_matrix(1) == f
    assert D.coefficient_matrix(2) == f @ f
    nil = hs_from_endomorphism(Matrix([[0, 1], [0, 0]]), 2)
    assert nil.coefficient_matrix(2) == 0


def test_diag_eigenvalues():
    f = Matrix.diag([a, b, c])
    uv = Multivector({(1, 2): 1}, 3)
    D = hs_from_endomorphism(f, 2)
    assert apply_coeff(D, 0, uv) == uv
    assert apply_coeff(D, 1, uv) == uv * (a + b)
    assert apply_coeff(D, 2, uv) == uv * (a * a + a * b + b * b)
    assert apply_bar(hs_inverse(Matrix.diag([a, b])), 2, Multivector({(1, 2): 1}, 2)) \
        == Multivector({(1, 2): a * b}, 2)


@given(int_matrices(2, 4), st.data())
def test_bar_vanishes_below_its_order(f, data):
    u = data.draw(multivectors(f.n, grade=1))
    assert apply_bar(hs_inverse(f), 2, u) == 0


@given(int_matrices(1, 4), st.data())
def test_dbar1_equals_d1(f, data):
    u = data.draw(multivectors(f.n))
    assert apply_bar(hs_inverse(f), 1, u) == apply_coeff(hs_from_endomorphism(f, 1), 1, u)


@given(int_matrices(1, 4), st.integers(0, 4), st.data())
def test_matches_composition_sum_oracle(f, k, data):
    u = data.draw(multivectors(f.n))
    assert apply_coeff(hs_from_endomorphism(f, k), k, u) == oracle_Dk(f, k, u)
    assert apply_bar(hs_inverse(f), k, u) == oracle_Dbar(f, k, u)


@given(int_matrices(1, 4), st.integers(0, 4), st.data())
def test_hs_property(f, k, data):
    u, v = data.draw(multivectors(f.n)), data.draw(multivectors(f.n))
    assert check_hs_property(hs_from_endomorphism(f, k), u, v, k)


@given(int_matrices(1, 3), int_matrices(1, 3), st.data())
def test_products_and_inverses_are_hs(f, g, data):
    if f.n != g.n:
        g = Matrix.identity(f.n) + f @ f
    u, v = data.draw(multivectors(f.n)), data.draw(multivectors(f.n))
    prod = compose(hs_from_endomorphism(f, 3), hs_from_endomorphism(g, 3), 3)
    assert check_hs_property(prod, u, v, 3)
    assert check_hs_property(invert_series(hs_from_endomorphism(f, 3)), u, v, 3)


@given(int_matrices(1, 4), st.data())
def test_invert_series_matches_linear(f, data):
    u = data.draw(multivectors(f.n))
    inv = invert_series(hs_from_endomorphism(f, 4), 4)
    lin = hs_inverse(f)
    assert apply_series(inv, u, 4) == apply_series(lin, u, 4)


def test_invert_identity():
    ident = explicit_series([Matrix.identity(3)], max_order=3)
    inv = invert_series(ident)
    u = Multivector({(1, 3): 2, (2,): 1}, 3)
    assert apply_series(inv, u, 3) == [u] + [Multivector({}, 3)] * 3


@given(int_matrices(1, 4), st.integers(0, 4), st.data())
def test_integration_by_parts(f, k, data):
    u, v = data.draw(multivectors(f.n)), data.draw(multivectors(f.n))
    assert check_integration_by_parts(hs_from_endomorphism(f, k), u, v, k)


@given(int_matrices(1, 4), st.data())
def test_integration_by_parts_k1(f, data):
    u, v = data.draw(multivectors(f.n)), data.draw(multivectors(f.n))
    D = hs_from_endomorphism(f, 1)
    d1 = lambda w: apply_coeff(D, 1, w)
    assert (u ^ d1(v)) == d1(u ^ v) - (d1(u) ^ v)


def test_integration_by_parts_zero_inputs():
    f = Matrix([[1, 2], [3, 4]])
    zero = Multivector({}, 2)
    assert check_integration_by_parts(hs_from_endomorphism(f, 3), zero, Multivector({(1,): 1}, 2), 3)
