from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from hasse_schmidt.arith import MultiPoly, PowerSeries, inverse_laplace, laplace, symbols
from hasse_schmidt.cayley_hamilton import (CharPoly, brooks_coefficients, ch_operator_apply,
                                           ch_operator_series, char_poly_via_top_form, exp_ft,
                                           laplace_star, ode_apply, standard_basis, u_basis,
                                           verify_ch_theorem, verify_ch_theorem_upto,
                                           wronski_column_check)
from hasse_schmidt.exterior import Multivector, all_blades
from hasse_schmidt.matrices import Matrix

from strategies import cofactor_det, int_matrices, multivectors, rationals

abc = symbols("a", "b", "c")
a, b, c = (MultiPoly.var(abc, i) for i in (1, 2, 3))
DIAG = Matrix.diag([a, b, c])


def test_char_poly_diag():
    cp = char_poly_via_top_form(DIAG)
    assert cp.e == (a + b + c, a * b + a * c + b * c, a * b * c)
    assert brooks_coefficients(DIAG)[1] == a * b + a * c + b * c


def test_char_poly_zero_and_nilpotent():
    assert str(char_poly_via_top_form(Matrix.zero(3))) == "1"
    assert str(char_poly_via_top_form(Matrix([[0, 1], [0, 0]]))) == "1"


@given(int_matrices(1, 4))
def test_char_poly_matches_cofactor_of_t_minus_f(f):
    T = symbols("t")
    t = MultiPoly.var(T, 1)
    cp = char_poly_via_top_form(f)
    d = MultiPoly.coerce(cofactor_det([[(t if i == j else 0) - f[i, j] for j in range(f.n)]
                                       for i in range(f.n)]))
    assert [d.coefficient(((1, j),) if j else ()) for j in range(f.n + 1)] == cp.det_t_minus_f()


@given(int_matrices(1, 5))
def test_brooks_trace_and_det(f):
    e = brooks_coefficients(f)
    assert e[0] == f.trace()
    assert e[-1] == cofactor_det([list(row) for row in f.rows])
    assert list(char_poly_via_top_form(f).e) == e


def test_ch_operator_examples():
    uv = Multivector({(1, 2): 1}, 3)
    assert ch_operator_apply(DIAG, 0, uv) == uv
    assert ch_operator_apply(DIAG, 2, uv) == 0
    assert ch_operator_apply(DIAG, 4, uv) == 0


def test_ch_operator_low_grade_value():
    # p_2(D) on a grade-1 vector of diag(a,b,c) is nonzero in general: (a^2 - e1 a + e2) b1 = bc b1
    assert ch_operator_apply(DIAG, 2, Multivector({(1,): 1}, 3)) == Multivector({(1,): b * c}, 3)


def test_vanishing_example_r3_k2():
    rep = verify_ch_theorem(DIAG, 2)
    assert rep.holds and rep.checked_grades == (2, 3)
    assert rep.summary() == "OK: p_2(D) vanishes on grades > 1"


@given(int_matrices(2, 4))
def test_vanishing_below_rank(f):
    for rep in verify_ch_theorem_upto(f, f.n - 1):
        assert rep.holds, rep.failures


@given(int_matrices(1, 4))
def test_vanishing_at_and_above_rank_on_positive_grades(f):
    r = f.n
    cp = char_poly_via_top_form(f)
    for blade in all_blades(r):
        if not blade:
            continue
        ps = ch_operator_series(f, Multivector({blade: 1}, r), r + 3, cp)
        assert all(p == 0 for p in ps[r:])


@given(int_matrices(1, 4))
def test_scalar_blade_at_k_equal_r(f):
    # D(t)1 = 1, so p_r(D)1 = (-1)^r e_r = (-1)^r det f; only k > r kills the scalars
    r = f.n
    one = Multivector.scalar(1, r)
    cp = char_poly_via_top_form(f)
    ps = ch_operator_series(f, one, r + 2, cp)
    assert ps[r] == Multivector.scalar((-1) ** r * cp.coefficient(r), r)
    assert ps[r + 1] == 0 and ps[r + 2] == 0
    rep = verify_ch_theorem(f, r)
    assert rep.holds == (cp.coefficient(r) == 0)
    assert rep.failures == ([] if rep.holds else [()])


@given(int_matrices(1, 4))
def test_classical_cayley_hamilton(f):
    rep = verify_ch_theorem(f, f.n)
    assert rep.classical_residual == 0


def test_laplace_examples():
    s = PowerSeries([1] * 5, 4)
    assert laplace(s) == PowerSeries([1, 1, 2, 6, 24], 4)


@given(st.lists(rationals, min_size=1, max_size=8))
def test_laplace_round_trip(cs):
    s = PowerSeries(cs, len(cs) - 1)
    assert inverse_laplace(laplace(s)) == s


def test_u_basis_coefficients():
    cp = CharPoly.symbolic(3)
    H = cp.H_series(8)
    for j, u in enumerate(u_basis(cp, 8).series):
        for n in range(9):
            want = H[n - j] * Fraction(1, factorial(n)) if n >= j else 0
            assert u[n] == want


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_u_and_v_solve_ode(r):
    cp = CharPoly.symbolic(r)
    for y in u_basis(cp, 10).series + standard_basis(cp, 10).series:
        assert ode_apply(cp, y) == PowerSeries([0], 10 - r)


def test_ode_witnesses():
    e1 = CharPoly.symbolic(1)
    res = ode_apply(e1, PowerSeries([1], 3))
    assert res[0] == -e1.e[0] and res != PowerSeries([0], 2)
    A = symbols("a")
    av = MultiPoly.var(A, 1)
    exp_at = PowerSeries([av ** n * Fraction(1, factorial(n)) for n in range(8)], 7)
    assert ode_apply(CharPoly((av,)), exp_at) == PowerSeries([0], 6)
    with pytest.raises(ValueError):
        ode_apply(CharPoly.symbolic(3), PowerSeries([1], 2))


@given(int_matrices(1, 3), st.data())
def test_laplace_star_solves_ode_off_scalars(f, data):
    u = data.draw(multivectors(f.n))
    u = Multivector({bl: x for bl, x in u.terms.items() if bl}, f.n)
    cp = char_poly_via_top_form(f)
    y = laplace_star(f, u, 8)
    res = ode_apply(cp, y)
    assert all(res[n] == 0 for n in range(res.order + 1))


@given(int_matrices(1, 3))
def test_laplace_star_on_scalars_leaves_det_residual(f):
    cp = char_poly_via_top_form(f)
    r = f.n
    res = ode_apply(cp, laplace_star(f, Multivector.scalar(1, r), 8))
    assert res[0] == Multivector.scalar((-1) ** r * cp.coefficient(r), r)


@given(int_matrices(1, 3, entries=rationals))
def test_exp_ft_power_series(f):
    got = exp_ft(f, 6)
    power = Matrix.identity(f.n)
    for k in range(7):
        assert got[k] == power * Fraction(1, factorial(k))
        power = power @ f


@given(int_matrices(1, 3))
def test_exp_ft_derivative(f):
    E = exp_ft(f, 7)
    dE = E.derivative()
    assert all(dE[n] == f @ E[n] for n in range(dE.order + 1))


@pytest.mark.parametrize("r", [1, 2, 3])
def test_wronski(r):
    assert wronski_column_check(CharPoly.symbolic(r), 8)
