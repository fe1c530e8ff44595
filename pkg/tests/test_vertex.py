import pytest
from hypothesis import given, strategies as st

from hasse_schmidt.arith import X, LaurentSeries, MultiPoly, PowerSeries
from hasse_schmidt.cayley_hamilton import CharPoly
from hasse_schmidt.exterior import Multivector
from hasse_schmidt.symmetric import (Partition, RankError, e, h_from_e, partitions,
                                     partitions_up_to)
from hasse_schmidt.vertex import (BAR, PLAIN, TruncationError, convergence_check, dh_dx_check,
                                  eigen_e_check, eigen_h_check, freeness_check,
                                  gamma_diffop_oracle, gamma_r, gamma_star_r, giambelli_verify,
                                  module_action, multiplicativity_check, partition_from_wedge,
                                  shift_matrix, sigma_bar_plus, sigma_minus_on_schur, sigma_plus,
                                  wedge_from_partition)


def test_shift_matrices():
    up, down = shift_matrix(1, 3), shift_matrix(-1, 3)
    assert up.column(0) == {2: 1} and up.column(2) == {}
    assert down.column(0) == {} and down.column(2) == {2: 1}


def test_partition_wedge_examples():
    assert wedge_from_partition(Partition(), 3).blade == (1, 2, 3)
    assert wedge_from_partition(Partition((2,)), 2).blade == (1, 4)
    with pytest.raises(TruncationError):
        wedge_from_partition(Partition((3,)), 2, N=4)
    with pytest.raises(RankError):
        wedge_from_partition(Partition((1, 1, 1)), 2)
    with pytest.raises(ValueError):
        partition_from_wedge((2, 1), 2)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_partition_wedge_bijection(r):
    seen = set()
    for lam in partitions_up_to(6, r):
        w = wedge_from_partition(lam, r)
        assert partition_from_wedge(w.blade, r) == lam
        seen.add(w.blade)
    assert len(seen) == sum(1 for _ in partitions_up_to(6, r))


def test_truncation_guard():
    u = Multivector({(1, 3): 1}, 3)
    with pytest.raises(TruncationError):
        sigma_bar_plus(1, u)
    with pytest.raises(TruncationError):
        sigma_plus(2, u.with_dim(4))


def test_module_action_examples():
    w0 = wedge_from_partition(Partition(), 2)
    assert module_action(e(1), w0) == Multivector({(1, 3): 1}, module_action(e(1), w0).dim)
    assert module_action(MultiPoly.const(1), w0) == w0.multivector.with_dim(module_action(1, w0).dim)
    with pytest.raises(RankError):
        module_action(e(3), w0)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_eigenvalues_at_vacuum(r):
    w0 = wedge_from_partition(Partition(), r, r + 6)
    for j in range(5):
        got = sigma_plus(j, w0.multivector)
        assert got == module_action(h_from_e(r, j), w0.multivector, r + 6)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_eigenvalue_bullets(r):
    for lam in partitions_up_to(6, r):
        assert all(eigen_e_check(lam, r, i) for i in range(1, r + 1))
        assert all(eigen_h_check(lam, r, j) for j in range(4))


def test_giambelli_small():
    assert giambelli_verify(Partition(), 3)
    assert giambelli_verify(Partition((1,)), 2)
    assert giambelli_verify(Partition((3, 2, 1)), 3)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_freeness(r):
    assert freeness_check(r)


def test_freeness_relation_is_sharp():
    # dropping the top e_r term breaks the relation, so the check is not vacuous
    N = 10
    eta = Multivector({(5,): 1}, N)
    total = Multivector({}, N)
    for k in range(2):
        term = module_action(e(k) if k else MultiPoly.const(1),
                             Multivector({(3 - k,): 1}, N) ^ eta, N)
        total = total + (-term if k % 2 else term)
    assert total != 0


def test_sigma_minus_vacuum():
    one = LaurentSeries.from_terms({0: 1}, 0)
    assert sigma_minus_on_schur(Partition(), 3, PLAIN) == one
    assert sigma_minus_on_schur(Partition(), 3, BAR) == one


@pytest.mark.parametrize("n", range(7))
def test_sigma_minus_on_h(n):
    h = lambda m: h_from_e(3, m)
    assert sigma_minus_on_schur(Partition((n,)), 3, BAR) == \
        LaurentSeries.from_terms({0: h(n), -1: -h(n - 1)}, 0)
    assert sigma_minus_on_schur(Partition((n,)), 3, PLAIN) == \
        LaurentSeries.from_terms({-i: h(n - i) for i in range(n + 1)}, 0)


@given(st.integers(0, 6).flatmap(lambda n: st.sampled_from(list(partitions(n, 3)))))
def test_images_are_laurent_polynomials(lam):
    for variant in (PLAIN, BAR):
        L = sigma_minus_on_schur(lam, 3, variant, order=4)
        assert all(L[k] == 0 for k in range(1, 5))
        assert L.pole_order <= lam.weight
        if variant == BAR:
            assert L.pole_order <= 3


def test_gamma_vacuum():
    for r in (1, 2, 3):
        cp = CharPoly.symbolic(r)
        assert gamma_star_r(Partition(), r, 5) == LaurentSeries({}, cp.E_series(5))
        assert gamma_r(Partition(), r, 5) == LaurentSeries({}, cp.H_series(5))


def test_gamma_h1_rank2():
    cp = CharPoly.symbolic(2)
    want = LaurentSeries({1: -1}, PowerSeries([h_from_e(2, 1)], 4)) * cp.H_series(4)
    assert gamma_r(Partition((1,)), 2, 3) == want


def test_oracle_examples():
    L = gamma_diffop_oracle(Partition(), True, 4)
    x = [MultiPoly.var(X, i) for i in range(1, 5)]
    assert L[1] == -x[0] and L[0] == 1
    L1 = gamma_diffop_oracle(Partition((1,)), False, 0)
    assert L1[-1] == -1 and L1[0] == 0     # (x1 - 1/t) times exp(sum x_i t^i), constant term x1 - x1


@pytest.mark.parametrize("n", range(9))
def test_dh_dx(n):
    assert all(dh_dx_check(n, i) for i in range(1, n + 1))


def test_multiplicativity():
    assert multiplicativity_check([3], 1)
    assert multiplicativity_check([1, 1], 3)
    assert multiplicativity_check([2, 1, 1], 3)
    with pytest.raises(RankError):
        multiplicativity_check([1, 1], 1)


def test_multiplicativity_needs_rank():
    # at r = 1, h_1^2 = e_1^2 = Delta_(2) and sigma-bar_- gives e_1^2 - e_1/t, not (e_1 - 1/t)^2
    from hasse_schmidt.vertex import sigma_minus_on_poly
    from hasse_schmidt.arith import laurent_mul
    lhs = sigma_minus_on_poly(e(1) ** 2, 1, BAR, 2).truncate(0)
    one = sigma_minus_on_schur(Partition((1,)), 1, BAR, 2)
    assert lhs != laurent_mul(one, one).truncate(0)


@pytest.mark.parametrize("lam", [(), (1,), (2, 1)])
def test_convergence(lam):
    lam = Partition(lam)
    rep = convergence_check(lam, 4, max(lam.length, 1), 4)
    assert rep.ok
    assert all(row.x_exact_powers for row in rep.rows)
