import pytest
from hypothesis import given, strategies as st

from hasse_schmidt.arith import MultiPoly, PowerSeries, series_exp
from hasse_schmidt.cayley_hamilton import CharPoly
from hasse_schmidt.symmetric import (Partition, RankError, e, exact_rank, h, h_from_e, h_from_x,
                                     partitions, project_rank, schur_expand,
                                     schur_h, schur_jacobi_trudi, to_e, to_h, to_x,
                                     weighted_components, x, x_from_h)


@st.composite
def partition_st(draw, max_weight=8, max_length=None):
    n = draw(st.integers(0, max_weight))
    return draw(st.sampled_from(list(partitions(n, max_length))))


def test_partition_basics():
    lam = Partition.parse("3,1,1")
    assert lam.parts == (3, 1, 1) and lam.length == 3 and lam.weight == 5
    assert Partition((2, 1, 0, 0)) == Partition((2, 1))
    assert hash(Partition((2, 1, 0))) == hash(Partition((2, 1)))
    assert Partition.parse("0") == Partition()
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition.parse("2,x")


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert sum(1 for _ in partitions(6, max_length=2)) == 4


def test_h_from_e_examples():
    assert h_from_e(3, 0) == 1
    assert h_from_e(3, 1) == e(1)
    assert h_from_e(3, 2) == e(1) ** 2 - e(2)
    assert all(h_from_e(1, n) == e(1) ** n for n in range(8))
    assert h_from_e(3, -3) == 0


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_h_from_e_inverts_E(r):
    Hs = CharPoly.symbolic(r).H_series(10)
    assert all(Hs[n] == h_from_e(r, n) for n in range(11))


def test_schur_examples():
    assert schur_jacobi_trudi(Partition(), 3) == 1
    for n in range(6):
        assert schur_jacobi_trudi(Partition((n,)), 3) == h_from_e(3, n)
    assert schur_jacobi_trudi(Partition((1, 1)), 2) == e(2)
    with pytest.raises(RankError):
        schur_jacobi_trudi(Partition((1, 1, 1)), 2)


def test_schur_conjugate_is_e():
    # Delta_{(1^k)} = e_k, the dual Jacobi-Trudi identity
    for k in range(1, 5):
        assert schur_jacobi_trudi(Partition((1,) * k), 4) == e(k)


def test_x_h_examples():
    assert x_from_h(1) == h(1) and h_from_x(1) == x(1)
    assert x_from_h(2) == h(2) - MultiPoly.const(1) / 2 * h(1) ** 2


@pytest.mark.parametrize("n", range(1, 9))
def test_x_h_round_trip(n):
    assert to_h(to_x(h(n))) == h(n)
    assert to_x(to_h(x(n))) == x(n)
    assert to_e(to_h(e(n))) == e(n)


def test_exp_log_inverse_order_10():
    xs = PowerSeries([MultiPoly()] + [x_from_h(i) for i in range(1, 11)], 10)
    assert series_exp(xs) == PowerSeries([1] + [h(n) for n in range(1, 11)], 10)


def test_project_rank_examples():
    E3 = [MultiPoly.const(1), e(1), e(2), e(3)]
    assert [project_rank(p, 2) for p in E3] == [MultiPoly.const(1), e(1), e(2), MultiPoly()]
    assert project_rank(h_from_e(3, 2), 1) == e(1) ** 2
    d = schur_jacobi_trudi(Partition((2, 1)), 3)
    assert project_rank(d, 3) == d
    with pytest.raises(ValueError):
        project_rank(h(1), 2)


@given(partition_st(10, 5), st.integers(1, 5))
def test_schur_weighted_homogeneous(lam, r):
    if lam.length > r:
        return
    assert schur_jacobi_trudi(lam, r).weighted_degrees() <= {lam.weight}


@given(partition_st(8, 3), st.integers(0, 2))
def test_stability_under_projection(lam, extra):
    r1 = max(lam.length, 1)
    r2 = r1 + extra
    assert project_rank(schur_jacobi_trudi(lam, r2), r1) == schur_jacobi_trudi(lam, r1)


@given(partition_st(7))
def test_universal_schur_agrees(lam):
    r = max(lam.weight, 1)
    assert to_e(schur_h(lam)) == schur_jacobi_trudi(lam, r)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_schur_basis_free(r):
    for d in range(9):
        basis = [schur_jacobi_trudi(lam, r) for lam in partitions(d, r)]
        monos = sorted({m for s in basis for m in s.terms})
        rows = [[s.coefficient(m) for m in monos] for s in basis]
        assert exact_rank(rows) == len(basis)
        assert len(set(basis)) == len(basis)


@given(partition_st(6, 3), partition_st(6, 3))
def test_schur_expand_round_trip(lam, mu):
    r = 3
    p = schur_jacobi_trudi(lam, r) * schur_jacobi_trudi(mu, r) - 2 * schur_jacobi_trudi(mu, r)
    coeffs = schur_expand(p, r)
    back = sum((c * schur_jacobi_trudi(nu, r) for nu, c in coeffs.items()), MultiPoly())
    assert back == p


def test_schur_expand_pieri():
    # h_1 * h_1 = h_2 + Delta_{(1,1)}
    assert schur_expand(e(1) ** 2, 3) == {Partition((2,)): 1, Partition((1, 1)): 1}


def test_weighted_components():
    comps = weighted_components(e(1) ** 2 + e(2) + e(3))
    assert set(comps) == {2, 3}
