"""Cayley-Hamilton on the exterior algebra, characteristic ODE and exp(ft).

``E_r(t) = det(1 - f t)`` is read off the top exterior power, ``p_k(D)`` is the
coefficient of ``t^k`` in ``E_r(t) D(t)``, and ``p_k(D)`` kills every blade of
grade ``> r - k`` (everything once ``k >= r``).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .arith import (E, MultiPoly, PowerSeries, inverse_laplace, laplace, render_laurent,
                    rsum, series_inverse)
from .exterior import Multivector, all_blades
from .hs import apply_series, hs_from_endomorphism, hs_inverse
from .matrices import Matrix, principal_minor_sums

__all__ = [
    "CharPoly", "char_poly_via_top_form", "ch_operator_series", "ch_operator_apply",
    "TheoremReport", "verify_ch_theorem", "verify_ch_theorem_upto", "brooks_coefficients",
    "laplace", "inverse_laplace", "u_basis", "standard_basis", "OdeSolutionBasis", "ode_apply",
    "exp_ft", "laplace_star", "companion_matrix", "wronski_column_check",
]


@dataclass(frozen=True)
class CharPoly:
    """``E_r(t) = 1 - e_1 t + e_2 t^2 - ... + (-1)^r e_r t^r``."""

    e: tuple

    @property
    def r(self) -> int:
        return len(self.e)

    @classmethod
    def symbolic(cls, r: int) -> CharPoly:
        return cls(tuple(MultiPoly.var(E, i) for i in range(1, r + 1)))

    def coefficient(self, i: int):
        """``e_i`` with ``e_0 = 1`` and ``e_i = 0`` beyond the rank."""
        if i == 0:
            return 1
        if i < 0 or i > self.r:
            return 0
        return self.e[i - 1]

    def E_series(self, order: int) -> PowerSeries:
        return PowerSeries([(-1) ** i * self.coefficient(i) for i in range(order + 1)], order)

    def H_series(self, order: int) -> PowerSeries:
        return series_inverse(self.E_series(order))

    def det_t_minus_f(self) -> list:
        """Coefficients ``[c_0, ..., c_r]`` of ``det(t - f) = t^r E_r(1/t)``."""
        return [(-1) ** (self.r - j) * self.coefficient(self.r - j) for j in range(self.r + 1)]

    def __str__(self):
        return render_laurent({i: (-1) ** i * self.coefficient(i) for i in range(self.r + 1)})


def char_poly_via_top_form(f: Matrix) -> CharPoly:
    """Apply ``wedge(1 - f t)`` to ``b_1 ^ ... ^ b_r`` and read the scalar series."""
    r = f.n
    top = tuple(range(1, r + 1))
    series = apply_series(hs_inverse(f), Multivector({top: 1}, r), r)
    for k, mv in enumerate(series):
        if set(mv.terms) - {top}:
            raise AssertionError(f"top exterior power not preserved at order {k}")
    e = tuple((-1) ** i * series[i].terms.get(top, 0) for i in range(1, r + 1))
    return CharPoly(e)


def _p_from_series(cp: CharPoly, dseries: list, k: int):
    terms = [(-1) ** i * cp.coefficient(i) * dseries[k - i]
             for i in range(min(k, cp.r) + 1) if cp.coefficient(i)]
    return rsum(terms, Multivector({}, dseries[0].dim))


def ch_operator_series(f: Matrix, u: Multivector, order: int, cp: CharPoly | None = None) -> list:
    """``[p_0(D) u, ..., p_order(D) u]``."""
    cp = cp or char_poly_via_top_form(f)
    ds = apply_series(hs_from_endomorphism(f, order), u, order)
    return [_p_from_series(cp, ds, k) for k in range(order + 1)]


def ch_operator_apply(f: Matrix, k: int, u: Multivector, cp: CharPoly | None = None) -> Multivector:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return ch_operator_series(f, u, k, cp)[k]


@dataclass
class TheoremReport:
    r: int
    k: int
    holds: bool
    checked_grades: tuple
    failures: list = field(default_factory=list)         # blades where p_k(D) should vanish but does not
    low_grade_values: dict = field(default_factory=dict)  # blade -> p_k(D) blade, grades <= r-k
    classical_residual: Matrix | None = None

    def summary(self) -> str:
        if self.k >= self.r:
            where = "all grades"
        else:
            where = f"grades > {self.r - self.k}"
        status = "OK" if self.holds else "FAIL"
        return f"{status}: p_{self.k}(D) vanishes on {where}" if self.holds else \
            f"{status}: p_{self.k}(D) does not vanish on {where} ({len(self.failures)} blades)"


def _classical_residual(f: Matrix, cp: CharPoly, k: int) -> Matrix:
    # sum_i (-1)^i e_i f^(k-i), e_i = 0 past the rank
    return rsum((-1) ** i * cp.coefficient(i) * f ** (k - i)
                for i in range(min(k, cp.r) + 1))


def verify_ch_theorem_upto(f: Matrix, k_max: int) -> list:
    """Reports for ``k = 1..k_max`` sharing one expansion of ``D(t)`` over the blade basis."""
    r = f.n
    cp = char_poly_via_top_form(f)
    D = hs_from_endomorphism(f, k_max)
    per_blade = {}
    for blade in all_blades(r):
        ds = apply_series(D, Multivector({blade: 1}, r), k_max)
        per_blade[blade] = [_p_from_series(cp, ds, k) for k in range(k_max + 1)]
    reports = []
    for k in range(1, k_max + 1):
        threshold = r - k if k < r else -1  # must vanish on grades > threshold
        failures, low = [], {}
        for blade, ps in per_blade.items():
            if len(blade) > threshold:
                if ps[k]:
                    failures.append(blade)
            else:
                low[blade] = ps[k]
        residual = None
        if k >= r:
            residual = _classical_residual(f, cp, k)
            if residual:
                failures.append("classical")
        grades = tuple(g for g in range(r + 1) if g > threshold)
        reports.append(TheoremReport(r, k, not failures, grades, failures, low, residual))
    return reports


def verify_ch_theorem(f: Matrix, k: int) -> TheoremReport:
    if k < 1:
        raise ValueError("k must be >= 1")
    return verify_ch_theorem_upto(f, k)[-1]


def brooks_coefficients(f: Matrix) -> list:
    """``e_k`` as the sum of the ``k x k`` principal minors of ``f``."""
    return principal_minor_sums(f)


# --------------------------------------------------------------------------
# the characteristic ODE
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class OdeSolutionBasis:
    kind: str          # "standard" (v_0..v_{r-1}) or "laplace" (u_0, u_-1, ..., u_{1-r})
    series: tuple


def u_basis(cp: CharPoly, order: int) -> OdeSolutionBasis:
    """``u_{-j} = L^{-1}(t^j H_r(t))`` for ``j = 0..r-1``."""
    H = cp.H_series(order)
    return OdeSolutionBasis("laplace", tuple(
        inverse_laplace(H.shift(j).truncate(order)) for j in range(cp.r)))


def standard_basis(cp: CharPoly, order: int) -> OdeSolutionBasis:
    """Solutions with ``v_j^(i)(0) = delta_ij`` from the Taylor-coefficient recurrence."""
    r = cp.r
    out = []
    for j in range(r):
        c = [1 if i == j else 0 for i in range(min(r, order + 1))]
        for n in range(r, order + 1):
            c.append(rsum((-1) ** (i + 1) * cp.coefficient(i) * c[n - i]
                          for i in range(1, r + 1) if c[n - i] and cp.coefficient(i)))
        out.append(PowerSeries([c[n] * Fraction(1, factorial(n)) for n in range(order + 1)], order))
    return OdeSolutionBasis("standard", tuple(out))


def ode_apply(cp: CharPoly, y: PowerSeries) -> PowerSeries:
    """``y^(r) - e_1 y^(r-1) + ... + (-1)^r e_r y``, known up to ``order(y) - r``."""
    r = cp.r
    if y.order < r:
        raise ValueError(f"series order {y.order} is smaller than the ODE order {r}")
    ds = [y]
    for _ in range(r):
        ds.append(ds[-1].derivative())
    n = y.order - r
    return rsum((-1) ** i * cp.coefficient(i) * ds[r - i].truncate(n)
                for i in range(r + 1) if cp.coefficient(i))


def laplace_star(f: Matrix, u: Multivector, order: int) -> PowerSeries:
    """``D*(t) u = L^{-1}(D(t) u)``, a series of multivectors."""
    ds = apply_series(hs_from_endomorphism(f, order), u, order)
    return PowerSeries([d * Fraction(1, factorial(n)) for n, d in enumerate(ds)], order)


def exp_ft(f: Matrix, order: int, cp: CharPoly | None = None) -> PowerSeries:
    """``exp(f t) = v_0 1 + v_1 f + ... + v_{r-1} f^{r-1}`` as a matrix-valued series."""
    cp = cp or char_poly_via_top_form(f)
    vs = standard_basis(cp, order).series
    powers = [f ** j for j in range(cp.r)]
    coeffs = [rsum((v[n] * p for v, p in zip(vs, powers) if v[n]), Matrix.zero(f.n))
              for n in range(order + 1)]
    return PowerSeries(coeffs, order)


def companion_matrix(cp: CharPoly) -> Matrix:
    """Matrix of ``y_1' = y_2, ..., y_r' = e_1 y_r - e_2 y_{r-1} + ... `` (state = derivatives)."""
    r = cp.r
    rows = [[0] * r for _ in range(r)]
    for i in range(r - 1):
        rows[i][i + 1] = 1
    for i in range(1, r + 1):
        rows[r - 1][r - i] = (-1) ** (i + 1) * cp.coefficient(i)
    return Matrix(rows)


def _matrix_exp_series(P: Matrix, order: int) -> PowerSeries:
    coeffs, power = [], Matrix.identity(P.n)
    for n in range(order + 1):
        coeffs.append(power * Fraction(1, factorial(n)))
        power = power @ P
    return PowerSeries(coeffs, order)


def wronski_column_check(cp: CharPoly, order: int) -> bool:
    """``v_{r-1}^(i) == u_{i+1-r}`` for ``i = 0..r-1``, also against ``exp(P_r t)``."""
    r = cp.r
    if order < r:
        raise ValueError("order must be at least r")
    us = u_basis(cp, order).series          # us[j] = u_{-j}
    v = standard_basis(cp, order).series[r - 1]
    Q = _matrix_exp_series(companion_matrix(cp), order)
    d = v
    for i in range(r):
        target = us[r - 1 - i]
        if not d == target.truncate(d.order):
            return False
        column_entry = Q.map(lambda m: m[i, r - 1])
        if not column_entry == target:
            return False
        if i < r - 1:
            d = d.derivative()
    return True
