"""Hasse-Schmidt derivations on the exterior algebra induced by endomorphism series.

A derivation is stored through its generating series ``P(t) = sum_i p_i t^i`` of
endomorphisms of ``M`` (``p_0`` the identity).  On a blade the operator acts as
``P(t) b_i1 ^ P(t) b_i2 ^ ...``, so ``D_k`` of a grade-``g`` blade is the sum over
all ways of distributing ``k`` among the ``g`` factors.  That sum is evaluated
by wedging one factor at a time and truncating, which is the iterated form of
``D_k(u ^ v) = sum_j D_j u ^ D_{k-j} v``.
"""
from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction

from .arith import PowerSeries, rsum, series_inverse, series_mul
from .exterior import Multivector, wedge
from .matrices import Matrix

POWERS = "powers"      # D(t) = wedge(sum f^i t^i)
LINEAR = "linear"      # Dbar(t) = wedge(1 - f t)
SERIES = "series"      # wedge(P(t)) for an explicit P with P_0 = 1


class OrderError(ValueError):
    pass


def _apply_sparse(f: Matrix, vec: dict) -> dict:
    out: dict = {}
    for j, c in vec.items():
        for i, a in f.column(j - 1).items():
            term = a * c
            out[i] = out[i] + term if i in out else term
    return {i: c for i, c in out.items() if c}


class HSDerivation:
    """Immutable HS-derivation ``wedge(P(t))`` on the exterior algebra of ``M = A^dim``.

    ``max_order`` is the highest known coefficient; ``None`` means ``P`` is an
    exact polynomial and every coefficient is known.
    """

    __slots__ = ("kind", "dim", "max_order", "generator", "_images")

    def __init__(self, kind: str, dim: int, images, max_order: int | None, generator=None):
        self.kind = kind
        self.dim = dim
        self.max_order = max_order
        self.generator = generator
        self._images = tuple(tuple(col) for col in images)

    # images[k][j-1] is p_k(b_j) as a sparse dict
    def image(self, k: int, j: int) -> dict:
        if k >= len(self._images):
            return {}
        return self._images[k][j - 1]

    def coefficient_matrix(self, k: int) -> Matrix:
        """``p_k``, i.e. ``D_k`` restricted to grade one."""
        self._check_order(k)
        rows = [[0] * self.dim for _ in range(self.dim)]
        for j in range(1, self.dim + 1):
            for i, c in self.image(k, j).items():
                rows[i - 1][j - 1] = c
        return Matrix(rows)

    def generating_series(self, order: int | None = None) -> PowerSeries:
        if order is None:
            order = self.max_order if self.max_order is not None else len(self._images) - 1
        return PowerSeries([self.coefficient_matrix(k) for k in range(order + 1)], order)

    def _check_order(self, k: int):
        if k < 0:
            raise OrderError("negative order")
        if self.max_order is not None and k > self.max_order:
            raise OrderError(f"order {k} exceeds the known order {self.max_order}")

    def __repr__(self):
        mo = "exact" if self.max_order is None else self.max_order
        return f"HSDerivation({self.kind}, dim={self.dim}, max_order={mo})"


def hs_from_endomorphism(f: Matrix, order: int) -> HSDerivation:
    """``D(t) = wedge(sum_i f^i t^i)`` through ``t^order``."""
    if not isinstance(f, Matrix):
        f = Matrix(f)
    n = f.n
    images = [[{j: 1} for j in range(1, n + 1)]]
    for _ in range(order):
        images.append([_apply_sparse(f, v) for v in images[-1]])
    return HSDerivation(POWERS, n, images, order, generator=f)


def hs_inverse(f: Matrix) -> HSDerivation:
    """``Dbar(t) = wedge(1 - f t)``, an exact polynomial in ``t``."""
    if not isinstance(f, Matrix):
        f = Matrix(f)
    n = f.n
    ident = [{j: 1} for j in range(1, n + 1)]
    minus_f = [{i: -c for i, c in f.column(j).items()} for j in range(n)]
    return HSDerivation(LINEAR, n, [ident, minus_f], None, generator=f)


def explicit_series(ps, max_order: int | None = None) -> HSDerivation:
    """``wedge(P(t))`` for ``P = ps[0] + ps[1] t + ...`` with ``ps[0]`` the identity."""
    ps = list(ps)
    n = next((p.n for p in ps if isinstance(p, Matrix)), None)
    # scalars (e.g. zero padding from series arithmetic) stand for scalar matrices
    ps = [p if isinstance(p, Matrix) else Matrix.scalar(p, n) if isinstance(p, (int, Fraction))
          else Matrix(p) for p in ps]
    if not ps or not ps[0] == 1:
        raise ValueError("the t^0 coefficient must be the identity")
    if max_order is not None and max_order + 1 < len(ps):
        ps = ps[: max_order + 1]
    images = [[p.column(j) for j in range(p.n)] for p in ps]
    return HSDerivation(SERIES, ps[0].n, images, max_order, generator=tuple(ps))


def _wedge_right(blade: tuple, i: int):
    pos = bisect_left(blade, i)
    if pos < len(blade) and blade[pos] == i:
        return None, 0
    return blade[:pos] + (i,) + blade[pos:], (-1 if (len(blade) - pos) % 2 else 1)


def _blade_series(D: HSDerivation, blade: tuple, order: int) -> list:
    series = [{(): 1}] + [{} for _ in range(order)]
    for j in blade:
        new = [{} for _ in range(order + 1)]
        for a in range(order + 1):
            S = series[a]
            if not S:
                continue
            for d in range(order + 1 - a):
                vec = D.image(d, j)
                if not vec:
                    continue
                target = new[a + d]
                for bl, c in S.items():
                    for i, x in vec.items():
                        nb, sign = _wedge_right(bl, i)
                        if not sign:
                            continue
                        term = c * x if sign > 0 else -(c * x)
                        target[nb] = target[nb] + term if nb in target else term
        series = new
    return series


def apply_series(D: HSDerivation, u: Multivector, order: int) -> list:
    """``[D_0 u, D_1 u, ..., D_order u]``."""
    D._check_order(order)
    if u.dim != D.dim:
        raise ValueError(f"multivector dimension {u.dim} does not match derivation dimension {D.dim}")
    acc = [{} for _ in range(order + 1)]
    for blade, c in u.terms.items():
        for k, part in enumerate(_blade_series(D, blade, order)):
            target = acc[k]
            for b, x in part.items():
                term = c * x
                target[b] = target[b] + term if b in target else term
    return [Multivector(a, u.dim) for a in acc]


def apply_coeff(D: HSDerivation, k: int, u: Multivector) -> Multivector:
    """Coefficient of ``t^k`` in ``D(t) u``."""
    return apply_series(D, u, k)[k]


def apply_bar(D: HSDerivation, k: int, u: Multivector) -> Multivector:
    """``Dbar_k u`` in the sign convention ``Dbar(t) = sum (-1)^k Dbar_k t^k``."""
    v = apply_coeff(D, k, u)
    return -v if k % 2 else v


def invert_series(D: HSDerivation, order: int | None = None) -> HSDerivation:
    """Formal inverse ``wedge(P(t)^-1)``, truncated at ``order``."""
    if order is None:
        if D.max_order is None:
            raise OrderError("an exact derivation needs an explicit truncation order to invert")
        order = D.max_order
    D._check_order(order)
    P = D.generating_series(order)
    if not P[0] == 1:
        raise ValueError("D_0 is not the identity")
    return explicit_series(series_inverse(P).coeffs, max_order=order)


def compose(D1: HSDerivation, D2: HSDerivation, order: int) -> HSDerivation:
    """The product ``D1(t) D2(t)`` as an HS-derivation generated by ``P1(t) P2(t)``."""
    D1._check_order(order)
    D2._check_order(order)
    prod = series_mul(D1.generating_series(order), D2.generating_series(order))
    return explicit_series(prod.coeffs, max_order=order)


def check_hs_property(D: HSDerivation, u: Multivector, v: Multivector, order: int) -> bool:
    """``D(t)(u ^ v) == D(t)u ^ D(t)v`` through ``t^order``."""
    lhs = apply_series(D, wedge(u, v), order)
    su, sv = apply_series(D, u, order), apply_series(D, v, order)
    for k in range(order + 1):
        rhs = rsum((wedge(su[j], sv[k - j]) for j in range(k + 1)), Multivector({}, u.dim))
        if not lhs[k] == rhs:
            return False
    return True


def check_integration_by_parts(D: HSDerivation, u: Multivector, v: Multivector, k: int) -> bool:
    """Both integration-by-parts identities at order ``k``::

        D_k u ^ v    = sum_j (-1)^j D_{k-j}(u ^ Dbar_j v)
        u ^ Dbar_k v = sum_j (-1)^j Dbar_{k-j}(D_j u ^ v)
    """
    if not u or not v:
        return True
    inv = invert_series(D, k)
    zero = Multivector({}, u.dim)
    Du = apply_series(D, u, k)
    Dbar_v = apply_series(inv, v, k)
    bar = [Dbar_v[j] if j % 2 == 0 else -Dbar_v[j] for j in range(k + 1)]

    lhs1 = wedge(Du[k], v)
    rhs1 = zero
    for j in range(k + 1):
        w = apply_series(D, wedge(u, bar[j]), k - j)[k - j]
        rhs1 = rhs1 + (w if j % 2 == 0 else -w)

    lhs2 = wedge(u, bar[k])
    rhs2 = zero
    for j in range(k + 1):
        w = apply_bar(inv, k - j, wedge(Du[j], v))
        rhs2 = rhs2 + (w if j % 2 == 0 else -w)
    return lhs1 == rhs1 and lhs2 == rhs2
