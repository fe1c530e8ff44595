"""Shift operators on M_0 = span(b_1, b_2, ...), the B_r-module structure on the
r-th exterior power, and the truncated vertex operators Gamma_r, Gamma*_r.

The countable module is truncated to ``b_1..b_N``.  Raising shifts are guarded:
any application whose support could leave the window raises ``TruncationError``
instead of silently dropping terms.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .arith import (E, X, LaurentSeries, MultiPoly, PowerSeries, laurent_mul, laurent_scale,
                    rsum, series_exp)
from .cayley_hamilton import CharPoly
from .exterior import Multivector, blades_of_grade, wedge
from .hs import apply_series, hs_from_endomorphism, hs_inverse
from .matrices import Matrix
from .symmetric import (Partition, RankError, h_from_e, project_rank, schur_expand,
                        schur_h, schur_jacobi_trudi, to_e, to_x)

PLAIN = "plain"
BAR = "bar"


class TruncationError(ValueError):
    pass


def shift_matrix(direction: int, N: int) -> Matrix:
    """``sigma_{+1}`` (b_j -> b_{j+1}) or ``sigma_{-1}`` (b_j -> b_{j-1}, b_1 -> 0) on ``b_1..b_N``."""
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    rows = [[0] * N for _ in range(N)]
    for j in range(N):
        i = j + direction
        if 0 <= i < N:
            rows[i][j] = 1
    return Matrix(rows)


@lru_cache(maxsize=64)
def _raise_series(N: int, order: int):
    return hs_from_endomorphism(shift_matrix(1, N), order)


@lru_cache(maxsize=64)
def _raise_bar(N: int):
    return hs_inverse(shift_matrix(1, N))


@lru_cache(maxsize=64)
def _lower_series(N: int, order: int):
    return hs_from_endomorphism(shift_matrix(-1, N), order)


@lru_cache(maxsize=64)
def _lower_bar(N: int):
    return hs_inverse(shift_matrix(-1, N))


def _guard(u: Multivector, rise: int):
    if u.max_index() + rise > u.dim:
        raise TruncationError(
            f"support b{u.max_index()} raised by {rise} leaves the window b1..b{u.dim}")


# --------------------------------------------------------------------------
# partitions <-> grade-r blades
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class PartitionWedge:
    lam: Partition
    r: int
    N: int
    blade: tuple

    @property
    def multivector(self) -> Multivector:
        return Multivector({self.blade: 1}, self.N)


def wedge_from_partition(lam: Partition, r: int, N: int | None = None) -> PartitionWedge:
    """``b_{1+lambda_r} ^ b_{2+lambda_{r-1}} ^ ... ^ b_{r+lambda_1}``."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    if lam.length > r:
        raise RankError(f"partition {lam} has length {lam.length} > rank {r}")
    if N is None:
        N = r + lam[1]
    if r + lam[1] > N:
        raise TruncationError(f"b{r + lam[1]} is outside the window b1..b{N}")
    parts = lam.padded(r)
    blade = tuple(k + 1 + parts[r - 1 - k] for k in range(r))
    return PartitionWedge(lam, r, N, blade)


def partition_from_wedge(blade: tuple, r: int) -> Partition:
    if len(blade) != r or any(a >= b for a, b in zip(blade, blade[1:])) or (blade and blade[0] < 1):
        raise ValueError(f"{blade} is not a sorted grade-{r} blade")
    return Partition(tuple(blade[k] - (k + 1) for k in reversed(range(r))))


# --------------------------------------------------------------------------
# the B_r-module structure
# --------------------------------------------------------------------------

def sigma_bar_plus(i: int, u: Multivector) -> Multivector:
    """``sigma-bar_{+i}``: ``(-1)^i`` times the ``t^i`` coefficient of ``wedge(1 - sigma_{+1} t)``."""
    if i == 0:
        return u
    _guard(u, 1)
    v = apply_series(_raise_bar(u.dim), u, i)[i]
    return -v if i % 2 else v


def sigma_plus(j: int, u: Multivector) -> Multivector:
    """``sigma_{+j}``: the ``t^j`` coefficient of ``wedge(sum_i sigma_{+1}^i t^i)``."""
    _guard(u, j)
    return apply_series(_raise_series(u.dim, j), u, j)[j]


def _mono_factors(mono) -> list:
    return [i for i, a in mono for _ in range(a)]


def default_window(p: MultiPoly, u: Multivector) -> int:
    """Window large enough for ``p`` acting on ``u`` (each ``e_i`` raises the top index by <= 1)."""
    steps = max((len(_mono_factors(m)) for m in p.terms), default=0)
    return max(u.max_index(), u.dim) + steps + 1


def module_action(p, w, N: int | None = None) -> Multivector:
    """``p . w`` with ``e_i`` acting as ``sigma-bar_{+i}``, extended multiplicatively."""
    p = MultiPoly.coerce(p)
    if p.alphabet not in (None, E):
        raise ValueError("module_action expects an e-polynomial")
    u = w.multivector if isinstance(w, PartitionWedge) else w
    if isinstance(w, PartitionWedge) and p.max_index() > w.r:
        raise RankError(f"e_{p.max_index()} does not exist at rank {w.r}")
    if N is None:
        N = default_window(p, u)
    u = u.with_dim(max(N, u.max_index()))
    memo = {(): u}

    def act(factors: tuple) -> Multivector:
        if factors not in memo:
            memo[factors] = sigma_bar_plus(factors[-1], act(factors[:-1]))
        return memo[factors]

    out = Multivector({}, u.dim)
    for mono, c in p.terms.items():
        out = out + act(tuple(sorted(_mono_factors(mono)))) * c
    return out


def giambelli_verify(lam: Partition, r: int) -> bool:
    """``Delta_lambda(H_r) . [b]^r_0 == [b]^r_lambda``."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    target = wedge_from_partition(lam, r)
    got = module_action(schur_jacobi_trudi(lam, r), wedge_from_partition(Partition(), r))
    return got == target.multivector.with_dim(got.dim)


def eigen_e_check(lam: Partition, r: int, i: int) -> bool:
    """``sigma-bar_{+i} [b]_lambda == e_i . [b]_lambda`` (through the Schur rewrite of ``e_i Delta_lambda``)."""
    w = wedge_from_partition(lam, r, r + lam[1] + 2)
    lhs = sigma_bar_plus(i, w.multivector)
    return lhs == _schur_poly_to_wedge(MultiPoly.var(E, i) * schur_jacobi_trudi(lam, r), r, lhs.dim)


def eigen_h_check(lam: Partition, r: int, j: int) -> bool:
    """``sigma_{+j} [b]_lambda == h_j . [b]_lambda`` (``h_j`` expanded in ``e_1..e_r``)."""
    w = wedge_from_partition(lam, r, r + lam[1] + j + 1)
    lhs = sigma_plus(j, w.multivector)
    return lhs == _schur_poly_to_wedge(h_from_e(r, j) * schur_jacobi_trudi(lam, r), r, lhs.dim)


def _schur_poly_to_wedge(p: MultiPoly, r: int, N: int) -> Multivector:
    """Image of ``p . [b]^r_0`` read through the Schur basis: ``sum c_mu [b]^r_mu``."""
    out = {}
    for mu, c in schur_expand(p, r).items():
        w = wedge_from_partition(mu, r, max(N, r + mu[1]))
        out[w.blade] = c
    dim = max([N] + [b[-1] for b in out if b])
    return Multivector(out, dim).with_dim(max(N, dim))


def freeness_check(r: int, i_max: int = 3, window: int | None = None) -> bool:
    """``sum_k (-1)^k e_k . (b_{i+r-k} ^ eta) == 0`` for ``1 <= i <= i_max`` and every
    grade-(r-1) blade ``eta`` inside ``b_1..b_window``."""
    if window is None:
        window = i_max + r + 1
    N = window + r + 2
    for i in range(1, i_max + 1):
        for eta in blades_of_grade(window, r - 1):
            eta_mv = Multivector({eta: 1}, N)
            total = Multivector({}, N)
            for k in range(r + 1):
                m = Multivector({(i + r - k,): 1}, N)
                u = wedge(m, eta_mv)
                if not u:
                    continue
                term = module_action(MultiPoly.var(E, k) if k else MultiPoly.const(1), u, N)
                total = total + (-term if k % 2 else term)
            if total:
                return False
    return True


# --------------------------------------------------------------------------
# sigma_- images of Schur polynomials
# --------------------------------------------------------------------------

def _lower_terms(lam: Partition, r: int, variant: str) -> dict:
    """``{k: {mu: coeff}}`` for the ``t^-k`` part of the lowering derivation on ``[b]^r_lambda``."""
    w = wedge_from_partition(lam, r)
    u = w.multivector
    top = lam.weight  # every step lowers the index sum by one
    if variant == BAR:
        series = apply_series(_lower_bar(w.N), u, min(top, r))
    elif variant == PLAIN:
        series = apply_series(_lower_series(w.N, top), u, top)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    out = {}
    for k, v in enumerate(series):
        coeffs = {}
        for blade, c in v.terms.items():
            if len(blade) != r:
                raise AssertionError(f"grade {len(blade)} term in a grade-{r} image")
            coeffs[partition_from_wedge(blade, r)] = c
        if coeffs:
            out[k] = coeffs
    return out


def sigma_minus_on_schur(lam: Partition, r: int, variant: str = PLAIN, order: int = 0) -> LaurentSeries:
    """``sigma_-(t^-1) Delta_lambda(H_r)`` (plain) or its bar version, as a Laurent polynomial
    in ``t^-1`` over ``B_r``; ``order`` only pads the (constant) nonnegative part."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    terms = {}
    for k, coeffs in _lower_terms(lam, r, variant).items():
        terms[-k] = rsum((c * schur_jacobi_trudi(mu, r) for mu, c in coeffs.items()), MultiPoly())
    return LaurentSeries.from_terms(terms, order)


def sigma_minus_on_poly(p: MultiPoly, r: int, variant: str = PLAIN, order: int = 0) -> LaurentSeries:
    """Linear extension over the Schur basis."""
    acc = LaurentSeries.from_terms({}, order)
    for lam, c in schur_expand(MultiPoly.coerce(p), r).items():
        acc = acc + sigma_minus_on_schur(lam, r, variant, order) * c
    return acc


def gamma_r(lam: Partition, r: int, order: int) -> LaurentSeries:
    """``Gamma_r(t) Delta_lambda(H_r) = H_r(t) (sigma-bar_-(t^-1) Delta_lambda(H_r))``."""
    L = sigma_minus_on_schur(lam, r, BAR)
    pad = order + L.pole_order
    L = LaurentSeries.from_terms(L.terms(), pad)
    return laurent_scale(L, CharPoly.symbolic(r).H_series(pad))


def gamma_star_r(lam: Partition, r: int, order: int) -> LaurentSeries:
    """``Gamma*_r(t) Delta_lambda(H_r) = E_r(t) (sigma_-(t^-1) Delta_lambda(H_r))``."""
    L = sigma_minus_on_schur(lam, r, PLAIN)
    pad = order + L.pole_order
    L = LaurentSeries.from_terms(L.terms(), pad)
    return laurent_scale(L, CharPoly.symbolic(r).E_series(pad))


# --------------------------------------------------------------------------
# the differential-operator oracle in x-coordinates
# --------------------------------------------------------------------------

def _exp_shift_operator(p: MultiPoly, sign: int) -> dict:
    """``exp(sign * sum_i s^i/i d/dx_i) p`` as ``{k: coefficient of s^k}``, summed term by term."""
    out: dict = {}
    current = {0: p}
    n = 0
    while current:
        for k, q in current.items():
            out[k] = out[k] + q if k in out else q
        n += 1
        nxt: dict = {}
        for k, q in current.items():
            for i in range(1, q.max_index() + 1):
                d = q.diff(i)
                if not d:
                    continue
                term = d * Fraction(sign, i * n)   # the 1/n builds up 1/n! across steps
                nxt[k + i] = nxt[k + i] + term if k + i in nxt else term
        current = {k: q for k, q in nxt.items() if q}
    return {k: q for k, q in out.items() if q}


def gamma_diffop_oracle(lam: Partition, star: bool, order: int) -> LaurentSeries:
    """``Gamma(t) = exp(sum x_i t^i) exp(-sum 1/(i t^i) d/dx_i)`` applied to ``Delta_lambda``
    in the x-ring; ``Gamma*`` has both signs swapped."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    p = to_x(schur_h(lam))
    inner = _exp_shift_operator(MultiPoly.coerce(p), 1 if star else -1)   # s = 1/t
    m = max(inner, default=0)
    pad = order + m
    sign = -1 if star else 1
    prefactor = series_exp(PowerSeries([MultiPoly()] + [sign * MultiPoly.var(X, i)
                                                        for i in range(1, pad + 1)], pad))
    L = LaurentSeries.from_terms({-k: q for k, q in inner.items()}, pad)
    return laurent_scale(L, prefactor)


def dh_dx_check(n: int, i: int) -> bool:
    """``d h_n / d x_i == h_{n-i}`` in x-coordinates."""
    from .symmetric import h_from_x
    return h_from_x(n).diff(i) == h_from_x(n - i)


# --------------------------------------------------------------------------
# multiplicativity and convergence
# --------------------------------------------------------------------------

def multiplicativity_check(indices, r: int, variants=(PLAIN, BAR)) -> bool:
    """Image of ``h_{i_1} ... h_{i_k}`` (through its Schur expansion) equals the product of
    the images of the factors.  Needs ``r >= k``: below that the truncated map is not
    multiplicative (already ``(e_1 - 1/t)^2 != e_1^2 - e_1/t`` at ``r = 1``)."""
    factors = [i for i in indices if i]
    if len(factors) > r:
        raise RankError(f"{len(factors)} factors need rank >= {len(factors)}, got {r}")
    W = sum(factors)
    prod = MultiPoly.const(1)
    for i in factors:
        prod = prod * h_from_e(r, i)
    for variant in variants:
        lhs = sigma_minus_on_poly(prod, r, variant, W).truncate(0)
        rhs = LaurentSeries.from_terms({0: MultiPoly.const(1)}, W)
        for i in factors:
            rhs = laurent_mul(rhs, sigma_minus_on_schur(Partition((i,)), r, variant, W))
        if not lhs == rhs.truncate(0):
            return False
    return True


def project_oracle(L: LaurentSeries, r: int) -> LaurentSeries:
    """x-coefficients -> universal e-coordinates -> ``B_r``."""
    return L.map(lambda c: project_rank(to_e(MultiPoly.coerce(c)), r))


@dataclass
class ConvergenceRow:
    r: int
    star: bool
    matches_oracle: bool            # Gamma_r == pi_r(oracle), all coefficients through `order`
    stabilizes: bool | None         # pi_r(Gamma_{r+1}) == Gamma_r (None at r_max)
    x_exact_powers: list = field(default_factory=list)  # powers k with |lambda|+k <= r, compared in x


@dataclass
class ConvergenceReport:
    lam: Partition
    order: int
    rows: list

    @property
    def ok(self) -> bool:
        return all(row.matches_oracle and row.stabilizes is not False for row in self.rows)

    def lines(self) -> list:
        out = []
        for row in self.rows:
            name = "gamma-star" if row.star else "gamma"
            stab = {True: "yes", False: "NO", None: "-"}[row.stabilizes]
            out.append(f"{name} r={row.r}: oracle={'yes' if row.matches_oracle else 'NO'} "
                       f"stable={stab} x-exact-powers={','.join(map(str, row.x_exact_powers)) or '-'}")
        return out


def _laurent_equal(a: LaurentSeries, b: LaurentSeries) -> bool:
    return a.truncate(min(a.order, b.order)) == b.truncate(min(a.order, b.order))


def convergence_check(lam: Partition, order: int, r_min: int, r_max: int) -> ConvergenceReport:
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    if r_min < max(lam.length, 1):
        raise RankError(f"r_min must be at least the length of {lam}")
    rows = []
    for star in (False, True):
        oracle = gamma_diffop_oracle(lam, star, order)
        fn = gamma_star_r if star else gamma_r
        values = {r: fn(lam, r, order) for r in range(r_min, r_max + 1)}
        for r in range(r_min, r_max + 1):
            mine = values[r]
            matches = _laurent_equal(mine, project_oracle(oracle, r))
            stab = None
            if r + 1 in values:
                stab = _laurent_equal(values[r + 1].map(lambda c: project_rank(MultiPoly.coerce(c), r)),
                                      mine)
            exact = []
            for k in range(-mine.pole_order, order + 1):
                if lam.weight + k <= r and to_x(MultiPoly.coerce(mine[k])) == MultiPoly.coerce(oracle[k]):
                    exact.append(k)
            rows.append(ConvergenceRow(r, star, matches, stab, exact))
    return ConvergenceReport(lam, order, rows)
