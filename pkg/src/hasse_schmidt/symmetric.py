"""The ring B_r = Q[e_1..e_r] in elementary (e), complete (h) and bosonic (x) coordinates.

The x-variables are fixed by ``exp(sum_i x_i t^i) = sum_n h_n t^n``, i.e.
``x_j = p_j / j`` with ``p_j`` the power sums.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .arith import (E, H, X, MultiPoly, PowerSeries, as_rational, rsum, series_exp,
                    series_inverse, series_log)
from .matrices import det


class RankError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Partition:
    """Weakly decreasing tuple of positive parts (trailing zeros dropped)."""

    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts are not weakly decreasing: {parts}")
        object.__setattr__(self, "parts", tuple(p for p in parts if p))

    @classmethod
    def parse(cls, text: str) -> Partition:
        text = text.strip()
        if text in ("", "0"):
            return cls(())
        try:
            return cls(tuple(int(tok) for tok in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad partition {text!r}: {exc}") from None

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        """1-based part, zero past the length."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def padded(self, r: int) -> tuple:
        return self.parts + (0,) * (r - len(self.parts))

    def conjugate(self) -> Partition:
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p > i) for i in range(self.parts[0])))

    def __str__(self):
        return ",".join(map(str, self.parts)) or "0"


def partitions(n: int, max_length: int | None = None, max_part: int | None = None):
    """All partitions of ``n`` (largest parts first)."""
    if max_part is None:
        max_part = n

    def gen(rest, cap, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in gen(rest - p, p, slots - 1):
                yield (p,) + tail

    slots = n if max_length is None else max_length
    for parts in gen(n, max_part, slots):
        yield Partition(parts)


def partitions_up_to(w: int, max_length: int | None = None):
    for n in range(w + 1):
        yield from partitions(n, max_length)


# --------------------------------------------------------------------------
# coordinate changes
# --------------------------------------------------------------------------

def e(i: int) -> MultiPoly:
    return MultiPoly.var(E, i)


def h(i: int) -> MultiPoly:
    return MultiPoly.var(H, i)


def x(i: int) -> MultiPoly:
    return MultiPoly.var(X, i)


@lru_cache(maxsize=None)
def h_from_e(r: int | None, n: int) -> MultiPoly:
    """``h_n`` in ``e_1..e_r`` from ``H_r(t) E_r(t) = 1``; ``r=None`` is the universal ring."""
    if n < 0:
        return MultiPoly()
    if n == 0:
        return MultiPoly.const(1)
    top = n if r is None else min(n, r)
    return rsum(((-1) ** (i + 1) * e(i) * h_from_e(r, n - i) for i in range(1, top + 1)),
                MultiPoly())


@lru_cache(maxsize=None)
def _e_from_h_series(order: int) -> PowerSeries:
    return series_inverse(PowerSeries([MultiPoly.const(1)] + [h(n) for n in range(1, order + 1)], order))


def e_from_h(n: int) -> MultiPoly:
    if n < 0:
        return MultiPoly()
    return MultiPoly.coerce((-1) ** n * _e_from_h_series(max(n, 1))[n])


@lru_cache(maxsize=None)
def _x_from_h_series(order: int) -> PowerSeries:
    H_series = PowerSeries([MultiPoly.const(1)] + [h(n) for n in range(1, order + 1)], order)
    return series_log(H_series)


@lru_cache(maxsize=None)
def _h_from_x_series(order: int) -> PowerSeries:
    return series_exp(PowerSeries([MultiPoly()] + [x(i) for i in range(1, order + 1)], order))


def x_from_h(n: int) -> MultiPoly:
    """``x_n`` as a polynomial in the ``h``'s (coefficient of ``t^n`` in ``log H(t)``)."""
    if n < 1:
        raise ValueError("x_n is defined for n >= 1")
    return MultiPoly.coerce(_x_from_h_series(n)[n])


def h_from_x(n: int) -> MultiPoly:
    """``h_n`` as a polynomial in the ``x``'s (coefficient of ``t^n`` in ``exp(sum x_i t^i)``)."""
    if n < 0:
        return MultiPoly()
    if n == 0:
        return MultiPoly.const(1)
    return MultiPoly.coerce(_h_from_x_series(n)[n])


def _convert(p: MultiPoly, target) -> MultiPoly:
    if p.alphabet is None or p.alphabet == target:
        return p
    if target == E:
        if p.alphabet == H:
            return p.subs(lambda i: h_from_e(None, i))
        if p.alphabet == X:
            return _convert(_convert(p, H), E)
    if target == H:
        if p.alphabet == E:
            return p.subs(e_from_h)
        if p.alphabet == X:
            return p.subs(x_from_h)
    if target == X:
        if p.alphabet == H:
            return p.subs(h_from_x)
        if p.alphabet == E:
            return _convert(_convert(p, H), X)
    raise ValueError(f"no conversion from {p.alphabet} to {target}")


def to_e(p: MultiPoly) -> MultiPoly:
    """Universal-ring change of coordinates into the e-alphabet."""
    return _convert(p, E)


def to_h(p: MultiPoly) -> MultiPoly:
    return _convert(p, H)


def to_x(p: MultiPoly) -> MultiPoly:
    return _convert(p, X)


def project_rank(p: MultiPoly, r1: int) -> MultiPoly:
    """B_{r2} -> B_{r1}: send ``e_i`` to zero for ``i > r1``."""
    if p.alphabet not in (None, E):
        raise ValueError(f"project_rank expects an e-polynomial, got alphabet {p.alphabet}")
    return MultiPoly({m: c for m, c in p.terms.items() if all(i <= r1 for i, _ in m)}, p.alphabet)


# --------------------------------------------------------------------------
# Schur polynomials
# --------------------------------------------------------------------------

def jacobi_trudi_matrix(lam: Partition, r: int, entry) -> list:
    """``[entry(lambda_j - j + i)]_{i,j}`` (1-based), negative indices mapped to 0."""
    parts = lam.padded(r)
    return [[entry(parts[j] - j + i) if parts[j] - j + i >= 0 else 0
             for j in range(r)] for i in range(r)]


@lru_cache(maxsize=None)
def schur_jacobi_trudi(lam: Partition, r: int) -> MultiPoly:
    """``Delta_lambda(H_r) = det(h_{lambda_j - j + i})_{r x r}`` expanded in ``e_1..e_r``."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    if lam.length > r:
        raise RankError(f"partition {lam} has length {lam.length} > rank {r}")
    m = jacobi_trudi_matrix(lam, r, lambda n: h_from_e(r, n))
    return MultiPoly.coerce(det(m))


@lru_cache(maxsize=None)
def schur_h(lam: Partition) -> MultiPoly:
    """Universal Schur function in the h-alphabet (the ``l x l`` Jacobi-Trudi determinant)."""
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))

    def entry(n):
        return MultiPoly.const(1) if n == 0 else h(n)

    return MultiPoly.coerce(det(jacobi_trudi_matrix(lam, lam.length, entry)))


def weighted_components(p: MultiPoly) -> dict:
    """Split an e-polynomial by weighted degree (``e_i`` has weight ``i``)."""
    out: dict = {}
    for m, c in p.terms.items():
        d = sum(i * a for i, a in m)
        out.setdefault(d, {})[m] = c
    return {d: MultiPoly(t, p.alphabet) for d, t in out.items()}


def _solve(rows: list, rhs: list) -> list:
    """Exact solution of a square nonsingular system (Gauss-Jordan over Q)."""
    n = len(rows)
    a = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col]), None)
        if piv is None:
            raise ArithmeticError("singular system")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for i in range(n):
            if i != col and a[i][col]:
                f = a[i][col]
                a[i] = [vi - f * vc for vi, vc in zip(a[i], a[col])]
    return [as_rational(a[i][n]) for i in range(n)]


def schur_expand(p: MultiPoly, r: int) -> dict:
    """Coordinates of an e-polynomial in the Schur basis ``{Delta_lambda(H_r)}``."""
    if p.alphabet not in (None, E):
        raise ValueError("schur_expand expects an e-polynomial")
    if p.max_index() > r:
        raise RankError(f"polynomial uses e_{p.max_index()} beyond rank {r}")
    out = {}
    for d, comp in sorted(weighted_components(p).items()):
        basis = list(partitions(d, max_length=r))
        schurs = [schur_jacobi_trudi(lam, r) for lam in basis]
        monos = sorted({m for s in schurs for m in s.terms} | set(comp.terms))
        if len(monos) != len(basis):
            raise ArithmeticError("Schur basis and monomial basis sizes disagree")
        rows = [[s.coefficient(m) for s in schurs] for m in monos]
        coeffs = _solve(rows, [comp.coefficient(m) for m in monos])
        out.update((lam, c) for lam, c in zip(basis, coeffs) if c)
    return out


def exact_rank(vectors: list) -> int:
    """Rank over Q of a list of coefficient vectors."""
    rows = [[Fraction(v) for v in vec] for vec in vectors]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col] / rows[rank][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
    return rank
