"""Sparse exterior algebra on a finite working basis ``b_1, ..., b_N``."""
from __future__ import annotations

from .arith import (MultiPoly, _join_signed, as_rational, is_scalar, parse_exterior,
                    render_term, Alphabet)


class DimensionMismatch(ValueError):
    pass


def sort_blade(indices) -> tuple:
    """Sort a tuple of basis indices, returning ``(sorted_tuple, sign)``.

    The sign is that of the sorting permutation (counted inversions); a
    repeated index gives sign 0.
    """
    idx = tuple(indices)
    if len(set(idx)) != len(idx):
        return tuple(sorted(idx)), 0
    inv = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return tuple(sorted(idx)), (-1 if inv % 2 else 1)


def wedge_blades(b1: tuple, b2: tuple):
    """``b1 ^ b2`` for sorted blades: ``(blade, sign)`` or ``(None, 0)``."""
    if not b1:
        return b2, 1
    if not b2:
        return b1, 1
    s2 = set(b2)
    if any(i in s2 for i in b1):
        return None, 0
    inv = 0
    for i in b1:
        for j in b2:
            if i > j:
                inv += 1
    merged = tuple(sorted(b1 + b2))
    return merged, (-1 if inv % 2 else 1)


def _clean(c):
    return as_rational(c) if is_scalar(c) else c


class Multivector:
    """Element of the exterior algebra: ``{blade: coefficient}`` in dimension ``dim``.

    Blades are strictly increasing index tuples; ``()`` is the unit of grade 0.
    """

    __slots__ = ("terms", "dim")

    def __init__(self, terms: dict | None = None, dim: int = 0):
        clean = {}
        for blade, c in (terms or {}).items():
            if not c:
                continue
            if blade and (blade[0] < 1 or blade[-1] > dim):
                raise DimensionMismatch(f"blade {blade} outside basis b1..b{dim}")
            clean[blade] = _clean(c)
        self.terms = clean
        self.dim = dim

    @classmethod
    def blade(cls, *indices: int, dim: int, coeff=1) -> Multivector:
        key, sign = sort_blade(indices)
        if sign == 0:
            return cls({}, dim)
        return cls({key: coeff * sign}, dim)

    @classmethod
    def scalar(cls, c, dim: int) -> Multivector:
        return cls({(): c}, dim)

    @classmethod
    def vector(cls, coeffs: dict, dim: int) -> Multivector:
        return cls({(i,): c for i, c in coeffs.items()}, dim)

    @classmethod
    def parse(cls, text: str, dim: int, symbols: Alphabet | None = None) -> Multivector:
        return cls(parse_exterior(text, symbols), dim)

    # -- structure -----------------------------------------------------------
    def grades(self) -> set:
        return {len(b) for b in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.grades()) <= 1

    def grade(self) -> int:
        g = self.grades()
        if len(g) != 1:
            raise ValueError(f"not a nonzero homogeneous element (grades {sorted(g)})")
        return g.pop()

    def max_index(self) -> int:
        return max((b[-1] for b in self.terms if b), default=0)

    def with_dim(self, dim: int) -> Multivector:
        return Multivector(self.terms, dim)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    # -- arithmetic ----------------------------------------------------------
    def _check(self, other: Multivector):
        if other.dim != self.dim:
            raise DimensionMismatch(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if not isinstance(other, Multivector):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for b, c in other.terms.items():
            out[b] = out[b] + c if b in out else c
        return Multivector(out, self.dim)

    __radd__ = __add__

    def __neg__(self):
        return Multivector({b: -c for b, c in self.terms.items()}, self.dim)

    def __sub__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        return self + (-other)

    def __mul__(self, c):
        if isinstance(c, Multivector):
            return NotImplemented
        if not (is_scalar(c) or isinstance(c, MultiPoly)):
            return NotImplemented
        return Multivector({b: v * c for b, v in self.terms.items()}, self.dim)

    def __rmul__(self, c):
        if not (is_scalar(c) or isinstance(c, MultiPoly)):
            return NotImplemented
        return Multivector({b: c * v for b, v in self.terms.items()}, self.dim)

    def __xor__(self, other):
        return wedge(self, other)

    def __eq__(self, other):
        if isinstance(other, Multivector):
            return self.dim == other.dim and _terms_equal(self.terms, other.terms)
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def __str__(self):
        return render_multivector(self)

    def __repr__(self):
        return f"Multivector({self}, dim={self.dim})"


def _terms_equal(a: dict, b: dict) -> bool:
    return set(a) == set(b) and all(a[k] == b[k] for k in a)


def wedge(u: Multivector, v: Multivector) -> Multivector:
    u._check(v)
    out: dict = {}
    for b1, c1 in u.terms.items():
        for b2, c2 in v.terms.items():
            blade, sign = wedge_blades(b1, b2)
            if not sign:
                continue
            term = c1 * c2 if sign > 0 else -(c1 * c2)
            out[blade] = out[blade] + term if blade in out else term
    return Multivector(out, u.dim)


def contract(j: int, u: Multivector) -> Multivector:
    """Contraction by the dual form beta_j (beta_j(b_i) = delta_ij)."""
    if j < 1:
        raise ValueError("dual form index must be >= 1")
    out: dict = {}
    for blade, c in u.terms.items():
        if j not in blade:
            continue
        pos = blade.index(j)
        rest = blade[:pos] + blade[pos + 1:]
        term = c if pos % 2 == 0 else -c
        out[rest] = out[rest] + term if rest in out else term
    return Multivector(out, u.dim)


def grade_project(u: Multivector, j: int) -> Multivector:
    return Multivector({b: c for b, c in u.terms.items() if len(b) == j}, u.dim)


def blades_of_grade(dim: int, g: int):
    from itertools import combinations
    return list(combinations(range(1, dim + 1), g))


def all_blades(dim: int):
    from itertools import combinations
    return [b for g in range(dim + 1) for b in combinations(range(1, dim + 1), g)]


def render_blade(blade: tuple) -> str:
    return "^".join(f"b{i}" for i in blade)


def render_multivector(u: Multivector) -> str:
    if not u.terms:
        return "0"
    ordered = sorted(u.terms.items(), key=lambda bc: (len(bc[0]), bc[0]))
    return _join_signed([render_term(c, render_blade(b)) for b, c in ordered])
