"""Small dense square matrices over an exact ring (ints, fractions, polynomials)."""
from __future__ import annotations

import re
from fractions import Fraction
from itertools import combinations

from .arith import MultiPoly, ParseError, as_rational, is_scalar, render_coeff, rsum, symbols


def _norm(c):
    return as_rational(c) if is_scalar(c) else c


def perm_sign(p) -> int:
    """Sign of a permutation given as a sequence, by counting inversions."""
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


class Matrix:
    """Immutable square matrix; column ``j`` is the image of ``b_{j+1}``.

    Scalars are identified with scalar multiples of the identity, so
    ``m == 1`` tests for the identity and ``m + 0`` is ``m``.
    """

    __slots__ = ("rows", "n")

    def __init__(self, rows):
        rows = tuple(tuple(_norm(c) for c in row) for row in rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError(f"matrix is not square: {[len(r) for r in rows]}")
        self.rows = rows
        self.n = n

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> Matrix:
        return cls([[0] * n for _ in range(n)])

    @classmethod
    def diag(cls, entries) -> Matrix:
        entries = list(entries)
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def scalar(cls, c, n: int) -> Matrix:
        return cls.diag([c] * n)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> dict:
        """Sparse image of basis vector ``b_{j+1}``: ``{index (1-based): coeff}``."""
        return {i + 1: self.rows[i][j] for i in range(self.n) if self.rows[i][j]}

    def _coerce(self, other):
        if isinstance(other, Matrix):
            if other.n != self.n:
                raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")
            return other
        return Matrix.scalar(other, self.n)

    def __add__(self, other):
        if not isinstance(other, Matrix) and not _ringlike(other):
            return NotImplemented
        o = self._coerce(other)
        return Matrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, o.rows)])

    __radd__ = __add__

    def __neg__(self):
        return Matrix([[-a for a in row] for row in self.rows])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __matmul__(self, other: Matrix) -> Matrix:
        o = self._coerce(other)
        cols = list(zip(*o.rows))
        return Matrix([[rsum(a * b for a, b in zip(row, col) if a and b) for col in cols]
                       for row in self.rows])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            return self @ other
        if not _ringlike(other):
            return NotImplemented
        return Matrix([[a * other for a in row] for row in self.rows])

    def __rmul__(self, other):
        if not _ringlike(other):
            return NotImplemented
        return Matrix([[other * a for a in row] for row in self.rows])

    def __pow__(self, k: int) -> Matrix:
        result = Matrix.identity(self.n)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Matrix):
            return self.n == other.n and all(
                a == b for r1, r2 in zip(self.rows, other.rows) for a, b in zip(r1, r2))
        if _ringlike(other):
            return self == Matrix.scalar(other, self.n)
        return NotImplemented

    def __hash__(self):
        return hash(self.rows)

    def __bool__(self):
        return any(a for row in self.rows for a in row)

    def trace(self):
        return rsum(self.rows[i][i] for i in range(self.n))

    def submatrix(self, idx) -> Matrix:
        idx = list(idx)
        return Matrix([[self.rows[i][j] for j in idx] for i in idx])

    def det(self):
        return det(self.rows)

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(render_coeff(a) for a in row) + "]"
                               for row in self.rows) + "]"

    __repr__ = __str__


def _ringlike(x) -> bool:
    return is_scalar(x) or isinstance(x, MultiPoly)


def det(rows):
    """Determinant by signed permutation sum, skipping permutations through zero entries."""
    n = len(rows)
    if n == 0:
        return 1
    total = 0
    used = [False] * n
    perm = []

    def walk(i, acc):
        nonlocal total
        if i == n:
            total = total + perm_sign(perm) * acc
            return
        for j in range(n):
            if used[j] or not rows[i][j]:
                continue
            used[j] = True
            perm.append(j)
            walk(i + 1, rows[i][j] if acc is None else acc * rows[i][j])
            perm.pop()
            used[j] = False

    walk(0, None)
    return total


def principal_minor_sums(m: Matrix) -> list:
    """``[sum of k x k principal minors for k = 1..n]``."""
    return [rsum(m.submatrix(S).det() for S in combinations(range(m.n), k))
            for k in range(1, m.n + 1)]



_MTOKEN = re.compile(r"\s*(?:([+-]?\d+(?:/\d+)?)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokens(text: str, offset: int = 0) -> list:
    out = []
    for m in _MTOKEN.finditer(text):
        i = m.lastindex
        if i is None:
            continue
        out.append((m.group(i), "num" if i == 1 else "name" if i == 2 else "sym", m.start(i) + offset))
    return out


def _number(tok: str, pos: int):
    try:
        return as_rational(Fraction(tok))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad number {tok!r} at position {pos}") from None


def parse_matrix(text: str) -> Matrix:
    """``[[1, 2], [0, 1/2]]`` or ``diag:a,b,c`` (names become polynomial generators)."""
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    if stripped.startswith("diag:"):
        toks = _tokens(stripped[5:], lead + 5)
        entries, names = [], []
        expect_item = True
        for tok, kind, pos in toks:
            if expect_item:
                if kind == "sym":
                    raise ParseError(f"unexpected token {tok!r} at position {pos}")
                if kind == "name" and tok in names:
                    raise ParseError(f"repeated symbol {tok!r} at position {pos}")
                if kind == "name":
                    names.append(tok)
                entries.append((kind, tok, pos))
            elif tok != ",":
                raise ParseError(f"expected ',', got {tok!r} at position {pos}")
            expect_item = not expect_item
        if not entries or expect_item:
            raise ParseError(f"diag list ends early at position {len(text)}")
        alph = symbols(*names) if names else None
        diag = [MultiPoly.var(alph, names.index(tok) + 1) if kind == "name" else _number(tok, pos)
                for kind, tok, pos in entries]
        return Matrix.diag(diag)

    toks = _tokens(text)
    i = 0

    def peek():
        return toks[i] if i < len(toks) else (None, None, len(text))

    def expect(sym):
        nonlocal i
        tok, _, pos = peek()
        if tok != sym:
            found = "end of input" if tok is None else repr(tok)
            raise ParseError(f"expected {sym!r}, got {found} at position {pos}")
        i += 1

    def row():
        nonlocal i
        expect("[")
        vals = []
        while True:
            tok, kind, pos = peek()
            if kind != "num":
                found = "end of input" if tok is None else repr(tok)
                raise ParseError(f"expected a rational entry, got {found} at position {pos}")
            vals.append(_number(tok, pos))
            i += 1
            if peek()[0] == ",":
                i += 1
                continue
            expect("]")
            return vals

    expect("[")
    rows = [row()]
    while peek()[0] == ",":
        i += 1
        rows.append(row())
    expect("]")
    if i != len(toks):
        tok, _, pos = toks[i]
        raise ParseError(f"unexpected token {tok!r} at position {pos}")
    if any(len(r) != len(rows) for r in rows):
        raise ParseError(f"matrix is not square: row lengths {[len(r) for r in rows]}")
    return Matrix(rows)
