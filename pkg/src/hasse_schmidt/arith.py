"""Exact coefficient arithmetic.

Everything downstream computes over the types defined here:

* rationals are :class:`fractions.Fraction` (integral values are kept as ``int``),
* :class:`MultiPoly` is a sparse polynomial over the rationals whose variables
  belong to one tagged :class:`Alphabet` (``e``, ``h``, ``x`` or a named symbol set),
* :class:`PowerSeries` carries its truncation order explicitly,
* :class:`LaurentSeries` adds finitely many negative powers to a power series.

Coefficients of series are duck-typed ring elements: ints, fractions,
polynomials, matrices or multivectors all work as long as they support
``+``, ``-`` and ``*``.
"""
from __future__ import annotations

import operator
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import factorial
from typing import Callable, Iterable, Mapping

Monomial = tuple  # tuple[tuple[int, int], ...], sorted by variable index, no zero exponents


class FamilyMismatch(ValueError):
    """Raised when polynomials over different alphabets are combined."""


class NotInvertible(ArithmeticError):
    pass


@dataclass(frozen=True)
class Alphabet:
    """A family of indeterminates ``tag1, tag2, ...`` or an explicit list of names."""

    tag: str
    names: tuple = ()

    def name(self, i: int) -> str:
        if self.names:
            return self.names[i - 1]
        return f"{self.tag}{i}"

    def __str__(self):
        return self.tag


E = Alphabet("e")
H = Alphabet("h")
X = Alphabet("x")


def symbols(*names: str) -> Alphabet:
    return Alphabet("sym:" + ",".join(names), tuple(names))


def as_rational(c):
    """Normalise an exact scalar: Fractions with denominator 1 become ints."""
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, float):
        raise TypeError("floating point coefficients are not allowed")
    raise TypeError(f"not an exact scalar: {c!r}")


def is_scalar(c) -> bool:
    return isinstance(c, (int, Fraction)) and not isinstance(c, bool)


def rsum(items: Iterable, start=0):
    """Sum that keeps the type of the first summand (matrices, multivectors, ...)."""
    it = iter(items)
    try:
        first = next(it)
    except StopIteration:
        return start
    return reduce(operator.add, it, first)


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for i, a in m2:
        d[i] = d.get(i, 0) + a
    return tuple(sorted(d.items()))


def _mono_key(m: Monomial):
    # graded lex, variable 1 > variable 2 > ...
    return (-sum(a for _, a in m), tuple((i, -a) for i, a in m))


class MultiPoly:
    """Sparse multivariate polynomial with exact rational coefficients.

    ``terms`` maps a monomial (sorted tuple of ``(index, exponent)``) to a
    nonzero coefficient.  A polynomial without variables has ``alphabet`` None
    and mixes freely with any family.
    """

    __slots__ = ("terms", "alphabet", "_hash")

    def __init__(self, terms: Mapping | None = None, alphabet: Alphabet | None = None):
        clean = {}
        if terms:
            for m, c in terms.items():
                c = as_rational(c)
                if c:
                    clean[m] = c
        if all(not m for m in clean):
            alphabet = None
        self.terms = clean
        self.alphabet = alphabet
        self._hash = None

    # -- constructors --------------------------------------------------------
    @classmethod
    def const(cls, c) -> MultiPoly:
        return cls({(): c})

    @classmethod
    def var(cls, alphabet: Alphabet, i: int, power: int = 1) -> MultiPoly:
        if i < 1:
            raise ValueError("variable indices start at 1")
        if power == 0:
            return cls.const(1)
        return cls({((i, power),): 1}, alphabet)

    @classmethod
    def coerce(cls, other) -> MultiPoly:
        if isinstance(other, MultiPoly):
            return other
        return cls.const(as_rational(other))

    # -- inspection ----------------------------------------------------------
    def is_constant(self) -> bool:
        return all(not m for m in self.terms)

    def constant_term(self):
        return self.terms.get((), 0)

    def coefficient(self, monomial: Monomial):
        return self.terms.get(tuple(monomial), 0)

    def degree(self) -> int:
        return max((sum(a for _, a in m) for m in self.terms), default=0)

    def weighted_degrees(self) -> set:
        """Degrees when variable ``i`` carries weight ``i``."""
        return {sum(i * a for i, a in m) for m in self.terms}

    def max_index(self) -> int:
        return max((i for m in self.terms for i, _ in m), default=0)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    # -- arithmetic ----------------------------------------------------------
    def _family(self, other: MultiPoly) -> Alphabet | None:
        a, b = self.alphabet, other.alphabet
        if a is None:
            return b
        if b is None or a == b:
            return a
        raise FamilyMismatch(f"cannot combine {a} and {b} polynomials")

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            if not is_scalar(other):
                return NotImplemented
            other = MultiPoly.const(other)
        alphabet = self._family(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return MultiPoly(out, alphabet)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self.terms.items()}, self.alphabet)

    def __sub__(self, other):
        if not isinstance(other, MultiPoly) and not is_scalar(other):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return (-self) + other

    def __mul__(self, other):
        if is_scalar(other):
            other = as_rational(other)
            if not other:
                return MultiPoly()
            return MultiPoly({m: c * other for m, c in self.terms.items()}, self.alphabet)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not is_scalar(other):
            return NotImplemented
        return self * (Fraction(1) / other)

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("only nonnegative integer powers")
        result = MultiPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            if self.terms != other.terms:
                return False
            return self.alphabet == other.alphabet or not self.terms
        if is_scalar(other):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash((frozenset(self.terms.items()), self.alphabet))
        return self._hash

    # -- calculus and substitution -------------------------------------------
    def diff(self, i: int) -> MultiPoly:
        out = {}
        for m, c in self.terms.items():
            d = dict(m)
            a = d.get(i, 0)
            if not a:
                continue
            if a == 1:
                del d[i]
            else:
                d[i] = a - 1
            key = tuple(sorted(d.items()))
            out[key] = out.get(key, 0) + c * a
        return MultiPoly(out, self.alphabet)

    def subs(self, image: Callable[[int], object] | Mapping) -> MultiPoly | object:
        """Ring homomorphism sending variable ``i`` to ``image(i)`` (or ``image[i]``)."""
        get = image.__getitem__ if isinstance(image, Mapping) else image
        cache: dict = {}
        total = 0
        for m, c in self.terms.items():
            term = c
            for i, a in m:
                if (i, a) not in cache:
                    cache[(i, a)] = MultiPoly.coerce(get(i)) ** a
                term = cache[(i, a)] * term
            total = total + term
        return MultiPoly.coerce(total) if is_scalar(total) else total

    def relabel(self, alphabet: Alphabet) -> MultiPoly:
        """Same polynomial read in another alphabet (explicit family conversion)."""
        return MultiPoly(self.terms, alphabet)

    # -- text ----------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: _mono_key(mc[0]))

    def __str__(self):
        return render_poly(self)

    def __repr__(self):
        return f"MultiPoly({render_poly(self)!r})"


def poly_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    alphabet = p._family(q)
    out: dict = {}
    for m1, c1 in p.terms.items():
        for m2, c2 in q.terms.items():
            m = _mono_mul(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return MultiPoly(out, alphabet)


def var(alphabet: Alphabet, i: int) -> MultiPoly:
    return MultiPoly.var(alphabet, i)


def render_scalar(c) -> str:
    c = as_rational(c)
    return str(c)


def render_poly(p: MultiPoly) -> str:
    if not p.terms:
        return "0"
    pieces = []
    for m, c in p.sorted_terms():
        names = []
        for i, a in m:
            n = p.alphabet.name(i)
            names.append(n if a == 1 else f"{n}^{a}")
        mono = "*".join(names)
        if not mono:
            s = render_scalar(c)
        elif c == 1:
            s = mono
        elif c == -1:
            s = "-" + mono
        else:
            s = f"{render_scalar(c)}*{mono}"
        pieces.append(s)
    return _join_signed(pieces)


def _join_signed(pieces: list) -> str:
    out = pieces[0]
    for s in pieces[1:]:
        out += " - " + s[1:] if s.startswith("-") else " + " + s
    return out


def render_coeff(c) -> str:
    if isinstance(c, MultiPoly):
        return render_poly(c)
    if is_scalar(c):
        return render_scalar(c)
    return str(c)


def _is_compound(text: str) -> bool:
    return " + " in text or " - " in text


def render_term(c, mono: str) -> str:
    """``c*mono`` with the usual elisions; ``mono`` empty means a bare coefficient."""
    text = render_coeff(c)
    if not mono:
        return text
    if text == "1":
        return mono
    if text == "-1":
        return "-" + mono
    if _is_compound(text):
        return f"({text})*{mono}"
    return f"{text}*{mono}"


def _t_power(k: int, var_name: str = "t") -> str:
    if k == 0:
        return ""
    if k == 1:
        return var_name
    return f"{var_name}^{k}"


def render_laurent(coeffs: Mapping, order: int | None = None, var_name: str = "t") -> str:
    pieces = [render_term(c, _t_power(k, var_name)) for k, c in sorted(coeffs.items()) if not _zero(c)]
    if order is not None:
        pieces.append(f"O({_t_power(order + 1, var_name) or '1'})")
    if not pieces:
        return "0"
    return _join_signed(pieces)


def _zero(c) -> bool:
    return not c


# --------------------------------------------------------------------------
# power series
# --------------------------------------------------------------------------

class PowerSeries:
    """``c_0 + c_1 t + ... + c_order t^order + O(t^(order+1))``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable = (), order: int | None = None):
        coeffs = list(coeffs)
        if order is None:
            order = max(len(coeffs) - 1, 0)
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        self.coeffs = tuple(coeffs)
        self.order = order

    def __getitem__(self, n: int):
        if n < 0:
            return 0
        if n > self.order:
            raise IndexError(f"coefficient t^{n} is beyond truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self):
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def truncate(self, order: int) -> PowerSeries:
        if order > self.order:
            raise ValueError("cannot raise the truncation order")
        return PowerSeries(self.coeffs, order)

    def map(self, fn: Callable) -> PowerSeries:
        return PowerSeries([fn(c) for c in self.coeffs], self.order)

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            n = min(self.order, other.order)
            return PowerSeries([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)], n)
        return PowerSeries([self.coeffs[0] + other, *self.coeffs[1:]], self.order)

    __radd__ = __add__

    def __neg__(self):
        return self.map(operator.neg)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return series_mul(self, other)
        return self.map(lambda c: c * other)

    def __rmul__(self, other):
        return self.map(lambda c: other * c)

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self.order == other.order and all(
                a == b for a, b in zip(self.coeffs, other.coeffs))
        return NotImplemented

    __hash__ = None

    def derivative(self) -> PowerSeries:
        if self.order == 0:
            raise ValueError("derivative of an order-0 series carries no information")
        return PowerSeries([n * self.coeffs[n] for n in range(1, self.order + 1)], self.order - 1)

    def shift(self, k: int) -> PowerSeries:
        """Multiply by ``t^k`` (k >= 0)."""
        return PowerSeries([0] * k + list(self.coeffs), self.order + k)

    def __str__(self):
        return render_laurent(dict(enumerate(self.coeffs)), self.order)

    def __repr__(self):
        return f"PowerSeries({self})"


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the smaller order. Coefficient order is preserved."""
    n = min(a.order, b.order)
    out = []
    for k in range(n + 1):
        terms = [a.coeffs[i] * b.coeffs[k - i] for i in range(k + 1)
                 if not _zero(a.coeffs[i]) and not _zero(b.coeffs[k - i])]
        out.append(rsum(terms))
    return PowerSeries(out, n)


def _scalar_value(c):
    if is_scalar(c):
        return c
    if isinstance(c, MultiPoly) and c.is_constant():
        return c.constant_term()
    return None


def series_inverse(s: PowerSeries) -> PowerSeries:
    """Solve ``H * s = 1`` coefficient by coefficient."""
    c0 = s.coeffs[0]
    if c0 == 1:
        lead, inv0 = c0, None
    else:
        v = _scalar_value(c0)
        if not v:
            raise NotInvertible(f"constant term {render_coeff(c0)} is not a unit")
        inv0 = Fraction(1) / v
        lead = as_rational(inv0)
    h = [lead]
    for n in range(1, s.order + 1):
        acc = rsum(h[n - i] * s.coeffs[i] for i in range(1, n + 1) if not _zero(s.coeffs[i]))
        acc = -acc
        if inv0 is not None:
            acc = acc * as_rational(inv0)
        h.append(acc)
    return PowerSeries(h, s.order)


def series_exp(s: PowerSeries) -> PowerSeries:
    """exp of a series with zero constant term, via ``n E_n = sum_k k s_k E_{n-k}``."""
    if not s.coeffs[0] == 0:
        raise ValueError("exp needs a zero constant term")
    out = [1]
    for n in range(1, s.order + 1):
        acc = rsum(k * s.coeffs[k] * out[n - k] for k in range(1, n + 1) if not _zero(s.coeffs[k]))
        out.append(acc * Fraction(1, n) if not _zero(acc) else 0)
    return PowerSeries(out, s.order)


def series_log(s: PowerSeries) -> PowerSeries:
    """log of a series with constant term 1, via ``s L' = s'``."""
    if not s.coeffs[0] == 1:
        raise ValueError("log needs constant term 1")
    out = [0]
    for n in range(1, s.order + 1):
        acc = n * s.coeffs[n] - rsum(k * out[k] * s.coeffs[n - k] for k in range(1, n))
        out.append(acc * Fraction(1, n) if not _zero(acc) else 0)
    return PowerSeries(out, s.order)


def laplace(s: PowerSeries) -> PowerSeries:
    return PowerSeries([factorial(n) * c for n, c in enumerate(s.coeffs)], s.order)


def inverse_laplace(s: PowerSeries) -> PowerSeries:
    return PowerSeries([c * Fraction(1, factorial(n)) for n, c in enumerate(s.coeffs)], s.order)


# --------------------------------------------------------------------------
# Laurent series
# --------------------------------------------------------------------------

class LaurentSeries:
    """Finitely many negative powers plus a truncated power series.

    ``neg[k]`` is the coefficient of ``t^-k`` (k >= 1).
    """

    __slots__ = ("neg", "pos")

    def __init__(self, neg: Mapping | None = None, pos: PowerSeries | None = None):
        self.neg = {k: c for k, c in (neg or {}).items() if not _zero(c)}
        if any(k < 1 for k in self.neg):
            raise ValueError("negative part is keyed by positive integers")
        self.pos = pos if pos is not None else PowerSeries([0], 0)

    @classmethod
    def from_terms(cls, terms: Mapping, order: int) -> LaurentSeries:
        neg = {-k: c for k, c in terms.items() if k < 0}
        pos = [terms.get(k, 0) for k in range(order + 1)]
        return cls(neg, PowerSeries(pos, order))

    @property
    def order(self) -> int:
        return self.pos.order

    @property
    def pole_order(self) -> int:
        return max(self.neg, default=0)

    def __getitem__(self, k: int):
        if k < 0:
            return self.neg.get(-k, 0)
        return self.pos[k]

    def terms(self) -> dict:
        out = {-k: c for k, c in self.neg.items()}
        out.update((k, c) for k, c in enumerate(self.pos.coeffs))
        return out

    def map(self, fn: Callable) -> LaurentSeries:
        return LaurentSeries({k: fn(c) for k, c in self.neg.items()}, self.pos.map(fn))

    def truncate(self, order: int) -> LaurentSeries:
        return LaurentSeries(self.neg, self.pos.truncate(order))

    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        neg = dict(self.neg)
        for k, c in other.neg.items():
            neg[k] = neg[k] + c if k in neg else c
        return LaurentSeries(neg, self.pos + other.pos)

    def __neg__(self):
        return self.map(operator.neg)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            return laurent_mul(self, other)
        if isinstance(other, PowerSeries):
            return laurent_scale(self, other)
        return self.map(lambda c: c * other)

    def __rmul__(self, other):
        return self.map(lambda c: other * c)

    def __eq__(self, other):
        if isinstance(other, LaurentSeries):
            return (self.order == other.order
                    and set(self.neg) == set(other.neg)
                    and all(self.neg[k] == other.neg[k] for k in self.neg)
                    and self.pos == other.pos)
        return NotImplemented

    __hash__ = None

    def __str__(self):
        return render_laurent(self.terms(), self.order)

    def __repr__(self):
        return f"LaurentSeries({self})"


def laurent_mul(a: LaurentSeries, b: LaurentSeries) -> LaurentSeries:
    ma, mb = a.pole_order, b.pole_order
    order = min(a.order - mb, b.order - ma)
    if order < 0:
        raise ValueError("product has no known nonnegative coefficients at these orders")
    ta, tb = a.terms(), b.terms()
    out = {}
    for p in range(-(ma + mb), order + 1):
        acc = [ta[i] * tb[p - i] for i in ta if (p - i) in tb
               and not _zero(ta[i]) and not _zero(tb[p - i])]
        out[p] = rsum(acc)
    return LaurentSeries.from_terms(out, order)


def laurent_scale(L: LaurentSeries, s: PowerSeries) -> LaurentSeries:
    """``L * s``; the result is known up to ``min(L.order, s.order - pole_order(L))``."""
    return laurent_mul(L, LaurentSeries({}, s))


# --------------------------------------------------------------------------
# parsing of canonical text
# --------------------------------------------------------------------------

class ParseError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(.))")
_FAMILY_VAR = re.compile(r"^([ehx])(\d+)$")
_BLADE_VAR = re.compile(r"^b(\d+)$")


def _blade_mul(b1: tuple, b2: tuple):
    if set(b1) & set(b2):
        return None, 0
    inversions = sum(1 for i in b1 for j in b2 if i > j)
    return tuple(sorted(b1 + b2)), (-1) ** inversions


class _Parser:
    """Recursive descent over the canonical output grammar.

    Values are dicts ``{(t_power, blade): MultiPoly}``: Laurent polynomials in
    ``t`` with coefficients in an exterior algebra over polynomials, which
    covers everything the library prints.
    """

    def __init__(self, text: str, symbols: Alphabet | None, series_var: str, blades: bool):
        self.text = text
        self.symbols = symbols
        self.series_var = series_var
        self.blades = blades
        self.tokens = []
        pos = 0
        for m in _TOKEN.finditer(text):
            if m.end() == pos and not m.group(0):
                break
            tok = m.group(1) or m.group(2) or m.group(3)
            if tok is not None:
                self.tokens.append((tok, m.start(m.lastindex)))
            pos = m.end()
        self.i = 0
        self.order = None

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, msg="unexpected token"):
        if self.i < len(self.tokens):
            tok, pos = self.tokens[self.i]
            raise ParseError(f"{msg} {tok!r} at position {pos}")
        raise ParseError(f"{msg}: unexpected end of input at position {len(self.text)}")

    def expect(self, tok):
        if self.peek() != tok:
            self.fail(f"expected {tok!r}, got")
        self.take()

    def parse(self) -> dict:
        if not self.tokens:
            raise ParseError("empty input at position 0")
        value = self.expr(top=True)
        if self.i != len(self.tokens):
            self.fail()
        return value

    def expr(self, top=False) -> dict:
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
        value = self.term(sign, top)
        while self.peek() in ("+", "-"):
            sign = -1 if self.take()[0] == "-" else 1
            value = _vadd(value, self.term(sign, top))
        return value

    def term(self, sign, top) -> dict:
        if top and self.peek() == "O":
            self.take()
            self.expect("(")
            body = self.expr()
            self.expect(")")
            keys = [k for k, c in body.items() if c]
            if len(keys) != 1 or keys[0][1] != () or body[keys[0]] != 1:
                raise ParseError("malformed order term O(...)")
            self.order = keys[0][0] - 1
            if self.peek() is not None:
                self.fail("order term must come last, got")
            return {}
        value = self.factor()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                value = _vmul(value, self.factor())
            elif tok == "/":
                self.take()
                num, pos = self.take() if self.peek() is not None else self.fail()
                if not num.isdigit() or int(num) == 0:
                    raise ParseError(f"division only by a positive integer, got {num!r} at position {pos}")
                value = {k: c * Fraction(1, int(num)) for k, c in value.items()}
            else:
                break
        if sign < 0:
            value = {k: -c for k, c in value.items()}
        return value

    def factor(self) -> dict:
        value = self.atom()
        while self.peek() == "^":
            self.take()
            tok = self.peek()
            if tok is not None and self.blades and _BLADE_VAR.match(tok):
                value = _vmul(value, self.atom())
                continue
            neg = False
            if tok == "-":
                self.take()
                neg = True
            if self.peek() is None or not self.peek().isdigit():
                self.fail("expected an integer exponent, got")
            n = int(self.take()[0])
            if neg:
                keys = list(value)
                if len(keys) != 1 or keys[0][1] != () or value[keys[0]] != 1:
                    raise ParseError("negative exponents are only allowed on the series variable")
                value = {(keys[0][0] * -n, ()): MultiPoly.const(1)}
            else:
                result = {(0, ()): MultiPoly.const(1)}
                for _ in range(n):
                    result = _vmul(result, value)
                value = result
        return value

    def atom(self) -> dict:
        tok = self.peek()
        if tok is None:
            self.fail()
        if tok == "(":
            self.take()
            value = self.expr()
            self.expect(")")
            return value
        if tok.isdigit():
            self.take()
            return {(0, ()): MultiPoly.const(int(tok))}
        if re.match(r"[A-Za-z_]", tok):
            _, pos = self.take()
            if tok == self.series_var:
                return {(1, ()): MultiPoly.const(1)}
            m = _BLADE_VAR.match(tok)
            if m and self.blades:
                return {(0, (int(m.group(1)),)): MultiPoly.const(1)}
            if self.symbols is not None and tok in self.symbols.names:
                return {(0, ()): MultiPoly.var(self.symbols, self.symbols.names.index(tok) + 1)}
            m = _FAMILY_VAR.match(tok)
            if m and int(m.group(2)) >= 1:
                alphabet = {"e": E, "h": H, "x": X}[m.group(1)]
                return {(0, ()): MultiPoly.var(alphabet, int(m.group(2)))}
            raise ParseError(f"unknown symbol {tok!r} at position {pos}")
        self.fail()


def _vadd(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        out[k] = out[k] + c if k in out else c
    return out


def _vmul(a: dict, b: dict) -> dict:
    out: dict = {}
    for (p1, b1), c1 in a.items():
        for (p2, b2), c2 in b.items():
            blade, sign = _blade_mul(b1, b2)
            if blade is None:
                continue
            key = (p1 + p2, blade)
            term = c1 * c2 * sign
            out[key] = out[key] + term if key in out else term
    return out


def parse_poly(text: str, symbols: Alphabet | None = None) -> MultiPoly:
    """Parse canonical polynomial text such as ``"e1^2 - 1/2*e2"``."""
    p = _Parser(text, symbols, series_var="", blades=False)
    value = p.parse()
    if p.order is not None:
        raise ParseError("order term not allowed in a polynomial")
    return rsum((c for c in value.values()), MultiPoly()) if value else MultiPoly()


def parse_laurent(text: str, symbols: Alphabet | None = None, var_name: str = "t"):
    """Parse series text into ``({power: MultiPoly}, order_or_None)``."""
    p = _Parser(text, symbols, series_var=var_name, blades=False)
    value = p.parse()
    terms = {}
    for (k, _), c in value.items():
        if c:
            terms[k] = terms[k] + c if k in terms else c
    return {k: c for k, c in terms.items() if c}, p.order


def parse_exterior(text: str, symbols: Alphabet | None = None) -> dict:
    """Parse ``"2*b1^b3 - (a + b)*b2"`` into ``{blade: MultiPoly}``."""
    p = _Parser(text, symbols, series_var="", blades=True)
    value = p.parse()
    if p.order is not None:
        raise ParseError("order term not allowed in a multivector")
    return {blade: c for (_, blade), c in value.items() if c}
