"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial is a map from exponent tuples to nonzero ``Fraction`` values.
Everything here is immutable; arithmetic returns new objects.

    >>> f = parse_poly("x^2 - y", ["x", "y"])
    >>> format_poly(f * f, ["x", "y"])
    'x^4 - 2*x^2*y + y^2'
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product
from math import factorial
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import ArityMismatch, PolySyntaxError, UnknownVariable, ZeroPolynomial

Rational = Fraction
MultiIndex = tuple
Point = tuple

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9]*\Z")


def grlex_key(alpha):
    """Sort key for graded lexicographic order (larger key = larger monomial)."""
    return (sum(alpha), alpha)


def to_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating-point coefficients are not supported")
    return Fraction(value)


class Polynomial:
    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[tuple, object] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean = {}
        for alpha, c in (terms or {}).items():
            alpha = tuple(alpha)
            if len(alpha) != nvars:
                raise ArityMismatch(
                    f"exponent {alpha} has length {len(alpha)}, expected {nvars}"
                )
            if any(e < 0 for e in alpha):
                raise ValueError(f"negative exponent in {alpha}")
            c = to_rational(c)
            if c:
                clean[alpha] = clean.get(alpha, 0) + c
                if not clean[alpha]:
                    del clean[alpha]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted constructor: keys valid, no zero values
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars, c):
        c = to_rational(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def monomial(cls, alpha, c=1):
        alpha = tuple(alpha)
        c = to_rational(c)
        return cls._raw(len(alpha), {alpha: c} if c else {})

    @classmethod
    def variable(cls, nvars, j):
        alpha = [0] * nvars
        alpha[j] = 1
        return cls._raw(nvars, {tuple(alpha): Fraction(1)})

    @property
    def terms(self) -> Mapping[tuple, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self):
        return not self._terms

    def coefficient(self, alpha) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def _check(self, other):
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.nvars, other)
        if other.nvars != self.nvars:
            raise ArityMismatch(f"arity {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self._terms)
        for alpha, c in other._terms.items():
            s = out.get(alpha, 0) + c
            if s:
                out[alpha] = s
            else:
                out.pop(alpha, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.nvars, {a: -c for a, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        out: dict = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                key = tuple(x + y for x, y in zip(a, b))
                s = out.get(key, 0) + c * d
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Polynomial._raw(self.nvars, out)

    __rmul__ = __mul__

    def scale(self, c):
        c = to_rational(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {a: c * v for a, v in self._terms.items()})

    def mul_monomial(self, alpha, c=1):
        c = to_rational(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(
            self.nvars,
            {tuple(x + y for x, y in zip(a, alpha)): c * v for a, v in self._terms.items()},
        )

    def __pow__(self, m):
        return pow_poly(self, m)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self._terms == other._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        names = default_names(self.nvars)
        return f"Polynomial({format_poly(self, names)!r}, nvars={self.nvars})"


def default_names(n, prefix="x"):
    if n == 1 and prefix == "x":
        return ["x"]
    return [f"{prefix}{i + 1}" for i in range(n)]


def dual_names(n):
    return [f"l{i + 1}" for i in range(n)]


# -- calculus ---------------------------------------------------------------


def ring_op(op: str, f: Polynomial, g: Polynomial) -> Polynomial:
    if f.nvars != g.nvars:
        raise ArityMismatch(f"arity {f.nvars} vs {g.nvars}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown ring operation {op!r}")


def pow_poly(f: Polynomial, m: int) -> Polynomial:
    if m < 0:
        raise ValueError("exponent must be nonnegative")
    result = Polynomial.constant(f.nvars, 1)
    for _ in range(m):
        result = result * f
    return result


def falling(e, k):
    """e (e-1) ... (e-k+1); zero when k > e."""
    out = 1
    for i in range(k):
        out *= e - i
    return out


def differentiate(f: Polynomial, alpha: Sequence[int]) -> Polynomial:
    alpha = tuple(alpha)
    if len(alpha) != f.nvars:
        raise ArityMismatch(f"multi-index {alpha} for arity {f.nvars}")
    out = {}
    for beta, c in f._terms.items():
        if all(b >= a for a, b in zip(alpha, beta)):
            k = 1
            for a, b in zip(alpha, beta):
                k *= falling(b, a)
            out[tuple(b - a for a, b in zip(alpha, beta))] = c * k
    return Polynomial._raw(f.nvars, out)


def evaluate(f: Polynomial, x: Sequence) -> Fraction:
    if len(x) != f.nvars:
        raise ArityMismatch(f"point of length {len(x)} for arity {f.nvars}")
    x = [to_rational(v) for v in x]
    total = Fraction(0)
    for alpha, c in f._terms.items():
        term = c
        for v, e in zip(x, alpha):
            if e:
                term *= v**e
        total += term
    return total


def shift_to_origin(f: Polynomial, x0: Sequence) -> Polynomial:
    """Return g with g(y) = f(x0 + y)."""
    if len(x0) != f.nvars:
        raise ArityMismatch(f"point of length {len(x0)} for arity {f.nvars}")
    x0 = [to_rational(v) for v in x0]
    if not any(x0):
        return f
    n = f.nvars
    # (y_j + a)^e expanded once per (j, e)
    cache: dict = {}

    def binom_power(j, e):
        key = (j, e)
        if key not in cache:
            terms = {}
            a = x0[j]
            for k in range(e + 1):
                c = Fraction(factorial(e), factorial(k) * factorial(e - k)) * a ** (e - k)
                if c:
                    alpha = [0] * n
                    alpha[j] = k
                    terms[tuple(alpha)] = c
            cache[key] = Polynomial._raw(n, terms)
        return cache[key]

    result = Polynomial.zero(n)
    for alpha, c in f._terms.items():
        term = Polynomial.constant(n, c)
        for j, e in enumerate(alpha):
            if e:
                term = term * binom_power(j, e)
        result = result + term
    return result


def degree(f: Polynomial) -> int:
    if f.is_zero():
        raise ZeroPolynomial("the zero polynomial has no degree")
    return max(sum(a) for a in f._terms)


def degree_and_leading_form(f: Polynomial) -> tuple[int, Polynomial]:
    d = degree(f)
    return d, Polynomial._raw(
        f.nvars, {a: c for a, c in f._terms.items() if sum(a) == d}
    )


# -- text syntax ------------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            if rest.strip():
                bad = pos + len(rest) - len(rest.lstrip())
                raise PolySyntaxError(f"unexpected character {text[bad]!r}", bad)
            break
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text, vars):
        self.tokens = _tokenize(text)
        self.i = 0
        self.index = {name: j for j, name in enumerate(vars)}
        self.n = len(vars)

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op):
        kind, val, pos = self.take()
        if kind != "op" or val != op:
            raise PolySyntaxError(f"expected {op!r}, found {val or 'end of input'!r}", pos)

    def parse(self):
        if self.peek()[0] == "end":
            raise PolySyntaxError("empty expression", 0)
        result = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise PolySyntaxError(f"unexpected {val!r}", pos)
        return result

    def expr(self):
        result = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self):
        result = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            result = result * self.factor()
        return result

    def factor(self):
        if self.peek()[:2] == ("op", "-"):
            self.take()
            return -self.factor()
        if self.peek()[:2] == ("op", "+"):
            self.take()
            return self.factor()
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, pos = self.take()
            if kind != "num" or "/" in val:
                raise PolySyntaxError("exponent must be a nonnegative integer", pos)
            base = pow_poly(base, int(val))
        return base

    def atom(self):
        kind, val, pos = self.take()
        if kind == "num":
            num, _, den = val.partition("/")
            if den and int(den) == 0:
                raise PolySyntaxError("zero denominator", pos)
            return Polynomial.constant(self.n, Fraction(int(num), int(den or 1)))
        if kind == "name":
            if val not in self.index:
                raise UnknownVariable(val, pos)
            return Polynomial.variable(self.n, self.index[val])
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect_op(")")
            return inner
        raise PolySyntaxError(f"unexpected {val or 'end of input'!r}", pos)


def check_names(vars: Sequence[str]):
    if not vars:
        raise ValueError("at least one variable is required")
    if len(set(vars)) != len(vars):
        raise ValueError(f"duplicate variable names in {list(vars)}")
    for name in vars:
        if not _NAME.match(name):
            raise ValueError(f"invalid variable name {name!r}")


def parse_poly(text: str, vars: Sequence[str]) -> Polynomial:
    check_names(vars)
    return _Parser(text, list(vars)).parse()


def _format_monomial(alpha, vars):
    parts = []
    for name, e in zip(vars, alpha):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_poly(f: Polynomial, vars: Sequence[str]) -> str:
    if len(vars) != f.nvars:
        raise ArityMismatch(f"{len(vars)} names for arity {f.nvars}")
    if f.is_zero():
        return "0"
    out = []
    for k, (alpha, c) in enumerate(f.sorted_terms()):
        mono = _format_monomial(alpha, vars)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if k == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(out)


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not re.fullmatch(r"[-+]?\d+(?:/\d+)?", text):
        raise PolySyntaxError(f"not a rational number: {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError:
        raise PolySyntaxError(f"zero denominator in {text!r}") from None


def parse_point(text: str, nvars: int | None = None) -> Point:
    coords = tuple(parse_rational(part) for part in text.split(","))
    if nvars is not None and len(coords) != nvars:
        raise ArityMismatch(f"point {text!r} has {len(coords)} coordinates, expected {nvars}")
    return coords


def monomials_up_to(nvars: int, d: int) -> list[tuple]:
    """All exponent tuples of total degree <= d, ascending graded-lex."""
    out = [a for a in product(range(d + 1), repeat=nvars) if sum(a) <= d]
    return sorted(out, key=grlex_key)


def as_polys(items: Iterable[Polynomial]) -> list[Polynomial]:
    items = list(items)
    if items and len({p.nvars for p in items}) > 1:
        raise ArityMismatch("polynomials of different arity in one system")
    return items
