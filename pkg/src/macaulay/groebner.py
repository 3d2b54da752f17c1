"""Monomial orders, multivariate division, Buchberger, and a rational solver.

This is the independent oracle side of the package: nothing here touches
dual spaces. Ideal membership is decided by normal forms against a reduced
Groebner basis; quotient dimension comes from counting standard monomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import NamedTuple, Sequence

from .errors import IrrationalRoots, NotZeroDimensional, ZeroPolynomial
from .polycore import Point, Polynomial, default_names, format_poly, grlex_key

INFINITE = math.inf


@dataclass(frozen=True)
class MonomialOrder:
    """``lex`` or ``grevlex`` with ``priority[0]`` the largest variable."""

    kind: str = "lex"
    priority: tuple = field(default=())

    def __post_init__(self):
        if self.kind not in ("lex", "grevlex"):
            raise ValueError(f"unknown monomial order {self.kind!r}")

    def for_arity(self, n) -> "MonomialOrder":
        if self.priority:
            if sorted(self.priority) != list(range(n)):
                raise ValueError(f"priority {self.priority} is not a permutation of {n} variables")
            return self
        return MonomialOrder(self.kind, tuple(range(n)))

    def key(self, alpha):
        e = tuple(alpha[i] for i in self.priority) if self.priority else tuple(alpha)
        if self.kind == "lex":
            return e
        return (sum(e), tuple(-v for v in reversed(e)))


LEX = MonomialOrder("lex")
GREVLEX = MonomialOrder("grevlex")


def leading_term(f: Polynomial, order: MonomialOrder):
    alpha = max(f.terms, key=order.key)
    return alpha, f.terms[alpha]


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _diff(b, a):
    return tuple(y - x for x, y in zip(a, b))


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: MonomialOrder = LEX) -> Polynomial:
    """Remainder of multivariate division, always using the first applicable divisor."""
    order = order.for_arity(f.nvars)
    divisors = [(leading_term(g, order), g) for g in G if not g.is_zero()]
    p = f
    remainder = {}
    while not p.is_zero():
        alpha, c = leading_term(p, order)
        for (beta, b), g in divisors:
            if _divides(beta, alpha):
                p = p - g.mul_monomial(_diff(alpha, beta), c / b)
                break
        else:
            remainder[alpha] = c
            p = p - Polynomial.monomial(alpha, c)
    return Polynomial(f.nvars, remainder)


def _monic(f, order):
    _, c = leading_term(f, order)
    return f.scale(1 / c)


def s_polynomial(f, g, order):
    (a, c), (b, d) = leading_term(f, order), leading_term(g, order)
    m = _lcm(a, b)
    return f.mul_monomial(_diff(m, a), 1 / c) - g.mul_monomial(_diff(m, b), 1 / d)


@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    generators: tuple

    @property
    def nvars(self):
        return self.generators[0].nvars

    def leading_monomials(self):
        return [leading_term(g, self.order)[0] for g in self.generators]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self.generators, self.order)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()


def buchberger(F: Sequence[Polynomial], order: MonomialOrder = LEX) -> GroebnerBasis:
    F = [f for f in F if not f.is_zero()]
    if not F:
        raise ZeroPolynomial("cannot compute a basis of the zero ideal")
    order = order.for_arity(F[0].nvars)
    basis = [_monic(f, order) for f in F]
    lms = [leading_term(g, order)[0] for g in basis]
    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}

    while pairs:
        # normal strategy: smallest lcm of leading monomials first
        i, j = min(pairs, key=lambda ij: (order.key(_lcm(lms[ij[0]], lms[ij[1]])), ij))
        pairs.discard((i, j))
        a, b = lms[i], lms[j]
        if all(x == 0 or y == 0 for x, y in zip(a, b)):
            continue  # coprime leading monomials: S-polynomial reduces to 0
        r = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if r.is_zero():
            continue
        basis.append(_monic(r, order))
        lms.append(leading_term(r, order)[0])
        k = len(basis) - 1
        pairs |= {(k, m) for m in range(k)}

    return GroebnerBasis(order, tuple(_reduce_basis(basis, order)))


def _reduce_basis(basis, order):
    # drop generators whose leading monomial is divisible by another one's
    lms = [leading_term(g, order)[0] for g in basis]
    keep = []
    for i, a in enumerate(lms):
        redundant = False
        for j, b in enumerate(lms):
            if j == i or not _divides(b, a):
                continue
            if a != b or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(basis[i])
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        lead, c = leading_term(g, order)
        tail = g - Polynomial.monomial(lead, c)
        reduced.append(Polynomial.monomial(lead, 1) + normal_form(tail, others, order))
    return sorted(reduced, key=lambda g: order.key(leading_term(g, order)[0]), reverse=True)


def standard_monomials(GB: GroebnerBasis) -> list[tuple] | None:
    """Monomials outside the leading-term ideal, or None if there are infinitely many."""
    n = GB.nvars
    lms = GB.leading_monomials()
    bounds = []
    for j in range(n):
        powers = [a[j] for a in lms if all(e == 0 for k, e in enumerate(a) if k != j)]
        if not powers:
            return None
        bounds.append(min(powers))
    found = [
        alpha
        for alpha in product(*(range(b) for b in bounds))
        if not any(_divides(m, alpha) for m in lms)
    ]
    return sorted(found, key=grlex_key)


def quotient_dimension(GB: GroebnerBasis) -> int | float:
    monos = standard_monomials(GB)
    return INFINITE if monos is None else len(monos)


def is_zero_dimensional(GB: GroebnerBasis) -> bool:
    return standard_monomials(GB) is not None


# -- univariate helpers -----------------------------------------------------


def _dense(u: Polynomial):
    """Coefficient list, constant term first."""
    if u.nvars != 1:
        raise ValueError("expected a univariate polynomial")
    if u.is_zero():
        return []
    deg = max(a[0] for a in u.terms)
    return [u.coefficient((k,)) for k in range(deg + 1)]


def _from_dense(coeffs):
    return Polynomial(1, {(k,): c for k, c in enumerate(coeffs) if c})


def _trim(c):
    c = list(c)
    while c and not c[-1]:
        c.pop()
    return c


def _divmod_dense(a, b):
    a = _trim(a)
    b = _trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        f = a[-1] / b[-1]
        q[shift] = f
        for k, v in enumerate(b):
            a[k + shift] -= f * v
        a = _trim(a)
    return q, a


def univariate_gcd(u: Polynomial, v: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    a, b = _trim(_dense(u)), _trim(_dense(v))
    while b:
        a, b = b, _divmod_dense(a, b)[1]
    if not a:
        return Polynomial.zero(1)
    return _from_dense([c / a[-1] for c in a])


def _divisors(n):
    n = abs(n)
    small, large = [], []
    k = 1
    while k * k <= n:
        if n % k == 0:
            small.append(k)
            if k * k != n:
                large.append(n // k)
        k += 1
    return small + large[::-1]


class UnivariateRoots(NamedTuple):
    roots: list  # (root, multiplicity), ascending by root
    remaining_factor: Polynomial | None


def univariate_rational_roots(u: Polynomial) -> UnivariateRoots:
    coeffs = _trim(_dense(u))
    if not coeffs:
        raise ZeroPolynomial("the zero polynomial has every number as a root")
    roots = {}
    zero_mult = 0
    while coeffs[0] == 0:
        coeffs.pop(0)
        zero_mult += 1
    if zero_mult:
        roots[Fraction(0)] = zero_mult
    # primitive integer form fixes the candidate set p/q
    lcm = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * lcm) for c in coeffs]
    g = math.gcd(*ints)
    ints = [c // g for c in ints]
    candidates = sorted(
        {Fraction(s * p, q) for p in _divisors(ints[0]) for q in _divisors(ints[-1]) for s in (1, -1)}
    )
    work = [Fraction(c) for c in ints]
    for r in candidates:
        if len(work) <= 1:
            break
        while len(work) > 1:
            q, rem = _divmod_dense(work, [-r, Fraction(1)])
            if rem:
                break
            work = q
            roots[r] = roots.get(r, 0) + 1
    remaining = _from_dense(work) if len(work) > 1 else None
    return UnivariateRoots(sorted(roots.items()), remaining)


# -- solver -----------------------------------------------------------------


class RationalSolutions(NamedTuple):
    points: list
    complete: bool
    unresolved: list  # nonconstant factors with no rational roots, as text


def _substitute(g: Polynomial, values: dict) -> Polynomial:
    """Plug in the known coordinates; result keeps arity but only unknown variables."""
    out = {}
    for alpha, c in g.terms.items():
        v = c
        key = list(alpha)
        for j, val in values.items():
            if alpha[j]:
                v *= val ** alpha[j]
                key[j] = 0
        key = tuple(key)
        out[key] = out.get(key, 0) + v
    return Polynomial(g.nvars, out)


def _to_univariate(g: Polynomial, j: int) -> Polynomial:
    return Polynomial(1, {(a[j],): c for a, c in g.terms.items()})


def solve_rational(
    F: Sequence[Polynomial], *, require_complete: bool = True, names=None
) -> RationalSolutions:
    """All rational common zeros of a zero-dimensional system.

    Works variable by variable from the last one, using the lex basis
    elements that only involve already-determined variables plus one more.
    """
    F = list(F)
    n = F[0].nvars
    GB = buchberger(F, LEX)
    if not is_zero_dimensional(GB):
        raise NotZeroDimensional("the system has infinitely many common zeros")
    names = names or default_names(n)

    def involved(g):
        return {j for a in g.terms for j, e in enumerate(a) if e}

    partial = [{}]
    unresolved = []
    for j in range(n - 1, -1, -1):
        elim = [g for g in GB.generators if involved(g) <= set(range(j, n))]
        extended = []
        for values in partial:
            h = Polynomial.zero(1)
            for g in elim:
                h = univariate_gcd(h, _to_univariate(_substitute(g, values), j))
            if h.is_zero():
                raise NotZeroDimensional(f"variable {names[j]} is unconstrained")
            found = univariate_rational_roots(h)
            if found.remaining_factor is not None:
                unresolved.append(format_poly(found.remaining_factor, [names[j]]))
            for r, _ in found.roots:
                extended.append({**values, j: r})
        partial = extended

    points = sorted({tuple(v[j] for j in range(n)) for v in partial})
    if unresolved and require_complete:
        raise IrrationalRoots(unresolved)
    return RationalSolutions(points, not unresolved, unresolved)
