"""Bezout counts, dual-space ideal membership and Nullstellensatz powers.

Each entry point computes its answer from dual spaces and records what the
Groebner oracle says next to it, so disagreement is visible in the result.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import prod
from typing import Sequence

from .dualspace import DualPolynomial, DualSpaceBasis, apply_functional, dual_space
from .errors import (
    ArityMismatch,
    BoundViolation,
    InvalidRoot,
    NotVanishing,
    NotZeroDimensional,
    WrongArity,
    ZeroPolynomial,
)
from .groebner import (
    INFINITE,
    LEX,
    GroebnerBasis,
    buchberger,
    quotient_dimension,
    solve_rational,
    univariate_gcd,
)
from .polycore import (
    Point,
    Polynomial,
    check_names,
    degree,
    degree_and_leading_form,
    evaluate,
    to_rational,
)


@dataclass(frozen=True)
class PolynomialSystem:
    vars: tuple
    polys: tuple

    def __post_init__(self):
        check_names(self.vars)
        if not self.polys:
            raise ValueError("a system needs at least one polynomial")
        for k, p in enumerate(self.polys):
            if p.nvars != len(self.vars):
                raise ArityMismatch(
                    f"polynomial {k + 1} has arity {p.nvars}, system has {len(self.vars)} variables"
                )
            if p.is_zero():
                raise ZeroPolynomial(f"polynomial {k + 1} is zero")

    @classmethod
    def of(cls, vars: Sequence[str], polys: Sequence[Polynomial]):
        return cls(tuple(vars), tuple(polys))

    @property
    def nvars(self):
        return len(self.vars)

    @property
    def degrees(self):
        return tuple(degree(p) for p in self.polys)

    def groebner(self, order=LEX) -> GroebnerBasis:
        return buchberger(self.polys, order)


class Verdict(str, enum.Enum):
    MATCH = "MATCH"
    DEFICIT = "DEFICIT"
    INFINITE = "INFINITE"


@dataclass(frozen=True)
class BezoutReport:
    roots: tuple  # (point, multiplicity, DualSpaceBasis)
    total: int | None  # None on the INFINITE branch
    bezout_number: int
    verdict: Verdict
    quotient_dimension: int | float
    completeness: bool = True
    infinity_evidence: Polynomial | None = None
    infinity_checked: bool = False

    @property
    def oracle_agrees(self) -> bool:
        if self.verdict is Verdict.INFINITE:
            return self.quotient_dimension == INFINITE
        return self.total == self.quotient_dimension


@dataclass(frozen=True)
class MembershipVerdict:
    member: bool
    oracle_agrees: bool
    witness: tuple | None = None  # (point, dual polynomial)
    dual_spaces: tuple = ()


@dataclass(frozen=True)
class PowerCertificate:
    m: int
    bound: int


def verify_common_zero(G: PolynomialSystem, x: Sequence) -> bool:
    if len(x) != G.nvars:
        raise ArityMismatch(f"point has {len(x)} coordinates, system has {G.nvars} variables")
    return all(evaluate(p, x) == 0 for p in G.polys)


def infinity_check_2d(G: PolynomialSystem) -> Polynomial | None:
    """Common factor of the two leading forms, or None if they share no projective zero."""
    if G.nvars != 2 or len(G.polys) != 2:
        raise WrongArity("the infinity check needs two polynomials in two variables")
    forms = [degree_and_leading_form(p) for p in G.polys]

    def dehomogenize(d, form):
        # L(x, 1); missing x^d coefficient means L(1, 0) = 0
        return Polynomial(1, {(a[0],): c for a, c in form.terms.items()}), form.coefficient((d, 0))

    (u1, top1), (u2, top2) = (dehomogenize(d, L) for d, L in forms)
    h = univariate_gcd(u1, u2)
    k = max(a[0] for a in h.terms)
    factor = Polynomial(2, {(a[0], k - a[0]): c for a, c in h.terms.items()})
    if top1 == 0 and top2 == 0:
        factor = factor * Polynomial.variable(2, 1)
    if max(sum(a) for a in factor.terms) == 0:
        return None
    return factor


def _root_spaces(G: PolynomialSystem, points):
    return [dual_space(G.polys, x) for x in points]


def bezout_report(
    G: PolynomialSystem, roots: Sequence[Point] | None = None, *, require_complete: bool = True
) -> BezoutReport:
    bezout_number = prod(G.degrees)
    gb = G.groebner(LEX)
    qdim = quotient_dimension(gb)
    if qdim == INFINITE:
        return BezoutReport((), None, bezout_number, Verdict.INFINITE, qdim)

    if roots is None:
        solved = solve_rational(G.polys, require_complete=require_complete, names=G.vars)
        points, complete = solved.points, solved.complete
    else:
        points, complete = [], True
        for x in roots:
            x = tuple(to_rational(v) for v in x)
            if not verify_common_zero(G, x):
                raise InvalidRoot(x)
            if x not in points:
                points.append(x)

    spaces = _root_spaces(G, points)
    entries = tuple((s.point, s.multiplicity, s) for s in spaces)
    total = sum(s.multiplicity for s in spaces)
    if total > bezout_number:
        raise AssertionError(
            f"multiplicity total {total} exceeds the Bezout number {bezout_number}"
        )
    verdict = Verdict.MATCH if total == bezout_number else Verdict.DEFICIT
    evidence, checked = None, False
    if verdict is Verdict.DEFICIT and G.nvars == 2 and len(G.polys) == 2:
        evidence, checked = infinity_check_2d(G), True
    return BezoutReport(entries, total, bezout_number, verdict, qdim, complete, evidence, checked)


def _zero_dimensional_roots(F: PolynomialSystem):
    gb = F.groebner(LEX)
    if quotient_dimension(gb) == INFINITE:
        raise NotZeroDimensional("the ideal is not zero-dimensional")
    points = solve_rational(F.polys, names=F.vars).points
    return gb, points


def dual_member(f: Polynomial, F: PolynomialSystem) -> MembershipVerdict:
    """Decide ``f in <F>`` by checking every dual functional at every common zero."""
    if f.nvars != F.nvars:
        raise ArityMismatch(f"polynomial arity {f.nvars}, system arity {F.nvars}")
    gb, points = _zero_dimensional_roots(F)
    spaces = _root_spaces(F, points)
    return _membership_from_spaces(f, gb, spaces)


def _membership_from_spaces(f, gb: GroebnerBasis, spaces: Sequence[DualSpaceBasis]):
    witness = None
    for space in spaces:
        for p in space.basis:
            if apply_functional(p, f, space.point) != 0:
                witness = (space.point, p)
                break
        if witness:
            break
    member = witness is None
    return MembershipVerdict(member, member == gb.contains(f), witness, tuple(spaces))


class MembershipTester:
    """Reusable membership checks against one fixed ideal.

    Dual spaces and the basis are computed once; ``check`` then costs only
    functional evaluations plus one normal form.
    """

    def __init__(self, F: PolynomialSystem):
        self.system = F
        self.groebner, points = _zero_dimensional_roots(F)
        self.spaces = tuple(_root_spaces(F, points))

    def check(self, f: Polynomial) -> MembershipVerdict:
        return _membership_from_spaces(f, self.groebner, self.spaces)


def nullstellensatz_power(f: Polynomial, F: PolynomialSystem) -> PowerCertificate:
    """Least m >= 1 with f^m in <F>, searched up to prod(deg f_i) + 1."""
    gb, points = _zero_dimensional_roots(F)
    for x in points:
        if evaluate(f, x) != 0:
            raise NotVanishing(x)
    bound = prod(F.degrees) + 1
    power = Polynomial.constant(f.nvars, 1)
    for m in range(1, bound + 1):
        power = power * f
        if gb.contains(power):
            return PowerCertificate(m, bound)
    raise BoundViolation(f"no power of f up to {bound} lies in the ideal")

