"""Local dual spaces of polynomial systems and intersection multiplicities.

A dual polynomial ``p`` in variables ``l1..ln`` acts on ``f`` at a point
``x`` as the constant-coefficient differential operator ``p(D)`` followed by
evaluation::

    L[p, x](f) = sum_beta coeff_beta(p) * (D^beta f)(x)

The dual space at ``x`` is the set of ``p`` such that every derivative
``D^alpha p`` annihilates every generator at ``x``. Its dimension is the
intersection multiplicity. All computation happens after translating ``x``
to the origin, where ``(D^gamma g)(0) = gamma! * coeff_gamma(g)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Sequence

from .errors import ArityMismatch, NonIsolatedPoint, ZeroPolynomial
from .exactla import RationalMatrix, null_space, row_space_equal
from .polycore import (
    Point,
    Polynomial,
    degree,
    differentiate,
    evaluate,
    falling,
    grlex_key,
    monomials_up_to,
    shift_to_origin,
    to_rational,
)

DualPolynomial = Polynomial


@dataclass(frozen=True)
class DualSpaceBasis:
    point: Point
    basis: tuple
    truncation_degree: int

    @property
    def multiplicity(self) -> int:
        return len(self.basis)


def apply_functional(p: DualPolynomial, f: Polynomial, x: Sequence) -> Fraction:
    if p.nvars != f.nvars or len(x) != f.nvars:
        raise ArityMismatch(
            f"dual arity {p.nvars}, polynomial arity {f.nvars}, point length {len(x)}"
        )
    total = Fraction(0)
    for beta, c in p.terms.items():
        total += c * evaluate(differentiate(f, beta), x)
    return total


def _multi_factorial(alpha):
    return prod(factorial(e) for e in alpha)


def _columns(nvars, d):
    # descending graded-lex: rref then leaves the low-order monomials free,
    # which gives basis elements like l2 + 1/2*l1^2 rather than 2*l2 + l1^2
    return monomials_up_to(nvars, d)[::-1]


def _localize(G, x):
    G = list(G)
    if not G:
        raise ValueError("empty generator list")
    n = G[0].nvars
    if any(g.nvars != n for g in G) or len(x) != n:
        raise ArityMismatch("generators and point must share one arity")
    x = tuple(to_rational(v) for v in x)
    return [shift_to_origin(g, x) for g in G], n, x


def _sub(beta, alpha):
    if all(b >= a for a, b in zip(alpha, beta)):
        return tuple(b - a for a, b in zip(alpha, beta))
    return None


def paper_condition_rows(G: Sequence[Polynomial], x: Sequence, d: int) -> RationalMatrix:
    """Rows ``[D^alpha l^beta](D) g_i (x)`` for every generator and every |alpha| <= d."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    local, n, _ = _localize(G, x)
    cols = _columns(n, d)
    rows = []
    for g in local:
        for alpha in monomials_up_to(n, d):
            row = {}
            for k, beta in enumerate(cols):
                gamma = _sub(beta, alpha)
                if gamma is None:
                    continue
                c = g.coefficient(gamma)
                if c:
                    # D^alpha l^beta = falling(beta, alpha) l^gamma, then (D^gamma g)(0)
                    k_ab = prod(falling(b, a) for a, b in zip(alpha, beta))
                    row[k] = k_ab * _multi_factorial(gamma) * c
            rows.append(row)
    return RationalMatrix.from_sparse(rows, len(cols))


def multiple_condition_rows(G: Sequence[Polynomial], x: Sequence, d: int) -> RationalMatrix:
    """Macaulay rows: ``L[p, x]((X - x)^beta * g_i) = 0`` for every |beta| <= d."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    local, n, _ = _localize(G, x)
    cols = _columns(n, d)
    index = {beta: k for k, beta in enumerate(cols)}
    rows = []
    for g in local:
        for shift in monomials_up_to(n, d):
            row = {}
            for alpha, c in g.mul_monomial(shift).terms.items():
                k = index.get(alpha)
                if k is not None:
                    row[k] = _multi_factorial(alpha) * c
            rows.append(row)
    return RationalMatrix.from_sparse(rows, len(cols))


def _vector_to_dual(v, cols, n):
    return Polynomial(n, {beta: c for beta, c in zip(cols, v) if c})


def truncated_dual(
    G: Sequence[Polynomial], x: Sequence, d: int, mode: str = "paper"
) -> list[DualPolynomial]:
    if mode == "paper":
        M = paper_condition_rows(G, x, d)
    elif mode == "multiples":
        M = multiple_condition_rows(G, x, d)
    else:
        raise ValueError(f"unknown condition mode {mode!r}")
    n = G[0].nvars
    cols = _columns(n, d)
    basis = [_vector_to_dual(v, cols, n) for v in null_space(M)]
    return sorted(basis, key=_basis_order)


def _basis_order(p):
    lead = max(p.terms, key=grlex_key)
    return grlex_key(lead)


def degree_cap(G: Sequence[Polynomial]) -> int:
    return prod(degree(g) for g in G) + 1


def dual_space(G: Sequence[Polynomial], x: Sequence, mode: str = "paper") -> DualSpaceBasis:
    """Dual space at ``x``, grown degree by degree until its dimension repeats.

    Raises NonIsolatedPoint when the dimension is still increasing at the cap
    ``prod(deg g_i) + 1``.
    """
    G = list(G)
    if any(g.is_zero() for g in G):
        raise ZeroPolynomial("generators must be nonzero")
    x = tuple(to_rational(v) for v in x)
    cap = degree_cap(G)
    previous = truncated_dual(G, x, 0, mode)
    for d in range(1, cap + 1):
        current = truncated_dual(G, x, d, mode)
        if len(current) == len(previous):
            return DualSpaceBasis(x, tuple(previous), d - 1)
        previous = current
    raise NonIsolatedPoint(x, cap)


def multiplicity(G: Sequence[Polynomial], x: Sequence) -> int:
    return dual_space(G, x).multiplicity


def _span_matrix(polys, monos):
    index = {m: k for k, m in enumerate(monos)}
    rows = [{index[a]: c for a, c in p.terms.items()} for p in polys]
    return RationalMatrix.from_sparse(rows, len(monos))


def is_D_invariant(basis: Sequence[DualPolynomial]) -> bool:
    basis = list(basis)
    if not basis:
        return True
    n = basis[0].nvars
    derivatives = []
    for p in basis:
        for j in range(n):
            e = [0] * n
            e[j] = 1
            dp = differentiate(p, e)
            if not dp.is_zero():
                derivatives.append(dp)
    monos = sorted({a for p in basis + derivatives for a in p.terms}, key=grlex_key)
    span = _span_matrix(basis, monos)
    for dp in derivatives:
        if not row_space_equal(span, span.stack(_span_matrix([dp], monos))):
            return False
    return True
