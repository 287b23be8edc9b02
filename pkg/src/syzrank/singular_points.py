"""Rational singular points of a projective hypersurface with finite singular locus.

The singular locus ``V(f, J_f)`` is split into the disjoint charts
``x_0 = ... = x_{i-1} = 0, x_i = 1``. In each chart a lex Gröbner basis
yields a univariate eliminant in the last variable; its rational roots are
substituted back and the procedure recurses on the remaining variables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sympy import Poly, divisors, symbols

from .groebner import buchberger, leading_ideal_dimension
from .orders import LEX
from .polynomial import Point, Polynomial

__all__ = ["SingularSearch", "find_rational_singular_points", "rational_roots"]

DEFAULT_HEIGHT_CAP = 10**12


@dataclass(frozen=True)
class SingularSearch:
    """Outcome of the singular-point search.

    ``complete`` is true when every eliminant split into linear factors over
    the base field, so ``points`` is the full singular locus.
    ``positive_dimensional`` marks a singular locus of dimension ``>= 1``
    (then ``points`` is empty).
    """

    points: tuple
    complete: bool
    positive_dimensional: bool = False

    def to_dict(self) -> dict:
        return {
            "points": [str(p) for p in self.points],
            "complete": self.complete,
            "positive_dimensional": self.positive_dimensional,
        }


def _int_coeffs(coeffs: Sequence[Fraction]) -> list[int]:
    den = 1
    for c in coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in coeffs]
    g = math.gcd(*ints)
    return [c // g for c in ints]


def _horner(coeffs: Sequence, x):
    v = 0
    for c in coeffs:
        v = v * x + c
    return v


def _deflate(coeffs: list, root) -> list:
    out = []
    acc = 0
    for c in coeffs[:-1]:
        acc = acc * root + c
        out.append(acc)
    return out


def rational_roots(coeffs: Sequence, height_cap: int = DEFAULT_HEIGHT_CAP) -> tuple[list, bool]:
    """Rational roots of ``sum coeffs[i] x^(deg - i)`` (highest degree first).

    Returns ``(roots with multiplicity, splits)`` where ``splits`` says the
    polynomial is a product of rational linear factors. Candidates come from
    the divisors of the constant and leading coefficients; if either exceeds
    ``height_cap`` the search is skipped and ``splits`` is ``False``.
    """
    coeffs = _int_coeffs([Fraction(c) for c in coeffs])
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if len(coeffs) <= 1:
        return [], len(coeffs) == 1
    roots: list = []
    while coeffs[-1] == 0:
        roots.append(Fraction(0))
        coeffs = coeffs[:-1]
    if len(coeffs) == 1:
        return roots, True
    lead, const = abs(coeffs[0]), abs(coeffs[-1])
    if lead > height_cap or const > height_cap:
        return roots, False
    candidates = sorted(
        {Fraction(s * p, q) for p in divisors(const) for q in divisors(lead) for s in (1, -1)}
    )
    work = [Fraction(c) for c in coeffs]
    for cand in candidates:
        while len(work) > 1 and _horner(work, cand) == 0:
            roots.append(cand)
            work = _deflate(work, cand)
    return roots, len(work) == 1


def _roots_mod_p(coeffs: Sequence[int], p: int) -> tuple[list, bool]:
    t = symbols("t")
    poly = Poly([int(c) for c in coeffs], t, modulus=p)
    if poly.degree() <= 0:
        return [], poly.degree() == 0
    roots = []
    splits = True
    for factor, mult in poly.factor_list()[1]:
        if factor.degree() == 1:
            a, b = (int(c) % p for c in factor.all_coeffs())
            roots.extend([(-b * pow(a, -1, p)) % p] * mult)
        else:
            splits = False
    return roots, splits


def _univariate_in_last(basis, nvars: int):
    last = nvars - 1
    for g in basis:
        if all(all(e[i] == 0 for i in range(last)) for e in g.monomials()):
            if not g.is_constant():
                return g
    return None


def _solve(gens: list[Polynomial], height_cap: int) -> tuple[list[tuple], bool]:
    gens = [g for g in gens if not g.is_zero]
    if any(g.is_constant() for g in gens):
        return [], True
    if not gens:
        return [()], True  # only reached with no variables left
    ring = gens[0].ring
    n = ring.nvars
    if n == 0:
        return [()], True
    basis = buchberger(gens, LEX)
    if basis.is_unit:
        return [], True
    uni = _univariate_in_last(list(basis), n)
    if uni is None:
        return [], False
    deg = max(e[n - 1] for e in uni.monomials())
    coeffs = [uni.coefficient((0,) * (n - 1) + (k,)) for k in range(deg, -1, -1)]
    p = ring.field.characteristic
    if p:
        roots, splits = _roots_mod_p(coeffs, p)
    else:
        roots, splits = rational_roots(coeffs, height_cap)
    complete = splits
    points = []
    for root in sorted(set(roots)):
        reduced = [g.set_variables({n - 1: root}) for g in gens]
        if n == 1:
            if all(g.is_zero for g in reduced):
                points.append((root,))
            continue
        sub, ok = _solve(reduced, height_cap)
        complete = complete and ok
        points.extend(s + (root,) for s in sub)
    return points, complete


def find_rational_singular_points(f: Polynomial, height_cap: int = DEFAULT_HEIGHT_CAP) -> SingularSearch:
    """Singular points of ``V(f)`` in ``P^n`` with coordinates in the base field."""
    ring = f.ring
    n1 = ring.nvars
    gens = [f] + [h for h in f.gradient() if not h.is_zero]
    cone_dim = leading_ideal_dimension(buchberger(gens))
    if cone_dim >= 2:
        return SingularSearch((), False, True)
    if cone_dim <= 0:
        return SingularSearch((), True, False)
    found = []
    complete = True
    for i in range(n1):
        values = {j: 0 for j in range(i)}
        values[i] = 1
        chart_gens = [g.set_variables(values) for g in gens]
        sols, ok = _solve(chart_gens, height_cap)
        complete = complete and ok
        for sol in sols:
            coords = [Fraction(0)] * i + [Fraction(1)] + [Fraction(c) for c in sol]
            found.append(Point(tuple(coords)))
    return SingularSearch(tuple(found), complete, False)
