"""Milnor and Tjurina numbers of hypersurface germs at the origin.

Two independent methods are provided: a Mora standard basis under the local
order neg-grevlex, and a Macaulay truncation oracle that computes
``dim k[x]/(I + m^N)`` by linear algebra until it stabilizes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .charts import Chart, germ_in_chart
from .errors import InconsistencyError, InvalidPointError
from .groebner import INFINITE, quotient_dimension, standard_basis
from .linalg import RowEchelon
from .polynomial import Point, Polynomial
from .syzygy import monomials_of_degree

__all__ = [
    "UNSTABLE",
    "LocalGermInvariants",
    "TruncationResult",
    "milnor",
    "tjurina",
    "truncation_oracle",
    "germ_invariants",
    "invariants_at",
]


class _Unstable:
    """Marker returned when the truncation sequence did not stabilize."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNSTABLE"

    def __reduce__(self):
        return (_Unstable, ())


UNSTABLE = _Unstable()


@dataclass(frozen=True)
class LocalGermInvariants:
    """Milnor number ``mu`` and Tjurina number ``tau`` (ints or ``INFINITE``).

    ``method`` names the computation that produced the values;
    ``confirmed`` is true when the truncation oracle reproduced them.
    """

    mu: int | float
    tau: int | float
    method: str = "standard-basis"
    confirmed: bool = False

    def __post_init__(self):
        if (self.mu == INFINITE) != (self.tau == INFINITE):
            raise InconsistencyError(f"mu={self.mu} and tau={self.tau} must be finite together")
        if self.mu != INFINITE and self.tau > self.mu:
            raise InconsistencyError(f"tau={self.tau} exceeds mu={self.mu}")

    @property
    def isolated(self) -> bool:
        return self.mu != INFINITE

    @property
    def quasi_homogeneous(self) -> bool | None:
        return None if not self.isolated else self.mu == self.tau


@dataclass(frozen=True)
class TruncationResult:
    """Outcome of the truncation oracle.

    ``value`` is the stabilized dimension or :data:`UNSTABLE`; ``history[N-1]``
    holds ``dim k[x]/(I + m^N)``.
    """

    value: object
    stable_at: int | None
    history: tuple


def _check_origin(g: Polynomial):
    if g.constant_term() != 0:
        raise ValueError("the germ must vanish at the origin")


def milnor(g: Polynomial):
    """``dim O/(dg)`` at the origin via a local standard basis (or ``INFINITE``)."""
    _check_origin(g)
    gens = [h for h in g.gradient() if not h.is_zero]
    if not gens:
        return INFINITE
    return quotient_dimension(standard_basis(gens))


def tjurina(g: Polynomial):
    """``dim O/(g, dg)`` at the origin via a local standard basis (or ``INFINITE``)."""
    _check_origin(g)
    gens = [h for h in (g,) + g.gradient() if not h.is_zero]
    if not gens:
        return INFINITE
    return quotient_dimension(standard_basis(gens))


def truncation_oracle(gens: Sequence[Polynomial], cap: int) -> TruncationResult:
    """Dimension of the local quotient by ``(gens)`` from truncated linear algebra.

    For ``N = 1, 2, ..., cap`` the products of monomials with the generators,
    truncated below degree ``N``, span ``(I + m^N)/m^N``; the corank among the
    monomials of degree ``< N`` is ``dim k[x]/(I + m^N)``. The sequence is
    non-decreasing and, by Nakayama's lemma, constant from the first ``N``
    where it repeats; that value is the local dimension.
    """
    gens = [g for g in gens if not g.is_zero]
    if not gens:
        raise ValueError("truncation oracle needs at least one nonzero generator")
    ring = gens[0].ring
    for g in gens:
        if g.constant_term() != 0:
            raise ValueError("generators must vanish at the origin")
    n = ring.nvars
    field = ring.field
    terms = [g.as_dict() for g in gens]
    history: list[int] = []
    for N in range(1, cap + 1):
        index = {}
        for e in range(N):
            for m in monomials_of_degree(n, e):
                index[m] = len(index)
        ech = RowEchelon(field)
        for e in range(N - 1):
            for m in monomials_of_degree(n, e):
                for t in terms:
                    row = {}
                    for mono, c in t.items():
                        prod = tuple(a + b for a, b in zip(m, mono))
                        col = index.get(prod)
                        if col is not None:
                            row[col] = c
                    if row:
                        ech.add(row)
        history.append(len(index) - ech.rank)
        if N >= 2 and history[-1] == history[-2]:
            return TruncationResult(history[-1], N, tuple(history))
    return TruncationResult(UNSTABLE, None, tuple(history))


def _default_cap(g: Polynomial, guess=None) -> int:
    if guess is None or guess == INFINITE:
        d = max(g.total_degree(), 1)
        guess = 2 * d * d
    return int(guess) + 3


def _confirm(gens, value, g, label) -> None:
    if value == INFINITE:
        d = max(g.total_degree(), 1)
        res = truncation_oracle(gens, 2 * d + 2)
        if res.value is not UNSTABLE:
            raise InconsistencyError(
                f"{label}: standard basis says infinite, truncation stabilized at {res.value}"
            )
        return
    res = truncation_oracle(gens, _default_cap(g, value))
    if res.value != value:
        raise InconsistencyError(f"{label}: standard basis gives {value}, truncation gives {res.value}")


def germ_invariants(g: Polynomial, confirm: bool = True) -> LocalGermInvariants:
    """``(mu, tau)`` of a germ at the origin, optionally confirmed by truncation."""
    mu, tau = milnor(g), tjurina(g)
    if confirm:
        _confirm([h for h in g.gradient() if not h.is_zero], mu, g, "Milnor number")
        _confirm([h for h in (g,) + g.gradient() if not h.is_zero], tau, g, "Tjurina number")
    return LocalGermInvariants(mu, tau, "standard-basis", confirm)


def invariants_at(f, p: Point, chart: Chart | None = None, confirm: bool = True) -> LocalGermInvariants:
    """Local invariants of the hypersurface ``f`` at the singular point ``p``.

    ``f`` is a homogeneous :class:`Polynomial` or a ``ProjectiveHypersurface``.
    The germ is taken in ``chart`` (default: first nonzero coordinate) and both
    methods must agree, otherwise :class:`InconsistencyError` is raised.
    """
    poly = getattr(f, "f", f)
    coords = [poly.ring.field(c) for c in p.coords]
    if len(coords) != poly.ring.nvars:
        raise InvalidPointError("point arity does not match the ring")
    if poly.evaluate(coords) != 0 or any(h.evaluate(coords) != 0 for h in poly.gradient()):
        raise InvalidPointError(f"{p} is not a singular point")
    germ = germ_in_chart(poly, p, chart).germ
    return germ_invariants(germ, confirm)
