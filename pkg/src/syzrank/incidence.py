"""The incidence scheme ``Z_f`` in ``P^n x P^n`` and the global SEH test.

Each column ``delta`` of ``M'_f`` gives a bihomogeneous equation
``sum_i delta_i(x) u_i``. The hypersurface is strongly Euler homogeneous at
every point exactly when the incidence quadric ``Q = sum_i x_i u_i``
vanishes on ``Z_f`` restricted to ``D``, i.e. when ``Q`` lies in the radical
of ``I_{Z_f} + (f)``. Because ``Q`` is bilinear it vanishes wherever either
block of coordinates is zero, so the membership test may be done on the
affine cone without saturating.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NonIsolatedError
from .groebner import radical_membership
from .local import invariants_at
from .polynomial import Point, Polynomial, Ring
from .projective import ProjectiveHypersurface, _as_hypersurface
from .syzygy import SyzygyMatrix

__all__ = ["BigradedIdeal", "zf_ideal", "incidence_quadric", "global_seh_check", "discrepancy_sum"]


@dataclass(frozen=True)
class BigradedIdeal:
    """Generators in ``k[x_0..x_n, u_0..u_n]``, each of ``u``-degree 1."""

    ring: Ring
    generators: tuple
    x_indices: tuple
    u_indices: tuple

    def substitute_u(self, images: Sequence[Polynomial]) -> list[Polynomial]:
        """Replace ``u_i`` by ``images[i]`` (polynomials in the ``x`` ring)."""
        target = images[0].ring
        x_images = list(target.gens)
        return [g.substitute(x_images + list(images)) for g in self.generators]


def _bigraded_ring(xring: Ring) -> tuple[Ring, tuple, tuple]:
    names = list(xring.names)
    unames = []
    probe = xring
    for i in range(len(names)):
        name = probe.fresh_name(f"u{i}")
        unames.append(name)
        probe = probe.extend([name])
    ring = xring.extend(unames)
    n1 = len(names)
    return ring, tuple(range(n1)), tuple(range(n1, 2 * n1))


def zf_ideal(M: SyzygyMatrix) -> BigradedIdeal:
    """One generator ``sum_i delta_i(x) u_i`` per column ``delta`` of ``M``."""
    xring = M.ring
    if M.nrows != xring.nvars:
        raise ValueError(f"matrix has {M.nrows} rows, expected {xring.nvars}")
    ring, xs, us = _bigraded_ring(xring)
    pos = list(xs)
    gens = []
    for col in M.columns:
        g = ring.zero
        for i, entry in enumerate(col):
            if not entry.is_zero:
                g = g + entry.embed(ring, pos) * ring.var(us[i])
        gens.append(g)
    return BigradedIdeal(ring, tuple(gens), xs, us)


def incidence_quadric(ideal: BigradedIdeal) -> Polynomial:
    ring = ideal.ring
    return sum((ring.var(i) * ring.var(j) for i, j in zip(ideal.x_indices, ideal.u_indices)), ring.zero)


def global_seh_check(f) -> bool:
    """``True`` iff ``D = V(f)`` is strongly Euler homogeneous at all of its points."""
    hyp = _as_hypersurface(f)
    ideal = zf_ideal(hyp.matrices.base)
    fx = hyp.f.embed(ideal.ring, list(ideal.x_indices))
    gens = list(ideal.generators) + [fx]
    return radical_membership(incidence_quadric(ideal), gens)


def discrepancy_sum(f, singular_points: Sequence[Point]) -> int:
    """``sum (mu(P) - tau(P))`` over the given singular points of a plane curve."""
    hyp: ProjectiveHypersurface = _as_hypersurface(f)
    if hyp.n != 2:
        raise ValueError("discrepancy sums are defined here for plane curves (n = 2)")
    total = 0
    for p in singular_points:
        inv = invariants_at(hyp.f, p)
        if not inv.isolated:
            raise NonIsolatedError(f"{p} is a non-isolated singular point")
        total += int(inv.mu - inv.tau)
    return total
