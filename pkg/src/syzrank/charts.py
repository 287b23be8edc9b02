"""Affine charts of projective space around a point.

A chart is either a coordinate index ``k`` (the open set ``x_k != 0``) or a
linear form ``l`` given by its coefficient vector (the open set ``l != 0``).
For a linear form, the coordinates are changed so that ``l`` becomes a
coordinate function and the usual dehomogenization applies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import InvalidPointError
from .polynomial import Point, Polynomial

__all__ = ["Chart", "ChartGerm", "germ_in_chart", "default_chart", "candidate_charts"]

Chart = Union[int, tuple]


@dataclass(frozen=True)
class ChartGerm:
    """The local equation ``germ`` (point moved to the origin) of ``f`` in a chart."""

    germ: Polynomial
    chart: Chart
    affine_point: tuple


def default_chart(p: Point) -> int:
    """First nonzero coordinate of ``p``."""
    return p.first_nonzero()


def _coords(f: Polynomial, p) -> list:
    coords = p.coords if isinstance(p, Point) else tuple(p)
    if len(coords) != f.ring.nvars:
        raise InvalidPointError(f"point has {len(coords)} coordinates, expected {f.ring.nvars}")
    field = f.ring.field
    vals = [field(c) for c in coords]
    if all(v == 0 for v in vals):
        raise InvalidPointError("zero representative of a projective point")
    return vals


def germ_in_chart(f: Polynomial, p, chart: Chart | None = None) -> ChartGerm:
    """Dehomogenize ``f`` in ``chart`` and translate the image of ``p`` to the origin."""
    field = f.ring.field
    vals = _coords(f, p)
    n1 = len(vals)
    if chart is None:
        chart = next(i for i, v in enumerate(vals) if v != 0)
    if isinstance(chart, int):
        k = chart
        if not 0 <= k < n1:
            raise InvalidPointError(f"chart index {k} out of range")
        g, w = f, vals
    else:
        ell = [field(c) for c in chart]
        if len(ell) != n1:
            raise InvalidPointError("linear-form chart has the wrong length")
        k = next((i for i, c in enumerate(ell) if c != 0), None)
        if k is None:
            raise InvalidPointError("linear-form chart is zero")
        inv = field.inv(ell[k])
        # x_k = (z_k - sum_{i != k} l_i z_i) / l_k, x_i = z_i otherwise
        matrix = []
        for i in range(n1):
            if i == k:
                matrix.append([field.norm(inv) if j == k else field.norm(-ell[j] * inv) for j in range(n1)])
            else:
                matrix.append([field.one if j == i else field.zero for j in range(n1)])
        g = f.linear_change(matrix)
        w = list(vals)
        w[k] = field.norm(sum((a * b for a, b in zip(ell, vals)), field.zero))
        chart = tuple(chart)
    if w[k] == 0:
        raise InvalidPointError(f"point lies outside chart {chart!r}")
    lead = w[k]
    affine = tuple(field.div(w[i], lead) for i in range(n1) if i != k)
    germ = g.dehomogenize(k).translate(affine)
    return ChartGerm(germ, chart, affine)


def candidate_charts(p: Point, count: int = 2, field=None) -> list:
    """At least ``count`` distinct charts containing ``p`` (coordinates first, then sums of two coordinates)."""
    coords = list(p.coords)
    if field is not None:
        coords = [field(c) for c in coords]
    n1 = len(coords)
    out: list = [i for i, c in enumerate(coords) if c != 0]
    for i in range(n1):
        for j in range(i + 1, n1):
            if len(out) >= count:
                return out
            ell = tuple(1 if t in (i, j) else 0 for t in range(n1))
            val = coords[i] + coords[j]
            if field is not None:
                val = field.norm(val)
            if val != 0:
                out.append(ell)
    return out
