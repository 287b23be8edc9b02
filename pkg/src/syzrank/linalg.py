"""Exact sparse linear algebra over QQ and GF(p).

Rows are stored as ``{column: value}`` dicts. Over QQ every row is scaled to
a primitive integer vector and elimination is fraction-free
(``r <- a*r - b*pivot`` followed by content removal), so no rational
arithmetic happens inside the inner loop.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from .fields import QQ, Field

__all__ = ["RowEchelon", "rank", "nullspace", "left_kernel", "integer_inverse", "transpose"]


def _primitive(row: dict) -> dict:
    g = math.gcd(*row.values())
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g == 1:
        return row
    return {c: v // g for c, v in row.items()}


def _to_int_row(values: dict) -> dict:
    den = 1
    for v in values.values():
        d = v.denominator if isinstance(v, Fraction) else 1
        den = den * d // math.gcd(den, d)
    return _primitive({c: int(v * den) for c, v in values.items()})


class RowEchelon:
    """Incremental row echelon form.

    ``add(row)`` reduces a new row against the current pivots and keeps it
    if it is independent; the return value says whether the rank grew.
    """

    def __init__(self, field: Field = QQ):
        self.p = field.characteristic
        self.field = field
        self.pivots: dict[int, dict] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _prepare(self, row) -> dict:
        if isinstance(row, dict):
            items = row.items()
        else:
            items = enumerate(row)
        if self.p:
            out = {}
            for c, v in items:
                v = self.field(v)
                if v:
                    out[c] = v
            return out
        out = {c: v for c, v in items if v != 0}
        return _to_int_row(out) if out else out

    def _reduce(self, row: dict) -> dict:
        p = self.p
        pivots = self.pivots
        while row:
            c = min(row)
            piv = pivots.get(c)
            if piv is None:
                return row
            if p:
                b = row[c]
                for k, v in piv.items():
                    w = (row.get(k, 0) - b * v) % p
                    if w:
                        row[k] = w
                    else:
                        row.pop(k, None)
            else:
                pv, rv = piv[c], row[c]
                g = math.gcd(pv, rv)
                a, b = pv // g, rv // g
                if a != 1:
                    for k in row:
                        row[k] *= a
                for k, v in piv.items():
                    w = row.get(k, 0) - b * v
                    if w:
                        row[k] = w
                    else:
                        row.pop(k, None)
                if row:
                    row = _primitive(row)
        return row

    def add(self, row) -> bool:
        r = self._reduce(self._prepare(row))
        if not r:
            return False
        c = min(r)
        if self.p:
            inv = pow(r[c], -1, self.p)
            r = {k: v * inv % self.p for k, v in r.items()}
        self.pivots[c] = r
        return True

    def contains(self, row) -> bool:
        return not self._reduce(self._prepare(row))

    def reduced_rows(self) -> dict[int, dict]:
        """Reduced echelon rows with pivot entry 1, keyed by pivot column."""
        p = self.p
        rows: dict[int, dict] = {}
        for c, r in self.pivots.items():
            if p:
                rows[c] = dict(r)
            else:
                lead = Fraction(r[c])
                rows[c] = {k: Fraction(v) / lead for k, v in r.items()}
        # clear pivot columns from the rows above, largest pivot first
        for c in sorted(rows, reverse=True):
            rc = rows[c]
            for c2, r2 in rows.items():
                if c2 < c and c in r2:
                    b = r2[c]
                    for k, v in rc.items():
                        w = r2.get(k, 0) - b * v
                        if p:
                            w %= p
                        if w:
                            r2[k] = w
                        else:
                            r2.pop(k, None)
        return rows


def rank(matrix: Sequence[Sequence], field: Field = QQ) -> int:
    """Exact rank of a dense matrix given as a list of rows."""
    ech = RowEchelon(field)
    for row in matrix:
        ech.add(row)
    return ech.rank


def transpose(matrix: Sequence[Sequence], ncols: int | None = None) -> list[list]:
    if not matrix:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*matrix)]


def nullspace(rows: Iterable, ncols: int, field: Field = QQ) -> list[list]:
    """Basis of ``{v : A v = 0}``; ``rows`` are dense lists or sparse dicts."""
    ech = RowEchelon(field)
    for row in rows:
        ech.add(row)
    red = ech.reduced_rows()
    free = [j for j in range(ncols) if j not in red]
    zero = field.zero
    basis = []
    for j in free:
        v = [zero] * ncols
        v[j] = field.one
        for c, row in red.items():
            a = row.get(j)
            if a:
                v[c] = field.norm(-a)
        basis.append(v)
    return basis


def left_kernel(matrix: Sequence[Sequence], nrows: int | None = None, field: Field = QQ) -> list[list]:
    """Basis of ``{v : v^T A = 0}`` for an ``nrows``-row matrix."""
    nrows = len(matrix) if nrows is None else nrows
    if not matrix or not matrix[0]:
        return nullspace([], nrows, field)
    return nullspace(transpose(matrix), nrows, field)


def integer_inverse(matrix: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Exact inverse of a square matrix over QQ (Gauss-Jordan)."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
