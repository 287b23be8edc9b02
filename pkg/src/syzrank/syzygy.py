"""First syzygies of a polynomial sequence, evaluated ranks, and a
bounded-degree linear-algebra oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from typing import Sequence

from .fields import Field
from .groebner import buchberger
from .linalg import RowEchelon, nullspace
from .linalg import rank as _matrix_rank
from .orders import GREVLEX, module_pot
from .polynomial import Point, Polynomial, Ring, Vector

__all__ = [
    "SyzygyMatrix",
    "ScalarMatrix",
    "OracleResult",
    "first_syzygies",
    "evaluate_matrix",
    "rank",
    "bounded_degree_syzygy_oracle",
    "syzygy_oracle_with_default_cap",
    "monomials_of_degree",
]


@dataclass(frozen=True)
class ScalarMatrix:
    """A rectangular matrix of exact field elements (list of rows)."""

    rows: tuple
    ncols: int
    field: Field

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def rank(self) -> int:
        return _matrix_rank(self.rows, self.field)

    def columns(self) -> list[tuple]:
        return [tuple(r[j] for r in self.rows) for j in range(self.ncols)]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


def rank(A: ScalarMatrix) -> int:
    """Exact rank by fraction-free elimination."""
    return A.rank()


def _degree_sub(a, b):
    if isinstance(a, tuple):
        return tuple(x - y for x, y in zip(a, b))
    return a - b


@dataclass(frozen=True)
class SyzygyMatrix:
    """Columns generating the syzygies of ``generators``.

    Attributes
    ----------
    generators : tuple of Polynomial
        The sequence ``g_1, ..., g_k`` (the matrix has ``k`` rows).
    columns : tuple of Vector
        Each column ``s`` satisfies ``sum_i s_i g_i = 0``.
    relation_degrees : tuple
        For homogeneous input, the degree of ``s_i g_i`` (any nonzero ``i``),
        an ``int`` or a Picard vector. ``None`` entries for inhomogeneous input.
    column_degrees : tuple
        ``relation_degree - e`` when every generator has the same degree ``e``
        (so a Jacobian column records the degree of its entries); otherwise
        the relation degree itself.
    """

    ring: Ring
    generators: tuple
    columns: tuple
    relation_degrees: tuple = ()
    column_degrees: tuple = ()

    @property
    def nrows(self) -> int:
        return len(self.generators)

    @property
    def ncols(self) -> int:
        return len(self.columns)

    def entry(self, i: int, j: int) -> Polynomial:
        return self.columns[j][i]

    def verify(self) -> bool:
        """Symbolic check that every column annihilates the generators."""
        return all(col.dot(self.generators).is_zero for col in self.columns)

    def with_columns(self, extra: Sequence[Vector]) -> "SyzygyMatrix":
        """Append columns (degrees recomputed); used to test generator independence."""
        cols = tuple(self.columns) + tuple(extra)
        rel, coldeg = _degrees(self.generators, cols)
        return SyzygyMatrix(self.ring, self.generators, cols, rel, coldeg)

    def __str__(self):
        body = "\n".join(f"  [{d}] {c}" for d, c in zip(self.column_degrees, self.columns))
        return f"SyzygyMatrix({self.nrows} x {self.ncols})\n{body}"


def _common_degree(gens):
    degs = set()
    for g in gens:
        if g.is_zero:
            continue
        data = g.degree_data()
        if not data.homogeneous:
            return None, False
        degs.add(data.degree)
    if len(degs) == 1:
        return degs.pop(), True
    return None, True


def _relation_degree(gens, col):
    ring = col.ring
    for s, g in zip(col, gens):
        if s.is_zero or g.is_zero:
            continue
        ds, dg = s.degree_data(), g.degree_data()
        if not (ds.homogeneous and dg.homogeneous):
            return None
        if ring.grading is None:
            return ds.degree + dg.degree
        return tuple(a + b for a, b in zip(ds.degree, dg.degree))
    return None


def _degrees(gens, cols):
    common, homogeneous = _common_degree(gens)
    rel = tuple(_relation_degree(gens, c) if homogeneous else None for c in cols)
    if common is not None:
        coldeg = tuple(None if d is None else _degree_sub(d, common) for d in rel)
    else:
        coldeg = rel
    return rel, coldeg


def _sort_key(deg, col):
    if deg is None:
        dkey = (1,)
    elif isinstance(deg, tuple):
        dkey = (0,) + deg
    else:
        dkey = (0, deg)
    return dkey, str(col)


def first_syzygies(gens: Sequence[Polynomial]) -> SyzygyMatrix:
    """Generators of ``ker(R^k -> R, e_i -> g_i)``.

    A module Gröbner basis of the vectors ``(g_i, e_i)`` in ``R^(1+k)`` is
    computed under position-over-term with component 0 strongest; the basis
    elements whose component 0 vanishes, with that component dropped, are
    the syzygies.
    """
    gens = tuple(gens)
    if not gens:
        raise ValueError("first_syzygies needs at least one generator")
    ring = gens[0].ring
    if any(g.ring != ring for g in gens):
        raise ValueError("generators must share a ring")
    k = len(gens)
    zero, one = ring.zero, ring.one
    vectors = []
    for i, g in enumerate(gens):
        comps = [g] + [one if j == i else zero for j in range(k)]
        vectors.append(Vector(ring, comps))
    weights = [0]
    for g in gens:
        weights.append(max(g.total_degree(), 0))
    basis = buchberger(vectors, module_pot(GREVLEX), weights=weights)
    cols = [Vector(ring, v.components[1:]) for v in basis if v[0].is_zero]
    cols = [c for c in cols if not c.is_zero]
    rel, coldeg = _degrees(gens, cols)
    order = sorted(range(len(cols)), key=lambda j: _sort_key(rel[j], cols[j]))
    return SyzygyMatrix(
        ring,
        gens,
        tuple(cols[j] for j in order),
        tuple(rel[j] for j in order),
        tuple(coldeg[j] for j in order),
    )


def _coords(point, ring: Ring) -> list:
    coords = point.coords if isinstance(point, Point) else tuple(point)
    if len(coords) != ring.nvars:
        raise ValueError(f"point has {len(coords)} coordinates, ring has {ring.nvars} variables")
    if isinstance(point, Point) and point.kind == "projective" and all(c == 0 for c in coords):
        raise ValueError("zero representative of a projective point")
    return [ring.field(c) for c in coords]


def evaluate_matrix(M, point) -> ScalarMatrix:
    """Entry-wise evaluation of a :class:`SyzygyMatrix` (or list of columns) at a point."""
    columns = M.columns if isinstance(M, SyzygyMatrix) else tuple(M)
    ring = M.ring if isinstance(M, SyzygyMatrix) else columns[0].ring
    nrows = M.nrows if isinstance(M, SyzygyMatrix) else len(columns[0])
    coords = _coords(point, ring)
    values = [col.evaluate(coords) for col in columns]
    rows = tuple(tuple(values[j][i] for j in range(len(columns))) for i in range(nrows))
    return ScalarMatrix(rows, len(columns), ring.field)


@dataclass(frozen=True)
class OracleResult:
    """Rank from the bounded-degree oracle.

    ``history[e]`` is the accumulated evaluated rank after degree slice ``e``;
    ``stable`` means the rank did not grow over the last two slices.
    """

    rank: int
    stable: bool
    cap: int
    history: tuple = field(default=(), repr=False)


def monomials_of_degree(n: int, e: int) -> list[tuple]:
    """All exponent vectors of total degree ``e`` in ``n`` variables."""
    if e < 0:
        return []
    out = []
    for combo in combinations_with_replacement(range(n), e):
        m = [0] * n
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    return out


def _mono_value(m, coords, field):
    v = field.one
    for c, k in zip(coords, m):
        if k:
            v = field.norm(v * field.pow(c, k))
    return v


def bounded_degree_syzygy_oracle(gens: Sequence[Polynomial], point, cap: int) -> OracleResult:
    """Evaluated rank of all syzygies of bounded degree, by plain linear algebra.

    For each ``e <= cap`` the homogeneous syzygies ``(a_i)`` with
    ``deg a_i = e + max_j deg g_j - deg g_i`` are found as the nullspace of
    an exact linear system; their values at ``point`` are accumulated and
    the rank of their span is returned.
    """
    gens = tuple(gens)
    if cap < 0:
        raise ValueError("degree cap must be non-negative")
    if not gens:
        raise ValueError("no generators")
    ring = gens[0].ring
    field = ring.field
    degs = []
    for g in gens:
        if g.is_zero:
            degs.append(None)
            continue
        data = g.degree_data()
        if not data.homogeneous or not ring.is_standard_graded:
            raise ValueError("the bounded-degree oracle needs homogeneous input (standard grading)")
        degs.append(data.degree)
    coords = _coords(point, ring)
    n = ring.nvars
    k = len(gens)
    dmax = max((d for d in degs if d is not None), default=0)
    acc = RowEchelon(field)
    # zero generators give free syzygies e_i in degree 0 of their own slot
    for i, d in enumerate(degs):
        if d is None:
            acc.add({i: 1})
    history = []
    gterms = [g.as_dict() for g in gens]
    for e in range(cap + 1):
        unknowns = []  # (generator index, monomial)
        for i, d in enumerate(degs):
            if d is None:
                continue
            for m in monomials_of_degree(n, e + dmax - d):
                unknowns.append((i, m))
        target = {m: r for r, m in enumerate(monomials_of_degree(n, e + dmax))}
        rows: dict[int, dict] = {}
        for col, (i, m) in enumerate(unknowns):
            for t, c in gterms[i].items():
                prod = tuple(a + b for a, b in zip(m, t))
                rows.setdefault(target[prod], {})[col] = c
        null = nullspace(rows.values(), len(unknowns), field)
        if null:
            values = [_mono_value(m, coords, field) for _, m in unknowns]
            for v in null:
                out = [field.zero] * k
                for col, a in enumerate(v):
                    if a:
                        i = unknowns[col][0]
                        out[i] = field.norm(out[i] + a * values[col])
                acc.add(out)
        history.append(acc.rank)
    stable = len(history) >= 3 and history[-1] == history[-2] == history[-3]
    return OracleResult(acc.rank, stable, cap, tuple(history))


def syzygy_oracle_with_default_cap(gens: Sequence[Polynomial], point, d: int, cap: int | None = None) -> OracleResult:
    """Run the oracle with cap ``2d`` (or ``cap``), extending by 2 up to ``4d`` while unstable."""
    cap = 2 * d if cap is None else cap
    limit = max(4 * d, cap)
    result = bounded_degree_syzygy_oracle(gens, point, cap)
    while not result.stable and cap + 2 <= limit:
        cap += 2
        result = bounded_degree_syzygy_oracle(gens, point, cap)
    return result
