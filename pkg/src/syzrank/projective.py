"""Strong Euler homogeneity of points on hypersurfaces in projective space.

For ``D = V(f)`` the matrix ``M'_f`` has as columns generators of the
syzygies of the Jacobian ``(f_x0, ..., f_xn)``; ``M_f`` appends the Euler
column ``(x_0, ..., x_n)``. A point ``p`` of ``D`` is strongly Euler
homogeneous exactly when both matrices have the same rank at ``p``.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import asdict, dataclass, replace

from .charts import Chart, candidate_charts, germ_in_chart
from .errors import InconsistencyError, InvalidPointError, NotOnHypersurfaceError
from .groebner import buchberger, leading_ideal_dimension
from .local import LocalGermInvariants, invariants_at
from .polynomial import Point, Polynomial, Vector
from .syzygy import ScalarMatrix, SyzygyMatrix, evaluate_matrix, first_syzygies

__all__ = [
    "PointStatus",
    "ProjectiveHypersurface",
    "AugmentedSyzygyMatrix",
    "PointReport",
    "IsolatedRefinement",
    "LogRankOracle",
    "ReducednessCheck",
    "jacobian",
    "build_matrices",
    "point_status",
    "classify",
    "classify_isolated",
    "affine_log_rank_oracle",
    "reducedness_warning",
]


class PointStatus(str, enum.Enum):
    NOT_ON_D = "NOT_ON_D"
    SMOOTH = "SMOOTH"
    SINGULAR = "SINGULAR"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class AugmentedSyzygyMatrix:
    """``M'_f`` (``base``) together with the Euler column(s) that give ``M_f``."""

    base: SyzygyMatrix
    euler_columns: tuple
    euler_degrees: tuple = ()

    @property
    def columns(self) -> tuple:
        return tuple(self.base.columns) + tuple(self.euler_columns)

    @property
    def nrows(self) -> int:
        return self.base.nrows

    def evaluate(self, point) -> tuple[ScalarMatrix, ScalarMatrix]:
        """Return ``(M'_f(p), M_f(p))``."""
        full = evaluate_matrix(self.full_columns_matrix(), point)
        m = self.base.ncols
        base = ScalarMatrix(tuple(r[:m] for r in full.rows), m, full.field)
        return base, full

    def full_columns_matrix(self) -> SyzygyMatrix:
        b = self.base
        return SyzygyMatrix(
            b.ring,
            b.generators,
            self.columns,
            tuple(b.relation_degrees) + (None,) * len(self.euler_columns),
            tuple(b.column_degrees) + tuple(self.euler_degrees),
        )


def jacobian(f: Polynomial) -> tuple[Polynomial, ...]:
    """The partial derivatives of a homogeneous ``f``, in variable order."""
    _check_form(f)
    return f.gradient()


def _check_form(f: Polynomial) -> int:
    if not f.ring.is_standard_graded:
        raise ValueError("projective hypersurfaces use the standard grading")
    data = f.degree_data()
    if f.is_zero or not data.homogeneous:
        raise ValueError("f must be a nonzero homogeneous polynomial")
    if data.degree < 1:
        raise ValueError("f must have degree at least 1")
    return data.degree


@dataclass(frozen=True)
class ReducednessCheck:
    """Dimension of ``V(f, J_f)`` in the affine cone; ``ok`` unless it is ``>= n``."""

    ok: bool
    dimension: int

    @property
    def message(self) -> str:
        if self.ok:
            return "ok"
        return f"singular locus of the cone has dimension {self.dimension}; f is probably not reduced"


class ProjectiveHypersurface:
    """``D = V(f)`` in ``P^n`` with lazily computed, cached syzygy matrices.

    Parameters
    ----------
    f : Polynomial
        Homogeneous of degree ``d >= 1`` in ``n + 1`` standard-graded variables.
    """

    def __init__(self, f: Polynomial):
        self.d = _check_form(f)
        self.f = f
        self.ring = f.ring
        self.n = f.ring.nvars - 1
        self._lock = threading.Lock()
        self._matrices: AugmentedSyzygyMatrix | None = None
        self._reduced: ReducednessCheck | None = None

    @property
    def jacobian(self) -> tuple[Polynomial, ...]:
        return self.f.gradient()

    @property
    def matrices(self) -> AugmentedSyzygyMatrix:
        with self._lock:
            if self._matrices is None:
                self._matrices = _build(self.f)
            return self._matrices

    @property
    def reducedness(self) -> ReducednessCheck:
        with self._lock:
            if self._reduced is None:
                self._reduced = _reducedness(self.f, self.n)
            return self._reduced

    def __repr__(self):
        return f"ProjectiveHypersurface({self.f}, n={self.n})"


def _as_hypersurface(f) -> ProjectiveHypersurface:
    return f if isinstance(f, ProjectiveHypersurface) else ProjectiveHypersurface(f)


def _build(f: Polynomial) -> AugmentedSyzygyMatrix:
    ring = f.ring
    grads = f.gradient()
    euler = Vector(ring, ring.gens)
    if euler.dot(grads) != f * f.degree:
        raise InconsistencyError("Euler identity failed; polynomial arithmetic is broken")
    base = first_syzygies(grads)
    if not base.verify():
        raise InconsistencyError("a syzygy column does not annihilate the Jacobian")
    return AugmentedSyzygyMatrix(base, (euler,), (1,))


def build_matrices(f) -> AugmentedSyzygyMatrix:
    """``M'_f`` and the Euler column (cached on a :class:`ProjectiveHypersurface`)."""
    return _as_hypersurface(f).matrices


def _point_coords(hyp: ProjectiveHypersurface, p) -> list:
    if not isinstance(p, Point):
        p = Point(tuple(p))
    if len(p) != hyp.ring.nvars:
        raise InvalidPointError(f"point {p} has {len(p)} coordinates, expected {hyp.ring.nvars}")
    field = hyp.ring.field
    try:
        coords = [field(c) for c in p.coords]
    except ZeroDivisionError as exc:
        raise InvalidPointError(str(exc)) from None
    if all(c == 0 for c in coords):
        raise InvalidPointError("zero representative of a projective point")
    return coords


def point_status(f, p) -> PointStatus:
    hyp = _as_hypersurface(f)
    coords = _point_coords(hyp, p)
    if hyp.f.evaluate(coords) != 0:
        return PointStatus.NOT_ON_D
    if all(h.evaluate(coords) == 0 for h in hyp.jacobian):
        return PointStatus.SINGULAR
    return PointStatus.SMOOTH


@dataclass(frozen=True)
class IsolatedRefinement:
    quasi_homogeneous: bool
    mu: int
    tau: int


@dataclass(frozen=True)
class LogRankOracle:
    """Ranks of logarithmic derivations at a point, read in an affine chart.

    ``rk_jprime`` should equal ``rk M'_f(p)`` and ``rk_j + 1`` should equal
    ``rk M_f(p)``.
    """

    rk_j: int
    rk_jprime: int
    chart: object = None
    agrees: bool | None = None


@dataclass(frozen=True)
class PointReport:
    """Classification of one point.

    ``seh`` is ``rk_Mprime == rk_M``. ``isolated`` carries ``mu``, ``tau`` and
    the quasi-homogeneity verdict when requested; ``oracles`` holds one
    :class:`LogRankOracle` per chart that was checked.
    """

    point: Point
    status: PointStatus
    rk_Mprime: int
    rk_M: int
    seh: bool
    isolated: IsolatedRefinement | None = None
    oracles: tuple = ()
    notes: tuple = ()

    @property
    def oracle(self) -> LogRankOracle | None:
        return self.oracles[0] if self.oracles else None

    @property
    def oracles_agree(self) -> bool | None:
        if not self.oracles:
            return None
        return all(o.agrees for o in self.oracles)

    def to_dict(self) -> dict:
        out = {
            "point": str(self.point),
            "status": self.status.value,
            "rk_Mprime": self.rk_Mprime,
            "rk_M": self.rk_M,
            "seh": self.seh,
            "isolated": None if self.isolated is None else asdict(self.isolated),
            "oracles": [
                {"chart": _chart_text(o.chart), "rk_j": o.rk_j, "rk_jprime": o.rk_jprime, "agrees": o.agrees}
                for o in self.oracles
            ],
            "notes": list(self.notes),
        }
        return out


def _chart_text(chart) -> str:
    if isinstance(chart, int):
        return f"x{chart}"
    return "linear:" + ",".join(str(c) for c in chart)


def classify(f, p, *, oracle_charts: int = 0) -> PointReport:
    """Rank criterion at ``p``: compare ``rk M'_f(p)`` with ``rk M_f(p)``.

    With ``oracle_charts > 0`` the affine log-rank oracle is run in that many
    charts and any disagreement raises :class:`InconsistencyError`.
    """
    hyp = _as_hypersurface(f)
    point = p if isinstance(p, Point) else Point(tuple(p))
    status = point_status(hyp, point)
    if status is PointStatus.NOT_ON_D:
        raise NotOnHypersurfaceError(f"{point} does not lie on V({hyp.f})")
    base, full = hyp.matrices.evaluate(point.coords)
    rk_mp, rk_m = base.rank(), full.rank()
    if not 0 <= rk_m - rk_mp <= 1:
        raise InconsistencyError(f"rank jump {rk_m - rk_mp} with one appended column")
    if status is PointStatus.SMOOTH and rk_mp != hyp.n:
        raise InconsistencyError(f"smooth point {point} has rk M'_f = {rk_mp}, expected {hyp.n}")
    oracles = ()
    if oracle_charts:
        oracles = tuple(_checked_oracle(hyp, point, chart, rk_mp, rk_m) for chart in _charts(hyp, point, oracle_charts))
    return PointReport(point, status, rk_mp, rk_m, rk_mp == rk_m, None, oracles)


def _charts(hyp, point, count):
    return candidate_charts(point, count, hyp.ring.field)


def _checked_oracle(hyp, point, chart, rk_mp, rk_m) -> LogRankOracle:
    o = affine_log_rank_oracle(hyp, point, chart)
    agrees = o.rk_jprime == rk_mp and o.rk_j + 1 == rk_m
    if not agrees:
        raise InconsistencyError(
            f"log-rank oracle in chart {_chart_text(chart)} gives (rk_j, rk_j')=({o.rk_j}, {o.rk_jprime}) "
            f"but (rk M_f, rk M'_f)=({rk_m}, {rk_mp}) at {point}"
        )
    return LogRankOracle(o.rk_j, o.rk_jprime, chart, True)


def classify_isolated(f, p, *, oracle_charts: int = 0) -> PointReport:
    """:func:`classify` plus ``mu``, ``tau`` and quasi-homogeneity at an isolated singular point.

    For a non-isolated singular point the refinement is refused and the
    base report is returned with a note.
    """
    hyp = _as_hypersurface(f)
    report = classify(hyp, p, oracle_charts=oracle_charts)
    if report.status is not PointStatus.SINGULAR:
        raise InvalidPointError(f"{report.point} is not a singular point")
    inv: LocalGermInvariants = invariants_at(hyp.f, report.point)
    if not inv.isolated:
        return replace(report, notes=report.notes + ("non-isolated singularity: refinement refused",))
    qh = report.rk_Mprime == 1
    if report.rk_M != 1:
        raise InconsistencyError(f"isolated singular point with rk M_f = {report.rk_M} (expected 1)")
    if qh != (inv.mu == inv.tau):
        raise InconsistencyError(
            f"rk M'_f = {report.rk_Mprime} but mu = {inv.mu}, tau = {inv.tau} at {report.point}"
        )
    return replace(report, isolated=IsolatedRefinement(qh, int(inv.mu), int(inv.tau)))


def affine_log_rank_oracle(f, p, chart: Chart | None = None) -> LogRankOracle:
    """Logarithmic ranks ``(rk_j, rk_j')`` of ``f`` at ``p`` in an affine chart.

    The chart equation ``g`` (with ``p`` at the origin) is formed and the
    syzygies ``(a_1, ..., a_n, b)`` of ``(g_y1, ..., g_yn, g)`` are computed;
    each is a derivation ``sum a_i d/dy_i`` sending ``g`` into ``(g)``.
    ``rk_j`` is the rank of the ``a``-rows at the origin and ``rk_j'`` the rank
    of the whole matrix there.
    """
    hyp = _as_hypersurface(f)
    point = p if isinstance(p, Point) else Point(tuple(p))
    coords = _point_coords(hyp, point)
    if hyp.f.evaluate(coords) != 0:
        raise NotOnHypersurfaceError(f"{point} does not lie on V({hyp.f})")
    cg = germ_in_chart(hyp.f, point, chart)
    g = cg.germ
    gens = g.gradient() + (g,)
    M = first_syzygies(gens)
    origin = (0,) * g.ring.nvars
    if M.ncols == 0:
        return LogRankOracle(0, 0, cg.chart)
    A = evaluate_matrix(M, origin)
    n = g.ring.nvars
    rk_jprime = A.rank()
    rk_j = ScalarMatrix(A.rows[:n], A.ncols, A.field).rank()
    return LogRankOracle(rk_j, rk_jprime, cg.chart)


def _reducedness(f: Polynomial, n: int) -> ReducednessCheck:
    gens = [f] + [h for h in f.gradient() if not h.is_zero]
    dim = leading_ideal_dimension(buchberger(gens))
    return ReducednessCheck(dim < n, dim)


def reducedness_warning(f) -> ReducednessCheck:
    """Warn when ``V(f, J_f)`` in the cone has dimension ``>= n`` (never blocks)."""
    return _as_hypersurface(f).reducedness
