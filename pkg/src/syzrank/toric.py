"""Hypersurfaces in smooth projective toric varieties.

A toric variety is given by a fan: primitive rays ``v_rho`` in ``Z^n`` and
maximal cones. Its Cox ring has one variable per ray, graded by the Picard
group ``Z^r`` (``r = s - n`` for ``s`` rays). A hypersurface is cut out by a
Pic-homogeneous ``f`` of degree ``alpha != 0``.

At a Cox point ``P`` the rank criterion becomes
``rk M'_f(P) + Def(P) = rk M_f(P)``, where ``M_f`` appends ``r`` generalized
Euler columns and ``Def`` is the logarithmic defect: the dimension of the
image of the left kernel of ``M'_f(P)`` under
``v -> (sum_rho deg_k(x_rho) P_rho v_rho)_k`` in ``k^r / span(alpha)``.
"""

from __future__ import annotations

import functools
import math
import re
import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Sequence

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from .errors import InconsistencyError, InvalidPointError, NotOnHypersurfaceError
from .fields import QQ
from .linalg import RowEchelon, integer_inverse, left_kernel
from .local import LocalGermInvariants, germ_invariants
from .polynomial import Point, Polynomial, Ring, Vector
from .projective import PointStatus
from .syzygy import ScalarMatrix, SyzygyMatrix, evaluate_matrix, first_syzygies

__all__ = [
    "toric_point_status",
    "FanError",
    "Fan",
    "PicData",
    "ToricHypersurface",
    "ToricAugmentedMatrix",
    "ToricPointReport",
    "ChartOracle",
    "validate_fan",
    "irrelevant_check",
    "euler_columns",
    "toric_matrices",
    "logarithmic_defect",
    "classify_toric",
    "toric_chart_oracle",
    "toric_chart_germ",
    "rescale_cox_point",
    "projective_space",
    "product_of_projective_spaces",
    "hirzebruch",
    "builtin_fan",
]


class FanError(ValueError):
    """The fan does not describe a smooth projective toric variety."""


@dataclass(frozen=True)
class Fan:
    """Rays (primitive integer vectors) and maximal cones (0-based index tuples)."""

    rays: tuple
    cones: tuple
    complete: bool = False
    names: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "rays", tuple(tuple(int(x) for x in r) for r in self.rays))
        object.__setattr__(self, "cones", tuple(tuple(sorted(int(i) for i in c)) for c in self.cones))
        if self.names is not None:
            object.__setattr__(self, "names", tuple(self.names))

    @property
    def dim(self) -> int:
        return len(self.rays[0]) if self.rays else 0

    @property
    def nrays(self) -> int:
        return len(self.rays)

    @classmethod
    def from_dict(cls, data: dict) -> "Fan":
        return cls(data["rays"], data["cones"], bool(data.get("complete", False)), data.get("names"))

    def to_dict(self) -> dict:
        out = {"rays": [list(r) for r in self.rays], "cones": [list(c) for c in self.cones], "complete": self.complete}
        if self.names is not None:
            out["names"] = list(self.names)
        return out


@dataclass(frozen=True)
class PicData:
    """Picard data of a validated fan.

    ``degrees[rho]`` is ``deg(x_rho)`` in ``Z^r``; the rays listed in
    ``basis_rays`` have the standard basis vectors as degrees.
    """

    fan: Fan
    r: int
    degrees: tuple
    basis_rays: tuple
    warnings: tuple = ()

    @property
    def s(self) -> int:
        return self.fan.nrays

    @property
    def n(self) -> int:
        return self.fan.dim

    def degree_of(self, exponents: Sequence[int]) -> tuple:
        out = [0] * self.r
        for rho, e in enumerate(exponents):
            if e:
                for k in range(self.r):
                    out[k] += e * self.degrees[rho][k]
        return tuple(out)

    def default_names(self) -> tuple:
        if self.fan.names is not None:
            return self.fan.names
        return tuple(f"x{i}" for i in range(self.s))

    def cox_ring(self, names: Sequence[str] | None = None, field=None) -> Ring:
        names = tuple(names) if names is not None else self.default_names()
        if len(names) != self.s:
            raise ValueError(f"the Cox ring needs {self.s} variable names, got {len(names)}")
        return Ring(names, field or QQ, self.degrees)


def _det(rows: Sequence[Sequence[int]]) -> int:
    return int(Matrix(rows).det())


def _check_complete_surface(fan: Fan) -> None:
    rays = fan.rays
    s = len(rays)
    cones = set(fan.cones)
    count = [0] * s
    for c in fan.cones:
        for i in c:
            count[i] += 1
    if any(k != 2 for k in count):
        raise FanError("incomplete fan: every ray of a complete surface fan lies in exactly two cones")

    def half(v):
        x, y = v
        return 0 if (y > 0 or (y == 0 and x > 0)) else 1

    def cmp(i, j):
        a, b = rays[i], rays[j]
        ha, hb = half(a), half(b)
        if ha != hb:
            return ha - hb
        cross = a[0] * b[1] - a[1] * b[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    order = sorted(range(s), key=functools.cmp_to_key(cmp))
    consecutive = set()
    for k in range(s):
        i, j = order[k], order[(k + 1) % s]
        a, b = rays[i], rays[j]
        if a[0] * b[1] - a[1] * b[0] <= 0:
            raise FanError("incomplete fan: consecutive rays span an angle of at least 180 degrees")
        consecutive.add(tuple(sorted((i, j))))
    if consecutive != cones:
        raise FanError("incomplete fan: the maximal cones do not tile the plane cyclically")


def validate_fan(fan: Fan | dict) -> PicData:
    """Check smoothness and completeness and compute the Picard data.

    Raises :class:`FanError` for non-primitive rays, non-unimodular cones,
    rays that do not span, torsion in the Picard group, or (for ``n <= 2``)
    an incomplete fan. For ``n >= 3`` completeness is taken from
    ``fan.complete`` and a warning is recorded.
    """
    if isinstance(fan, dict):
        fan = Fan.from_dict(fan)
    rays = fan.rays
    if not rays:
        raise FanError("the fan has no rays")
    n = len(rays[0])
    if n < 1 or any(len(r) != n for r in rays):
        raise FanError("rays must be nonzero-length vectors of equal length")
    s = len(rays)
    for i, r in enumerate(rays):
        if math.gcd(*r) != 1:
            raise FanError(f"ray {i} = {list(r)} is not primitive")
    if len(set(rays)) != s:
        raise FanError("rays must be distinct")
    if fan.names is not None and len(fan.names) != s:
        raise FanError("one name per ray is required")
    if not fan.cones:
        raise FanError("the fan has no maximal cones")
    seen = set()
    for c in fan.cones:
        if len(c) != n or len(set(c)) != n:
            raise FanError(f"maximal cone {list(c)} must list {n} distinct rays")
        if any(not 0 <= i < s for i in c):
            raise FanError(f"maximal cone {list(c)} refers to a missing ray")
        if c in seen:
            raise FanError(f"maximal cone {list(c)} is repeated")
        seen.add(c)
        if abs(_det([rays[i] for i in c])) != 1:
            raise FanError(f"maximal cone {list(c)} is not smooth (determinant is not +-1)")
    if Matrix(rays).rank() != n:
        raise FanError("the rays do not span the lattice")
    r = s - n
    if r < 1:
        raise FanError("a complete fan needs more rays than its dimension")
    warnings = []
    if n == 1:
        if sorted(rays) != [(-1,), (1,)]:
            raise FanError("incomplete fan: a complete one-dimensional fan has rays 1 and -1")
    elif n == 2:
        _check_complete_surface(fan)
    else:
        if not fan.complete:
            raise FanError("completeness of fans with n >= 3 must be asserted ('complete': true)")
        warnings.append(f"completeness of this {n}-dimensional fan is asserted, not verified")
    # Pic = coker(Z^n -> Z^s, m -> (<m, v_rho>)_rho) must be free of rank r
    snf = smith_normal_form(Matrix(rays), domain=ZZ)
    invariants = [abs(int(snf[i, i])) for i in range(min(snf.shape))]
    if any(d != 1 for d in invariants):
        raise FanError(f"the Picard group has torsion (invariant factors {invariants})")
    sigma = fan.cones[0]
    basis = tuple(i for i in range(s) if i not in sigma)
    inv = integer_inverse([rays[i] for i in sigma])
    degrees: list = [None] * s
    for k, rho in enumerate(basis):
        degrees[rho] = tuple(int(k == j) for j in range(r))
    for j, rho_j in enumerate(sigma):
        m_j = [inv[t][j] for t in range(n)]
        deg = []
        for rho in basis:
            pairing = sum(m_j[t] * rays[rho][t] for t in range(n))
            if pairing.denominator != 1:
                raise InconsistencyError("non-integral dual basis for a unimodular cone")
            deg.append(-int(pairing))
        degrees[rho_j] = tuple(deg)
    # kernel check: sum_rho <m, v_rho> deg(rho) = 0 for every m
    for t in range(n):
        for k in range(r):
            if sum(rays[rho][t] * degrees[rho][k] for rho in range(s)) != 0:
                raise InconsistencyError("degree map does not kill principal divisors")
    return PicData(fan, r, tuple(degrees), basis, tuple(warnings))


def _pic(x) -> PicData:
    if isinstance(x, PicData):
        return x
    return validate_fan(x)


def irrelevant_check(P, fan) -> bool:
    """``True`` iff ``P`` lies outside the irrelevant locus ``V(B)``."""
    pic_fan = fan.fan if isinstance(fan, PicData) else (fan if isinstance(fan, Fan) else Fan.from_dict(fan))
    coords = P.coords if isinstance(P, Point) else tuple(P)
    if len(coords) != pic_fan.nrays:
        raise InvalidPointError(f"Cox point has {len(coords)} coordinates, the fan has {pic_fan.nrays} rays")
    return _good_cone(pic_fan, coords) is not None


def _good_cone(fan: Fan, coords) -> tuple | None:
    for sigma in fan.cones:
        if all(coords[rho] != 0 for rho in range(fan.nrays) if rho not in sigma):
            return sigma
    return None


@dataclass(frozen=True)
class ToricAugmentedMatrix:
    """``M'_f`` in the Cox ring plus the ``r`` generalized Euler columns."""

    base: SyzygyMatrix
    euler_columns: tuple

    @property
    def columns(self) -> tuple:
        return tuple(self.base.columns) + tuple(self.euler_columns)

    def evaluate(self, point) -> tuple[ScalarMatrix, ScalarMatrix]:
        full = evaluate_matrix(self.columns, point)
        m = self.base.ncols
        base = ScalarMatrix(tuple(r[:m] for r in full.rows), m, full.field)
        return base, full


class ToricHypersurface:
    """``V(f)`` in the toric variety of ``fan`` for a Pic-homogeneous ``f``.

    The ring of ``f`` must have one variable per ray; it is re-graded with
    the Picard degrees. ``alpha`` is the Pic degree of ``f`` and must be nonzero.
    """

    def __init__(self, fan, f: Polynomial):
        self.pic = _pic(fan)
        pic = self.pic
        if f.ring.nvars != pic.s:
            raise ValueError(f"f has {f.ring.nvars} variables, the fan has {pic.s} rays")
        ring = f.ring if f.ring.grading == pic.degrees else f.ring.with_grading(pic.degrees)
        f = f.change_ring(ring) if f.ring != ring else f
        data = f.degree_data()
        if f.is_zero or not data.homogeneous:
            raise ValueError("f must be a nonzero Pic-homogeneous polynomial")
        if not any(data.degree):
            raise ValueError("the class of the hypersurface must be nonzero in Pic")
        self.f = f
        self.ring = ring
        self.alpha = data.degree
        self._lock = threading.Lock()
        self._matrices: ToricAugmentedMatrix | None = None

    @property
    def r(self) -> int:
        return self.pic.r

    @property
    def n(self) -> int:
        return self.pic.n

    @property
    def matrices(self) -> ToricAugmentedMatrix:
        with self._lock:
            if self._matrices is None:
                self._matrices = _build_toric(self)
            return self._matrices

    def __repr__(self):
        return f"ToricHypersurface({self.f}, alpha={self.alpha})"


def euler_columns(hyp: ToricHypersurface) -> tuple:
    """The ``r`` generalized Euler columns ``(deg_k(x_rho) x_rho)_rho``.

    Each is checked symbolically: ``sum_rho deg_k(x_rho) x_rho f_rho = alpha_k f``.
    """
    ring = hyp.ring
    grads = hyp.f.gradient()
    cols = []
    for k in range(hyp.r):
        col = Vector(ring, [ring.var(rho) * hyp.pic.degrees[rho][k] for rho in range(hyp.pic.s)])
        if col.dot(grads) != hyp.f * hyp.alpha[k]:
            raise InconsistencyError(f"generalized Euler relation {k} failed")
        cols.append(col)
    return tuple(cols)


def _build_toric(hyp: ToricHypersurface) -> ToricAugmentedMatrix:
    base = first_syzygies(hyp.f.gradient())
    if not base.verify():
        raise InconsistencyError("a syzygy column does not annihilate the Jacobian")
    return ToricAugmentedMatrix(base, euler_columns(hyp))


def toric_matrices(hyp: ToricHypersurface) -> ToricAugmentedMatrix:
    return hyp.matrices


def _cox_coords(hyp: ToricHypersurface, P) -> list:
    point = P if isinstance(P, Point) else Point(tuple(P), "cox")
    if len(point) != hyp.pic.s:
        raise InvalidPointError(f"Cox point has {len(point)} coordinates, expected {hyp.pic.s}")
    field = hyp.ring.field
    try:
        coords = [field(c) for c in point.coords]
    except ZeroDivisionError as exc:
        raise InvalidPointError(str(exc)) from None
    if _good_cone(hyp.pic.fan, coords) is None:
        raise InvalidPointError(f"{point} lies in the irrelevant locus")
    return coords


def _status(hyp: ToricHypersurface, coords) -> PointStatus:
    if hyp.f.evaluate(coords) != 0:
        return PointStatus.NOT_ON_D
    if all(h.evaluate(coords) == 0 for h in hyp.f.gradient()):
        return PointStatus.SINGULAR
    return PointStatus.SMOOTH


def toric_point_status(hyp: ToricHypersurface, P) -> PointStatus:
    """Whether the Cox point ``P`` is off ``D``, smooth on ``D`` or singular on ``D``.

    Raises :class:`InvalidPointError` for a point in the irrelevant locus.
    """
    return _status(hyp, _cox_coords(hyp, P))


def _defect(base: ScalarMatrix, coords, hyp: ToricHypersurface) -> int:
    field = hyp.ring.field
    s, r = hyp.pic.s, hyp.r
    K = left_kernel([list(row) for row in base.rows], s, field)
    ech = RowEchelon(field)
    alpha = [field(a) for a in hyp.alpha]
    alpha_nonzero = ech.add(alpha)
    for v in K:
        image = []
        for k in range(r):
            total = field.zero
            for rho in range(s):
                d = hyp.pic.degrees[rho][k]
                if d and v[rho] and coords[rho]:
                    total = total + d * coords[rho] * v[rho]
            image.append(field.norm(total))
        ech.add(image)
    return ech.rank - (1 if alpha_nonzero else 0)


def logarithmic_defect(hyp: ToricHypersurface, P, base: SyzygyMatrix | None = None) -> int:
    """``Def(P)``; ``base`` may supply another generating set of the syzygies."""
    coords = _cox_coords(hyp, P)
    if hyp.f.evaluate(coords) != 0:
        raise NotOnHypersurfaceError(f"{P} does not lie on the hypersurface")
    if base is None:
        A, _ = hyp.matrices.evaluate(coords)
    else:
        A = evaluate_matrix(base, coords) if base.ncols else ScalarMatrix(
            tuple(() for _ in range(hyp.pic.s)), 0, hyp.ring.field
        )
    return _defect(A, coords, hyp)


def rescale_cox_point(pic: PicData, P, t: Sequence) -> Point:
    """Act by ``t`` in ``(k*)^r``: ``P_rho -> P_rho * prod_k t_k^deg_k(rho)``."""
    coords = P.coords if isinstance(P, Point) else tuple(P)
    out = []
    for rho, c in enumerate(coords):
        v = c
        for k, tk in enumerate(t):
            e = pic.degrees[rho][k]
            if e:
                v = v * Fraction(tk) ** e
        out.append(v)
    return Point(tuple(out), "cox")


@dataclass(frozen=True)
class ChartGermToric:
    germ: Polynomial
    cone: tuple
    normalized_point: tuple


def toric_chart_germ(hyp: ToricHypersurface, P, cone: Sequence[int] | None = None) -> ChartGermToric:
    """Local equation at ``P`` in the affine chart of a maximal cone.

    ``P`` is moved by the torus action so that the coordinates outside the
    cone become 1; those variables are then set to 1 and the point is
    translated to the origin of the remaining ``n`` coordinates.
    """
    coords = _cox_coords(hyp, P)
    field = hyp.ring.field
    pic = hyp.pic
    s, r = pic.s, pic.r
    if cone is None:
        sigma = _good_cone(pic.fan, coords)
    else:
        sigma = tuple(sorted(cone))
        if sigma not in pic.fan.cones:
            raise InvalidPointError(f"{list(sigma)} is not a maximal cone")
        if any(coords[rho] == 0 for rho in range(s) if rho not in sigma):
            raise InvalidPointError(f"{P} lies outside the chart of cone {list(sigma)}")
    outside = [rho for rho in range(s) if rho not in sigma]
    B = [list(pic.degrees[rho]) for rho in outside]  # r x r, unimodular
    Binv = integer_inverse(B)
    # t_k = prod_{rho' outside} P_rho'^(-Binv[k][j])
    t = []
    for k in range(r):
        v = field.one
        for j, rho in enumerate(outside):
            e = -Binv[k][j]
            if e.denominator != 1:
                raise InconsistencyError("complement degrees are not unimodular")
            v = field.norm(v * field.pow(coords[rho], int(e)))
        t.append(v)
    scaled = []
    for rho in range(s):
        v = coords[rho]
        for k in range(r):
            e = pic.degrees[rho][k]
            if e:
                v = field.norm(v * field.pow(t[k], e))
        scaled.append(v)
    if any(scaled[rho] != 1 for rho in outside):
        raise InconsistencyError("torus rescaling failed to normalize the chart coordinates")
    g = hyp.f.set_variables({rho: 1 for rho in outside})
    g = g.change_ring(Ring(g.ring.names, field))
    local_point = tuple(scaled[rho] for rho in sigma)
    return ChartGermToric(g.translate(local_point), sigma, tuple(scaled))


@dataclass(frozen=True)
class ChartOracle:
    """Logarithmic ranks in a toric chart and the SEH verdict they imply."""

    cone: tuple
    rk_j: int
    rk_jprime: int

    @property
    def seh(self) -> bool:
        return self.rk_jprime == self.rk_j + 1


def toric_chart_oracle(hyp: ToricHypersurface, P, cone: Sequence[int] | None = None) -> ChartOracle:
    cg = toric_chart_germ(hyp, P, cone)
    g = cg.germ
    if g.ring.nvars == 0:
        raise InvalidPointError("zero-dimensional chart")
    gens = g.gradient() + (g,)
    M = first_syzygies(gens)
    if M.ncols == 0:
        return ChartOracle(cg.cone, 0, 0)
    A = evaluate_matrix(M, (0,) * g.ring.nvars)
    n = g.ring.nvars
    rk_jprime = A.rank()
    rk_j = ScalarMatrix(A.rows[:n], A.ncols, A.field).rank()
    return ChartOracle(cg.cone, rk_j, rk_jprime)


@dataclass(frozen=True)
class ToricPointReport:
    """Classification of a Cox point: ``seh`` iff ``rk_Mprime + defect == rk_M``."""

    point: Point
    status: PointStatus
    rk_Mprime: int
    rk_M: int
    defect: int
    seh: bool
    picard_rank: int
    isolated: LocalGermInvariants | None = None
    oracles: tuple = ()
    notes: tuple = ()

    def to_dict(self) -> dict:
        iso = None
        if self.isolated is not None:
            iso = {
                "quasi_homogeneous": self.isolated.quasi_homogeneous,
                "mu": self.isolated.mu if self.isolated.isolated else None,
                "tau": self.isolated.tau if self.isolated.isolated else None,
            }
        return {
            "point": str(self.point),
            "status": self.status.value,
            "rk_Mprime": self.rk_Mprime,
            "rk_M": self.rk_M,
            "defect": self.defect,
            "seh": self.seh,
            "picard_rank": self.picard_rank,
            "isolated": iso,
            "oracles": [
                {"cone": list(o.cone), "rk_j": o.rk_j, "rk_jprime": o.rk_jprime, "seh": o.seh} for o in self.oracles
            ],
            "notes": list(self.notes),
        }


def classify_toric(hyp: ToricHypersurface, P, *, oracle_charts: int = 0, refine_isolated: bool = False) -> ToricPointReport:
    """Toric rank criterion at the Cox point ``P``.

    With ``oracle_charts > 0`` the chart oracle runs in up to that many
    maximal-cone charts containing ``P`` and must satisfy
    ``rk_M = rk_j + r`` and ``rk_M' + Def = rk_j' + r - 1``.
    With ``refine_isolated`` at a singular point the local invariants are
    computed and, for an isolated singularity, ``rk_M = r`` is asserted.
    """
    point = P if isinstance(P, Point) else Point(tuple(P), "cox")
    coords = _cox_coords(hyp, point)
    status = _status(hyp, coords)
    if status is PointStatus.NOT_ON_D:
        raise NotOnHypersurfaceError(f"{point} does not lie on V({hyp.f})")
    base, full = hyp.matrices.evaluate(coords)
    rk_mp, rk_m = base.rank(), full.rank()
    defect = _defect(base, coords, hyp)
    if rk_mp + defect > rk_m:
        raise InconsistencyError(f"rk M'_f + Def = {rk_mp + defect} exceeds rk M_f = {rk_m} at {point}")
    r = hyp.r
    seh = rk_mp + defect == rk_m
    if status is PointStatus.SMOOTH and not seh:
        raise InconsistencyError(f"smooth point {point} classified as not strongly Euler homogeneous")
    oracles = []
    if oracle_charts:
        cones = [c for c in hyp.pic.fan.cones if all(coords[rho] != 0 for rho in range(hyp.pic.s) if rho not in c)]
        for cone in cones[:oracle_charts]:
            o = toric_chart_oracle(hyp, point, cone)
            if o.rk_j + r != rk_m or o.rk_jprime + r - 1 != rk_mp + defect or o.seh != seh:
                raise InconsistencyError(
                    f"chart {list(cone)}: (rk_j, rk_j') = ({o.rk_j}, {o.rk_jprime}) but "
                    f"(rk M', Def, rk M) = ({rk_mp}, {defect}, {rk_m}) with r = {r}"
                )
            oracles.append(o)
    isolated = None
    notes = list(hyp.pic.warnings)
    if refine_isolated and status is PointStatus.SINGULAR:
        isolated = germ_invariants(toric_chart_germ(hyp, point).germ)
        if isolated.isolated:
            if rk_m != r:
                raise InconsistencyError(f"isolated singular point with rk M_f = {rk_m}, Picard rank {r}")
            if isolated.quasi_homogeneous != seh:
                raise InconsistencyError(
                    f"mu = {isolated.mu}, tau = {isolated.tau} but seh = {seh} at {point}"
                )
        else:
            notes.append("non-isolated singularity")
    return ToricPointReport(point, status, rk_mp, rk_m, defect, seh, r, isolated, tuple(oracles), tuple(notes))


# built-in fans ------------------------------------------------------------------------


def projective_space(n: int) -> Fan:
    """``P^n``: rays ``e_1, ..., e_n, -(e_1 + ... + e_n)``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    rays.append(tuple(-1 for _ in range(n)))
    cones = [c for c in combinations(range(n + 1), n)]
    return Fan(rays, cones, True, tuple(f"x{i}" for i in range(n + 1)))


def product_of_projective_spaces(a: int, b: int) -> Fan:
    """``P^a x P^b`` with variables ``x0..xa`` then ``y0..yb``."""
    A, B = projective_space(a), projective_space(b)
    rays = [r + (0,) * b for r in A.rays] + [(0,) * a + r for r in B.rays]
    cones = [ca + tuple(a + 1 + j for j in cb) for ca, cb in product(A.cones, B.cones)]
    names = tuple(f"x{i}" for i in range(a + 1)) + tuple(f"y{j}" for j in range(b + 1))
    return Fan(rays, cones, True, names)


def hirzebruch(a: int) -> Fan:
    """Hirzebruch surface ``F_a``: rays ``e1, e2, -e1, a*e1 - e2``."""
    if a < 0:
        raise ValueError("a must be non-negative")
    rays = [(1, 0), (0, 1), (-1, 0), (a, -1)]
    cones = [(0, 1), (1, 2), (2, 3), (0, 3)]
    return Fan(rays, cones, True, ("x0", "x1", "x2", "x3"))


def builtin_fan(name: str) -> Fan:
    """Parse ``P<n>``, ``P<a>xP<b>`` or ``F<a>``."""
    m = re.fullmatch(r"P(\d+)", name)
    if m:
        return projective_space(int(m.group(1)))
    m = re.fullmatch(r"P(\d+)xP(\d+)", name)
    if m:
        return product_of_projective_spaces(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"F(\d+)", name)
    if m:
        return hirzebruch(int(m.group(1)))
    raise KeyError(f"unknown built-in fan {name!r}")
