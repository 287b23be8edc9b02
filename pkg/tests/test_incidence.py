import pytest

from corpus import all_cases
from syzrank import (
    NonIsolatedError,
    Point,
    PointStatus,
    Ring,
    Vector,
    discrepancy_sum,
    find_rational_singular_points,
    first_syzygies,
    global_seh_check,
    parse_polynomial,
    point_status,
    zf_ideal,
)
from syzrank.incidence import incidence_quadric
from syzrank.projective import build_matrices, classify
from syzrank.syzygy import SyzygyMatrix

PLANE = ("x", "y", "z")


def F(text, names=PLANE):
    return parse_polynomial(text, names)


class TestZf:
    def test_koszul_column(self):
        R = Ring(("x0", "x1"))
        x0, x1 = R.gens
        M = first_syzygies([x0, x1])
        ideal = zf_ideal(M)
        assert len(ideal.generators) == 1
        S = ideal.ring
        X0, X1, U0, U1 = S.gens
        g = ideal.generators[0]
        assert g in (X1 * U0 - X0 * U1, X0 * U1 - X1 * U0)
        assert S.names[2:] == ("u0", "u1")

    def test_zero_columns(self):
        R = Ring(("x", "y"))
        M = SyzygyMatrix(R, (R.one, R.one), ())
        assert zf_ideal(M).generators == ()

    def test_fresh_names_avoid_user_variables(self):
        f = parse_polynomial("u0^2*u1 - u1^3 + u2^3", ("u0", "u1", "u2"))
        ideal = zf_ideal(build_matrices(f).base)
        assert len(set(ideal.ring.names)) == 6

    def test_polar_map_substitution(self):
        for text in ("x^3 - y^2*z", "y^2*z - x^3 - x^2*z", "x^5 + y^5 + x^2*y^2*z", "x*y*z"):
            f = F(text)
            ideal = zf_ideal(build_matrices(f).base)
            assert all(g.is_zero for g in ideal.substitute_u(list(f.gradient())))

    def test_quadric(self):
        ideal = zf_ideal(build_matrices(F("x^3 - y^2*z")).base)
        q = incidence_quadric(ideal)
        assert q.degree == 2 and len(q) == 3


class TestGlobalCheck:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("x^3 - y^2*z", True),
            ("y^2*z - x^3 - x^2*z", True),
            ("x*y*z", True),
            ("x^2 + y^2 + z^2", True),
            ("x^4 + y^4 + z^4", True),
            ("x^5 + y^5 + x^2*y^2*z", False),
        ],
    )
    def test_examples(self, text, expected):
        assert global_seh_check(F(text)) is expected

    def test_conjunction_of_pointwise_verdicts(self):
        for text in ("x^3 - y^2*z", "y^2*z - x^3 - x^2*z", "x*y*z", "x^5 + y^5 + x^2*y^2*z", "x^4 + y^4 - z^4"):
            f = F(text)
            search = find_rational_singular_points(f)
            assert search.complete
            pointwise = all(classify(f, p).seh for p in search.points)
            assert global_seh_check(f) == pointwise, text


class TestDiscrepancy:
    def test_examples(self):
        assert discrepancy_sum(F("y^2*z - x^3 - x^2*z"), [Point((0, 0, 1))]) == 0
        assert discrepancy_sum(F("x^3 - y^2*z"), [Point((0, 0, 1))]) == 0
        t55 = F("x^5 + y^5 + x^2*y^2*z")
        assert discrepancy_sum(t55, list(find_rational_singular_points(t55).points)) == 1
        assert discrepancy_sum(F("x^2 + y^2 - z^2"), []) == 0

    def test_zero_iff_quasi_homogeneous(self):
        for name, f, p, _ in all_cases():
            if f.ring.nvars != 3 or point_status(f, p) is not PointStatus.SINGULAR:
                continue
            assert (discrepancy_sum(f, [p]) == 0) == classify(f, p).seh, name

    def test_non_isolated(self):
        with pytest.raises(NonIsolatedError):
            discrepancy_sum(F("x^2*y"), [Point((0, 1, 0))])

    def test_plane_curves_only(self):
        with pytest.raises(ValueError):
            discrepancy_sum(parse_polynomial("x^2 + y^2 - z^2", ("x", "y", "z", "w")), [])


def test_vector_dot():
    R = Ring(("x", "y"))
    x, y = R.gens
    assert Vector(R, [y, -x]).dot([x, y]).is_zero
