import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from corpus import all_cases
from syzrank import (
    GF,
    NotOnHypersurfaceError,
    Point,
    PointStatus,
    Ring,
    Vector,
    affine_log_rank_oracle,
    buchberger,
    build_matrices,
    classify,
    classify_isolated,
    parse_polynomial,
    point_status,
    reducedness_warning,
)
from syzrank.charts import candidate_charts
from syzrank.errors import InvalidPointError
from syzrank.groebner import normal_form
from syzrank.projective import jacobian
from random_geometry import invertible_matrix, inverse_apply

PLANE = ("x", "y", "z")
R = Ring(PLANE)
x, y, z = R.gens


def F(text, names=PLANE):
    return parse_polynomial(text, names)


CUSP = F("x^3 - y^2*z")
NODE = F("y^2*z - x^3 - x^2*z")
T55 = F("x^5 + y^5 + x^2*y^2*z")
XYZ = F("x*y*z")
QUADRIC = F("x^2 + y^2 + z^2")


class TestJacobian:
    def test_examples(self):
        assert jacobian(CUSP) == (3 * x**2, -2 * y * z, -(y**2))
        assert jacobian(QUADRIC) == (2 * x, 2 * y, 2 * z)
        assert jacobian(XYZ) == (y * z, x * z, x * y)


class TestBuildMatrices:
    def test_binary_quadric(self):
        f = F("x^2 + y^2", ("x", "y"))
        A = build_matrices(f)
        a, b = f.ring.gens
        assert A.base.ncols == 1 and A.base.verify()
        col = list(A.base.columns[0])
        c = col[0].coefficient((0, 1))
        assert c != 0 and col == [b * c, -a * c]  # the Koszul column up to a scalar
        assert list(A.euler_columns[0]) == [a, b]

    def test_euler_identity_cusp(self):
        A = build_matrices(CUSP)
        e = A.euler_columns[0]
        assert e.dot(CUSP.gradient()) == 3 * CUSP

    def test_xyz_contains_expected_columns(self):
        A = build_matrices(XYZ)
        assert A.base.verify()
        # each expected column lies in the module spanned by the computed ones
        basis = buchberger(list(A.base.columns))
        for expected in ([x, -y, R.zero], [x, R.zero, -z]):
            assert normal_form(Vector(R, expected), basis).is_zero


class TestPointStatus:
    def test_examples(self):
        assert point_status(CUSP, Point((0, 0, 1))) is PointStatus.SINGULAR
        assert point_status(NODE, Point((0, 1, 0))) is PointStatus.SMOOTH
        assert point_status(QUADRIC, Point((1, 0, 0))) is PointStatus.NOT_ON_D

    def test_wrong_arity(self):
        with pytest.raises(InvalidPointError):
            point_status(CUSP, Point((0, 1)))


class TestClassify:
    def test_node(self):
        r = classify(NODE, Point((0, 0, 1)))
        assert (r.rk_Mprime, r.rk_M, r.seh) == (1, 1, True)

    def test_t55(self):
        r = classify(T55, Point((0, 0, 1)))
        assert (r.rk_Mprime, r.rk_M, r.seh) == (0, 1, False)

    def test_smooth_point(self):
        r = classify(NODE, Point((0, 1, 0)))
        assert r.status is PointStatus.SMOOTH and r.rk_Mprime == 2 == r.rk_M and r.seh

    def test_not_on_d(self):
        with pytest.raises(NotOnHypersurfaceError):
            classify(QUADRIC, Point((1, 0, 0)))

    def test_report_dict(self):
        d = classify(CUSP, Point((0, 0, 1)), oracle_charts=2).to_dict()
        assert d["point"] == "[0:0:1]" and d["seh"] is True and len(d["oracles"]) >= 2


class TestClassifyIsolated:
    def test_cusp(self):
        r = classify_isolated(CUSP, Point((0, 0, 1)))
        assert r.isolated.quasi_homogeneous and (r.isolated.mu, r.isolated.tau) == (2, 2) and r.rk_Mprime == 1

    def test_t55(self):
        r = classify_isolated(T55, Point((0, 0, 1)))
        assert not r.isolated.quasi_homogeneous and (r.isolated.mu, r.isolated.tau) == (11, 10)
        assert r.rk_Mprime == 0

    def test_isolated_rank_one(self):
        for name, f, p, _ in all_cases():
            if point_status(f, p) is PointStatus.SINGULAR:
                r = classify_isolated(f, p)
                assert r.rk_M == 1, name

    def test_non_isolated_refused(self):
        f = F("x^2*y")
        r = classify_isolated(f, Point((0, 1, 0)))
        assert r.isolated is None and any("non-isolated" in note for note in r.notes)

    def test_smooth_point_rejected(self):
        with pytest.raises(InvalidPointError):
            classify_isolated(CUSP, Point((1, 1, 1)))


class TestOracle:
    def test_smooth_point(self):
        o = affine_log_rank_oracle(NODE, Point((0, 1, 0)))
        assert (o.rk_j, o.rk_jprime) == (1, 2)

    def test_node_and_t55(self):
        o = affine_log_rank_oracle(NODE, Point((0, 0, 1)))
        assert (o.rk_j, o.rk_jprime) == (0, 1)
        o = affine_log_rank_oracle(T55, Point((0, 0, 1)))
        assert (o.rk_j, o.rk_jprime) == (0, 0)

    def test_chart_independence(self):
        for name, f, p, _ in all_cases():
            results = {
                (o.rk_j, o.rk_jprime)
                for o in (affine_log_rank_oracle(f, p, c) for c in candidate_charts(p, 3))
            }
            assert len(results) == 1, name


class TestReducedness:
    def test_examples(self):
        w = reducedness_warning(F("x^2*y"))
        assert not w.ok and w.dimension == 2
        assert reducedness_warning(CUSP).ok
        assert reducedness_warning(QUADRIC).ok


def test_corpus_ranks_and_invariants():
    for name, f, p, (rk_mp, rk_m) in all_cases():
        r = classify(f, p, oracle_charts=2)
        assert (r.rk_Mprime, r.rk_M) == (rk_mp, rk_m), (name, str(p))
        assert 0 <= r.rk_M - r.rk_Mprime <= 1
        if r.status is PointStatus.SMOOTH:
            assert r.rk_Mprime == f.ring.nvars - 1 and r.seh


def test_prime_field_reproduces_corpus():
    Fp = GF(1000003)
    for name, f, p, ranks in all_cases(Fp):
        r = classify(f, p)
        assert (r.rk_Mprime, r.rk_M) == ranks, name


# properties -------------------------------------------------------------------------------

CASES = list(all_cases())
case_index = st.integers(min_value=0, max_value=len(CASES) - 1)
lambdas = st.fractions(min_value=-20, max_value=20, max_denominator=9).filter(lambda q: q != 0)


@given(case_index, lambdas)
def test_representative_independence(i, lam):
    _, f, p, _ = CASES[i]
    a, b = classify(f, p), classify(f, p.scaled(lam))
    assert (a.rk_Mprime, a.rk_M, a.seh) == (b.rk_Mprime, b.rk_M, b.seh)


@given(case_index, st.integers(min_value=0, max_value=2**32))
def test_coordinate_change_covariance(i, seed):
    _, f, p, _ = CASES[i]
    A = invertible_matrix(f.ring.nvars, random.Random(seed))
    g = f.linear_change(A)
    q = Point(tuple(inverse_apply(A, p.coords)))
    a, b = classify(f, p), classify(g, q)
    assert (a.rk_Mprime, a.rk_M, a.seh) == (b.rk_Mprime, b.rk_M, b.seh)


@given(case_index)
def test_isolated_consistency(i):
    _, f, p, _ = CASES[i]
    if point_status(f, p) is not PointStatus.SINGULAR:
        return
    r = classify_isolated(f, p)
    if r.isolated is not None:
        assert (r.isolated.mu == r.isolated.tau) == (r.rk_Mprime == 1) == r.seh
