import random
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from corpus import all_cases
from strategies import homogeneous_polynomials, nonzero_rationals, points, polynomials, ring_of
from syzygy_helpers import random_combination_columns
from syzrank import GF, QQ, Ring, Vector, first_syzygies, parse_polynomial
from syzrank.syzygy import (
    ScalarMatrix,
    bounded_degree_syzygy_oracle,
    evaluate_matrix,
    rank,
    syzygy_oracle_with_default_cap,
)

R2 = Ring(("x", "y"))
x, y = R2.gens
R3 = Ring(("x", "y", "z"))
X, Y, Z = R3.gens
CUSP = parse_polynomial("x^3 - y^2*z", R3)


class TestFirstSyzygies:
    def test_koszul(self):
        M = first_syzygies([x, y])
        assert M.ncols == 1 and M.verify()
        col = M.columns[0]
        assert col in (Vector(R2, [y, -x]), Vector(R2, [-y, x]))

    def test_unit_ideal_has_no_syzygies(self):
        assert first_syzygies([R2.one]).ncols == 0

    def test_cusp_jacobian(self):
        M = first_syzygies(CUSP.gradient())
        g = CUSP.gradient()
        for col in M.columns:
            assert (3 * X**2 * col[0] - 2 * Y * Z * col[1] - Y**2 * col[2]).is_zero
        assert evaluate_matrix(M, (0, 0, 1)).rank() == 1
        assert M.verify() and M.generators == g

    def test_column_degrees_and_order(self):
        M = first_syzygies(parse_polynomial("x*y*z", R3).gradient())
        assert list(M.column_degrees) == sorted(M.column_degrees)
        assert all(d == 1 for d in M.column_degrees)

    def test_prime_field(self):
        Rp = Ring(("x", "y", "z"), GF(101))
        f = parse_polynomial("x^3 - y^2*z", Rp, Rp.field)
        M = first_syzygies(f.gradient())
        assert M.verify() and evaluate_matrix(M, (0, 0, 1)).rank() == 1


class TestEvaluate:
    def test_koszul_column(self):
        A = evaluate_matrix(first_syzygies([x, y]), (2, 3))
        col = [row[0] for row in A.rows]
        assert col in ([3, -2], [-3, 2])

    def test_scaling(self):
        M = first_syzygies(CUSP.gradient())
        p, lam = (1, 2, 3), Fraction(5, 2)
        A, B = evaluate_matrix(M, p), evaluate_matrix(M, [lam * c for c in p])
        for j, d in enumerate(M.column_degrees):
            for i in range(3):
                assert B[i, j] == lam**d * A[i, j]

    def test_zero_matrix(self):
        Z3 = Vector(R3, [R3.zero] * 3)
        A = evaluate_matrix([Z3, Z3], (1, 2, 3))
        assert A.rank() == 0


class TestRank:
    def test_examples(self):
        assert rank(ScalarMatrix(((0, 0), (0, 0)), 2, QQ)) == 0
        assert rank(ScalarMatrix(((1, 0, 0), (0, 1, 0), (0, 0, 1)), 3, QQ)) == 3
        assert rank(ScalarMatrix(((1, 2), (2, 4)), 2, QQ)) == 1


class TestOracle:
    def test_cusp(self):
        res = bounded_degree_syzygy_oracle(CUSP.gradient(), (0, 0, 1), 6)
        assert res.rank == 1 and res.stable

    def test_koszul(self):
        res = bounded_degree_syzygy_oracle([x, y], (1, 1), 3)
        assert res.rank == 1 and res.stable

    def test_unit_and_variable(self):
        R1 = Ring(("x",))
        res = bounded_degree_syzygy_oracle([R1.one, R1.var(0)], (5,), 2)
        assert res.rank == 1

    def test_default_cap(self):
        res = syzygy_oracle_with_default_cap(CUSP.gradient(), (0, 0, 1), 3)
        assert res.cap >= 6 and res.stable

    def test_agrees_with_first_syzygies_on_corpus(self):
        for name, f, p, (rk_mp, _) in all_cases():
            res = syzygy_oracle_with_default_cap(list(f.gradient()), p.coords, f.degree)
            assert res.stable, name
            assert res.rank == rk_mp == evaluate_matrix(first_syzygies(f.gradient()), p).rank(), (name, str(p))


# properties -------------------------------------------------------------------------------


@given(st.lists(polynomials(ring_of(2), max_degree=3, max_terms=3), min_size=1, max_size=3))
def test_exactness(gens):
    if all(g.is_zero for g in gens):
        return
    assert first_syzygies(gens).verify()


@given(
    st.integers(min_value=2, max_value=3).flatmap(
        lambda d: st.lists(homogeneous_polynomials(ring_of(3), d, max_terms=4), min_size=2, max_size=3)
    ),
    points(3),
    st.integers(min_value=0, max_value=2**32),
)
def test_appended_columns_do_not_change_rank(gens, p, seed):
    M = first_syzygies(gens)
    if M.ncols == 0:
        return
    bigger = M.with_columns(random_combination_columns(M, 3, random.Random(seed)))
    assert bigger.verify()
    assert evaluate_matrix(bigger, p).rank() == evaluate_matrix(M, p).rank()


@given(
    st.integers(min_value=2, max_value=3).flatmap(
        lambda d: st.lists(homogeneous_polynomials(ring_of(3), d, max_terms=4), min_size=2, max_size=3)
    ),
    points(3),
    nonzero_rationals,
)
def test_lambda_invariance(gens, p, lam):
    M = first_syzygies(gens)
    if M.ncols == 0:
        return
    assert evaluate_matrix(M, [lam * c for c in p]).rank() == evaluate_matrix(M, p).rank()
