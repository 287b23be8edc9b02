from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import homogeneous_polynomials, nonzero_rationals, plane_forms, points, polynomials, ring_of
from syzrank import GF, GREVLEX, LEX, NEG_GREVLEX, QQ, Point, Polynomial, Ring, parse_polynomial, serialize_polynomial
from syzrank.fields import DEFAULT_PRIME
from syzrank.orders import Cmp, compare, module_pot
from syzrank.polynomial import ExponentOverflowError, RingMismatchError

R = Ring(("x", "y", "z"))
x, y, z = R.gens
CUSP = x**3 - y**2 * z


def P(text, ring=R):
    return parse_polynomial(text, ring)


class TestFields:
    def test_default_prime_is_large(self):
        assert DEFAULT_PRIME > 2**20
        assert GF().characteristic == DEFAULT_PRIME

    def test_prime_field_arithmetic(self):
        F = GF(13)
        assert F(-1) == 12
        assert F(Fraction(1, 2)) == 7
        assert F.inv(5) * 5 % 13 == 1
        assert F.pow(2, -1) == 7

    def test_denominator_divisible_by_p(self):
        with pytest.raises(ZeroDivisionError):
            GF(5)(Fraction(1, 5))

    def test_rejects_composite(self):
        with pytest.raises(ValueError):
            GF(15)

    def test_rationals(self):
        assert QQ(Fraction(2, 4)) == Fraction(1, 2)
        assert QQ.inv(Fraction(2, 3)) == Fraction(3, 2)


class TestCompare:
    def test_grevlex_degree_tie(self):
        assert compare((2, 1), (1, 2), GREVLEX) is Cmp.GT

    def test_reflexive(self):
        assert compare((1, 2, 3), (1, 2, 3), GREVLEX) is Cmp.EQ
        assert compare((1, 2, 3), (1, 2, 3), LEX) is Cmp.EQ

    def test_local_order_one_is_largest(self):
        assert compare((0, 0), (1, 0), NEG_GREVLEX) is Cmp.GT

    def test_grevlex_vs_lex(self):
        # x*z^2 vs y^3: lex prefers x, grevlex prefers the smaller last exponent
        assert compare((1, 0, 2), (0, 3, 0), LEX) is Cmp.GT
        assert compare((1, 0, 2), (0, 3, 0), GREVLEX) is Cmp.LT

    def test_module_position_over_term(self):
        order = module_pot(GREVLEX)
        assert compare((0, (0, 0)), (1, (5, 5)), order) is Cmp.GT  # component 0 strongest
        assert compare((1, (1, 0)), (1, (0, 1)), order) is Cmp.GT


class TestArithmetic:
    def test_difference_of_squares(self):
        assert (x + y) * (x - y) == x**2 - y**2

    def test_identities(self):
        assert CUSP + R.zero == CUSP
        assert CUSP * 1 == CUSP
        assert CUSP * R.one == CUSP

    def test_scalar_multiplication_and_cancellation(self):
        assert (CUSP * Fraction(3, 2)) * Fraction(2, 3) == CUSP
        assert (CUSP - CUSP).is_zero

    def test_exponent_overflow(self):
        small = Ring(("x",), max_exponent=8)
        with pytest.raises(ExponentOverflowError):
            small.var(0) ** 9

    def test_ring_mismatch(self):
        other = Ring(("a", "b", "c"))
        with pytest.raises(RingMismatchError):
            x + other.var(0)

    def test_prime_field_reduction(self):
        Rp = Ring(("x", "y"), GF(7))
        a, b = Rp.gens
        assert (7 * a + b).as_dict() == {(0, 1): 1}


class TestPartial:
    def test_examples(self):
        assert CUSP.diff(0) == 3 * x**2
        assert CUSP.diff(2) == -(y**2)
        assert R.constant(5).diff(0).is_zero

    def test_gradient(self):
        assert CUSP.gradient() == (3 * x**2, -2 * y * z, -(y**2))


class TestEvaluate:
    def test_examples(self):
        assert CUSP.evaluate((0, 0, 1)) == 0
        assert (y**2 - x**2).evaluate((0, 1, 0)) == 1
        assert R.constant(Fraction(7, 3)).evaluate((5, 6, 7)) == Fraction(7, 3)


class TestDegreeData:
    def test_examples(self):
        assert CUSP.degree_data().homogeneous and CUSP.degree == 3
        assert not (x + y**2).degree_data().homogeneous

    def test_picard_grading(self):
        cox = Ring(("x0", "x1", "y0", "y1"), grading=[(1, 0), (1, 0), (0, 1), (0, 1)])
        f = parse_polynomial("x0^2*y0^2 - x1^2*y1^2", cox)
        data = f.degree_data()
        assert data.homogeneous and data.degree == (2, 2)


class TestDehomogenize:
    def test_examples(self):
        g = CUSP.dehomogenize(2)
        assert g == parse_polynomial("x^3 - y^2", ("x", "y"))
        node = P("y^2*z - x^3 - x^2*z").dehomogenize(2)
        assert node == parse_polynomial("y^2 - x^3 - x^2", ("x", "y"))

    def test_single_variable(self):
        x0 = Ring(("x0",)).var(0)
        one = x0.dehomogenize(0)
        assert one.ring.nvars == 0 and one.constant_term() == 1

    def test_rejects_inhomogeneous(self):
        with pytest.raises(ValueError):
            (x + y**2).dehomogenize(0)


class TestTranslate:
    def test_examples(self):
        X = Ring(("x",)).var(0)
        assert (X**2).translate((1,)) == X**2 + 2 * X + 1
        assert (X**2).translate((0,)) == X**2
        S = Ring(("x", "y"))
        a, b = S.gens
        assert (a**2 - b**2).translate((1, 1)) == a**2 + 2 * a - b**2 - 2 * b


class TestPoint:
    def test_zero_projective_rejected(self):
        with pytest.raises(ValueError):
            Point((0, 0, 0))

    def test_scaled_and_str(self):
        p = Point((1, Fraction(1, 2), 0))
        assert str(p.scaled(2)) == "[2:1:0]"
        assert p.first_nonzero() == 0


# properties -------------------------------------------------------------------------------

R3 = ring_of(3)


@given(polynomials(R3), polynomials(R3), polynomials(R3))
def test_canonical_form(f, g, h):
    assert serialize_polynomial(f + g) == serialize_polynomial(g + f)
    assert serialize_polynomial((f * g) * h) == serialize_polynomial(f * (g * h))


@given(polynomials(R3), polynomials(R3), st.integers(min_value=0, max_value=2))
def test_leibniz(f, g, i):
    assert (f * g).diff(i) == f * g.diff(i) + g * f.diff(i)


@given(plane_forms())
def test_euler_identity(f):
    ring = f.ring
    lhs = sum((ring.var(i) * f.diff(i) for i in range(ring.nvars)), ring.zero)
    assert lhs == f * f.degree


@given(polynomials(R3), polynomials(R3), points(3, projective=False))
def test_evaluation_is_a_homomorphism(f, g, p):
    assert (f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p)
    assert (f + g).evaluate(p) == f.evaluate(p) + g.evaluate(p)


@given(homogeneous_polynomials(R3, 3), st.integers(min_value=0, max_value=2), st.integers(min_value=0, max_value=3))
def test_dehomogenize_ignores_chart_powers(f, chart, k):
    assert (f * R3.var(chart) ** k).dehomogenize(chart) == f.dehomogenize(chart)


@given(homogeneous_polynomials(R3, 3), points(3), nonzero_rationals)
def test_homogeneous_scaling(f, p, lam):
    scaled = [lam * c for c in p]
    assert f.evaluate(scaled) == lam**3 * f.evaluate(p)


@given(polynomials(R3), polynomials(R3))
def test_prime_field_image_is_a_homomorphism(f, g):
    F = GF(10007)
    Rp = R3.with_field(F)

    def image(h):
        return Polynomial(Rp, {e: F(c) for e, c in h.as_dict().items()})

    assert image(f * g) == image(f) * image(g)
    assert image(f - g) == image(f) - image(g)
