from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from syzrank import GF, Point, Ring, find_rational_singular_points, parse_polynomial
from syzrank.singular_points import rational_roots

PLANE = ("x", "y", "z")


def F(text, ring=PLANE):
    return parse_polynomial(text, ring) if isinstance(ring, tuple) else parse_polynomial(text, ring, ring.field)


def test_cusp():
    s = find_rational_singular_points(F("x^3 - y^2*z"))
    assert s.points == (Point((0, 0, 1)),) and s.complete and not s.positive_dimensional


def test_xyz():
    s = find_rational_singular_points(F("x*y*z"))
    assert set(s.points) == {Point((1, 0, 0)), Point((0, 1, 0)), Point((0, 0, 1))} and s.complete


def test_irrational_points_make_search_incomplete():
    # (x^2 - 2z^2)(y^2 - 3z^2) has four nodes with irrational coordinates
    s = find_rational_singular_points(F("(x^2 - 2*z^2)*(y^2 - 3*z^2)*(x + y + z)"))
    assert not s.complete and Point((1, 0, 0)) in s.points and Point((0, 1, 0)) in s.points


def test_quintic_with_irrational_singularities():
    s = find_rational_singular_points(F("(x^2 - 2*z^2)^2*z + y^5"))
    assert not s.complete


def test_positive_dimensional():
    s = find_rational_singular_points(F("x^2*y"))
    assert s.positive_dimensional and s.points == ()


def test_smooth():
    s = find_rational_singular_points(F("x^2 + y^2 + z^2"))
    assert s.points == () and s.complete


def test_prime_field_splits_more():
    Rp = Ring(PLANE, GF(7))
    # 2 is a square mod 7 and 3 is not
    s = find_rational_singular_points(F("(x^2 - 2*z^2)*(y^2 - 2*z^2)", Rp))
    assert s.complete and len(s.points) == 6


def test_rational_roots():
    assert rational_roots([2, -3, 1]) == ([Fraction(1, 2), Fraction(1)], True)
    assert rational_roots([1, 0, -2]) == ([], False)
    roots, splits = rational_roots([1, -2, 1, 0])
    assert sorted(roots) == [0, 1, 1] and splits


def test_height_cap():
    roots, splits = rational_roots([1, -(10**13)], height_cap=10**12)
    assert roots == [] and not splits


@given(st.lists(st.fractions(min_value=-6, max_value=6, max_denominator=4), min_size=1, max_size=4))
def test_rational_roots_recovers_products(rs):
    coeffs = [Fraction(1)]
    for r in rs:
        coeffs = [a - r * b for a, b in zip(coeffs + [0], [0] + coeffs)]
    roots, splits = rational_roots(coeffs)
    assert splits and sorted(roots) == sorted(rs)
