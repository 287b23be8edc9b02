import json
from fractions import Fraction

import pytest
from hypothesis import given

from strategies import polynomials, ring_of
from syzrank import GF, Point, Ring, parse_point, parse_polynomial, serialize_polynomial
from syzrank.parsing import ParseError, load_fan_file, parse_fan_text

XYZ = ("x", "y", "z")


class TestParsePolynomial:
    def test_cusp_and_t55(self):
        R = Ring(XYZ)
        x, y, z = R.gens
        assert parse_polynomial("x^3 - y^2*z", R) == x**3 - y**2 * z
        assert parse_polynomial("x^5 + y^5 + x^2*y^2*z", R) == x**5 + y**5 + x**2 * y**2 * z

    def test_syntax_error_offset(self):
        with pytest.raises(ParseError) as info:
            parse_polynomial("x + * y", XYZ)
        assert info.value.offset == 4

    def test_unknown_identifier(self):
        with pytest.raises(ParseError) as info:
            parse_polynomial("x + t", XYZ)
        assert info.value.offset == 4

    @pytest.mark.parametrize("text", ["x^-1", "x^y", "x^(2)", "x^1/2"])
    def test_bad_exponents(self, text):
        with pytest.raises(ParseError):
            parse_polynomial(text, XYZ)

    def test_no_implicit_multiplication(self):
        with pytest.raises(ParseError):
            parse_polynomial("2x", XYZ)
        with pytest.raises(ParseError):
            parse_polynomial("x y", XYZ)

    def test_rationals_unary_minus_parentheses(self):
        f = parse_polynomial("-(x - 1/2)^2 * 3", XYZ)
        x = f.ring.var(0)
        assert f == -3 * (x - Fraction(1, 2)) ** 2

    def test_prime_field(self):
        f = parse_polynomial("1/2*x + 13*y", Ring(XYZ, GF(13)))
        assert f.as_dict() == {(1, 0, 0): 7}

    def test_offsets_are_bytes(self):
        with pytest.raises(ParseError) as info:
            parse_polynomial("x + é", XYZ)
        assert info.value.offset == 4


class TestParsePoint:
    def test_projective(self):
        p = parse_point("[0:0:1]")
        assert p.kind == "projective" and p.coords == (0, 0, 1)

    def test_zero_rejected(self):
        with pytest.raises(ParseError):
            parse_point("[0:0:0]")

    def test_cox(self):
        p = parse_point("(1, 0, 0, 1)")
        assert p.kind == "cox" and len(p) == 4

    def test_rationals(self):
        assert parse_point("[1/2:-3:0]").coords == (Fraction(1, 2), -3, 0)

    @pytest.mark.parametrize("text", ["[1:sqrt(2)]", "[1:0.5]", "1:2", "[1:2/0]"])
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_point(text)

    def test_round_trip(self):
        for text in ("[0:0:1]", "[1/2:-3:0]", "(1, 0, 0, 1)"):
            assert str(parse_point(text)) == text


class TestFanText:
    def test_parse(self):
        data = parse_fan_text(json.dumps({"rays": [[1, 0], [0, 1], [-1, -1]], "cones": [[0, 1], [1, 2], [0, 2]], "complete": True}))
        assert data["complete"] and len(data["rays"]) == 3

    @pytest.mark.parametrize(
        "text",
        ["not json", "[]", '{"rays": [[1, 0]]}', '{"rays": [[1.5]], "cones": []}', '{"rays": [], "cones": [], "complete": 1}'],
    )
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_fan_text(text)

    def test_load_file(self, tmp_path):
        path = tmp_path / "p1xp1.json"
        path.write_text(json.dumps({"rays": [[1, 0], [-1, 0], [0, 1], [0, -1]], "cones": [[0, 2], [0, 3], [1, 2], [1, 3]], "complete": True}))
        assert len(load_fan_file(path)["cones"]) == 4


R3 = ring_of(3)


@given(polynomials(R3, max_degree=5, max_terms=8))
def test_round_trip(f):
    assert parse_polynomial(serialize_polynomial(f), R3) == f


@given(polynomials(ring_of(3, GF(101)), max_degree=5, max_terms=8))
def test_round_trip_prime_field(f):
    assert parse_polynomial(serialize_polynomial(f), f.ring, f.ring.field) == f


def test_point_type():
    assert isinstance(parse_point("[1:2]"), Point)
