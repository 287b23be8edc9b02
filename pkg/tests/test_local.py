import pytest
from hypothesis import given
from hypothesis import strategies as st

from syzrank import INFINITE, GF, Point, Ring, germ_invariants, invariants_at, milnor, parse_polynomial, tjurina, truncation_oracle
from syzrank.errors import InconsistencyError, InvalidPointError
from syzrank.local import UNSTABLE, LocalGermInvariants

R2 = Ring(("x", "y"))
x, y = R2.gens
PLANE = ("x", "y", "z")
T55 = x**5 + y**5 + x**2 * y**2


class TestMilnorTjurina:
    @pytest.mark.parametrize(
        "g, mu, tau",
        [(x**2 + y**2, 1, 1), (x**3 - y**2, 2, 2), (T55, 11, 10)],
    )
    def test_examples(self, g, mu, tau):
        # values fixed by the truncation oracle
        assert milnor(g) == mu and tjurina(g) == tau

    def test_non_isolated(self):
        assert milnor(x**2) == INFINITE and tjurina(x**2 * y) == INFINITE

    def test_requires_origin(self):
        with pytest.raises(ValueError):
            milnor(x**2 + 1)


class TestTruncationOracle:
    def test_maximal_ideal(self):
        res = truncation_oracle([x, y], 5)
        assert res.value == 1 and res.stable_at == 2

    def test_cusp(self):
        assert truncation_oracle([3 * x**2, 2 * y], 8).value == 2

    def test_t55_differs_from_global_quotient(self):
        from syzrank import buchberger, quotient_dimension

        gens = [T55.diff(0), T55.diff(1)]
        assert truncation_oracle(gens, 20).value == 11
        assert quotient_dimension(buchberger(gens)) > 11  # other critical points exist away from 0

    def test_unstable(self):
        res = truncation_oracle([x**2], 6)
        assert res.value is UNSTABLE and res.stable_at is None

    def test_history_is_monotone(self):
        res = truncation_oracle([T55.diff(0), T55.diff(1)], 20)
        assert list(res.history) == sorted(res.history)


class TestInvariantsAt:
    @pytest.mark.parametrize(
        "text, point, expected",
        [
            ("y^2*z - x^3 - x^2*z", (0, 0, 1), (1, 1)),
            ("x^3 - y^2*z", (0, 0, 1), (2, 2)),
            ("x^5 + y^5 + x^2*y^2*z", (0, 0, 1), (11, 10)),
        ],
    )
    def test_projective(self, text, point, expected):
        inv = invariants_at(parse_polynomial(text, PLANE), Point(point))
        assert (inv.mu, inv.tau) == expected and inv.confirmed

    def test_chart_independence(self):
        f = parse_polynomial("x*y*z", PLANE)
        p = Point((1, 0, 0))
        assert invariants_at(f, p, 0) == invariants_at(f, p, (1, 1, 0))

    def test_rejects_smooth_point(self):
        with pytest.raises(InvalidPointError):
            invariants_at(parse_polynomial("x^3 - y^2*z", PLANE), Point((1, 1, 1)))

    def test_prime_field(self):
        Rp = Ring(PLANE, GF(32003))
        f = parse_polynomial("x^5 + y^5 + x^2*y^2*z", Rp, Rp.field)
        inv = invariants_at(f, Point((0, 0, 1)))
        assert (inv.mu, inv.tau) == (11, 10)


class TestType:
    def test_tau_above_mu_rejected(self):
        with pytest.raises(InconsistencyError):
            LocalGermInvariants(2, 3)

    def test_mixed_finiteness_rejected(self):
        with pytest.raises(InconsistencyError):
            LocalGermInvariants(INFINITE, 3)

    def test_flags(self):
        assert LocalGermInvariants(2, 2).quasi_homogeneous
        assert LocalGermInvariants(INFINITE, INFINITE).quasi_homogeneous is None


@given(st.integers(min_value=2, max_value=5), st.integers(min_value=2, max_value=5))
def test_brieskorn_quasi_homogeneous(a, b):
    inv = germ_invariants(x**a + y**b)
    assert inv.mu == inv.tau == (a - 1) * (b - 1)


@given(
    st.integers(min_value=2, max_value=4),
    st.integers(min_value=2, max_value=4),
    st.lists(st.integers(min_value=-3, max_value=3), min_size=3, max_size=3),
)
def test_methods_agree_and_tau_below_mu(a, b, c):
    g = x**a + y**b + c[0] * x**2 * y**2 + c[1] * x * y**3 + c[2] * x**3 * y
    inv = germ_invariants(g)  # raises on any disagreement with the truncation oracle
    if inv.isolated:
        assert inv.tau <= inv.mu


@given(st.integers(min_value=2, max_value=4), st.integers(min_value=2, max_value=4), st.integers(min_value=-3, max_value=3))
def test_translation_invariance(a, b, t):
    # the same singularity moved to (t, 0) and pulled back to the origin
    S = Ring(("x", "y"))
    u, v = S.gens
    g = (u - t) ** a + v**b
    assert germ_invariants(g.translate((t, 0))) == germ_invariants(u**a + v**b)
