import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from heatfin.errors import BracketError, DomainError
from heatfin.models import model1_exact, model1_slope_at_0
from heatfin.series import (
    PowerSeries,
    cauchy_product,
    model1_coeffs,
    model2_coeffs,
    radius_estimate,
    series_derivative,
    series_eval,
    shoot_model1,
    shoot_model2,
)

PAPER_U0 = 0.8186424785


class TestPowerSeries:
    def test_rejects_non_finite(self):
        with pytest.raises(DomainError):
            PowerSeries([1.0, np.inf])

    def test_order_and_length(self):
        s = PowerSeries([1, 2, 3])
        assert s.order == 2 and len(s) == 3

    def test_cauchy_examples(self):
        assert cauchy_product(PowerSeries([1, 1, 0]), PowerSeries([1, -1, 0])) == PowerSeries([1, 0, -1])
        a = PowerSeries([0.5, -2.0, 3.0])
        assert cauchy_product(a, PowerSeries([1, 0, 0])) == a
        assert PowerSeries([1, 2, 3]) * PowerSeries([1, 2, 3]) == PowerSeries([1, 4, 10])

    def test_cauchy_truncates_to_shorter(self):
        assert cauchy_product(PowerSeries([1, 1, 1, 1]), PowerSeries([1, 1])).order == 1

    def test_eval(self):
        assert series_eval(PowerSeries([1, 1, 1]), 0.0) == 1.0
        assert series_eval(PowerSeries([1, 1]), 1.0) == 2.0
        assert PowerSeries([1, -2, 0.5])(2.0) == pytest.approx(1 - 4 + 2)

    def test_derivative(self):
        assert series_derivative(PowerSeries([1, 0, 1])) == PowerSeries([0, 2])
        assert series_derivative(PowerSeries([4.0, 0.0])) == PowerSeries([0.0])
        assert series_derivative(PowerSeries([4.0])) == PowerSeries([0.0])
        s = PowerSeries([3.0, -1.5, 2.0, 7.0])
        assert series_eval(s.derivative(), 0.0) == s[1]


class TestModel2Coefficients:
    def test_second_coefficient(self):
        c = model2_coeffs(0.8, 0.7, 10)
        assert c[2] == pytest.approx(0.7 * 0.8**4 / 2, rel=1e-15)

    def test_zero_eps_is_constant(self):
        assert model2_coeffs(0.6, 0.0, 8) == PowerSeries([0.6] + [0.0] * 8)

    @settings(max_examples=30)
    @given(st.floats(0.05, 1.0), st.floats(0.0, 5.0), st.integers(2, 40))
    def test_parity_and_positivity(self, u0, eps, N):
        c = model2_coeffs(u0, eps, N).coeffs
        assert np.all(c[1::2] == 0.0)
        assert np.all(c[0::2] >= 0.0)

    @pytest.mark.parametrize("u0, eps", [(0.8186424785, 0.7), (0.5, 3.0), (1.0, 0.1)])
    def test_recurrence_zeroes_ode_residual(self, u0, eps):
        N = 24
        u = model2_coeffs(u0, eps, N)
        upp = series_derivative(series_derivative(u))
        u2 = u * u
        u4 = u2 * u2
        residual = upp.coeffs[: N - 1] - eps * u4.coeffs[: N - 1]
        assert np.max(np.abs(residual)) < 1e-14

    @settings(max_examples=20)
    @given(st.lists(st.floats(0.01, 1.0), min_size=2, max_size=8, unique=True))
    def test_shooting_function_increases_with_u0(self, u0s):
        values = [series_eval(model2_coeffs(u0, 0.7, 30), 1.0) for u0 in sorted(u0s)]
        assert all(a < b for a, b in zip(values, values[1:]))


class TestModel1Coefficients:
    def test_second_coefficient(self):
        s, eps = -0.8, 1.5
        assert model1_coeffs(s, eps, 6)[2] == pytest.approx(-eps * s * s / (2 * (1 + eps)), rel=1e-15)

    def test_zero_eps_is_linear(self):
        assert model1_coeffs(-0.4, 0.0, 6) == PowerSeries([1, -0.4, 0, 0, 0, 0, 0])

    @pytest.mark.parametrize("eps", [0.3, 1.0])
    def test_matches_exact_solution(self, eps):
        s = model1_coeffs(model1_slope_at_0(eps), eps, 60)
        assert series_eval(s, 0.5) == pytest.approx(model1_exact(0.5, eps), abs=1e-12)

    def test_matches_taylor_coefficients_of_exact(self):
        # Taylor coefficients of the exact profile from a high-order polynomial fit
        # on a tiny interval would be ill-conditioned; use the binomial series instead.
        eps = 1.0
        a = (1 + eps) ** 2
        z = (1 - a) / a  # sqrt(a) * sqrt(1 + z x)
        k = np.arange(12)
        binom = np.array([np.prod([(0.5 - j) / (j + 1) for j in range(n)]) for n in k])
        expected = np.sqrt(a) * binom * z**k / eps
        expected[0] -= 1 / eps
        got = model1_coeffs(model1_slope_at_0(eps), eps, 11).coeffs
        np.testing.assert_allclose(got, expected, rtol=1e-12, atol=1e-15)


class TestShootModel2:
    def test_paper_value(self):
        result = shoot_model2(0.7, 30, 1e-12)
        assert result.free_param == pytest.approx(PAPER_U0, abs=1e-9)
        assert abs(result.boundary_residual) <= 1e-12
        assert result.order == 30

    def test_series_hits_boundary_with_paper_u0(self):
        assert series_eval(model2_coeffs(PAPER_U0, 0.7, 30), 1.0) == pytest.approx(1.0, abs=1e-9)

    def test_small_eps(self):
        assert shoot_model2(1e-8, 10).free_param == pytest.approx(1.0, abs=1e-8)

    def test_cauchy_convergence(self):
        orders = [16, 20, 24, 28, 30]
        roots = {N: shoot_model2(0.7, N).free_param for N in orders + [12, 26]}
        gaps = [abs(roots[N] - roots[N - 4]) for N in orders]
        assert all(a >= b for a, b in zip(gaps, gaps[1:]))

    def test_bad_order(self):
        with pytest.raises(ValueError):
            shoot_model2(0.7, 3)

    def test_no_sign_change_is_reported(self):
        # coefficients overflow, so the boundary mismatch has no usable sign
        with pytest.raises(BracketError):
            shoot_model2(1e300, 30)


class TestShootModel1:
    def test_eps_1(self):
        result = shoot_model1(1.0, 40)
        assert result.free_param == pytest.approx(-0.75, abs=1e-6)
        assert result.free_param < 0

    def test_small_eps(self):
        assert shoot_model1(1e-8, 10).free_param == pytest.approx(-1.0, abs=1e-7)

    def test_profile_matches_exact(self):
        series = shoot_model1(0.5, 40).series
        for x in np.linspace(0, 1, 21):
            assert series_eval(series, x) == pytest.approx(model1_exact(x, 0.5), abs=1e-8)


class TestRadius:
    def test_geometric(self):
        r = 0.4
        assert radius_estimate(PowerSeries(r ** np.arange(12))) == pytest.approx(1 / r, rel=1e-13)

    def test_even_series(self):
        c = np.zeros(21)
        c[::2] = 0.25 ** np.arange(11)  # sum (x/2)^(2k): radius 2
        assert radius_estimate(PowerSeries(c)) == pytest.approx(2.0, rel=1e-13)

    @pytest.mark.parametrize("eps, expected", [(1.0, 4 / 3), (2.0, 9 / 8)])
    def test_model1(self, eps, expected):
        s = model1_coeffs(model1_slope_at_0(eps), eps, 60)
        assert radius_estimate(s) == pytest.approx(expected, rel=0.05)

    def test_too_few_coefficients(self):
        with pytest.raises(ValueError):
            radius_estimate(PowerSeries([1, 1, 1, 1, 0]))
