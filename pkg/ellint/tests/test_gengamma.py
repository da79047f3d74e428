"""
Tests for the generalized Gamma functions, their identities and the Hermite functions built on them.
"""
import math

import numpy as np
import pytest
from scipy import special

from ellint.exceptions import ConvergenceError, DomainError, GammaPoleError
from ellint.gengamma import (
    gengamma2,
    gengamma2_heat_shift,
    gengamma2_quad,
    gengamma2_series,
    gengamma3,
    gengamma3_quad,
    gengamma3_shift_x2,
    gengamma3_shift_x3,
    h_minus1_erf_form,
    h_minus1_gf_partial,
    h_minus_order,
    h_minus_order_by_derivative,
    hermite_fn,
    hermite_fn_m,
)
from ellint.models import GammaArgs2, GammaArgs3, Method, Strategy
from ellint.oracles import quad_half_line


def gamma2(x1, xm, nu, m=2.0):
    """Reference value from the series at tight tolerance."""
    sv = gengamma2_series(GammaArgs2(x1=x1, xm=xm, nu=nu, m=m), 1e-15)
    assert sv.converged
    return sv.value


def gamma3(x1, x2, x3, nu):
    sv = gengamma3(GammaArgs3(x1=x1, x2=x2, x3=x3, nu=nu), 1e-15)
    assert sv.converged
    return sv.value


def _quad_reference(f, split=1.0):
    result = quad_half_line(f, 1e-12, split=split)
    assert result.converged
    return result.value


class TestGamma2Series:
    """Test the x1 power series of Gamma(x1, xm | nu; m)."""

    @pytest.mark.parametrize("m", [2.0, 3.0])
    def test_x1_zero(self, m):
        """At x1 = 0 only the leading term remains."""
        x2, nu = 1.7, 1.3
        expected = x2 ** (-nu / m) * math.gamma(nu / m) / m
        sv = gengamma2_series(GammaArgs2(x1=0.0, xm=x2, nu=nu, m=m))
        assert sv.value == pytest.approx(expected, rel=1e-14)
        assert sv.terms_used == 1
        assert sv.converged

    def test_against_integral(self):
        """Gamma(1, 1 | 1; 2) against direct quadrature."""
        expected = _quad_reference(lambda t: np.exp(-t - t * t))
        assert gamma2(1.0, 1.0, 1.0) == pytest.approx(expected, rel=1e-9)

    def test_pole(self):
        """A leading Gamma argument on a pole is reported with its index."""
        with pytest.raises(GammaPoleError) as exc_info:
            gengamma2_series(GammaArgs2(x1=0.5, xm=1.0, nu=-2.0, m=2.0))
        assert exc_info.value.index == 0

    @pytest.mark.parametrize(
        "x1,xm,m,field",
        [
            (0.5, 0.0, 2.0, "xm"),
            (0.5, -1.0, 2.0, "xm"),
            (0.5, 1.0, 0.5, "m"),
            (-1.0, 1.0, 1.0, "x1"),
        ],
    )
    def test_domain(self, x1, xm, m, field):
        """Invalid arguments name the offending field."""
        with pytest.raises(DomainError) as exc_info:
            gengamma2_series(GammaArgs2(x1=x1, xm=xm, nu=1.0, m=m))
        assert exc_info.value.field == field


class TestGamma2TwoPaths:
    """Series and quadrature agree wherever both apply."""

    @pytest.mark.parametrize(
        "x1,xm,nu,m",
        [(0.0, 1.0, 1.0, 1.0), (0.0, 1.0, 3.0, 1.0), (0.5, 2.0, 1.5, 3.0)],
    )
    def test_known_values(self, x1, xm, nu, m):
        """Closed forms for m = 1 and a cubic case."""
        quad = gengamma2_quad(GammaArgs2(x1=x1, xm=xm, nu=nu, m=m), 1e-12)
        if m == 1.0:
            assert quad.value == pytest.approx((x1 + xm) ** (-nu) * math.gamma(nu), rel=1e-10)
        assert gamma2(x1, xm, nu, m) == pytest.approx(quad.value, rel=1e-8)

    @pytest.mark.parametrize("m", [1.0, 2.0, 3.0, 4.0])
    @pytest.mark.parametrize("nu", [0.5, 1.0, 2.5])
    @pytest.mark.parametrize("xm", [0.5, 1.0, 3.0])
    @pytest.mark.parametrize("x1", [-1.0, 0.0, 0.5, 2.0])
    def test_grid(self, x1, xm, nu, m):
        """1e-8 agreement; for m = 1 outside |x1| < xm the series must report failure."""
        if m == 1.0 and x1 + xm <= 0.0:
            pytest.skip("defining integral diverges")
        g = GammaArgs2(x1=x1, xm=xm, nu=nu, m=m)
        sv = gengamma2_series(g, 1e-13)
        if m == 1.0 and abs(x1) >= xm:
            assert not sv.converged
            return
        quad = gengamma2_quad(g, 1e-10)
        assert sv.converged
        assert sv.value == pytest.approx(quad.value, rel=1e-8)


class TestGamma2Auto:
    """Test automatic method selection."""

    def test_series_preferred(self):
        """Moderate arguments stay on the series."""
        report = gengamma2(GammaArgs2(x1=0.5, xm=1.0, nu=1.5, m=2.0))
        assert report.method == Method.SERIES
        assert report.converged
        assert report.warnings == []

    def test_crossover_to_quadrature(self):
        """Large |x1| / xm^(1/m) skips the series."""
        report = gengamma2(GammaArgs2(x1=20.0, xm=1.0, nu=1.0, m=2.0))
        assert report.method == Method.QUADRATURE
        assert any("crossover" in w for w in report.warnings)
        assert report.value == pytest.approx(h_minus1_erf_form(20.0, 1.0), rel=1e-8)

    def test_fallback_on_divergence(self):
        """A divergent m = 1 series falls back with a warning."""
        report = gengamma2(GammaArgs2(x1=2.0, xm=0.5, nu=1.0, m=1.0))
        assert report.method == Method.QUADRATURE
        assert any("fallback" in w for w in report.warnings)
        assert report.value == pytest.approx(1.0 / 2.5, rel=1e-9)

    def test_forced_strategies(self):
        """SERIES and QUADRATURE force a path."""
        g = GammaArgs2(x1=0.3, xm=1.2, nu=2.0, m=3.0)
        series = gengamma2(g, strategy=Strategy.SERIES)
        quad = gengamma2(g, strategy=Strategy.QUADRATURE)
        assert series.method == Method.SERIES
        assert quad.method == Method.QUADRATURE
        assert series.value == pytest.approx(quad.value, rel=1e-8)

    def test_forced_series_reports_failure(self):
        """A forced divergent series comes back unconverged instead of raising."""
        report = gengamma2(GammaArgs2(x1=2.0, xm=0.5, nu=1.0, m=1.0), strategy=Strategy.SERIES)
        assert not report.converged
        assert any("not converged" in w for w in report.warnings)

    def test_quadrature_needs_positive_nu(self):
        """The defining integral diverges at 0 for nu <= 0."""
        with pytest.raises(DomainError) as exc_info:
            gengamma2_quad(GammaArgs2(x1=0.5, xm=1.0, nu=-0.5, m=2.0))
        assert exc_info.value.field == "nu"

    def test_negative_nu_without_fallback(self):
        """A failed series at nu <= 0 has nowhere to fall back to."""
        with pytest.raises(ConvergenceError) as exc_info:
            gengamma2(GammaArgs2(x1=2.0, xm=1.0, nu=-0.5, m=1.0))
        assert exc_info.value.estimate is not None


class TestGammaIdentities:
    """Finite-difference checks of the derivative and heat-type relations."""

    GRID2 = [
        (x1, xm, nu, m)
        for x1 in (0.2, 1.0)
        for xm in (0.7, 2.0)
        for nu in (1.0, 2.5)
        for m in (2.0, 3.0)
    ]

    @pytest.mark.parametrize("x1,xm,nu,m", GRID2)
    def test_x1_derivative(self, x1, xm, nu, m):
        """d/dx1 Gamma(nu) = -Gamma(nu + 1)."""
        h = 1e-5
        slope = (gamma2(x1 + h, xm, nu, m) - gamma2(x1 - h, xm, nu, m)) / (2 * h)
        assert slope == pytest.approx(-gamma2(x1, xm, nu + 1, m), rel=1e-5)

    @pytest.mark.parametrize("x1,x2,nu", [(x1, x2, nu) for x1, x2, nu, m in GRID2 if m == 2.0])
    def test_heat_relation(self, x1, x2, nu):
        """d/dx2 Gamma = -d^2/dx1^2 Gamma at m = 2."""
        h1, h2 = 1e-5, 1e-3
        dx2 = (gamma2(x1, x2 + h1, nu) - gamma2(x1, x2 - h1, nu)) / (2 * h1)
        d2x1 = (gamma2(x1 + h2, x2, nu) - 2 * gamma2(x1, x2, nu) + gamma2(x1 - h2, x2, nu)) / h2**2
        assert dx2 == pytest.approx(-d2x1, rel=1e-5)

    GRID3 = [
        (x1, x2, x3, 1.5)
        for x1 in (0.2, 0.5)
        for x2 in (0.1, 0.3)
        for x3 in (1.0, 2.0)
    ]

    @pytest.mark.parametrize("x1,x2,x3,nu", GRID3)
    def test_three_variable_x2(self, x1, x2, x3, nu):
        """d/dx2 Gamma = -d^2/dx1^2 Gamma for the cubic exponent."""
        h1, h2 = 1e-5, 1e-3
        dx2 = (gamma3(x1, x2 + h1, x3, nu) - gamma3(x1, x2 - h1, x3, nu)) / (2 * h1)
        d2x1 = (gamma3(x1 + h2, x2, x3, nu) - 2 * gamma3(x1, x2, x3, nu) + gamma3(x1 - h2, x2, x3, nu)) / h2**2
        assert dx2 == pytest.approx(-d2x1, rel=1e-5)

    @pytest.mark.parametrize("x1,x2,x3,nu", GRID3)
    def test_three_variable_x3(self, x1, x2, x3, nu):
        """d/dx3 Gamma and d^3/dx1^3 Gamma both equal -Gamma(nu + 3)."""
        h1, h3 = 1e-5, 2e-3
        dx3 = (gamma3(x1, x2, x3 + h1, nu) - gamma3(x1, x2, x3 - h1, nu)) / (2 * h1)
        d3x1 = (
            gamma3(x1 + 2 * h3, x2, x3, nu)
            - 2 * gamma3(x1 + h3, x2, x3, nu)
            + 2 * gamma3(x1 - h3, x2, x3, nu)
            - gamma3(x1 - 2 * h3, x2, x3, nu)
        ) / (2 * h3**3)
        shifted = gamma3(x1, x2, x3, nu + 3)
        assert dx3 == pytest.approx(-shifted, rel=1e-5)
        assert d3x1 == pytest.approx(-shifted, rel=1e-5)
        assert dx3 == pytest.approx(d3x1, rel=1e-5)

    @pytest.mark.parametrize("lam", [0.5, 1.5, 2.0, 3.0])
    def test_scaling(self, lam):
        """Gamma(lam x1, lam^m xm | nu; m) = lam^(-nu) Gamma(x1, xm | nu; m)."""
        x1, xm, nu, m = 0.3, 1.2, 1.7, 2.5
        assert gamma2(lam * x1, lam**m * xm, nu, m) == pytest.approx(lam ** (-nu) * gamma2(x1, xm, nu, m), rel=1e-10)


class TestGamma3:
    """Test the three-variable function."""

    @pytest.mark.parametrize(
        "x1,x2,x3,nu",
        [
            (0.0, 0.0, 1.0, 1.0),
            (0.5, 0.3, 1.0, 1.5),
            (-0.4, 0.2, 2.0, 2.0),
            (1.0, 0.5, 1.0, 1.0),
            (0.2, -0.1, 2.0, 2.0),
        ],
    )
    def test_series_against_quadrature(self, x1, x2, x3, nu):
        """Hermite-polynomial series against the defining integral."""
        g = GammaArgs3(x1=x1, x2=x2, x3=x3, nu=nu)
        quad = gengamma3_quad(g, 1e-11)
        assert gamma3(x1, x2, x3, nu) == pytest.approx(quad.value, rel=1e-9)

    def test_reduces_to_monomial(self):
        """x1 = x2 = 0 gives Gamma(nu / 3) / (3 x3^(nu/3))."""
        expected = math.gamma(2.0 / 3.0) / (3.0 * 2.0 ** (2.0 / 3.0))
        assert gamma3(0.0, 0.0, 2.0, 2.0) == pytest.approx(expected, rel=1e-14)

    def test_known_value(self):
        """int_0^inf exp(-t - 0.5 t^2 - t^3) dt."""
        assert gamma3(1.0, 0.5, 1.0, 1.0) == pytest.approx(0.2636850550869142, rel=1e-12)

    def test_term_cap_follows_hermite_degree(self, settings):
        """The series never asks for a Hermite polynomial past the degree cap."""
        capped = settings.with_overrides(hermite_max_degree=5)
        sv = gengamma3(GammaArgs3(x1=1.0, x2=0.5, x3=1.0, nu=1.0), 1e-15, capped)
        assert sv.terms_used <= 6
        assert not sv.converged

    def test_domain(self):
        """x3 must be positive and nu positive."""
        with pytest.raises(DomainError):
            gengamma3(GammaArgs3(x1=0.0, x2=0.0, x3=0.0, nu=1.0))
        with pytest.raises(DomainError):
            gengamma3(GammaArgs3(x1=0.0, x2=0.0, x3=1.0, nu=0.0))


class TestTranslation:
    """Operator-series forms of the translation property."""

    def test_heat_shift(self):
        """sum z^k/k! Gamma(nu + 2k) reaches Gamma(x1, x2 - z)."""
        g = GammaArgs2(x1=0.5, xm=2.0, nu=1.5, m=2.0)
        sv = gengamma2_heat_shift(g, 0.5, 40, 1e-13)
        assert sv.converged
        assert sv.value == pytest.approx(gamma2(0.5, 1.5, 1.5), rel=1e-9)

    def test_heat_shift_domain(self):
        """m = 2 and |z| < x2 are required."""
        with pytest.raises(DomainError):
            gengamma2_heat_shift(GammaArgs2(x1=0.5, xm=2.0, nu=1.5, m=3.0), 0.5, 10)
        with pytest.raises(DomainError) as exc_info:
            gengamma2_heat_shift(GammaArgs2(x1=0.5, xm=2.0, nu=1.5, m=2.0), 2.0, 10)
        assert exc_info.value.field == "z"

    def test_three_variable_x2_shift(self):
        """Shift of the quadratic coefficient."""
        g = GammaArgs3(x1=0.3, x2=0.5, x3=1.0, nu=1.2)
        sv = gengamma3_shift_x2(g, 0.2, 30, 1e-13)
        assert sv.value == pytest.approx(gamma3(0.3, 0.3, 1.0, 1.2), rel=1e-9)

    def test_three_variable_x3_shift(self):
        """Shift of the cubic coefficient."""
        g = GammaArgs3(x1=0.3, x2=0.5, x3=1.0, nu=1.2)
        sv = gengamma3_shift_x3(g, 0.3, 40, 1e-13)
        assert sv.value == pytest.approx(gamma3(0.3, 0.5, 1.3, 1.2), rel=1e-9)

    def test_three_variable_x3_shift_domain(self):
        """|z| < x3 is required."""
        with pytest.raises(DomainError):
            gengamma3_shift_x3(GammaArgs3(x1=0.3, x2=0.5, x3=1.0, nu=1.2), -1.0, 10)


class TestHermiteFunctions:
    """Test Hermite functions and the negative-order family."""

    @pytest.mark.parametrize(
        "nu,x,expected",
        [(-1.0, 0.0, math.sqrt(math.pi) / 2), (-2.0, 0.0, 0.5)],
    )
    def test_hermite_fn_values(self, nu, x, expected):
        """Values at the origin."""
        assert hermite_fn(nu, x) == pytest.approx(expected, rel=1e-12)

    def test_hermite_fn_against_integral(self):
        """H_nu(x) with a fractional index."""
        nu, x = -1.5, 0.7
        expected = _quad_reference(lambda t: np.exp(-2 * x * t - t * t) * t**0.5) / math.gamma(1.5)
        assert hermite_fn(nu, x) == pytest.approx(expected, rel=1e-9)

    def test_hermite_fn_domain(self):
        """nu >= 0 is outside the integral definition."""
        with pytest.raises(DomainError):
            hermite_fn(0.5, 0.3)

    @pytest.mark.parametrize("nu", [-0.5, -1.5, -2.0])
    @pytest.mark.parametrize("x1", [-0.5, 0.8])
    @pytest.mark.parametrize("x2", [0.5, 2.0])
    def test_hermite_fn_rescaling(self, nu, x1, x2):
        """Gamma(x1, x2 | -nu; 2) = Gamma(-nu) x2^(nu/2) H_nu(x1 / (2 sqrt(x2)))."""
        lhs = gengamma2_quad(GammaArgs2(x1=x1, xm=x2, nu=-nu, m=2.0), 1e-11).value
        rhs = math.gamma(-nu) * x2 ** (nu / 2) * hermite_fn(nu, x1 / (2 * math.sqrt(x2)), 1e-13)
        assert lhs == pytest.approx(rhs, rel=1e-9)

    def test_hermite_fn_m(self):
        """General-m Hermite functions."""
        assert hermite_fn_m(-1.0, 0.0, 1.0, 1.0) == pytest.approx(1.0, rel=1e-14)
        expected = _quad_reference(lambda t: np.exp(-t - t**3) * t**1.5) / math.gamma(2.5)
        assert hermite_fn_m(-2.5, 1.0, 1.0, 3.0) == pytest.approx(expected, rel=1e-9)

    @pytest.mark.parametrize(
        "n,x1,xm,m,expected",
        [
            (0, 0.0, 1.0, 2.0, math.sqrt(math.pi) / 2),
            (1, 0.0, 1.0, 2.0, 0.5),
        ],
    )
    def test_negative_order_values(self, n, x1, xm, m, expected):
        """H_{-(n+1)} at the origin."""
        assert h_minus_order(n, x1, xm, m) == pytest.approx(expected, rel=1e-12)

    def test_negative_order_against_integral(self):
        """(1/n!) int t^n exp(-x1 t - xm t^m)."""
        expected = _quad_reference(lambda t: t**3 * np.exp(-0.5 * t - 1.2 * t**3)) / 6.0
        assert h_minus_order(3, 0.5, 1.2, 3.0) == pytest.approx(expected, rel=1e-9)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_derivative_route(self, n):
        """n-fold x1 derivative of H_{-1} against the direct formula."""
        direct = h_minus_order(n, 0.3, 1.0, 2.0, 1e-13)
        assert h_minus_order_by_derivative(n, 0.3, 1.0, 2.0) == pytest.approx(direct, rel=1e-8)

    def test_derivative_route_linear_domain(self):
        """m = 1 needs |x1| < xm for the power series."""
        with pytest.raises(DomainError):
            h_minus_order_by_derivative(1, 1.5, 1.0, 1.0)

    def test_gf_zero(self):
        """z = 0, N = 0 is H_{-1} itself."""
        sv = h_minus1_gf_partial(0.0, 0.4, 1.0, 2.0, 0)
        assert sv.value == pytest.approx(h_minus_order(0, 0.4, 1.0, 2.0), rel=1e-14)

    @pytest.mark.parametrize(
        "z,x1,xm,m",
        [
            (0.3, 1.0, 1.0, 2.0),
            (-0.5, 0.2, 2.0, 3.0),
            (0.5, 0.0, 1.0, 2.0),
            (-0.25, 1.5, 0.5, 2.0),
        ],
    )
    def test_gf_shift(self, z, x1, xm, m):
        """sum z^n H_{-n-1}(x1, xm) = H_{-1}(x1 - z, xm) with N = 40."""
        sv = h_minus1_gf_partial(z, x1, xm, m, 40, 1e-13)
        assert sv.value == pytest.approx(h_minus_order(0, x1 - z, xm, m, 1e-13), rel=1e-9)

    def test_gf_linear_domain(self):
        """m = 1 needs |z| < x1 + xm."""
        with pytest.raises(DomainError):
            h_minus1_gf_partial(2.0, 0.5, 1.0, 1.0, 5)

    @pytest.mark.parametrize("x1", [-1.0, 0.0, 0.5, 2.0])
    @pytest.mark.parametrize("x2", [0.5, 1.0, 2.0])
    def test_erfc_reduction(self, x1, x2):
        """H_{-1}^(2) in terms of the scaled complementary error function."""
        direct = h_minus_order(0, x1, x2, 2.0, 1e-13)
        assert h_minus1_erf_form(x1, x2) == pytest.approx(direct, rel=1e-10)

    def test_erfc_reduction_quadrature(self):
        """The reduction against the defining integral."""
        expected = _quad_reference(lambda t: np.exp(-0.8 * t - 1.3 * t * t))
        assert h_minus1_erf_form(0.8, 1.3) == pytest.approx(expected, rel=1e-10)
        assert h_minus1_erf_form(0.0, 1.0) == pytest.approx(0.5 * math.sqrt(math.pi) * special.erfcx(0.0), rel=1e-15)

    def test_erfc_domain(self):
        """x2 must be positive."""
        with pytest.raises(DomainError):
            h_minus1_erf_form(0.5, 0.0)
